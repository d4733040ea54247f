#pragma once

#include <string>
#include <string_view>

namespace socreval {

/// Lowercase hex SHA-256 of the input bytes.
std::string sha256_hex(std::string_view bytes);

/// Canonical fixed formatting for doubles embedded in digests and stores
/// (shortest round-trip representation).
std::string canonical_double(double value);

}  // namespace socreval
