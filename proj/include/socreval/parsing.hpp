#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "socreval/error.hpp"
#include "socreval/strategy.hpp"

namespace socreval::parsing {

/// Structured judge output. Field presence mirrors the completion, not the
/// strategy; check_shape reports deviations separately.
struct JudgeVerdict {
    int overall_quality = 0;
    std::optional<std::string> own_response;
    std::optional<std::string> qualitative_analysis;
    std::string raw;
};

/// One key/value pair of the extracted object. raw_* keep the original bytes
/// (after quote normalization) so callers can reassemble subsets verbatim.
struct RawField {
    std::string key;        // normalized: lowercased, whitespace collapsed
    std::string raw_key;    // original key token, quotes included
    std::string raw_value;  // original value token
    std::string text;       // decoded string value, or the numeric literal
    bool is_string = false;
};

struct RawObject {
    std::string text;
    std::vector<RawField> fields;
};

/// Last balanced brace-delimited object in the text that scans as a flat
/// key/value object. Curly quotes and latex-style doubled quoting are
/// normalized to straight quotes first. Returns nullopt when no candidate
/// parses; throws MalformedObject when a candidate exists but is broken.
std::optional<RawObject> find_last_object(std::string_view text);

/// Extracts the verdict from a raw completion.
/// Errors: NoObjectFound, MissingQuality, QualityOutOfRange, MalformedObject.
JudgeVerdict parse_verdict(std::string_view text, Strategy strategy);

struct ShapeWarning {
    std::string message;
};

/// Warns (never fails) when verdict field presence deviates from the shape the
/// strategy's demonstration promises.
std::optional<ShapeWarning> check_shape(const JudgeVerdict& verdict, Strategy strategy);

}  // namespace socreval::parsing
