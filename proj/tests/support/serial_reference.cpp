#include "serial_reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace socreval::testsupport {

namespace {

int sgn(double a, double b) {
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

// 1-based average ranks via a value->positions map (distinct from the
// library's sort-and-sweep implementation).
std::vector<double> ranks_by_group(const std::vector<double>& v) {
    std::map<double, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < v.size(); ++i) groups[v[i]].push_back(i);
    std::vector<double> ranks(v.size());
    std::size_t consumed = 0;
    for (const auto& [value, positions] : groups) {
        (void)value;
        double sum = 0.0;
        for (std::size_t k = 0; k < positions.size(); ++k) {
            sum += static_cast<double>(consumed + k + 1);
        }
        const double mean_rank = sum / static_cast<double>(positions.size());
        for (std::size_t idx : positions) ranks[idx] = mean_rank;
        consumed += positions.size();
    }
    return ranks;
}

std::int64_t tied_pairs(const std::vector<double>& v) {
    std::map<double, std::int64_t> hist;
    for (double value : v) hist[value] += 1;
    std::int64_t pairs = 0;
    for (const auto& [value, count] : hist) {
        (void)value;
        pairs += count * (count - 1) / 2;
    }
    return pairs;
}

}  // namespace

SerialPairCounts pair_counts_serial(const std::vector<double>& x, const std::vector<double>& y) {
    SerialPairCounts out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const bool same_x = x[i] == x[j];
            const bool same_y = y[i] == y[j];
            if (same_x && same_y) {
                out.tied_both += 1;
            } else if (same_x) {
                out.tied_x += 1;
            } else if (same_y) {
                out.tied_y += 1;
            } else if ((x[i] < x[j] && y[i] < y[j]) || (x[i] > x[j] && y[i] > y[j])) {
                out.concordant += 1;
            } else {
                out.discordant += 1;
            }
        }
    }
    return out;
}

double somers_d_tau_ratio(const std::vector<double>& x, const std::vector<double>& y) {
    std::int64_t numerator = 0;   // tau(X,Y) pair sum
    std::int64_t denominator = 0; // tau(X,X) pair sum = pairs untied on X
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const int sx = sgn(x[i], x[j]);
            numerator += sx * sgn(y[i], y[j]);
            denominator += sx * sx;
        }
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double tau_a_reference(const std::vector<double>& x, const std::vector<double>& y) {
    std::int64_t net = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            net += sgn(x[i], x[j]) * sgn(y[i], y[j]);
        }
    }
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    return static_cast<double>(net) / static_cast<double>(n * (n - 1) / 2);
}

double tau_b_reference(const std::vector<double>& x, const std::vector<double>& y) {
    std::int64_t net = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            net += sgn(x[i], x[j]) * sgn(y[i], y[j]);
        }
    }
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    const std::int64_t total = n * (n - 1) / 2;
    const double dx = static_cast<double>(total - tied_pairs(x));
    const double dy = static_cast<double>(total - tied_pairs(y));
    return static_cast<double>(net) / std::sqrt(dx * dy);
}

double pearson_reference(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    const double cov = sxy - sx * sy / n;
    const double vx = sxx - sx * sx / n;
    const double vy = syy - sy * sy / n;
    return cov / std::sqrt(vx * vy);
}

double spearman_reference(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson_reference(ranks_by_group(x), ranks_by_group(y));
}

ClassTally classification_reference(const std::vector<int>& human,
                                    const std::vector<int>& metric,
                                    const std::vector<int>& classes) {
    ClassTally out;
    const double n = static_cast<double>(human.size());
    std::int64_t hits = 0;
    for (std::size_t i = 0; i < human.size(); ++i) {
        if (human[i] == metric[i]) ++hits;
        out.human_histogram[human[i]] += 1;
    }
    out.accuracy = hits / n;
    out.micro_f1 = out.accuracy;  // single-label multiclass identity

    double f1_sum = 0.0;
    for (int c : classes) {
        std::int64_t tp = 0, predicted = 0, actual = 0;
        for (std::size_t i = 0; i < human.size(); ++i) {
            if (human[i] == c && metric[i] == c) ++tp;
            if (metric[i] == c) ++predicted;
            if (human[i] == c) ++actual;
        }
        const double p = predicted > 0 ? static_cast<double>(tp) / predicted : 0.0;
        const double r = actual > 0 ? static_cast<double>(tp) / actual : 0.0;
        f1_sum += p + r > 0 ? 2 * p * r / (p + r) : 0.0;
    }
    out.macro_f1 = f1_sum / static_cast<double>(classes.size());
    return out;
}

double rmse_reference(const std::vector<double>& a, const std::vector<double>& b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(total / static_cast<double>(a.size()));
}

double mae_reference(const std::vector<double>& a, const std::vector<double>& b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
    return total / static_cast<double>(a.size());
}

}  // namespace socreval::testsupport
