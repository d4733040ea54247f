#include "socreval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace socreval::metrics {

namespace {

void require_series(const ScoreSeries& s) {
    if (s.human.size() != s.metric.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "series '" + s.label + "' has " + std::to_string(s.human.size()) +
                        " human vs " + std::to_string(s.metric.size()) + " metric scores");
    }
    if (s.n() < 2) {
        throw Error(ErrorCode::TooShort, "series '" + s.label + "' needs n >= 2");
    }
}

inline int sign_of(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Unbiased draw in [0, bound); rejection keeps results identical across
// standard libraries.
std::size_t bounded_draw(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return static_cast<std::size_t>(v % bound);
}

std::int64_t concordant_minus_discordant(const std::vector<double>& x,
                                         const std::vector<double>& y) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
    std::int64_t net = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            net += sign_of(x[i], x[j]) * sign_of(y[i], y[j]);
        }
    }
    return net;
}

}  // namespace

const char* tau_variant_name(TauVariant v) {
    return v == TauVariant::TauA ? "tau-a" : "tau-b";
}

const char* class_mode_name(ClassMode m) {
    switch (m) {
        case ClassMode::Five: return "five";
        case ClassMode::Three: return "three";
        case ClassMode::Two: return "two";
    }
    return "?";
}

PairCounts pair_counts(const ScoreSeries& s) {
    require_series(s);
    const std::int64_t n = static_cast<std::int64_t>(s.n());
    const double* x = s.human.data();
    const double* y = s.metric.data();

    std::int64_t concordant = 0, discordant = 0, tied_x = 0, tied_y = 0, tied_both = 0;
#pragma omp parallel for schedule(dynamic, 32) \
    reduction(+ : concordant, discordant, tied_x, tied_y, tied_both)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const int sx = sign_of(x[i], x[j]);
            const int sy = sign_of(y[i], y[j]);
            if (sx == 0 && sy == 0) {
                ++tied_both;
            } else if (sx == 0) {
                ++tied_x;
            } else if (sy == 0) {
                ++tied_y;
            } else if (sx == sy) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    return {concordant, discordant, tied_x, tied_y, tied_both};
}

double somers_d(const PairCounts& counts) {
    const std::int64_t untied_x = counts.total() - counts.tied_x - counts.tied_both;
    if (untied_x == 0) {
        throw Error(ErrorCode::DegenerateX, "all pairs tied on the conditioning variable");
    }
    return static_cast<double>(counts.concordant - counts.discordant) /
           static_cast<double>(untied_x);
}

double somers_d(const ScoreSeries& s) { return somers_d(pair_counts(s)); }

double kendall_tau(const ScoreSeries& s, TauVariant variant) {
    const PairCounts counts = pair_counts(s);
    const std::int64_t total = counts.total();
    const std::int64_t net = counts.concordant - counts.discordant;
    if (variant == TauVariant::TauA) {
        return static_cast<double>(net) / static_cast<double>(total);
    }
    const std::int64_t untied_x = total - counts.tied_x - counts.tied_both;
    const std::int64_t untied_y = total - counts.tied_y - counts.tied_both;
    if (untied_x == 0 || untied_y == 0) {
        throw Error(ErrorCode::DegenerateSeries, "tau-b undefined with a fully tied margin");
    }
    return static_cast<double>(net) /
           std::sqrt(static_cast<double>(untied_x) * static_cast<double>(untied_y));
}

double pearson_r(const ScoreSeries& s) {
    require_series(s);
    const std::size_t n = s.n();
    const double mean_x = std::accumulate(s.human.begin(), s.human.end(), 0.0) / n;
    const double mean_y = std::accumulate(s.metric.begin(), s.metric.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = s.human[i] - mean_x;
        const double dy = s.metric[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error(ErrorCode::ZeroVariance, "constant vector in series '" + s.label + "'");
    }
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j share the mean of 1-based ranks i+1..j+1
        const double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

double spearman_rho(const ScoreSeries& s) {
    require_series(s);
    ScoreSeries ranked{average_ranks(s.human), average_ranks(s.metric), s.label};
    return pearson_r(ranked);
}

std::vector<double> normalize_unit_interval(const std::vector<double>& values) {
    if (values.empty()) {
        throw Error(ErrorCode::ConstantVector, "cannot normalize an empty vector");
    }
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    if (lo == hi) {
        throw Error(ErrorCode::ConstantVector, "cannot normalize a constant vector");
    }
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back((v - lo) / (hi - lo));
    return out;
}

int remap_classes(int score, ClassMode mode) {
    if (score < 1 || score > 5) {
        throw Error(ErrorCode::OutOfRange, "score " + std::to_string(score) + " outside [1,5]");
    }
    switch (mode) {
        case ClassMode::Five:
            return score;
        case ClassMode::Three:
            return score == 1 ? -1 : (score == 5 ? 1 : 0);
        case ClassMode::Two:
            return score == 5 ? 1 : 0;
    }
    return score;
}

std::vector<int> class_values(ClassMode mode) {
    switch (mode) {
        case ClassMode::Five: return {1, 2, 3, 4, 5};
        case ClassMode::Three: return {-1, 0, 1};
        case ClassMode::Two: return {0, 1};
    }
    return {};
}

ClassificationMetrics classification_metrics(const std::vector<int>& human,
                                             const std::vector<int>& metric,
                                             const std::vector<int>& classes) {
    if (human.size() != metric.size()) {
        throw Error(ErrorCode::LengthMismatch, "classification vectors differ in length");
    }
    const std::size_t k = classes.size();
    auto index_of = [&](int value) -> std::size_t {
        for (std::size_t i = 0; i < k; ++i) {
            if (classes[i] == value) return i;
        }
        throw Error(ErrorCode::UnknownClass, "value " + std::to_string(value) +
                                                 " not in the active class set");
    };

    ClassificationMetrics out;
    out.classes = classes;
    out.confusion.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < human.size(); ++i) {
        out.confusion[index_of(human[i])][index_of(metric[i])] += 1;
    }

    const double n = static_cast<double>(human.size());
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < k; ++i) trace += out.confusion[i][i];
    out.accuracy = n > 0 ? static_cast<double>(trace) / n : 0.0;

    // pooled counts; for single-label multiclass this collapses to accuracy
    const double micro_tp = static_cast<double>(trace);
    const double micro_fp = n - micro_tp;
    const double micro_fn = n - micro_tp;
    const double micro_p = micro_tp + micro_fp > 0 ? micro_tp / (micro_tp + micro_fp) : 0.0;
    const double micro_r = micro_tp + micro_fn > 0 ? micro_tp / (micro_tp + micro_fn) : 0.0;
    out.micro_f1 = micro_p + micro_r > 0 ? 2.0 * micro_p * micro_r / (micro_p + micro_r) : 0.0;

    double f1_sum = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        std::int64_t tp = out.confusion[c][c];
        std::int64_t row = 0, col = 0;
        for (std::size_t j = 0; j < k; ++j) {
            row += out.confusion[c][j];
            col += out.confusion[j][c];
        }
        const std::int64_t fn = row - tp;
        const std::int64_t fp = col - tp;
        const double p = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        const double r = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        f1_sum += p + r > 0 ? 2.0 * p * r / (p + r) : 0.0;
    }
    out.macro_f1 = k > 0 ? f1_sum / static_cast<double>(k) : 0.0;
    return out;
}

RegressionErrors regression_errors(const std::vector<double>& human,
                                   const std::vector<double>& metric) {
    if (human.size() != metric.size()) {
        throw Error(ErrorCode::LengthMismatch, "regression vectors differ in length");
    }
    if (human.empty()) {
        throw Error(ErrorCode::LengthMismatch, "regression vectors are empty");
    }
    double sq = 0.0, abs = 0.0;
    for (std::size_t i = 0; i < human.size(); ++i) {
        const double d = human[i] - metric[i];
        sq += d * d;
        abs += std::abs(d);
    }
    const double n = static_cast<double>(human.size());
    return {std::sqrt(sq / n), abs / n};
}

double permutation_p_value(const ScoreSeries& s, int permutations, std::uint64_t seed) {
    if (permutations < 1) {
        throw Error(ErrorCode::OutOfRange, "permutations must be >= 1");
    }
    const PairCounts observed = pair_counts(s);
    const std::int64_t untied_x = observed.total() - observed.tied_x - observed.tied_both;
    if (untied_x == 0) {
        throw Error(ErrorCode::DegenerateX, "all pairs tied on the conditioning variable");
    }
    // The denominator of D(Y|X) is invariant under permutations of Y, so
    // |D*| >= |D| reduces to an exact integer comparison of |C - D|.
    const std::int64_t observed_net = std::llabs(observed.concordant - observed.discordant);
    const std::uint64_t stream = splitmix64(seed);

    std::int64_t exceed = 0;
#pragma omp parallel
    {
        std::vector<double> permuted(s.metric.size());
        std::int64_t local = 0;
#pragma omp for schedule(dynamic, 8) nowait
        for (int p = 0; p < permutations; ++p) {
            std::mt19937_64 rng(splitmix64(stream ^ static_cast<std::uint64_t>(p)));
            permuted = s.metric;
            for (std::size_t i = permuted.size() - 1; i > 0; --i) {
                std::swap(permuted[i], permuted[bounded_draw(rng, i + 1)]);
            }
            if (std::llabs(concordant_minus_discordant(s.human, permuted)) >= observed_net) {
                ++local;
            }
        }
#pragma omp atomic
        exceed += local;
    }
    return static_cast<double>(1 + exceed) / static_cast<double>(permutations + 1);
}

double min_aggregate_step_errors(const std::vector<double>& steps) {
    if (steps.empty()) {
        throw Error(ErrorCode::EmptySteps, "no step-level scores to aggregate");
    }
    return *std::min_element(steps.begin(), steps.end());
}

MetricReport evaluate_scores(const std::vector<int>& human,
                             const std::vector<int>& metric,
                             ClassMode mode,
                             const ReportOptions& options) {
    if (human.size() != metric.size()) {
        throw Error(ErrorCode::LengthMismatch, "score vectors differ in length");
    }
    std::vector<int> h, m;
    h.reserve(human.size());
    m.reserve(metric.size());
    for (std::size_t i = 0; i < human.size(); ++i) {
        h.push_back(remap_classes(human[i], mode));
        m.push_back(remap_classes(metric[i], mode));
    }

    ScoreSeries series;
    series.human.assign(h.begin(), h.end());
    series.metric.assign(m.begin(), m.end());
    series.label = class_mode_name(mode);

    MetricReport report;
    report.class_mode = mode;
    report.tau_variant = options.tau_variant;
    report.n = h.size();
    report.somers_d = somers_d(series);
    report.kendall_tau = kendall_tau(series, options.tau_variant);

    // Scores are normalized onto [0,1] before the correlation block; every
    // statistic here is invariant under that affine map, so the step matters
    // only as fidelity to the procedure.
    ScoreSeries correlated = series;
    try {
        correlated.human = normalize_unit_interval(series.human);
        correlated.metric = normalize_unit_interval(series.metric);
    } catch (const Error&) {
        // constant side: leave un-normalized and let the stat report it
        correlated = series;
    }
    report.pearson_r = pearson_r(correlated);
    report.spearman_rho = spearman_rho(correlated);

    auto cls = classification_metrics(h, m, class_values(mode));
    report.accuracy = cls.accuracy;
    report.micro_f1 = cls.micro_f1;
    report.macro_f1 = cls.macro_f1;
    report.confusion = std::move(cls.confusion);
    report.classes = std::move(cls.classes);

    auto reg = regression_errors(std::vector<double>(h.begin(), h.end()),
                                 std::vector<double>(m.begin(), m.end()));
    report.rmse = reg.rmse;
    report.mae = reg.mae;

    if (options.permutations > 0) {
        report.p_value_somers = permutation_p_value(series, options.permutations, options.seed);
    }
    return report;
}

}  // namespace socreval::metrics
