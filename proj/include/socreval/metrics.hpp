#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "socreval/error.hpp"

namespace socreval::metrics {

/// Paired (human X, metric Y) score vectors. X is always the conditioning
/// variable of the asymmetric statistics.
struct ScoreSeries {
    std::vector<double> human;   // X
    std::vector<double> metric;  // Y
    std::string label;

    std::size_t n() const { return human.size(); }
};

/// Exhaustive decomposition of the n(n-1)/2 index pairs. tied_x counts pairs
/// tied on X only, tied_y on Y only, tied_both on both.
struct PairCounts {
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    std::int64_t tied_x = 0;
    std::int64_t tied_y = 0;
    std::int64_t tied_both = 0;

    std::int64_t total() const {
        return concordant + discordant + tied_x + tied_y + tied_both;
    }
};

enum class TauVariant { TauA, TauB };
enum class ClassMode { Five, Three, Two };

const char* tau_variant_name(TauVariant v);
const char* class_mode_name(ClassMode m);

/// O(n^2) pair classification, parallelized over the outer index.
PairCounts pair_counts(const ScoreSeries& s);

/// Somers' D(Y|X) = (concordant - discordant) / (pairs not tied on X).
/// Throws DegenerateX when every pair is tied on X.
double somers_d(const ScoreSeries& s);
double somers_d(const PairCounts& counts);

double kendall_tau(const ScoreSeries& s, TauVariant variant);
double pearson_r(const ScoreSeries& s);
double spearman_rho(const ScoreSeries& s);

/// Average ranks, ties receive the mean of the rank positions they occupy.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Affine map onto [0,1]. Throws ConstantVector when max == min.
std::vector<double> normalize_unit_interval(const std::vector<double>& values);

/// Three: 1 -> -1, 2..4 -> 0, 5 -> 1.  Two: 1..4 -> 0, 5 -> 1.
/// Five is the identity. Throws OutOfRange for scores outside [1,5].
int remap_classes(int score, ClassMode mode);

/// The class values active under a mode, in ascending order.
std::vector<int> class_values(ClassMode mode);

struct ClassificationMetrics {
    double accuracy = 0.0;
    double micro_f1 = 0.0;
    double macro_f1 = 0.0;
    // confusion[i][j]: human class classes[i], metric class classes[j]
    std::vector<std::vector<std::int64_t>> confusion;
    std::vector<int> classes;
};

ClassificationMetrics classification_metrics(const std::vector<int>& human,
                                             const std::vector<int>& metric,
                                             const std::vector<int>& classes);

struct RegressionErrors {
    double rmse = 0.0;
    double mae = 0.0;
};

RegressionErrors regression_errors(const std::vector<double>& human,
                                   const std::vector<double>& metric);

/// Two-sided permutation test on |Somers' D|, permuting Y.
/// p = (1 + #{ |D*| >= |D_observed| }) / (permutations + 1).
/// Each permutation index derives its own generator from (seed, index), so the
/// result is identical at any thread count.
double permutation_p_value(const ScoreSeries& s, int permutations, std::uint64_t seed);

/// Chain-level error score from step-level scores. Throws EmptySteps.
double min_aggregate_step_errors(const std::vector<double>& steps);

/// Full meta-evaluation row for one (human, metric) pairing of 1..5 scores.
struct MetricReport {
    ClassMode class_mode = ClassMode::Five;
    TauVariant tau_variant = TauVariant::TauB;
    double somers_d = 0.0;
    double pearson_r = 0.0;
    double spearman_rho = 0.0;
    double kendall_tau = 0.0;
    double accuracy = 0.0;
    double rmse = 0.0;
    double mae = 0.0;
    double micro_f1 = 0.0;
    double macro_f1 = 0.0;
    std::vector<std::vector<std::int64_t>> confusion;
    std::vector<int> classes;
    std::optional<double> p_value_somers;
    std::size_t n = 0;
};

struct ReportOptions {
    TauVariant tau_variant = TauVariant::TauB;
    int permutations = 0;  // 0 disables the permutation test
    std::uint64_t seed = 0;
};

/// Remaps raw 1..5 scores per the mode, normalizes for the correlation block,
/// and computes classification/regression metrics on the remapped integers.
MetricReport evaluate_scores(const std::vector<int>& human,
                             const std::vector<int>& metric,
                             ClassMode mode,
                             const ReportOptions& options = {});

}  // namespace socreval::metrics
