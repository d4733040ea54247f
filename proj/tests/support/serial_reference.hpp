#pragma once

// Serial reference implementations used as independent oracles by the test
// suites and as the baseline side of the kernel benchmark. These deliberately
// take different algebraic routes than the library kernels:
//   - Somers' D as the literal tau-ratio  sum(sgn*sgn) / sum(|sgn|)
//   - tau-b tie terms from value histograms instead of pair classification
//   - Spearman as an explicit rank-then-correlate two-step
//   - classification scores from per-class tallies, no confusion matrix

#include <cstdint>
#include <map>
#include <vector>

namespace socreval::testsupport {

struct SerialPairCounts {
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    std::int64_t tied_x = 0;
    std::int64_t tied_y = 0;
    std::int64_t tied_both = 0;
};

SerialPairCounts pair_counts_serial(const std::vector<double>& x, const std::vector<double>& y);

double somers_d_tau_ratio(const std::vector<double>& x, const std::vector<double>& y);

double tau_a_reference(const std::vector<double>& x, const std::vector<double>& y);
double tau_b_reference(const std::vector<double>& x, const std::vector<double>& y);

double pearson_reference(const std::vector<double>& x, const std::vector<double>& y);
double spearman_reference(const std::vector<double>& x, const std::vector<double>& y);

struct ClassTally {
    double accuracy = 0.0;
    double micro_f1 = 0.0;
    double macro_f1 = 0.0;
    std::map<int, std::int64_t> human_histogram;
};

ClassTally classification_reference(const std::vector<int>& human,
                                    const std::vector<int>& metric,
                                    const std::vector<int>& classes);

double rmse_reference(const std::vector<double>& a, const std::vector<double>& b);
double mae_reference(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace socreval::testsupport
