#pragma once

#include <cstdint>
#include <vector>

#include "nnpca/common.hpp"

namespace nnpca {

struct WitnessParams {
    double delta;  // top-eigenspace fraction, in (0,1)
    double alpha;  // mixing weight, in [0,1]
    int r;         // round(delta * n)
};

struct WitnessReport {
    int n = 0;
    double delta = 0.0;
    int r = 0;
    double alpha_min = 0.0;
    double p_max_neg = 0.0;  // max(0, -min_{i!=j} P_ij)
    double value = 0.0;      // <X^(alpha_min, delta), W>
    double top_mean = 0.0;   // (1/r) * sum of the top r eigenvalues
    double ones_term = 0.0;  // 1^T W 1 / n
    // Provenance for CSV emission.
    int trial = 0;
    std::uint64_t seed = 0;
};

// X = (1 - alpha) * P / r + alpha / n * ones. Unit trace by construction.
Mat build_witness(const Mat& p, double alpha, double delta, int n);

// Exact smallest alpha making every off-diagonal witness entry nonnegative:
// alpha_min = p0 / (delta_eff + p0) with p0 = max(0, -min_{i!=j} P_ij) and
// delta_eff = r / n. Diagonal entries are automatically nonnegative.
double minimal_alpha(const Mat& p, double delta);

// Full report for one matrix: top-r projector, alpha_min, and the value
// decomposition (1 - alpha) * top_mean + alpha * ones_term.
WitnessReport witness_value(const Mat& w, double delta);

// One GOE draw per (n, trial); trial_index = level * trials + trial keeps
// streams distinct across levels.
std::vector<WitnessReport> witness_scaling_experiment(const std::vector<int>& n_list,
                                                      double delta, int trials,
                                                      std::uint64_t master_seed);

} // namespace nnpca
