#pragma once

#include <vector>

#include "nnpca/common.hpp"
#include "nnpca/rng.hpp"

namespace nnpca {

struct FeasiblePoint {
    Vec x;             // entrywise >= 0, unit norm
    double value;      // x^T W x
};

struct AscentConfig {
    double shift = 2.1;       // spectral shift c in the iteration matrix W + cI
    int max_iters = 2000;
    double value_tol = 1e-10;
    int restarts = 8;
};

// Clip the top eigenvector at zero and renormalize. The eigenvector's global
// sign is chosen so the clipped part has the larger norm.
FeasiblePoint truncated_top_eigenvector(const Mat& w);

// Iterate x <- normalize(max(0, (W + shift I) x)) from the truncated
// eigenvector start plus `restarts` random nonnegative starts; keep the best
// (ties to the earliest start). The shift is raised to lambda_max + 0.1 when
// the default does not dominate the spectrum, and further to |lambda_min| + 0.1
// if needed to keep W + shift I psd (which makes each trajectory monotone).
// If traces is non-null it receives one objective sequence per start.
FeasiblePoint local_ascent(const Mat& w, const AscentConfig& cfg, SeedSpec seed,
                           std::vector<std::vector<double>>* traces = nullptr);

// Dense search over the positive orthant of the unit sphere in spherical
// coordinates (grid_points per angle), then a monotone polish from the best
// grid point. Only for n <= 6.
FeasiblePoint lambda_plus_bruteforce(const Mat& w, int grid_points);

} // namespace nnpca
