#pragma once

#include <vector>

#include "nnpca/common.hpp"

namespace nnpca {

// Full symmetric eigendecomposition. values ascending; vectors[:, i] pairs
// with values[i]; each eigenvector's sign is fixed so its largest-magnitude
// coordinate is positive (reproducible Haar-basis tests rely on this).
struct EigenPair {
    Vec values;
    Mat vectors;
};

struct ProjectorStats {
    double max_diag_dev;       // max_i |P_ii - delta|
    double max_offdiag;        // max_{i != j} |P_ij|
    double min_offdiag_signed; // min_{i != j} P_ij
};

EigenPair eigh(const Mat& m);

// Eigenvalues only (full spectrum, ascending). Cheaper than eigh when the
// vectors are not needed.
Vec eigvalsh(const Mat& m);

// Projector onto the span of the r eigenvectors with the largest eigenvalues.
Mat top_projector(const Mat& m, int r);
Mat top_projector(const EigenPair& ep, int r);

ProjectorStats projector_entry_stats(const Mat& p, double delta);

// CDF of the semicircle law on [-2, 2].
double semicircle_cdf(double x);

// Kolmogorov-Smirnov distance between the empirical CDF of values and the
// semicircle CDF.
double semicircle_ks(const std::vector<double>& values);

// Number of eigenvalues strictly greater than abs_tol.
int numerical_rank(const Mat& m, double abs_tol = 1e-4);

double quadratic_form(const Mat& m, const Vec& x);

} // namespace nnpca
