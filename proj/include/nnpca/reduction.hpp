#pragma once

#include <functional>

#include "nnpca/common.hpp"
#include "nnpca/ensembles.hpp"

namespace nnpca {

// A Wishart sample set embedded into a matrix with a fresh GOE spectrum: the
// smallest N eigenvalues are carried by an orthonormal basis of the sample
// span V (columns 0..N-1 of v_basis), the rest by a basis of V-perp.
struct EmbeddedInstance {
    Mat w;
    Mat v_basis;    // n x n orthogonal; first span_dim columns span V
    Vec goe_eigs;   // ascending eigenvalues of the fresh GOE draw
    int span_dim = 0;
    Mat r_factor;   // N x N upper-triangular QR factor of the sample block
};

struct ReductionDiagnostics {
    double zu_overlap = 0.0;          // <zhat, u>
    double zhat_sample_energy = 0.0;  // (1/N) sum <zhat, y_i>^2
    double mu = 0.0;                  // smallest nonzero eigenvalue of (1/N) sum y_i y_i^T
    double s = 0.0;                   // sum_{i<=N} <zhat, v_i>^2
    double zWz = 0.0;
    double lambda_1 = 0.0;
    double lambda_N1 = 0.0;           // lambda_{N+1}
    double bound_rhs = 0.0;           // lambda_{N+1} - (lambda_{N+1} - lambda_1) * s
};

enum class VerdictLabel { P, Q };

struct Verdict {
    VerdictLabel label;
    double certificate_value;
    double threshold;  // 2 - eps
};

// zhat = z / ||z|| with z_i = 1/sqrt(rho n) where u_i > 0, else 0.
Vec make_zhat(const Vec& u, double rho);

// Build the embedded matrix. The fresh GOE draw consumes `seed` through
// sample_goe; the basis completion block uses the derived stream
// (master_seed ^ EMBED_BASIS_SALT, trial_index), so callers only manage one
// seed per embed. The basis is the sign-fixed Householder QR of
// [samples | Gaussian block], whose law conditional on the span is uniform
// over orthonormal bases of V and V-perp.
EmbeddedInstance embed_wishart(const WishartSample& sample, SeedSpec seed);

inline constexpr std::uint64_t EMBED_BASIS_SALT = 0x517cc1b727220a95ULL;

// Embed, run the certifier, threshold at 2 - eps. Degenerate (all-zero)
// samples return P immediately with certificate_value = +infinity.
Verdict detect(const WishartSample& sample,
               const std::function<double(const Mat&)>& certifier,
               double eps, SeedSpec seed);

// All proof-chain quantities for a planted, non-degenerate sample and its
// embedding. The inequality chain zWz >= bound_rhs and s <= energy/mu is
// checked to 1e-8 before returning (it is a finite-n identity for full-rank
// sample spans).
ReductionDiagnostics reduction_diagnostics(const WishartSample& sample,
                                           const EmbeddedInstance& inst);

} // namespace nnpca
