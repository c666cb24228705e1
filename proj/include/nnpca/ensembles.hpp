#pragma once

#include <optional>

#include "nnpca/common.hpp"
#include "nnpca/rng.hpp"

namespace nnpca {

enum class PriorKind { sphere, positive_orthant, explicit_spike };

struct SpikedWignerSample {
    Mat matrix;                // W = W0 + beta * spike spike^T
    double beta = 0.0;
    std::optional<Vec> spike;  // absent iff beta == 0
    PriorKind prior_kind = PriorKind::sphere;
};

struct CenteredBernoulliParams {
    double rho;  // probability of the positive value
    int n;
};

// N samples stored as the columns of an n x N matrix.
struct WishartSample {
    Mat samples;
    int n = 0;
    int N = 0;
    bool planted = false;
    std::optional<Vec> spike;
    double beta = 0.0;
    double rho = 0.0;
    double gamma = 0.0;  // realized aspect ratio n / N
    bool degenerate = false;
};

// GOE with spectral edge 2: diagonal entries N(0, 2/n), off-diagonal N(0, 1/n).
// Stream order: upper triangle row by row, diagonal entry first in each row.
Mat sample_goe(int n, SeedSpec seed);

// W0 + beta u u^T. Stream order: the GOE draw first, then (if beta > 0) the
// spike. sphere draws u uniform on S^{n-1}; positive_orthant takes entrywise
// absolute values of such a draw.
SpikedWignerSample sample_spiked_wigner(int n, double beta, PriorKind kind, SeedSpec seed);

// Entry = sqrt((1-rho)/(rho n)) with probability rho, else -sqrt(rho/((1-rho) n)).
Vec sample_centered_bernoulli(const CenteredBernoulliParams& params, SeedSpec seed);

// planted=false: N iid N(0, I_n) columns. planted=true: u ~ centered Bernoulli,
// then either the degenerate all-zero branch (iff beta ||u||^2 <= -1) or
// y = g + (sqrt(1 + beta ||u||^2) - 1) <u_hat, g> u_hat per column, which has
// covariance I + beta u u^T exactly. Stream order: spike first, then columns
// left to right.
WishartSample sample_spiked_wishart(int n, int N, double beta, double rho,
                                    bool planted, SeedSpec seed);

} // namespace nnpca
