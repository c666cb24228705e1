#include "nnpca/ensembles.hpp"

#include <cmath>

namespace nnpca {

Mat sample_goe(int n, SeedSpec seed) {
    if (n < 1) throw InvalidParameter("sample_goe: n must be >= 1");
    Rng rng(seed);
    Mat w(n, n);
    const double diag_sd = std::sqrt(2.0 / n);
    const double off_sd = std::sqrt(1.0 / n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = diag_sd * rng.gaussian();
        for (int j = i + 1; j < n; ++j) {
            const double v = off_sd * rng.gaussian();
            w(i, j) = v;
            w(j, i) = v;
        }
    }
    return w;
}

namespace {

Vec sphere_point(int n, Rng& rng) {
    Vec v(n);
    double norm = 0.0;
    do {
        for (int i = 0; i < n; ++i) v[i] = rng.gaussian();
        norm = v.norm();
    } while (norm == 0.0);
    return v / norm;
}

} // namespace

SpikedWignerSample sample_spiked_wigner(int n, double beta, PriorKind kind, SeedSpec seed) {
    if (n < 1) throw InvalidParameter("sample_spiked_wigner: n must be >= 1");
    if (beta < 0.0) throw InvalidParameter("sample_spiked_wigner: beta must be >= 0");
    Rng rng(seed);
    SpikedWignerSample out;
    out.beta = beta;
    out.prior_kind = kind;

    // Consume the stream exactly as sample_goe would, so beta = 0 reproduces
    // that sampler bit for bit under the same seed.
    out.matrix = Mat(n, n);
    const double diag_sd = std::sqrt(2.0 / n);
    const double off_sd = std::sqrt(1.0 / n);
    for (int i = 0; i < n; ++i) {
        out.matrix(i, i) = diag_sd * rng.gaussian();
        for (int j = i + 1; j < n; ++j) {
            const double v = off_sd * rng.gaussian();
            out.matrix(i, j) = v;
            out.matrix(j, i) = v;
        }
    }

    if (beta > 0.0) {
        Vec u = sphere_point(n, rng);
        if (kind == PriorKind::positive_orthant) u = u.cwiseAbs();
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                out.matrix(i, j) += beta * u[i] * u[j];
        // beta * u_i * u_j is computed identically for (i,j) and (j,i), so
        // symmetry stays exact.
        out.spike = std::move(u);
    }
    return out;
}

Vec sample_centered_bernoulli(const CenteredBernoulliParams& params, SeedSpec seed) {
    if (!(params.rho > 0.0 && params.rho < 1.0))
        throw InvalidParameter("sample_centered_bernoulli: rho must lie in (0,1)");
    if (params.n < 1) throw InvalidParameter("sample_centered_bernoulli: n must be >= 1");
    Rng rng(seed);
    const double n = static_cast<double>(params.n);
    const double hi = std::sqrt((1.0 - params.rho) / (params.rho * n));
    const double lo = -std::sqrt(params.rho / ((1.0 - params.rho) * n));
    Vec u(params.n);
    for (int i = 0; i < params.n; ++i)
        u[i] = rng.uniform01() < params.rho ? hi : lo;
    return u;
}

WishartSample sample_spiked_wishart(int n, int N, double beta, double rho,
                                    bool planted, SeedSpec seed) {
    if (n < 1 || N < 1) throw InvalidParameter("sample_spiked_wishart: n, N must be >= 1");
    if (beta <= -1.0) throw InvalidParameter("sample_spiked_wishart: beta must be > -1");
    if (!(rho > 0.0 && rho < 1.0)) throw InvalidParameter("sample_spiked_wishart: rho must lie in (0,1)");
    Rng rng(seed);
    WishartSample out;
    out.n = n;
    out.N = N;
    out.planted = planted;
    out.beta = beta;
    out.rho = rho;
    out.gamma = static_cast<double>(n) / N;
    out.samples = Mat(n, N);

    if (!planted) {
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < n; ++i)
                out.samples(i, j) = rng.gaussian();
        return out;
    }

    Vec u(n);
    {
        const double hi = std::sqrt((1.0 - rho) / (rho * n));
        const double lo = -std::sqrt(rho / ((1.0 - rho) * n));
        for (int i = 0; i < n; ++i)
            u[i] = rng.uniform01() < rho ? hi : lo;
    }
    const double unorm2 = u.squaredNorm();
    out.spike = u;
    if (beta * unorm2 <= -1.0) {
        out.degenerate = true;
        out.samples.setZero();
        return out;
    }

    const Vec uhat = u / std::sqrt(unorm2);
    const double stretch = std::sqrt(1.0 + beta * unorm2) - 1.0;
    Vec g(n);
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < n; ++i) g[i] = rng.gaussian();
        const double proj = uhat.dot(g);
        out.samples.col(j) = g + (stretch * proj) * uhat;
    }
    return out;
}

} // namespace nnpca
