#include "nnpca/reduction.hpp"

#include <lapacke.h>

#include <cmath>
#include <limits>
#include <vector>

#include "nnpca/spectral.hpp"

namespace nnpca {

namespace {

// Householder QR of B in place; returns Q (n x n) with the sign convention
// R_ii >= 0, which makes the factorization, and hence the basis, unique.
Mat orthonormalize(Mat b, Mat* r_lead, int lead_cols) {
    const int n = static_cast<int>(b.rows());
    const int m = static_cast<int>(b.cols());
    Vec tau(std::min(n, m));
    int info = LAPACKE_dgeqrf(LAPACK_COL_MAJOR, n, m, b.data(), n, tau.data());
    if (info != 0) throw NumericFailure("embed: dgeqrf failed");
    std::vector<double> rdiag(m);
    for (int j = 0; j < m; ++j) rdiag[j] = b(j, j);
    if (r_lead) {
        *r_lead = Mat::Zero(lead_cols, lead_cols);
        for (int j = 0; j < lead_cols; ++j)
            for (int i = 0; i <= j; ++i) (*r_lead)(i, j) = b(i, j);
    }
    info = LAPACKE_dorgqr(LAPACK_COL_MAJOR, n, m, std::min(n, m), b.data(), n, tau.data());
    if (info != 0) throw NumericFailure("embed: dorgqr failed");
    for (int j = 0; j < m; ++j)
        if (rdiag[j] < 0.0) {
            b.col(j) = -b.col(j);
            if (r_lead && j < lead_cols) r_lead->row(j) = -r_lead->row(j);
        }
    return b;
}

// Exact singular values of the upper-triangular lead block, for the rare
// rank-deficient path.
Vec triangular_singvals(const Mat& r) {
    Mat work = r;
    const int m = static_cast<int>(r.rows());
    Vec sv(m);
    Mat dummy(1, 1);
    const int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, m, work.data(), m,
                                    sv.data(), dummy.data(), 1, dummy.data(), 1);
    if (info != 0) throw NumericFailure("embed: dgesdd failed");
    return sv;
}

} // namespace

Vec make_zhat(const Vec& u, double rho) {
    const int n = static_cast<int>(u.size());
    if (n == 0 || u.isZero(0.0)) throw InvalidParameter("make_zhat: u must be nonzero");
    Vec z = Vec::Zero(n);
    const double v = 1.0 / std::sqrt(rho * n);
    int positives = 0;
    for (int i = 0; i < n; ++i)
        if (u[i] > 0.0) {
            z[i] = v;
            ++positives;
        }
    if (positives == 0)
        throw InvalidParameter("make_zhat: spike has no positive entries");
    return z / z.norm();
}

EmbeddedInstance embed_wishart(const WishartSample& sample, SeedSpec seed) {
    const int n = sample.n;
    const int N = sample.N;
    if (N >= n) throw InvalidParameter("embed_wishart: need n > N");

    EmbeddedInstance inst;
    {
        const Mat goe = sample_goe(n, seed);
        inst.goe_eigs = eigvalsh(goe);
    }

    Rng basis_rng(SeedSpec{seed.master_seed ^ EMBED_BASIS_SALT, seed.trial_index});
    Mat b(n, n);
    b.leftCols(N) = sample.samples;
    for (int j = N; j < n; ++j)
        for (int i = 0; i < n; ++i) b(i, j) = basis_rng.gaussian();

    Mat r_lead;
    inst.v_basis = orthonormalize(std::move(b), &r_lead, N);
    inst.r_factor = r_lead;

    // Screen for rank deficiency through the R diagonal (sigma_min <= min
    // |R_ii| for triangular R). Gaussian sample sets never trip this; exact
    // dependencies do, and then the basis is rebuilt from a column-pivoted
    // independent subset so the leading columns still span the samples.
    const double snorm = sample.samples.norm();
    const double screen = 1e-8 * std::max(snorm, 1e-300);
    double min_rdiag = std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) min_rdiag = std::min(min_rdiag, std::abs(r_lead(j, j)));
    inst.span_dim = N;
    if (min_rdiag <= screen) {
        const Vec sv = triangular_singvals(r_lead);
        const double tol = 1e-10 * snorm;
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv[i] > tol) ++rank;
        inst.span_dim = rank;
        if (rank < N) {
            // Column-pivoted QR picks an independent subset of the samples.
            Mat s = sample.samples;
            std::vector<lapack_int> jpvt(N, 0);
            Vec tau(std::min(n, N));
            if (LAPACKE_dgeqp3(LAPACK_COL_MAJOR, n, N, s.data(), n, jpvt.data(), tau.data()) != 0)
                throw NumericFailure("embed: dgeqp3 failed");
            Mat rebuilt(n, n);
            for (int j = 0; j < rank; ++j)
                rebuilt.col(j) = sample.samples.col(jpvt[j] - 1);
            for (int j = rank; j < n; ++j)
                for (int i = 0; i < n; ++i) rebuilt(i, j) = basis_rng.gaussian();
            inst.v_basis = orthonormalize(std::move(rebuilt), nullptr, 0);
        }
    }

    // W = V diag(goe_eigs) V^T, smallest N eigenvalues on the sample-span block.
    Mat scaled = inst.v_basis;
    for (int j = 0; j < n; ++j) scaled.col(j) *= inst.goe_eigs[j];
    inst.w = scaled * inst.v_basis.transpose();
    symmetrize(inst.w);
    return inst;
}

Verdict detect(const WishartSample& sample,
               const std::function<double(const Mat&)>& certifier,
               double eps, SeedSpec seed) {
    if (!(eps > 0.0)) throw InvalidParameter("detect: eps must be > 0");
    const double threshold = 2.0 - eps;
    if (sample.degenerate || sample.samples.isZero(0.0))
        return Verdict{VerdictLabel::P, std::numeric_limits<double>::infinity(), threshold};
    const EmbeddedInstance inst = embed_wishart(sample, seed);
    const double value = certifier(inst.w);
    return Verdict{value <= threshold ? VerdictLabel::Q : VerdictLabel::P, value, threshold};
}

ReductionDiagnostics reduction_diagnostics(const WishartSample& sample,
                                           const EmbeddedInstance& inst) {
    if (!sample.planted || !sample.spike)
        throw ContractViolation("reduction_diagnostics: sample must be planted");
    if (sample.degenerate || sample.samples.isZero(0.0))
        throw ContractViolation("reduction_diagnostics: degenerate sample");

    const int N = sample.N;
    const Vec zhat = make_zhat(*sample.spike, sample.rho);

    ReductionDiagnostics d;
    d.zu_overlap = zhat.dot(*sample.spike);
    d.zhat_sample_energy = (sample.samples.transpose() * zhat).squaredNorm() / N;

    // Nonzero spectrum of (1/N) sum y_i y_i^T equals eig(R^T R)/N for the QR
    // factor R of the sample block.
    {
        Mat gram = Mat::Zero(N, N);
        gram.selfadjointView<Eigen::Lower>().rankUpdate(inst.r_factor.transpose(), 1.0 / N);
        gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose();
        const Vec eigs = eigvalsh(gram);
        if (inst.span_dim == N) {
            d.mu = eigs[0];
        } else {
            const double tol2 = std::pow(1e-10 * sample.samples.norm(), 2) / N;
            d.mu = 0.0;
            for (int i = 0; i < N; ++i)
                if (eigs[i] > tol2) {
                    d.mu = eigs[i];
                    break;
                }
        }
    }

    d.s = (inst.v_basis.leftCols(N).transpose() * zhat).squaredNorm();
    d.zWz = quadratic_form(inst.w, zhat);
    d.lambda_1 = inst.goe_eigs[0];
    d.lambda_N1 = inst.goe_eigs[N];
    d.bound_rhs = d.lambda_N1 - (d.lambda_N1 - d.lambda_1) * d.s;

    if (d.zWz < d.bound_rhs - 1e-8)
        throw NumericFailure("reduction_diagnostics: eigenvalue bound violated");
    if (inst.span_dim == N && d.mu > 0.0 && d.s > d.zhat_sample_energy / d.mu + 1e-8)
        throw NumericFailure("reduction_diagnostics: energy bound violated");
    return d;
}

} // namespace nnpca
