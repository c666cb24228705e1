#include "nnpca/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nnpca/spectral.hpp"

namespace nnpca {

Vec project_simplex(const Vec& v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, tau = 0.0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        css += u[i];
        const double cand = (css - 1.0) / (i + 1);
        if (u[i] - cand > 0.0) {
            k = i + 1;
            tau = cand;
        }
    }
    (void)k;
    return (v.array() - tau).max(0.0).matrix();
}

Mat project_psd_trace_simplex(const Mat& m) {
    EigenPair ep = eigh(m);
    const Vec w = project_simplex(ep.values);
    const int n = static_cast<int>(w.size());
    // Only the positive eigenvalues contribute; near an optimum that is a
    // handful of columns, so assemble from the scaled eigenvectors.
    int r = 0;
    for (int i = 0; i < n; ++i)
        if (w[i] > 0.0) ++r;
    Mat scaled(n, r);
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (w[i] > 0.0) scaled.col(c++) = ep.vectors.col(i) * std::sqrt(w[i]);
    Mat out = Mat::Zero(n, n);
    out.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
    out.triangularView<Eigen::StrictlyUpper>() = out.transpose();
    return out;
}

Mat recover_dual(const Mat& scaled_multiplier, double rho, double* clipped_mass_out) {
    Mat y = (-rho) * scaled_multiplier;
    symmetrize(y);
    const Mat clipped = y.cwiseMin(0.0);
    if (clipped_mass_out) *clipped_mass_out = clipped.norm();
    return y.cwiseMax(0.0);
}

SdpSolution solve_primal(const Mat& w_in, const SdpConfig& cfg) {
    if (!w_in.allFinite()) throw NumericFailure("solve_primal: non-finite input");
    if (symmetry_gap(w_in) > 1e-9 * std::max(1.0, w_in.cwiseAbs().maxCoeff()))
        throw InvalidParameter("solve_primal: w must be symmetric");
    Mat w = w_in;
    symmetrize(w);
    if (!(cfg.step_rho > 0.0) || !(cfg.primal_tol > 0.0) || !(cfg.dual_tol > 0.0) ||
        cfg.max_iters < 1 || cfg.check_every < 1 ||
        cfg.over_relaxation < 1.0 || cfg.over_relaxation > 1.9)
        throw InvalidParameter("solve_primal: bad config");

    const int n = static_cast<int>(w.rows());
    double rho = cfg.step_rho;
    Mat z = Mat::Identity(n, n) / n;
    Mat u = Mat::Zero(n, n);
    Mat x, xhat, zold;

    // Tail-restart averaging: accumulate Z, restart the accumulator whenever
    // the best combined residual so far halves. The averaged iterate then
    // reflects only the converged tail of the trajectory.
    Mat zsum = Mat::Zero(n, n);
    long zcount = 0;

    SdpSolution sol;
    sol.status = SolveStatus::max_iters;
    double best_combined = std::numeric_limits<double>::infinity();

    int k = 0;
    while (k < cfg.max_iters) {
        ++k;
        x = project_psd_trace_simplex(z - u + w / rho);
        xhat = cfg.over_relaxation * x + (1.0 - cfg.over_relaxation) * z;
        zold = z;
        z = (xhat + u).cwiseMax(0.0);
        u += xhat - z;
        zsum += z;
        ++zcount;

        if (k % cfg.check_every != 0 && k != cfg.max_iters) continue;

        const double r_raw = (x - z).norm();
        const double s_raw = rho * (z - zold).norm();
        if (!std::isfinite(r_raw) || !std::isfinite(s_raw)) {
            sol.status = SolveStatus::numeric_failure;
            break;
        }
        const double combined = std::max(r_raw, s_raw);
        sol.residual_history.push_back(combined);
        if (combined < 0.5 * best_combined) {
            best_combined = combined;
            zsum = z;
            zcount = 1;
        }

        const double r_scale = std::max({1.0, x.norm(), z.norm()});
        const double s_scale = std::max(1.0, rho * u.norm());
        sol.primal_residual = r_raw / r_scale;
        sol.dual_residual = s_raw / s_scale;
        if (sol.primal_residual <= cfg.primal_tol && sol.dual_residual <= cfg.dual_tol) {
            sol.status = SolveStatus::converged;
            break;
        }

        if (cfg.adaptive_rho) {
            if (r_raw > 10.0 * s_raw) {
                rho *= 2.0;
                u *= 0.5;
            } else if (s_raw > 10.0 * r_raw) {
                rho *= 0.5;
                u *= 2.0;
            }
        }
    }
    sol.iters = k;

    sol.x_opt = project_psd_trace_simplex(zsum / static_cast<double>(zcount));
    sol.value = (sol.x_opt.array() * w.array()).sum();
    sol.y_dual = recover_dual(u, rho, &sol.clipped_mass);
    const double ynorm = sol.y_dual.norm();
    sol.dual_usable = sol.status == SolveStatus::converged &&
                      sol.clipped_mass <= 1e-6 * std::max(ynorm, 1e-12);
    sol.dual_value = eigvalsh(w + sol.y_dual).maxCoeff();
    return sol;
}

FeasibilityReport check_feasibility(const Mat& x, double tol) {
    FeasibilityReport rep;
    rep.min_eigenvalue = eigvalsh(x).minCoeff();
    rep.trace_error = std::abs(x.trace() - 1.0);
    rep.min_entry = x.minCoeff();
    rep.feasible = rep.min_eigenvalue >= -tol && rep.trace_error <= tol && rep.min_entry >= -tol;
    return rep;
}

double certify_lambda_max(const Mat& w) {
    return eigvalsh(w).maxCoeff();
}

} // namespace nnpca
