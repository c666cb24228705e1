#pragma once

#include <vector>

#include "nnpca/common.hpp"

namespace nnpca {

enum class SolveStatus { converged, max_iters, numeric_failure };

struct SdpConfig {
    double step_rho = 1.0;        // penalty parameter
    double primal_tol = 1e-6;     // relative residual tolerances
    double dual_tol = 1e-6;
    int max_iters = 50000;
    double over_relaxation = 1.5; // in [1.0, 1.9]
    int check_every = 25;         // residual evaluation stride
    bool adaptive_rho = false;    // residual-balancing penalty updates
};

struct FeasibilityReport {
    double min_eigenvalue;
    double trace_error;  // |tr X - 1|
    double min_entry;
    bool feasible;
};

struct SdpSolution {
    Mat x_opt;
    double value = 0.0;       // <X, W>
    Mat y_dual;
    double dual_value = 0.0;  // lmax(W + Y)
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    int iters = 0;
    SolveStatus status = SolveStatus::numeric_failure;
    bool dual_usable = false;       // false if clipping the multiplier moved too much mass
    double clipped_mass = 0.0;      // Frobenius mass removed when clipping Y at zero
    std::vector<double> residual_history;  // combined residual at each checkpoint
};

// Euclidean projection of v onto the probability simplex.
Vec project_simplex(const Vec& v);

// Euclidean projection onto {X psd, tr X = 1}: project the eigenvalues onto
// the simplex and reassemble.
Mat project_psd_trace_simplex(const Mat& m);

// max <X, W> over {X psd, X >= 0 entrywise, tr X = 1} by two-block consensus
// splitting. The reported X is the tail-averaged entrywise-nonnegative
// iterate pushed once through project_psd_trace_simplex, so it is certified
// psd with unit trace.
SdpSolution solve_primal(const Mat& w, const SdpConfig& cfg = {});

// Dual certificate from the scaled splitting multiplier: symmetrize -rho*U
// and clip negatives. clipped_mass_out receives the Frobenius mass removed.
Mat recover_dual(const Mat& scaled_multiplier, double rho, double* clipped_mass_out = nullptr);

FeasibilityReport check_feasibility(const Mat& x, double tol);

// Baseline certifier: lmax(W), an upper bound for the max of x^T W x over
// unit x >= 0.
double certify_lambda_max(const Mat& w);

} // namespace nnpca
