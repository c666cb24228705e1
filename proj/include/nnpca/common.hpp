#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace nnpca {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractViolation : std::runtime_error {
    explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Largest |A_ij - A_ji| over all pairs; zero for exactly symmetric storage.
inline double symmetry_gap(const Mat& a) {
    return (a - a.transpose()).cwiseAbs().maxCoeff();
}

// Averages A with its transpose in place. Used wherever floating-point matrix
// products can introduce asymmetry at roundoff scale.
inline void symmetrize(Mat& a) {
    a = ((a + a.transpose()) * 0.5).eval();
}

} // namespace nnpca
