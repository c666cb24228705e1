#include <doctest.h>

#include <cmath>
#include <vector>

#include "nnpca/ensembles.hpp"
#include "nnpca/spectral.hpp"
#include "oracles.hpp"

using namespace nnpca;

namespace {

Mat random_sym(int n, std::uint64_t trial, double scale = 2.0) {
    Rng rng(SeedSpec{123, trial});
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = scale * (2.0 * rng.uniform01() - 1.0);
    return m;
}

} // namespace

TEST_CASE("eigh on the identity and on a diagonal matrix") {
    const EigenPair id = eigh(Mat::Identity(3, 3));
    for (int i = 0; i < 3; ++i) CHECK(id.values[i] == doctest::Approx(1.0).epsilon(1e-12));

    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const EigenPair ep = eigh(d);
    CHECK(ep.values[0] == doctest::Approx(1.0));
    CHECK(ep.values[1] == doctest::Approx(2.0));
    CHECK(ep.values[2] == doctest::Approx(3.0));
    // Permuted standard basis; the sign convention makes each pivot +1.
    CHECK(ep.vectors(1, 0) == doctest::Approx(1.0));
    CHECK(ep.vectors(2, 1) == doctest::Approx(1.0));
    CHECK(ep.vectors(0, 2) == doctest::Approx(1.0));
}

TEST_CASE("eigh rejects non-finite input") {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = m(1, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigh(m), NumericFailure);
}

TEST_CASE("eigh reconstructs, orders, and orthonormalizes") {
    for (std::uint64_t t = 0; t < 5; ++t) {
        const Mat m = random_sym(40, t);
        const EigenPair ep = eigh(m);
        for (int i = 1; i < 40; ++i) CHECK(ep.values[i] >= ep.values[i - 1]);
        const Mat recon = ep.vectors * ep.values.asDiagonal() * ep.vectors.transpose();
        CHECK((recon - m).norm() <= 1e-8 * std::max(1.0, m.norm()));
        const Mat gram = ep.vectors.transpose() * ep.vectors;
        CHECK((gram - Mat::Identity(40, 40)).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("eigh sign convention is stable") {
    const Mat m = random_sym(12, 9);
    const EigenPair ep = eigh(m);
    for (int c = 0; c < 12; ++c) {
        int arg = 0;
        for (int i = 1; i < 12; ++i)
            if (std::abs(ep.vectors(i, c)) > std::abs(ep.vectors(arg, c))) arg = i;
        CHECK(ep.vectors(arg, c) > 0.0);
    }
}

TEST_CASE("eigh matches the characteristic-polynomial roots at small n") {
    for (int n = 2; n <= 4; ++n) {
        for (std::uint64_t t = 0; t < 50; ++t) {
            const Mat m = random_sym(n, 100 * n + t);
            const Vec e = eigvalsh(m);
            const std::vector<double> ref = oracle::charpoly_eigs(m);
            for (int i = 0; i < n; ++i) CHECK(std::abs(e[i] - ref[i]) <= 1e-8);
        }
    }
}

TEST_CASE("eigh matches the closed-form 3x3 solution") {
    for (std::uint64_t t = 0; t < 50; ++t) {
        const Mat m = random_sym(3, 900 + t);
        const Vec e = eigvalsh(m);
        const auto ref = oracle::sym3_eigs(m);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(e[i] - ref[i]) <= 1e-10);
    }
}

TEST_CASE("top projector special cases") {
    const Mat m = random_sym(6, 1);
    const Mat full = top_projector(m, 6);
    CHECK((full - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-10);

    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 2.0;
    d(2, 2) = 1.0;
    const Mat p = top_projector(d, 1);
    Mat e11 = Mat::Zero(3, 3);
    e11(0, 0) = 1.0;
    CHECK((p - e11).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK_THROWS_AS(top_projector(m, 0), InvalidParameter);
    CHECK_THROWS_AS(top_projector(m, 7), InvalidParameter);
}

TEST_CASE("top projector trace counts the rank") {
    const Mat w = sample_goe(1000, SeedSpec{14, 0});
    const Mat p = top_projector(w, 40);
    CHECK(std::abs(p.trace() - 40.0) <= 1e-8);
}

TEST_CASE("top projector is idempotent and symmetric at several sizes") {
    for (int n : {5, 50, 500}) {
        const Mat m = random_sym(n, 200 + n);
        const int r = std::max(1, n / 25);
        const Mat p = top_projector(m, r);
        CHECK(symmetry_gap(p) <= 1e-10);
        CHECK((p * p - p).cwiseAbs().maxCoeff() <= 1e-8);
        CHECK(std::abs(p.trace() - r) <= 1e-8);
    }
}

TEST_CASE("projector entry stats on hand-checked inputs") {
    const ProjectorStats id = projector_entry_stats(Mat::Identity(4, 4), 1.0);
    CHECK(id.max_diag_dev == doctest::Approx(0.0));
    CHECK(id.max_offdiag == doctest::Approx(0.0));
    CHECK(id.min_offdiag_signed == doctest::Approx(0.0));

    Mat half(2, 2);
    half << 0.5, -0.5, -0.5, 0.5;
    const ProjectorStats hs = projector_entry_stats(half, 0.5);
    CHECK(hs.max_diag_dev == doctest::Approx(0.0));
    CHECK(hs.max_offdiag == doctest::Approx(0.5));
    CHECK(hs.min_offdiag_signed == doctest::Approx(-0.5));
}

TEST_CASE("projector entry stats rejects non-projectors") {
    CHECK_THROWS_AS(projector_entry_stats(2.0 * Mat::Identity(3, 3), 1.0), ContractViolation);
    Mat skew = Mat::Zero(2, 2);
    skew(0, 1) = 0.5;
    CHECK_THROWS_AS(projector_entry_stats(skew, 0.5), ContractViolation);
}

TEST_CASE("random subspace projectors have concentrated off-diagonals") {
    // Projector onto the top eigenvectors of a GOE draw: by orthogonal
    // invariance that span is a uniformly random 40-dim subspace.
    const int n = 1000;
    const double delta = 0.04;
    const double bound = 1.5 * std::sqrt(std::log(static_cast<double>(n)) / n);
    for (std::uint64_t t = 0; t < 50; ++t) {
        const Mat w = sample_goe(n, SeedSpec{55, t});
        const Mat p = top_projector(w, 40);
        const ProjectorStats st = projector_entry_stats(p, delta);
        CHECK(st.max_offdiag <= bound);
        CHECK(st.max_offdiag >= std::abs(std::min(st.min_offdiag_signed, 0.0)));
    }
}

TEST_CASE("semicircle cdf closed form") {
    CHECK(semicircle_cdf(-2.0) == 0.0);
    CHECK(semicircle_cdf(-2.5) == 0.0);
    CHECK(semicircle_cdf(2.0) == 1.0);
    CHECK(semicircle_cdf(3.0) == 1.0);
    CHECK(semicircle_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    // x = 1: 1/2 + sqrt(3)/(4 pi) + 1/6
    CHECK(semicircle_cdf(1.0) == doctest::Approx(0.8044988905221148).epsilon(1e-12));
    CHECK(std::abs(semicircle_cdf(1.0) - oracle::semicircle_cdf_quad(1.0)) <= 1e-9);
    for (double x : {-1.7, -0.3, 0.4, 1.2, 1.9})
        CHECK(std::abs(semicircle_cdf(x) - oracle::semicircle_cdf_quad(x)) <= 1e-9);
}

TEST_CASE("semicircle cdf is monotone and continuous at the edges") {
    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = -2.5 + 5.0 * i / 10000.0;
        const double f = semicircle_cdf(x);
        CHECK(f >= prev);
        prev = f;
    }
    CHECK(semicircle_cdf(-2.0 + 1e-9) <= 1e-4);
    CHECK(semicircle_cdf(2.0 - 1e-9) >= 1.0 - 1e-4);
}

TEST_CASE("ks distance on perfect quantiles, point mass, and empties") {
    const int n = 500;
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) {
        // Invert the cdf at (i + 1/2)/n by bisection.
        const double target = (i + 0.5) / n;
        double lo = -2.0, hi = 2.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (semicircle_cdf(mid) < target ? lo : hi) = mid;
        }
        q[i] = 0.5 * (lo + hi);
    }
    CHECK(semicircle_ks(q) <= 0.5 / n + 1e-6);

    CHECK(semicircle_ks({5.0, 5.0, 5.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(semicircle_ks({}), InvalidParameter);
}

TEST_CASE("semicircle ks agrees with the direct scan oracle") {
    const Mat w = sample_goe(300, SeedSpec{31, 0});
    const Vec e = eigvalsh(w);
    std::vector<double> vals(e.data(), e.data() + e.size());
    const double lib = semicircle_ks(vals);
    const double ref = oracle::ks_stat(vals, [](double x) { return semicircle_cdf(x); });
    CHECK(lib == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("numerical rank basics and monotonicity") {
    Vec u = Vec::Zero(8);
    u[2] = 0.6;
    u[5] = 0.8;
    const Mat rank1 = u * u.transpose();
    CHECK(numerical_rank(rank1, 1e-6) == 1);
    CHECK(numerical_rank(Mat::Identity(10, 10) / 10.0, 1e-6) == 10);

    const Mat m = random_sym(20, 77);
    int prev = 21;
    for (double tol : {1e-8, 1e-4, 1e-2, 1e-1, 1.0, 10.0}) {
        const int r = numerical_rank(m, tol);
        CHECK(r <= prev);
        prev = r;
    }
}

TEST_CASE("quadratic form hand cases and dimension check") {
    Vec x(2);
    x << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(quadratic_form(Mat::Identity(2, 2), x) == doctest::Approx(1.0));
    Mat flip(2, 2);
    flip << 0, 1, 1, 0;
    CHECK(quadratic_form(flip, x) == doctest::Approx(1.0));
    CHECK(quadratic_form(-flip, x) == doctest::Approx(-1.0));
    Vec bad(3);
    bad << 1, 0, 0;
    CHECK_THROWS_AS(quadratic_form(flip, bad), InvalidParameter);
}
