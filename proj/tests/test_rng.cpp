#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "nnpca/rng.hpp"
#include "oracles.hpp"

using namespace nnpca;

TEST_CASE("identical seed spec gives an identical stream") {
    Rng a(SeedSpec{42, 7});
    Rng b(SeedSpec{42, 7});
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(SeedSpec{42, 7});
    Rng d(SeedSpec{42, 7});
    for (int i = 0; i < 1000; ++i) {
        const double x = c.gaussian(), y = d.gaussian();
        CHECK(x == y);
    }
}

TEST_CASE("different master seeds and trial indices give different streams") {
    std::set<std::uint64_t> firsts;
    for (std::uint64_t m = 0; m < 20; ++m)
        for (std::uint64_t t = 0; t < 20; ++t) firsts.insert(Rng(SeedSpec{m, t}).next_u64());
    CHECK(firsts.size() == 400);
}

TEST_CASE("uniform01 lies in [0,1) and fills the interval") {
    Rng rng(SeedSpec{1, 0});
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo < 1e-3);
    CHECK(hi > 1.0 - 1e-3);
    // Mean of n uniforms has sd 1/sqrt(12 n); allow five of those.
    CHECK(std::abs(sum / n - 0.5) < 5.0 / std::sqrt(12.0 * n));
}

TEST_CASE("gaussian moments match the standard normal") {
    Rng rng(SeedSpec{3, 5});
    const int n = 200000;
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        m1 += g;
        m2 += g * g;
        m4 += g * g * g * g;
    }
    m1 /= n;
    m2 /= n;
    m4 /= n;
    CHECK(std::abs(m1) < 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(m2 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(m4 == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("streams with different trial indices are uncorrelated") {
    // Summary statistic per trial: mean of 100 gaussians. Adjacent trial
    // indices should give statistically independent values.
    const int trials = 400;
    std::vector<double> a(trials), b(trials);
    for (int t = 0; t < trials; ++t) {
        Rng r1(SeedSpec{9, static_cast<std::uint64_t>(2 * t)});
        Rng r2(SeedSpec{9, static_cast<std::uint64_t>(2 * t + 1)});
        double s1 = 0.0, s2 = 0.0;
        for (int i = 0; i < 100; ++i) {
            s1 += r1.gaussian();
            s2 += r2.gaussian();
        }
        a[t] = s1 / 100.0;
        b[t] = s2 / 100.0;
    }
    CHECK(std::abs(oracle::correlation(a, b)) <= 0.1);
}
