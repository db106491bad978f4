#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "scn/quadrature.hpp"
#include "scn/special_functions.hpp"
#include "test_util.hpp"

using namespace scn;
using test::rel_err;

TEST_CASE("laguerre basic values") {
    CHECK(laguerre(0, 2.0, 7.3).to_real() == 1.0);
    CHECK(std::fabs(laguerre(1, 0.0, 1.0).to_real()) < 1e-15);  // 1 - z at z=1
    CHECK(rel_err(laguerre(2, 0.0, 1.0).to_real(), -0.5) < 1e-14);
    CHECK(laguerre(-1, 0.0, 3.0).is_zero());
    CHECK(laguerre(-4, 2.0, 3.0).is_zero());
    CHECK_THROWS_AS(laguerre(2, -1.0, 0.5), std::domain_error);
}

TEST_CASE("laguerre matches the three-term recurrence") {
    for (int m : {0, 1, 2, 5, 9})
        for (double rho : {0.0, 1.0, 3.0})
            for (double z : {-8.0, -1.0, 0.0, 0.7})
                CHECK(rel_err(laguerre(m, rho, z).to_real(),
                              laguerre_recurrence(m, rho, z)) < 1e-11);
}

namespace {

// Identity sweeps include z > 0, where the explicit sum alternates and
// cancels; evaluate there through the recurrence (stable on that side)
// and keep the production path for the z <= 0 regime it serves.
double eval_lag(int m, double rho, double z) {
    return z > 0.0 ? laguerre_recurrence(m, rho, z)
                   : laguerre(m, rho, z).to_real();
}

}  // namespace

TEST_CASE("laguerre derivative identity") {
    // d/dz L_M^(rho)(z) = -L_{M-1}^(rho+1)(z), by central differences.
    // Near roots of the derivative the deviation is measured against the
    // natural finite-difference scale |L| rather than the tiny exact value.
    for (int m = 1; m <= 15; ++m)
        for (double rho : {0.0, 1.0, 2.0, 5.0})
            for (double z : {-10.0, -1.0, 0.5, 4.0}) {
                const double h = 1e-6 * std::max(1.0, std::fabs(z));
                const double lp = eval_lag(m, rho, z + h);
                const double lm = eval_lag(m, rho, z - h);
                const double fd = (lp - lm) / (2.0 * h);
                const double exact = -eval_lag(m - 1, rho + 1.0, z);
                const double scale = std::max(
                    std::fabs(exact), 0.5 * (std::fabs(lp) + std::fabs(lm)));
                if (scale > 1e-12)
                    CHECK(std::fabs(fd - exact) < 1e-6 * scale);
            }
}

TEST_CASE("laguerre contiguity relations") {
    // Identities hold to ~1e-11 relative to the magnitude of the terms
    // entering them (the identity value itself can cancel to zero).
    for (int m = 0; m <= 15; ++m)
        for (double rho : {1.0, 2.0, 5.0})
            for (double z : {-10.0, -1.0, 0.5, 4.0}) {
                const double lm = eval_lag(m, rho, z);
                const double lml = eval_lag(m, rho - 1.0, z);
                const double lp1l = eval_lag(m + 1, rho - 1.0, z);
                // z L_M^(rho) = (M+rho) L_M^(rho-1) - (M+1) L_{M+1}^(rho-1)
                const double rhs = (m + rho) * lml - (m + 1.0) * lp1l;
                const double scale1 =
                    std::max({std::fabs(z * lm), std::fabs((m + rho) * lml),
                              std::fabs((m + 1.0) * lp1l)});
                if (scale1 > 1e-10)
                    CHECK(std::fabs(z * lm - rhs) < 1e-11 * scale1);
                // L_M^(rho-1) = L_M^(rho) - L_{M-1}^(rho)
                const double lm1 = eval_lag(m - 1, rho, z);
                const double scale2 =
                    std::max({std::fabs(lml), std::fabs(lm), std::fabs(lm1)});
                if (scale2 > 1e-10)
                    CHECK(std::fabs(lml - (lm - lm1)) < 1e-11 * scale2);
            }
}

TEST_CASE("bessel_i values") {
    CHECK(bessel_i(0, 0.0) == 1.0);
    CHECK(bessel_i(3, 0.0) == 0.0);
    CHECK(rel_err(bessel_i(1, 2.0), 1.590636854637329063) < 1e-14);
    CHECK(rel_err(bessel_i(0, 2.0), 2.279585302336067267) < 1e-14);
    CHECK(bessel_i(-2, 1.3) == bessel_i(2, 1.3));
    CHECK_THROWS_AS(bessel_i(0, -1.0), std::domain_error);
}

TEST_CASE("bessel_i against its integral representation") {
    // I_k(x) = (1/pi) int_0^pi exp(x cos t) cos(k t) dt
    const double pi = 3.14159265358979323846;
    for (int k : {0, 1, 2, 4})
        for (double x : {0.3, 1.0, 5.0, 20.0, 50.0}) {
            auto f = [&](double t) {
                return std::exp(x * std::cos(t)) * std::cos(k * t);
            };
            const double ref = integrate(f, 0.0, pi, 1e-12, 1e-13).value / pi;
            CHECK(rel_err(bessel_i(k, x), ref) < 1e-12);
        }
}

TEST_CASE("bessel recurrence") {
    // I_{k-1}(x) - I_{k+1}(x) = (2k/x) I_k(x)
    for (int k = 1; k <= 5; ++k)
        for (double x : {0.1, 1.0, 5.0, 20.0}) {
            const double lhs = bessel_i(k - 1, x) - bessel_i(k + 1, x);
            const double rhs = 2.0 * k / x * bessel_i(k, x);
            CHECK(rel_err(lhs, rhs) < 1e-10);
        }
}

TEST_CASE("hypergeometric series basics") {
    CHECK(hyp_pfq({{2.5, 3.0}, {1.5}, 0.0}).to_real() == 1.0);
    CHECK(rel_err(hyp_2f1(1.0, 1.0, 2.0, 0.5).to_real(),
                  1.38629436111989061883) < 1e-13);
    CHECK(rel_err(hyp_1f1(-2.0, 1.0, 1.0).to_real(), -0.5) < 1e-14);
}

TEST_CASE("hypergeometric padding identity") {
    // 2F1(a,b;c;x) = 3F2(a,b,d;c,d;x) for any d > 0
    Xoshiro256pp rng(11);
    for (int i = 0; i < 200; ++i) {
        const double a = test::uniform(rng, 0.1, 4.0);
        const double b = test::uniform(rng, 0.1, 4.0);
        const double c = test::uniform(rng, 0.5, 5.0);
        const double d = test::uniform(rng, 0.1, 9.0);
        const double x = test::uniform(rng, 0.0, 0.9);
        const double f21 = hyp_2f1(a, b, c, x).to_real();
        const double f32 = hyp_3f2(a, b, d, c, d, x).to_real();
        CHECK(rel_err(f21, f32) < 1e-12);
    }
}

TEST_CASE("hypergeometric terminating series ignores |x| >= 1") {
    // terminating at the nonpositive integer numerator parameter
    const double v = hyp_pfq({{-3.0, 2.0}, {4.0}, 2.5}).to_real();
    // sum_{k=0..3} (-3)_k (2)_k / (4)_k * 2.5^k / k!
    double expect = 0.0, t = 1.0;
    for (int k = 0; k <= 3; ++k) {
        expect += t;
        t *= (-3.0 + k) * (2.0 + k) / (4.0 + k) * 2.5 / (k + 1.0);
    }
    CHECK(rel_err(v, expect) < 1e-14);
}

TEST_CASE("hypergeometric domain errors") {
    CHECK_THROWS_AS(hyp_pfq({{1.0, 2.0}, {1.5}, 1.0}), std::domain_error);
    CHECK_THROWS_AS(hyp_pfq({{1.0}, {-2.0}, 0.5}), std::domain_error);
    // pole after termination is fine: (-1)_k kills the series first
    CHECK_NOTHROW(hyp_pfq({{-1.0, 2.0}, {-3.0}, 0.5}));
    // geometric decay slower than the term budget allows
    CHECK_THROWS_AS(hyp_2f1(1.0, 1.0, 2.0, 1.0 - 1e-9), std::runtime_error);
}
