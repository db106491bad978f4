#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "scn/csv.hpp"
#include "scn/empirical.hpp"
#include "scn/ensemble.hpp"
#include "scn/exact_dist.hpp"
#include "scn/quadrature.hpp"
#include "test_util.hpp"

using namespace scn;
using test::rel_err;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("nested index iterator") {
    CHECK(NestedIndexIterator::tuple_count(3, 0) == 1);
    CHECK(NestedIndexIterator::tuple_count(3, 2) == 4 * 3);
    CHECK(NestedIndexIterator::tuple_count(5, 3) == 7 * 6 * 5);

    long long seen = 0;
    for (NestedIndexIterator it(3, 2); !it.done(); it.advance()) {
        CHECK(it.indices()[0] <= 3);
        CHECK(it.indices()[1] <= 2);
        int s = it.indices()[0] + it.indices()[1];
        CHECK(it.sum() == s);
        ++seen;
    }
    CHECK(seen == 12);

    seen = 0;
    for (NestedIndexIterator it(4, 0); !it.done(); it.advance()) ++seen;
    CHECK(seen == 1);  // the single empty tuple
}

TEST_CASE("pdf support boundary and parameter guards") {
    const ExactPdfParams p{{3, 2}, {10.0}};
    CHECK(pdf_kappa_sq(3.0, p) == 0.0);
    CHECK(pdf_kappa_sq(2.0, p) == 0.0);
    CHECK(pdf_kappa_sq(3.0 + 1e-9, p) >= 0.0);
    CHECK_THROWS_AS(pdf_kappa_sq(10.0, ExactPdfParams{{1, 0}, {0.0}}),
                    std::domain_error);
    // tuple count 44*43*42*41*40 > 1e8 must be refused
    CHECK_THROWS_AS(pdf_kappa_sq(50.0, ExactPdfParams{{40, 5}, {1.0}}),
                    std::domain_error);
}

// Brute-force oracle for n = 2: kappa^2 = 1 + l2/l1, so the density at z
// is the line integral of the joint density along l2 = (z-1) l1 with
// Jacobian l1.
namespace {
double pushforward_pdf_n2(double z, const ExactPdfParams& p) {
    auto f = [&](double x) {
        const double y = (z - 1.0) * x;
        if (y - x < 1e-9) return 0.0;
        return x * joint_density(std::vector<double>{x, y}, p.dims, p.spike);
    };
    return integrate(f, 0.0, kInf, 1e-9, 1e-9).value;
}
}  // namespace

TEST_CASE("exact pdf matches the n=2 change-of-variables oracle") {
    const ExactPdfParams p{{2, 0}, {2.0}};
    for (double z : linspace(2.3, 28.0, 10))
        CHECK(std::fabs(pdf_kappa_sq(z, p) - pushforward_pdf_n2(z, p)) < 1e-5);
    // and with a nonzero alpha
    const ExactPdfParams q{{2, 1}, {3.0}};
    for (double z : linspace(2.4, 20.0, 6))
        CHECK(std::fabs(pdf_kappa_sq(z, q) - pushforward_pdf_n2(z, q)) < 1e-5);
}

TEST_CASE("eta = 0 reduces to the white closed form") {
    for (int n : {2, 3, 4})
        for (int alpha : {0, 1, 2, 3}) {
            const Dims dims{n, alpha};
            const ExactPdfParams p{dims, {0.0}};
            for (double z : linspace(n * 1.05, n * 5.0, 8)) {
                const double a = pdf_kappa_sq(z, p);
                const double b = pdf_kappa_sq_white(z, dims);
                CHECK(rel_err(a, b) < 1e-10);
            }
        }
}

TEST_CASE("white pdf at n=2, alpha=0 is 6 (z-2)^2 / z^4") {
    for (double z : linspace(2.1, 40.0, 12))
        CHECK(rel_err(pdf_kappa_sq_white(z, {2, 0}),
                      6.0 * (z - 2.0) * (z - 2.0) / std::pow(z, 4)) < 1e-13);
    auto f = [&](double z) { return pdf_kappa_sq_white(z, {2, 0}); };
    CHECK(std::fabs(integrate(f, 2.0, kInf, 1e-10, 1e-10).value - 1.0) < 1e-8);
}

TEST_CASE("alpha specializations agree with the general formula") {
    const ExactPdfParams p0{{3, 0}, {5.0}};
    CHECK(rel_err(pdf_kappa_sq_alpha0(10.0, p0), pdf_kappa_sq(10.0, p0)) <
          1e-11);
    const ExactPdfParams p1{{3, 1}, {5.0}};
    CHECK(rel_err(pdf_kappa_sq_alpha1(12.0, p1), pdf_kappa_sq(12.0, p1)) <
          1e-11);
    CHECK(pdf_kappa_sq_alpha0(2.0, p0) == 0.0);
    CHECK_THROWS_AS(pdf_kappa_sq_alpha0(5.0, p1), std::domain_error);
    CHECK_THROWS_AS(pdf_kappa_sq_alpha1(5.0, p0), std::domain_error);

    for (int n : {2, 4, 6})
        for (double eta : {0.5, 2.0, 10.0}) {
            const ExactPdfParams a0{{n, 0}, {eta}};
            const ExactPdfParams a1{{n, 1}, {eta}};
            for (double z : linspace(n * 1.1, n * 5.0, 7)) {
                CHECK(rel_err(pdf_kappa_sq_alpha0(z, a0), pdf_kappa_sq(z, a0)) <
                      1e-10);
                CHECK(rel_err(pdf_kappa_sq_alpha1(z, a1), pdf_kappa_sq(z, a1)) <
                      1e-10);
            }
        }
}

TEST_CASE("pdf normalization") {
    for (auto [n, alpha, eta] : std::vector<std::tuple<int, int, double>>{
             {2, 0, 2.0}, {3, 2, 1.0}, {2, 3, 10.0}, {5, 1, 0.0}}) {
        const ExactPdfParams p{{n, alpha}, {eta}};
        auto f = [&](double z) { return pdf_kappa_sq(z, p); };
        const double mass = integrate(f, double(n), kInf, 1e-9, 1e-9).value;
        CHECK(std::fabs(mass - 1.0) < 1e-6);
    }
}

TEST_CASE("pdf nonnegativity on a dense grid") {
    const ExactPdfParams p{{4, 2}, {7.0}};
    for (double z : linspace(4.0, 80.0, 400)) CHECK(pdf_kappa_sq(z, p) >= -1e-9);
}

TEST_CASE("cdf behavior") {
    const ExactPdfParams p{{3, 1}, {4.0}};
    CHECK(cdf_kappa_sq(3.0, p) == 0.0);
    CHECK(cdf_kappa_sq(2.0, p) == 0.0);
    // the tail behaves like K z^-(alpha+2); by z = 2e6 the remaining mass
    // is below 1e-9
    CHECK(std::fabs(cdf_kappa_sq(2e6, p) - 1.0) < 1e-6);
    double prev = -1.0;
    for (double z : linspace(3.0, 60.0, 15)) {
        const double c = cdf_kappa_sq(z, p);
        CHECK(c >= prev);
        CHECK(c <= 1.0);
        prev = c;
    }
}

TEST_CASE("cdf median matches Monte Carlo") {
    const ExactPdfParams p{{3, 2}, {10.0}};
    auto emp = monte_carlo(p.dims, p.spike, 200000, 77, Statistic::kappa_sq);
    const double med = emp.quantile(0.5);
    CHECK(std::fabs(cdf_kappa_sq(med, p) - 0.5) < 0.01);
}

TEST_CASE("minimum eigenvalue closed forms at alpha = 0") {
    for (auto [n, eta] :
         std::vector<std::pair<int, double>>{{2, 0.0}, {3, 5.0}, {5, 2.0}}) {
        const ExactPdfParams p{{n, 0}, {eta}};
        const double rate = n - p.spike.c_eta();
        for (double x : {0.05, 0.4, 1.2}) {
            CHECK(std::fabs(pdf_min_eig(x, p) - rate * std::exp(-x * rate)) <
                  1e-14 * rate);
            CHECK(std::fabs(cdf_min_eig(x, p) - (1.0 - std::exp(-x * rate))) <
                  1e-14);
        }
    }
}

TEST_CASE("minimum eigenvalue pdf integrates to one and matches its cdf") {
    const ExactPdfParams p{{4, 2}, {3.0}};
    CHECK(cdf_min_eig(0.0, p) == 0.0);
    auto f = [&](double x) { return pdf_min_eig(x, p); };
    CHECK(std::fabs(integrate(f, 0.0, kInf, 1e-10, 1e-10).value - 1.0) < 1e-8);
    for (double x : {0.1 / 4, 0.5 / 4, 1.0 / 4, 2.0 / 4}) {
        const double h = 1e-6;
        const double fd = (cdf_min_eig(x + h, p) - cdf_min_eig(x - h, p)) / (2 * h);
        CHECK(rel_err(fd, pdf_min_eig(x, p)) < 1e-6);
    }
}

TEST_CASE("minimum eigenvalue law against Monte Carlo") {
    const ExactPdfParams p{{3, 1}, {5.0}};
    auto emp = monte_carlo(p.dims, p.spike, 20000, 88, Statistic::min_eig);
    const double d =
        ks_distance(emp, [&](double x) { return cdf_min_eig(x, p); });
    CHECK(d < 0.02);
}

TEST_CASE("minimum eigenvalue law survives alpha >= n") {
    // Laguerre degrees inside the determinant go negative here; the
    // zero convention keeps the formulas exact.
    const ExactPdfParams p{{2, 3}, {2.0}};
    auto f = [&](double x) { return pdf_min_eig(x, p); };
    CHECK(std::fabs(integrate(f, 0.0, kInf, 1e-10, 1e-10).value - 1.0) < 1e-8);
    for (double x : {0.25, 1.0}) {
        const double h = 1e-4;
        const double fd =
            (cdf_min_eig(x + h, p) - cdf_min_eig(x - h, p)) / (2.0 * h);
        CHECK(rel_err(fd, pdf_min_eig(x, p)) < 1e-5);
    }
    auto emp = monte_carlo(p.dims, p.spike, 20000, 90, Statistic::min_eig);
    CHECK(ks_distance(emp, [&](double x) { return cdf_min_eig(x, p); }) < 0.015);
}

TEST_CASE("mgf") {
    const ExactPdfParams p{{2, 1}, {2.0}};
    CHECK(std::fabs(mgf_kappa_sq(0.0, p) - 1.0) < 1e-6);
    // Laplace-transform consistency
    for (double s : {0.1, 0.5}) {
        auto f = [&](double z) { return std::exp(-s * z) * pdf_kappa_sq(z, p); };
        const double lap = integrate(f, 2.0, kInf, 1e-11, 1e-11).value;
        CHECK(rel_err(mgf_kappa_sq(s, p), lap) < 1e-5);
    }
    // monotone nonincreasing in s
    double prev = 2.0;
    for (double s = 0.0; s <= 0.5 + 1e-12; s += 0.05) {
        const double m = mgf_kappa_sq(s, p);
        CHECK(m <= prev + 1e-12);
        prev = m;
    }
    CHECK_THROWS_AS(mgf_kappa_sq(-0.1, p), std::domain_error);
}

TEST_CASE("mgf at eta = 0") {
    // the spike column of the integrand collapses to its top entry
    const ExactPdfParams p{{3, 1}, {0.0}};
    CHECK(std::fabs(mgf_kappa_sq(0.0, p) - 1.0) < 1e-6);
    const double s = 0.1;
    auto f = [&](double z) {
        return std::exp(-s * z) * pdf_kappa_sq_white(z, p.dims);
    };
    const double lap = integrate(f, 3.0, kInf, 1e-11, 1e-11).value;
    CHECK(rel_err(mgf_kappa_sq(s, p), lap) < 1e-6);
}

TEST_CASE("R/T/Q hand anchors") {
    for (double t : {0.5, 2.5, 7.0})
        CHECK(rel_err(r_det(1, 1, t).to_real(), t - 2.0) < 1e-12);
    for (double a : {1.7, 4.0}) {
        CHECK(rel_err(t_det(1, 0, a, 9.9).to_real(), 2.0 * a - 6.0) < 1e-12);
        CHECK(rel_err(q_det(1, 0, a, 9.9).to_real(), a - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(t_det(2, 1, 1.5, 1.5), std::domain_error);
    CHECK_THROWS_AS(q_det(2, 1, 1.5, 1.5), std::domain_error);
}

TEST_CASE("R/T/Q against brute-force quadrature") {
    const double t = 2.5, a = 1.7, b = 3.2;
    auto pow_i = [](double base, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    for (int n : {1, 2})
        for (int alpha : {0, 1, 2}) {
            auto oracle = [&](auto core) {
                if (n == 1)
                    return integrate(core, 0.0, kInf, 1e-12, 1e-12).value;
                auto outer = [&](double y1) {
                    auto inner = [&](double y2) {
                        const double g = y2 - y1;
                        return core(y1) * core(y2) * g * g;
                    };
                    return integrate(inner, 0.0, kInf, 1e-12, 1e-12).value;
                };
                return integrate(outer, 0.0, kInf, 1e-10, 1e-10).value;
            };
            const double r_ref = oracle([&](double y) {
                return std::exp(-y) * y * pow_i(t - y, alpha);
            });
            CHECK(rel_err(r_det(n, alpha, t).to_real(), r_ref) < 1e-8);
            const double t_ref = oracle([&](double y) {
                return (a - y) * pow_i(b - y, alpha) * std::exp(-y) * y * y;
            });
            CHECK(rel_err(t_det(n, alpha, a, b).to_real(), t_ref) < 1e-8);
            const double q_ref = oracle([&](double y) {
                return (a - y) * pow_i(b - y, alpha) * std::exp(-y);
            });
            CHECK(rel_err(q_det(n, alpha, a, b).to_real(), q_ref) < 1e-8);
        }
}
