#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "scn/gamma.hpp"
#include "scn/small_matrix.hpp"
#include "test_util.hpp"

using namespace scn;
using test::rel_err;

namespace {

SmallMatrix from_reals(const std::vector<std::vector<double>>& rows) {
    SmallMatrix m(int(rows.size()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            m.at(i, j) = SignedLog::from_real(rows[i][j]);
    return m;
}

SmallMatrix random_matrix(Xoshiro256pp& rng, int order) {
    SmallMatrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            m.at(i, j) = SignedLog::from_real(test::uniform(rng, -2.0, 2.0));
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(det(from_reals({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).to_real() == 1.0);
    CHECK(rel_err(det(from_reals({{1, 2}, {3, 4}})).to_real(), -2.0) < 1e-14);
    CHECK(det_empty().to_real() == 1.0);

    // 4x4 Vandermonde matrix on nodes (1,2,3,5): determinant 48
    std::vector<std::vector<double>> v(4, std::vector<double>(4));
    const double nodes[4] = {1, 2, 3, 5};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[i][j] = std::pow(nodes[i], j);
    CHECK(rel_err(det(from_reals(v)).to_real(), 48.0) < 1e-13);
    CHECK(rel_err(vandermonde(std::array<double, 4>{1, 2, 3, 5}).to_real(), 48.0) <
          1e-14);
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde(std::array<double, 1>{3.7}).to_real() == 1.0);
    CHECK(vandermonde(std::array<double, 3>{1, 1, 2}).is_zero());
    CHECK(rel_err(vandermonde(std::array<double, 3>{1, 2, 4}).to_real(), 6.0) <
          1e-14);
}

TEST_CASE("determinant transpose invariance") {
    Xoshiro256pp rng(21);
    for (int order = 2; order <= 5; ++order)
        for (int rep = 0; rep < 50; ++rep) {
            SmallMatrix m = random_matrix(rng, order);
            SmallMatrix t(order);
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) t.at(i, j) = m.at(j, i);
            SignedLog dm = det(m), dt = det(t);
            CHECK(dm.sign == dt.sign);
            if (dm.sign != 0)
                CHECK(std::fabs(dm.logmag - dt.logmag) <=
                      4.0 * 2.3e-16 * std::max(1.0, std::fabs(dm.logmag)) + 1e-12);
        }
}

TEST_CASE("determinant is multilinear in the first column") {
    Xoshiro256pp rng(22);
    for (int rep = 0; rep < 50; ++rep) {
        SmallMatrix a = random_matrix(rng, 4);
        SmallMatrix b = a;
        SmallMatrix sum = a;
        for (int i = 0; i < 4; ++i) {
            b.at(i, 0) = SignedLog::from_real(test::uniform(rng, -2.0, 2.0));
            sum.at(i, 0) = signedlog_add(a.at(i, 0), b.at(i, 0));
        }
        const double lhs = det(sum).to_real();
        const double rhs = det(a).to_real() + det(b).to_real();
        if (std::fabs(rhs) > 1e-9) CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("elimination path agrees with cofactor expansion") {
    Xoshiro256pp rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        SmallMatrix m = random_matrix(rng, 7);
        // expand along the first row with order-6 cofactor minors
        SignedLog expanded = SignedLog::zero();
        for (int j = 0; j < 7; ++j) {
            SmallMatrix minor(6);
            for (int i = 1; i < 7; ++i) {
                int cc = 0;
                for (int c = 0; c < 7; ++c) {
                    if (c == j) continue;
                    minor.at(i - 1, cc++) = m.at(i, c);
                }
            }
            SignedLog term = m.at(0, j) * det(minor);
            if (j % 2 == 1) term = -term;
            expanded = signedlog_add(expanded, term);
        }
        CHECK(rel_err(det(m).to_real(), expanded.to_real()) < 1e-10);
    }
}

TEST_CASE("reciprocal factorial determinant has a Vandermonde closed form") {
    // det[1/(n+i-j-1)!]_{i,j=1..alpha} = Delta_alpha(c) / prod_j (n+alpha-j-1)!
    // with c_j = j; the direct cofactor evaluation is the oracle.
    for (int alpha = 1; alpha <= 3; ++alpha)
        for (int n = 1; n <= 6; ++n) {
            SmallMatrix m(alpha);
            for (int i = 1; i <= alpha; ++i)
                for (int j = 1; j <= alpha; ++j)
                    m.at(i - 1, j - 1) = inv_factorial(n + i - j - 1);
            std::vector<double> c(alpha);
            double log_denominator = 0.0;
            for (int j = 1; j <= alpha; ++j) {
                c[j - 1] = double(j);
                log_denominator += log_factorial(n + alpha - j - 1);
            }
            SignedLog closed =
                vandermonde(c) / SignedLog::from_log(log_denominator);
            CHECK(rel_err(det(m).to_real(), closed.to_real()) < 1e-12);
        }
}

TEST_CASE("zero entries short-circuit") {
    SmallMatrix m = from_reals({{0, 1}, {0, 2}});
    CHECK(det(m).is_zero());
    CHECK_THROWS_AS(SmallMatrix(0), std::domain_error);
    CHECK_THROWS_AS(SmallMatrix(9), std::domain_error);
}
