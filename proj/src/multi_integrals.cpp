#include <cmath>
#include <stdexcept>
#include <string>

#include "scn/exact_dist.hpp"
#include "scn/gamma.hpp"
#include "scn/small_matrix.hpp"
#include "scn/special_functions.hpp"

namespace scn {

// Closed forms of the R/T/Q multiple integrals via the orthogonal
// polynomial technique: sign prefactor, factorial constant, and a
// Laguerre determinant.  Degrees inside the determinants can drop below
// zero for alpha near n; laguerre() returns 0 there, which is the
// convention under which the formulas hold.

namespace {

void check_nonneg(int n, int alpha, const char* who) {
    if (n < 0) throw std::domain_error(std::string(who) + ": requires n >= 0");
    if (alpha < 0) throw std::domain_error(std::string(who) + ": requires alpha >= 0");
}

}  // namespace

SignedLog r_det(int n, int alpha, double t) {
    check_nonneg(n, alpha, "r_det");
    double log_c = 0.0;
    for (int j = 0; j < n; ++j) log_c += 2.0 * log_factorial(j + 1);
    for (int j = 0; j < alpha; ++j)
        log_c += log_factorial(n + j) - log_factorial(j);
    const int sign = ((static_cast<long long>(n) * alpha) % 2 == 0) ? 1 : -1;
    SignedLog result(sign, log_c);
    if (alpha == 0) return result;
    SmallMatrix m(alpha);
    for (int i = 1; i <= alpha; ++i)
        for (int j = 1; j <= alpha; ++j)
            m.at(i - 1, j - 1) = laguerre(n + i - j, double(j), t);
    return result * det(m);
}

SignedLog t_det(int n, int alpha, double a, double b) {
    check_nonneg(n, alpha, "t_det");
    if (alpha > 0 && a == b)
        throw std::domain_error("t_det: a == b is singular for alpha > 0");
    double log_k = 0.0;
    for (int j = 1; j <= alpha + 1; ++j) log_k += log_factorial(n + j - 1);
    for (int j = 0; j < n; ++j)
        log_k += log_factorial(j + 1) + log_factorial(j + 2);
    for (int j = 0; j < alpha; ++j) log_k -= log_factorial(j);
    const int sign =
        ((n + static_cast<long long>(alpha) * (n + alpha)) % 2 == 0) ? 1 : -1;

    SmallMatrix m(alpha + 1);
    for (int i = 1; i <= alpha + 1; ++i) {
        m.at(i - 1, 0) = laguerre(n + i - 1, 2.0, a);
        for (int j = 2; j <= alpha + 1; ++j)
            m.at(i - 1, j - 1) = laguerre(n + i + 1 - j, double(j), b);
    }
    return SignedLog(sign, log_k) * det(m) /
           pow_int(SignedLog::from_real(b - a), alpha);
}

SignedLog q_det(int n, int alpha, double a, double b) {
    check_nonneg(n, alpha, "q_det");
    if (alpha > 0 && a == b)
        throw std::domain_error("q_det: a == b is singular for alpha > 0");
    double log_k = 0.0;
    for (int j = 1; j <= alpha + 1; ++j) log_k += log_factorial(n + j - 1);
    for (int j = 0; j < n; ++j)
        log_k += log_factorial(j) + log_factorial(j + 1);
    for (int j = 1; j < alpha; ++j) log_k -= log_factorial(j);
    const int sign =
        ((n + static_cast<long long>(alpha) * (n + alpha)) % 2 == 0) ? 1 : -1;

    SmallMatrix m(alpha + 1);
    for (int i = 1; i <= alpha + 1; ++i) {
        m.at(i - 1, 0) = laguerre(n + i - 1, 0.0, a);
        for (int j = 2; j <= alpha + 1; ++j)
            m.at(i - 1, j - 1) = laguerre(n + i + 1 - j, double(j - 2), b);
    }
    return SignedLog(sign, log_k) * det(m) /
           pow_int(SignedLog::from_real(b - a), alpha);
}

}  // namespace scn
