#include <cmath>
#include <limits>
#include <stdexcept>

#include "scn/exact_dist.hpp"
#include "scn/gamma.hpp"
#include "scn/quadrature.hpp"
#include "scn/small_matrix.hpp"
#include "scn/special_functions.hpp"

namespace scn {

// E[exp(-s kappa_SC^2)] as a single semi-infinite integral of a
// determinant whose first column carries the spike contribution and
// whose remaining columns are Laguerre polynomials at -(x+s).
//
// The eta^(n-1) of the outer constant is cancelled against the
// c_eta^(n-1) common to the first determinant column before anything is
// evaluated, so eta = 0 is directly computable: the first column then
// collapses to its top entry.
double mgf_kappa_sq(double s, const ExactPdfParams& p, double tol) {
    validate(p.dims);
    validate(p.spike);
    const int n = p.dims.n, alpha = p.dims.alpha;
    if (n < 2) throw std::domain_error("mgf_kappa_sq: requires n >= 2");
    if (!(s >= 0.0)) throw std::domain_error("mgf_kappa_sq: requires s >= 0");

    const double eta = p.spike.eta;
    const double c = p.spike.c_eta();
    const double log_const = log_factorial(n - 1) - log_factorial(n + alpha - 1) -
                             double(n + alpha) * std::log1p(eta);

    const double x_power = double(n) * (n + alpha - 1);
    const double u_power = double(n - 1) * (n + alpha);

    auto integrand = [&](double x) -> double {
        const double u = x + s;
        const double log_base = -x * (n - c) + x_power * std::log(x) -
                                u_power * std::log(u);
        SmallMatrix m(alpha + 1);
        for (int r = 0; r <= alpha; ++r) {
            const int i = r + 1;
            // (-1)^i c^(i-1) x^(n+i-2) ((n+i-1)u - cx) / (u - cx)^(n+i-1)
            if (c == 0.0 && i > 1) {
                m.at(r, 0) = SignedLog::zero();
            } else {
                double lm = (n + i - 2) * std::log(x) +
                            std::log((n + i - 1) * u - c * x) -
                            double(n + i - 1) * std::log(u - c * x);
                if (i > 1) lm += double(i - 1) * std::log(c);
                m.at(r, 0) = SignedLog((i % 2 == 0) ? 1 : -1, lm);
            }
            for (int j = 2; j <= alpha + 1; ++j)
                m.at(r, j - 1) = laguerre(n + i - j - 1, double(j), -u);
        }
        return (SignedLog::from_log(log_base) * det(m)).to_real();
    };

    IntegrationResult r = integrate(
        integrand, 0.0, std::numeric_limits<double>::infinity(), tol, tol);
    return -std::exp(log_const - double(n) * s) * r.value;
}

}  // namespace scn
