#include <cmath>
#include <stdexcept>

#include "scn/exact_dist.hpp"
#include "scn/gamma.hpp"
#include "scn/small_matrix.hpp"
#include "scn/special_functions.hpp"

namespace scn {

// Minimum-eigenvalue laws of the single-spiked Wishart-Laguerre
// ensemble: (alpha+1) x (alpha+1) determinants whose first column holds
// the spike powers and whose remaining columns are Laguerre polynomials
// at argument -x.

double pdf_min_eig(double x, const ExactPdfParams& p) {
    validate(p.dims);
    validate(p.spike);
    if (x < 0.0) return 0.0;
    const int n = p.dims.n, alpha = p.dims.alpha;
    const double eta = p.spike.eta;
    const double c = p.spike.c_eta();
    if (x == 0.0 && alpha > 0) return 0.0;  // x^alpha factor

    double log_pref = log_factorial(n - 1) - log_factorial(n + alpha - 1) -
                      double(alpha) * std::log1p(eta) - x * (n - c);
    if (alpha > 0) log_pref += double(alpha) * std::log(x);

    const SignedLog neg_eta = SignedLog::from_real(-eta);
    SmallMatrix m(alpha + 1);
    for (int i = 0; i <= alpha; ++i) {
        m.at(i, 0) = SignedLog::from_real(n + i - c) * pow_int(neg_eta, i);
        for (int j = 1; j <= alpha; ++j)
            m.at(i, j) = laguerre(n + i - j - 1, double(j + 1), -x);
    }
    return (SignedLog::from_log(log_pref) * det(m)).to_real();
}

double cdf_min_eig(double x, const ExactPdfParams& p) {
    validate(p.dims);
    validate(p.spike);
    if (x <= 0.0) return 0.0;
    const int n = p.dims.n, alpha = p.dims.alpha;
    const double eta = p.spike.eta;
    const double c = p.spike.c_eta();

    const double log_pref =
        -x * (n - c) - double(alpha) * std::log1p(eta);

    const SignedLog neg_eta = SignedLog::from_real(-eta);
    SmallMatrix m(alpha + 1);
    for (int i = 0; i <= alpha; ++i) {
        m.at(i, 0) = pow_int(neg_eta, i);
        for (int j = 1; j <= alpha; ++j)
            m.at(i, j) = laguerre(n + i - j, double(j - 1), -x);
    }
    const double survival = (SignedLog::from_log(log_pref) * det(m)).to_real();
    return std::min(1.0, std::max(0.0, 1.0 - survival));
}

}  // namespace scn
