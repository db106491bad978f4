#include "scn/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

#include "scn/signed_log.hpp"
#include "scn/small_matrix.hpp"
#include "scn/special_functions.hpp"

namespace scn {

void validate(const AsymptoticParams& p) {
    if (p.alpha < 0 || p.alpha > SmallMatrix::kMaxOrder)
        throw std::domain_error("AsymptoticParams: alpha must be in 0..8");
    if (!(p.mu > 0.0)) throw std::domain_error("AsymptoticParams: mu must be > 0");
    if (!(p.rho >= 0.0)) throw std::domain_error("AsymptoticParams: rho must be >= 0");
}

namespace {

// log-domain Bessel determinant det[I_{j-i+shift}(2 sqrt(w))], alpha x alpha.
SignedLog bessel_det(double w, int alpha, int shift) {
    if (alpha == 0) return SignedLog::one();
    const double arg = 2.0 * std::sqrt(w);
    SmallMatrix m(alpha);
    for (int i = 1; i <= alpha; ++i)
        for (int j = 1; j <= alpha; ++j)
            m.at(i - 1, j - 1) = SignedLog::from_real(bessel_i(j - i + shift, arg));
    return det(m);
}

// The kernels decay like exp(-w + 2 alpha sqrt(w)); below the double
// underflow threshold return 0 before Bessel magnitudes get out of hand.
bool underflows(double w, int alpha, int shift) {
    return -w + 2.0 * (alpha + std::abs(shift)) * std::sqrt(w) < -745.0;
}

}  // namespace

double hard_edge_survival(double w, int alpha) {
    if (w <= 0.0) return 1.0;
    if (underflows(w, alpha, 0)) return 0.0;
    SignedLog d = bessel_det(w, alpha, 0);
    if (d.sign <= 0) return 0.0;  // cancellation noise at extreme w
    return std::min(1.0, std::exp(-w + d.logmag));
}

double cdf_scaled_min_eig(double x, const AsymptoticParams& p) {
    validate(p);
    if (x <= 0.0) return 0.0;
    return 1.0 - hard_edge_survival(x / p.mu, p.alpha);
}

double cdf_scaled_kappa(double v, const AsymptoticParams& p) {
    validate(p);
    if (v <= 0.0) return 0.0;
    return hard_edge_survival(1.0 / (p.mu * v), p.alpha);
}

double pdf_scaled_kappa(double v, const AsymptoticParams& p) {
    validate(p);
    if (v <= 0.0) return 0.0;
    const double w = 1.0 / (p.mu * v);
    if (underflows(w, p.alpha, 2)) return 0.0;
    SignedLog d = bessel_det(w, p.alpha, 2);
    if (d.sign == 0) return 0.0;
    SignedLog f(d.sign, -w - std::log(p.mu) - 2.0 * std::log(v) + d.logmag);
    return f.to_real();
}

}  // namespace scn
