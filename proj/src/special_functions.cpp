#include "scn/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "scn/gamma.hpp"

namespace scn {

SignedLog laguerre(int degree, double rho, double z) {
    if (rho <= -1.0) throw std::domain_error("laguerre: requires rho > -1");
    if (degree < 0) return SignedLog::zero();

    // L_M^(rho)(z) = [(rho+1)_M / M!] * sum_{j=0..M} (-M)_j z^j / ((rho+1)_j j!).
    // For z < 0 every term is positive; no cancellation.
    SignedLog sum = SignedLog::one();
    SignedLog term = SignedLog::one();
    for (int j = 0; j < degree; ++j) {
        term *= SignedLog::from_real(double(-degree + j) * z /
                                     ((rho + 1.0 + j) * (j + 1.0)));
        sum = signedlog_add(sum, term);
    }
    SignedLog prefactor = pochhammer(rho + 1.0, degree) * inv_factorial(degree);
    return prefactor * sum;
}

double laguerre_recurrence(int degree, double rho, double z) {
    if (degree < 0) return 0.0;
    double lm1 = 0.0;       // L_{-1}
    double l = 1.0;         // L_0
    for (int m = 0; m < degree; ++m) {
        double lp1 = ((2.0 * m + 1.0 + rho - z) * l - (m + rho) * lm1) / (m + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double bessel_i(int order, double x) {
    if (x < 0.0) throw std::domain_error("bessel_i: requires x >= 0");
    const int k = order < 0 ? -order : order;
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;

    // I_k(x) = sum_j (x/2)^(2j+k) / (j! (j+k)!), all terms positive.
    // Run the sum on a scaled mantissa so large x does not overflow
    // intermediates before the final exp.
    const double half = 0.5 * x;
    double log_t0 = k * std::log(half) - log_factorial(k);
    double offset = log_t0;
    double term = 1.0;  // t_0 / exp(offset)
    double sum = term;
    const double hsq = half * half;
    for (int j = 0; j < 100000; ++j) {
        term *= hsq / ((j + 1.0) * (j + 1.0 + k));
        sum += term;
        if (term <= 1e-17 * sum) break;
        if (sum > 1e250) {
            sum *= 1e-250;
            term *= 1e-250;
            offset += 250.0 * std::log(10.0);
        }
    }
    return sum * std::exp(offset);
}

SignedLog hyp_pfq(const HypSeriesParams& p) {
    const auto& as = p.numerator_params;
    const auto& bs = p.denominator_params;
    const double x = p.argument;

    // Terminating index: smallest -a over nonpositive-integer numerator
    // parameters; -1 when the series does not terminate.
    long long terminate_at = -1;
    for (double a : as) {
        if (a <= 0.0 && a == std::floor(a)) {
            long long k = static_cast<long long>(-a);
            if (terminate_at < 0 || k < terminate_at) terminate_at = k;
        }
    }
    for (double b : bs) {
        if (b <= 0.0 && b == std::floor(b)) {
            long long pole = static_cast<long long>(-b);
            if (terminate_at < 0 || pole < terminate_at)
                throw std::domain_error(
                    "hyp_pfq: denominator parameter hits a nonpositive integer");
        }
    }
    if (terminate_at < 0 && std::fabs(x) >= 1.0)
        throw std::domain_error("hyp_pfq: non-terminating series needs |x| < 1");

    if (x == 0.0 || terminate_at == 0) return SignedLog::one();

    // Scaled-double accumulation: sum and term share a log offset that is
    // renormalized whenever magnitudes drift out of comfortable range.
    double sum = 1.0, term = 1.0, offset = 0.0;
    const long long max_terms = 1000000;
    int below = 0;
    for (long long k = 0; k < max_terms; ++k) {
        double ratio = x / (k + 1.0);
        for (double a : as) ratio *= a + k;
        for (double b : bs) ratio /= b + k;
        term *= ratio;
        sum += term;
        if (terminate_at > 0 && k + 1 == terminate_at) {
            below = 3;  // series is complete
            break;
        }
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) {
            if (++below >= 3) break;
        } else {
            below = 0;
        }
        double mag = std::max(std::fabs(sum), std::fabs(term));
        if (mag > 1e250 || (mag < 1e-250 && mag > 0.0)) {
            double shift = std::log(mag);
            sum *= std::exp(-shift);
            term *= std::exp(-shift);
            offset += shift;
        }
    }
    if (below < 3)
        throw std::runtime_error("hyp_pfq: series did not converge within 1e6 terms");

    SignedLog r = SignedLog::from_real(sum);
    r.logmag += offset;
    return r;
}

SignedLog hyp_1f1(double a, double b, double x) {
    return hyp_pfq({{a}, {b}, x});
}
SignedLog hyp_2f1(double a, double b, double c, double x) {
    return hyp_pfq({{a, b}, {c}, x});
}
SignedLog hyp_3f2(double a1, double a2, double a3, double b1, double b2, double x) {
    return hyp_pfq({{a1, a2, a3}, {b1, b2}, x});
}

}  // namespace scn
