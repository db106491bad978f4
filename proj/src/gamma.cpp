#include "scn/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace scn {

namespace {

// Lanczos (g = 7, n = 9) coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

double lanczos_log_gamma(double x) {
    // Valid for x >= 0.5.
    double sum = kLanczos[0];
    for (int k = 1; k < 9; ++k) sum += kLanczos[k] / (x - 1.0 + k);
    const double t = x + kLanczosG - 0.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
    return lanczos_log_gamma(x);
}

double log_factorial(long long k) {
    if (k < 0) throw std::domain_error("log_factorial: negative argument");
    static const std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 0.0;
        for (int i = 1; i < 171; ++i) t[i] = t[i - 1] + std::log(double(i));
        return t;
    }();
    if (k < static_cast<long long>(table.size())) return table[k];
    return log_gamma(double(k) + 1.0);
}

SignedLog inv_factorial(long long k) {
    if (k < 0) return SignedLog::zero();
    return SignedLog::from_log(-log_factorial(k));
}

SignedLog factorial_sl(long long k) {
    return SignedLog::from_log(log_factorial(k));
}

SignedLog pochhammer(double a, long long j) {
    if (j < 0) throw std::domain_error("pochhammer: negative length");
    SignedLog r = SignedLog::one();
    for (long long i = 0; i < j; ++i) {
        const double f = a + double(i);
        if (f == 0.0) return SignedLog::zero();
        r *= SignedLog::from_real(f);
    }
    return r;
}

}  // namespace scn
