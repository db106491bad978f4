#pragma once

#include <cmath>
#include <cstdint>

namespace scn {

// Real number stored as (sign, log of absolute value).  Products of
// factorial ratios and high powers routinely reach magnitudes like
// exp(+-n^2 log z), so every analytic formula in this library is
// assembled in this representation and converted to double at the end.
//
// sign == 0 is the canonical zero; logmag is meaningless in that case.
struct SignedLog {
    int sign = 0;
    double logmag = 0.0;

    constexpr SignedLog() = default;
    constexpr SignedLog(int s, double lm) : sign(s), logmag(lm) {}

    static constexpr SignedLog zero() { return {0, 0.0}; }
    static constexpr SignedLog one() { return {1, 0.0}; }

    static SignedLog from_real(double x) {
        if (x == 0.0 || std::isnan(x)) return zero();
        return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
    }

    // ln|x| given directly; sign must be +-1.
    static constexpr SignedLog from_log(double lm, int s = 1) { return {s, lm}; }

    double to_real() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(logmag);
    }

    bool is_zero() const { return sign == 0; }

    SignedLog operator-() const { return {-sign, logmag}; }

    friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.logmag + b.logmag};
    }
    friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.logmag - b.logmag};
    }
    SignedLog& operator*=(const SignedLog& o) { *this = *this * o; return *this; }
    SignedLog& operator/=(const SignedLog& o) { *this = *this / o; return *this; }

    // |a| compared with |b|; zero counts as smaller than any nonzero.
    friend bool abs_less(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0) return b.sign != 0;
        if (b.sign == 0) return false;
        return a.logmag < b.logmag;
    }
};

// Log-sum-exp with sign handling.  Opposite signs with log magnitudes
// closer than 1e-15 cancel to exact zero; determinant cofactor sums
// otherwise litter the result with -inf noise.
inline SignedLog signedlog_add(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLog& hi = (a.logmag >= b.logmag) ? a : b;
    const SignedLog& lo = (a.logmag >= b.logmag) ? b : a;
    const double d = lo.logmag - hi.logmag;  // <= 0
    if (a.sign == b.sign)
        return {a.sign, hi.logmag + std::log1p(std::exp(d))};
    if (d > -1e-15) return SignedLog::zero();
    return {hi.sign, hi.logmag + std::log1p(-std::exp(d))};
}

inline SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    return signedlog_add(a, b);
}
inline SignedLog operator-(const SignedLog& a, const SignedLog& b) {
    return signedlog_add(a, -b);
}

// x^k for integer k (k may be negative; x must be nonzero then).
inline SignedLog pow_int(const SignedLog& x, long long k) {
    if (k == 0) return SignedLog::one();
    if (x.sign == 0) return SignedLog::zero();
    int s = (x.sign < 0 && (k & 1LL)) ? -1 : 1;
    return {s, x.logmag * static_cast<double>(k)};
}

// base^e for real e; base must be positive (or zero with e > 0).
inline SignedLog pow_real(const SignedLog& base, double e) {
    if (base.sign == 0) return e > 0 ? SignedLog::zero() : SignedLog::one();
    return {1, base.logmag * e};
}

}  // namespace scn
