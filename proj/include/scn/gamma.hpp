#pragma once

#include "scn/signed_log.hpp"

namespace scn {

// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 terms), the
// coefficient set used by GSL/Boost; relative error below 1e-14 over
// [0.5, 1e6].  Throws std::domain_error for x <= 0; integer-pole logic
// belongs to the callers (pochhammer, factorial ratios).
double log_gamma(double x);

// ln(k!) for k >= 0.  Table-backed for small k.
double log_factorial(long long k);

// 1/k! as SignedLog, with the reciprocal-factorial convention
// 1/k! = 0 for negative integer k (Gamma pole).
SignedLog inv_factorial(long long k);

// k! as SignedLog; throws for k < 0.
SignedLog factorial_sl(long long k);

// Pochhammer symbol (a)_j = a (a+1) ... (a+j-1), (a)_0 = 1, with exact
// sign tracking (result is exact zero when a is a nonpositive integer
// and j exceeds -a).
SignedLog pochhammer(double a, long long j);

}  // namespace scn
