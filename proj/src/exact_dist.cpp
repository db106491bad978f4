#include "scn/exact_dist.hpp"

#include <cmath>
#include <stdexcept>

#include "scn/gamma.hpp"
#include "scn/quadrature.hpp"
#include "scn/small_matrix.hpp"
#include "scn/special_functions.hpp"

namespace scn {

NestedIndexIterator::NestedIndexIterator(int n, int alpha)
    : k_(alpha, 0), limit_(alpha, 0) {
    for (int j = 1; j <= alpha; ++j) limit_[j - 1] = n + alpha - j - 1;
}

void NestedIndexIterator::advance() {
    for (int j = int(k_.size()) - 1; j >= 0; --j) {
        if (k_[j] < limit_[j]) {
            ++k_[j];
            ++sum_;
            return;
        }
        sum_ -= k_[j];
        k_[j] = 0;
    }
    done_ = true;
}

int NestedIndexIterator::max_sum() const {
    int s = 0;
    for (int l : limit_) s += l;
    return s;
}

long long NestedIndexIterator::tuple_count(int n, int alpha) {
    long long c = 1;
    for (int j = 1; j <= alpha; ++j) {
        c *= (n + alpha - j);
        if (c > (1LL << 60)) return c;  // saturate; caller only compares
    }
    return c;
}

namespace {

constexpr long long kMaxTuples = 100000000LL;  // practical nested-sum guard

void check_kappa_params(const ExactPdfParams& p) {
    validate(p.dims);
    validate(p.spike);
    if (p.dims.n < 2)
        throw std::domain_error("kappa_sq distribution: requires n >= 2");
    if (NestedIndexIterator::tuple_count(p.dims.n, p.dims.alpha) > kMaxTuples)
        throw std::domain_error(
            "kappa_sq distribution: nested-sum tuple count exceeds 1e8; "
            "the alpha-fold summation is exponential in alpha");
}

// Minor of the reciprocal-factorial block: rows {0..alpha} \ {skip},
// columns j = 1..alpha with entries 1/(n + i - j - k_j - 1)!.
SignedLog factorial_minor(int n, int alpha, const std::vector<int>& k, int skip) {
    if (alpha == 0) return SignedLog::one();
    SmallMatrix m(alpha);
    int r = 0;
    for (int i = 0; i <= alpha; ++i) {
        if (i == skip) continue;
        for (int j = 1; j <= alpha; ++j)
            m.at(r, j - 1) = inv_factorial(
                static_cast<long long>(n) + i - j - k[j - 1] - 1);
        ++r;
    }
    return det(m);
}

}  // namespace

double pdf_kappa_sq(double z, const ExactPdfParams& p) {
    check_kappa_params(p);
    const int n = p.dims.n, alpha = p.dims.alpha;
    if (!(z > n)) return 0.0;

    const double eta = p.spike.eta;
    const double c = p.spike.c_eta();
    const double y = c * (z - n) / (z - c);  // hypergeometric argument, in [0, c)
    const double log_zn = std::log(z - n);
    const long long nna = static_cast<long long>(n) * n +
                          static_cast<long long>(n) * alpha;

    const double log_pref = log_factorial(n + alpha) +
                            double(nna - alpha - 2) * log_zn -
                            double(n + alpha) * std::log1p(eta) -
                            double(nna) * std::log(z - c);

    // G_i depends on the tuple only through S = sum k_j; cache by (i, S).
    NestedIndexIterator probe(n, alpha);
    const int smax = probe.max_sum();
    std::vector<SignedLog> gcache((alpha + 1) * (smax + 1));
    std::vector<char> gknown((alpha + 1) * (smax + 1), 0);
    auto g_entry = [&](int i, int s) -> SignedLog {
        const int idx = i * (smax + 1) + s;
        if (!gknown[idx]) {
            gknown[idx] = 1;
            if (y == 0.0 && i > 0) {
                gcache[idx] = SignedLog::zero();
            } else {
                // Only reachable with a nonzero cofactor, which forces
                // bparam >= n^2 - 1; the series parameters stay positive.
                const long long bparam = nna - alpha + i - s - 1;
                SignedLog f = hyp_3f2(double(n + i - 1), double(n + i + 1),
                                      double(nna + i), double(n + i),
                                      double(bparam), y);
                double lm = log_factorial(nna + i - 1) -
                            log_factorial(n + i - 1) -
                            log_factorial(bparam - 1) + f.logmag;
                if (i > 0) lm += double(i) * std::log(y);
                gcache[idx] = SignedLog((i % 2 == 0) ? 1 : -1, lm);
            }
        }
        return gcache[idx];
    };

    SignedLog total = SignedLog::zero();
    for (NestedIndexIterator it(n, alpha); !it.done(); it.advance()) {
        const auto& k = it.indices();
        const int s = it.sum();
        double logw = -double(s) * log_zn;
        for (int j = 1; j <= alpha; ++j)
            logw += log_factorial(n + alpha - j - 1) -
                    log_factorial(j + k[j - 1] + 1) - log_factorial(k[j - 1]);

        SignedLog detval = SignedLog::zero();
        for (int i = 0; i <= alpha; ++i) {
            SignedLog minor = factorial_minor(n, alpha, k, i);
            if (minor.is_zero()) continue;
            SignedLog term = g_entry(i, s) * minor;
            if (i % 2 == 1) term = -term;
            detval = signedlog_add(detval, term);
        }
        if (detval.is_zero()) continue;
        total = signedlog_add(total, SignedLog::from_log(logw) * detval);
    }
    return (SignedLog::from_log(log_pref) * total).to_real();
}

double pdf_kappa_sq_alpha0(double z, const ExactPdfParams& p) {
    if (p.dims.alpha != 0)
        throw std::domain_error("pdf_kappa_sq_alpha0: requires alpha == 0");
    check_kappa_params(p);
    const int n = p.dims.n;
    if (!(z > n)) return 0.0;
    const double c = p.spike.c_eta();
    const double y = c * (z - n) / (z - c);
    const double nn = double(n) * n;
    SignedLog f = hyp_3f2(n - 1.0, n + 1.0, nn, double(n), nn - 1.0, y);
    const double lm = std::log(double(n)) + std::log(nn - 1.0) +
                      (nn - 2.0) * std::log(z - n) -
                      double(n) * std::log1p(p.spike.eta) -
                      nn * std::log(z - c) + f.logmag;
    return std::exp(lm);
}

double pdf_kappa_sq_alpha1(double z, const ExactPdfParams& p) {
    if (p.dims.alpha != 1)
        throw std::domain_error("pdf_kappa_sq_alpha1: requires alpha == 1");
    check_kappa_params(p);
    const int n = p.dims.n;
    if (!(z > n)) return 0.0;
    const double c = p.spike.c_eta();
    const double y = c * (z - n) / (z - c);
    const double log_zn = std::log(z - n);
    const double log_zc = std::log(z - c);
    const long long nn1 = static_cast<long long>(n) * (n + 1);
    const double ln2 = std::log(2.0);

    const double log_pref = -std::log(double(n)) -
                            double(n + 1) * std::log1p(p.spike.eta) -
                            double(nn1) * log_zc;

    // First block: sum_{j=0}^{n-1} with 3F2(n-1, n+1, n^2+n; n, n^2+n-2-j).
    SignedLog sum_a = SignedLog::zero();
    const double log_ka = std::log(double(n)) + log_factorial(nn1 - 1) +
                          log_factorial(n + 1) - ln2 - log_factorial(n - 1);
    for (int j = 0; j <= n - 1; ++j) {
        SignedLog f = hyp_3f2(n - 1.0, n + 1.0, double(nn1), double(n),
                              double(nn1 - 2 - j), y);
        double lm = log_factorial(n - 1) - log_factorial(n - 1 - j) -
                    log_factorial(j) - (log_factorial(j + 2) - ln2) -
                    log_factorial(nn1 - 3 - j) + double(nn1 - 3 - j) * log_zn +
                    f.logmag;
        sum_a = signedlog_add(sum_a, SignedLog::from_log(lm));
    }
    SignedLog block_a = SignedLog::from_log(log_ka) * sum_a;

    // Second block carries a c_eta/(z - c_eta) factor; it vanishes at eta = 0.
    SignedLog block_b = SignedLog::zero();
    if (c > 0.0) {
        const double log_kb = std::log(double(n + 1)) + log_factorial(nn1) +
                              log_factorial(n) - ln2 - log_factorial(n - 2) +
                              std::log(c) - log_zc;
        SignedLog sum_b = SignedLog::zero();
        for (int j = 0; j <= n - 2; ++j) {
            SignedLog f = hyp_3f2(double(n), double(n + 2), double(nn1 + 1),
                                  double(n + 1), double(nn1 - 1 - j), y);
            double lm = log_factorial(n - 2) - log_factorial(n - 2 - j) -
                        log_factorial(j) - (log_factorial(j + 2) - ln2) -
                        log_factorial(nn1 - 2 - j) +
                        double(nn1 - 2 - j) * log_zn + f.logmag;
            sum_b = signedlog_add(sum_b, SignedLog::from_log(lm));
        }
        block_b = SignedLog::from_log(log_kb) * sum_b;
    }

    return (SignedLog::from_log(log_pref) * signedlog_add(block_a, block_b))
        .to_real();
}

double pdf_kappa_sq_white(double z, const Dims& dims) {
    ExactPdfParams white{dims, SpikeParams{0.0}};
    check_kappa_params(white);
    const int n = dims.n, alpha = dims.alpha;
    if (!(z > n)) return 0.0;
    const long long mn = static_cast<long long>(dims.m()) * n;
    const double log_zn = std::log(z - n);

    double log_pref = log_factorial(mn - 1) + double(mn - alpha - 2) * log_zn -
                      double(mn) * std::log(z);
    for (int j = 0; j <= alpha; ++j)
        log_pref += std::log(double(n + j)) - log_factorial(j + 1);

    std::vector<double> cnodes(alpha);
    SignedLog total = SignedLog::zero();
    for (NestedIndexIterator it(n, alpha); !it.done(); it.advance()) {
        const auto& k = it.indices();
        const long long gamma_arg = mn - alpha - 2 - it.sum();
        if (gamma_arg < 0) continue;  // reciprocal Gamma at a pole
        double logw = -log_factorial(gamma_arg) - double(it.sum()) * log_zn;
        for (int j = 1; j <= alpha; ++j) {
            const int kj = k[j - 1];
            // per-index weight (n+alpha-j-1)! (j+1)! /
            //   ((n+alpha-j-1-k_j)! (j+k_j+1)! k_j!)
            logw += log_factorial(n + alpha - j - 1) -
                    log_factorial(n + alpha - j - 1 - kj) +
                    log_factorial(j + 1) - log_factorial(j + kj + 1) -
                    log_factorial(kj);
            cnodes[j - 1] = double(j + kj);
        }
        SignedLog delta = vandermonde(cnodes);
        if (delta.is_zero()) continue;
        total = signedlog_add(total, SignedLog::from_log(logw) * delta);
    }
    return (SignedLog::from_log(log_pref) * total).to_real();
}

double cdf_kappa_sq(double z, const ExactPdfParams& p, double tol) {
    check_kappa_params(p);
    if (!(z > p.dims.n)) return 0.0;
    auto f = [&](double t) { return pdf_kappa_sq(t, p); };
    double v = integrate(f, double(p.dims.n), z, tol, tol).value;
    return std::min(1.0, std::max(0.0, v));
}

}  // namespace scn
