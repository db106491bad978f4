#pragma once

#include <vector>

#include "scn/ensemble.hpp"
#include "scn/signed_log.hpp"

namespace scn {

// Parameters of the exact finite-size distribution formulas.
struct ExactPdfParams {
    Dims dims;
    SpikeParams spike;
};

// Enumerates the nested summation tuples (k_1, ..., k_alpha) with
// k_j in [0, n + alpha - j - 1]; alpha = 0 yields the single empty
// tuple.  Total count is prod_{j=1..alpha} (n + alpha - j).
class NestedIndexIterator {
public:
    NestedIndexIterator(int n, int alpha);

    bool done() const { return done_; }
    void advance();
    const std::vector<int>& indices() const { return k_; }
    int sum() const { return sum_; }
    int max_sum() const;

    static long long tuple_count(int n, int alpha);

private:
    std::vector<int> k_;
    std::vector<int> limit_;
    int sum_ = 0;
    bool done_ = false;
};

// Exact density of kappa_SC^2 = (sum lambda_k)/lambda_1 for the
// single-spiked complex Wishart ensemble; zero for z <= n.  Requires
// n >= 2 (n = 1 is degenerate: kappa^2 is identically 1) and refuses
// configurations whose nested-sum tuple count exceeds 1e8.
//
// All evaluations here are pure and reentrant; parallelize across
// abscissae, not within one call.
double pdf_kappa_sq(double z, const ExactPdfParams& p);

// Closed-form specializations for alpha = 0 and alpha = 1; equal to
// pdf_kappa_sq pointwise on their parameter slice.
double pdf_kappa_sq_alpha0(double z, const ExactPdfParams& p);
double pdf_kappa_sq_alpha1(double z, const ExactPdfParams& p);

// White (eta = 0) density in its Vandermonde form.
double pdf_kappa_sq_white(double z, const Dims& dims);

// CDF by adaptive quadrature of pdf_kappa_sq over [n, z], clamped to [0,1].
double cdf_kappa_sq(double z, const ExactPdfParams& p, double tol = 1e-9);

// Laplace-transform-convention moment generating function
// E[exp(-s kappa_SC^2)], s >= 0, by a single semi-infinite quadrature
// of the sigma-column determinant integrand.
double mgf_kappa_sq(double s, const ExactPdfParams& p, double tol = 1e-10);

// Minimum-eigenvalue laws of the same ensemble.
double pdf_min_eig(double x, const ExactPdfParams& p);
double cdf_min_eig(double x, const ExactPdfParams& p);

// Closed-form multiple integrals behind the minimum-eigenvalue and MGF
// derivations.  R integrates prod e^{-y} y (t-y)^alpha Delta^2 over
// [0,inf)^n; T adds (a-y)(b-y)^alpha with weight y^2; Q uses weight 1.
// For alpha > 0, T and Q require b != a.
SignedLog r_det(int n, int alpha, double t);
SignedLog t_det(int n, int alpha, double a, double b);
SignedLog q_det(int n, int alpha, double a, double b);

}  // namespace scn
