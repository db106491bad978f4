#pragma once

#include <vector>

#include "scn/signed_log.hpp"

namespace scn {

// Generalized Laguerre polynomial L_M^(rho)(z), rho > -1, evaluated from
// its explicit finite sum with SignedLog term accumulation.  The degree
// arguments produced by the determinant formulas can go negative; the
// standard convention L_M = 0 for M < 0 applies (consistent with
// d/dz L_0 = -L_{-1} = 0).
SignedLog laguerre(int degree, double rho, double z);

// Three-term-recurrence evaluation of the same polynomial, kept as a
// debug cross-check.  Plain double arithmetic: cancellation-prone for
// large positive z, accurate for the z <= 0 range used here.
double laguerre_recurrence(int degree, double rho, double z);

// Modified Bessel function of the first kind, integer order (I_{-k} = I_k),
// x >= 0, by the ascending power series.
double bessel_i(int order, double x);

// Generalized hypergeometric series pFq.
struct HypSeriesParams {
    std::vector<double> numerator_params;
    std::vector<double> denominator_params;
    double argument = 0.0;
};

// Term-recursive evaluation: t_0 = 1,
// t_{k+1} = t_k * prod(a+k)/prod(b+k) * x/(k+1), summed until three
// consecutive terms fall below 1e-17 * |partial sum| or the series
// terminates at a nonpositive-integer numerator parameter.
//
// Throws std::domain_error when a denominator parameter hits a
// nonpositive integer before termination, or when a non-terminating
// series is requested with |x| >= 1; std::runtime_error if 1e6 terms
// pass without the stopping rule firing.
SignedLog hyp_pfq(const HypSeriesParams& params);

SignedLog hyp_1f1(double a, double b, double x);
SignedLog hyp_2f1(double a, double b, double c, double x);
SignedLog hyp_3f2(double a1, double a2, double a3, double b1, double b2, double x);

}  // namespace scn
