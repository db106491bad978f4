#pragma once

#include <functional>

namespace scn {

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

// Globally adaptive Gauss(7)/Kronrod(15) integration of f over (a, b).
// b may be +infinity, in which case the interval is mapped through
// x = a + t/(1-t), t in [0,1); Kronrod nodes are interior so f is never
// evaluated at the endpoints themselves.  Terminates once the summed
// panel error estimate drops below max(abs_tol, rel_tol*|value|);
// throws std::runtime_error after max_panels subdivisions.
IntegrationResult integrate(const std::function<double(double)>& f,
                            double a, double b,
                            double abs_tol = 1e-9, double rel_tol = 1e-9,
                            int max_panels = 2000);

// Integral of f over the ordered wedge {0 < x < y < infinity}, as an
// iterated 1-D rule with the inner (semi-infinite) integral starting
// at y = x.
double integrate_2d_ordered(const std::function<double(double, double)>& f,
                            double tol = 1e-8);

}  // namespace scn
