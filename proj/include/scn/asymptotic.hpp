#pragma once

namespace scn {

// Hard-edge limiting laws (m, n -> infinity with alpha = m - n fixed,
// spike eta = rho/n).  rho is recorded for provenance; the limits do
// not depend on it.
struct AsymptoticParams {
    int alpha = 0;
    double mu = 1.0;
    double rho = 0.0;
};

void validate(const AsymptoticParams& p);

// exp(-w) * det[I_{j-i}(2 sqrt(w))]_{i,j=1..alpha}; the survival
// probability kernel shared by the two limiting CDFs below; alpha = 0
// means an empty determinant, i.e. plain exp(-w).
double hard_edge_survival(double w, int alpha);

// Limiting CDF of mu * n * lambda_1: 1 - hard_edge_survival(x/mu).
double cdf_scaled_min_eig(double x, const AsymptoticParams& p);

// Limiting CDF of V = kappa_SC^2 / (mu n^3): hard_edge_survival(1/(mu v)).
double cdf_scaled_kappa(double v, const AsymptoticParams& p);

// Limiting density of V: (1/(mu v^2)) e^{-1/(mu v)}
// det[I_{j-i+2}(2/sqrt(mu v))].
double pdf_scaled_kappa(double v, const AsymptoticParams& p);

}  // namespace scn
