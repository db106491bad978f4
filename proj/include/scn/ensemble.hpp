#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "scn/empirical.hpp"
#include "scn/rng.hpp"

namespace scn {

// Ensemble shape: X is m x n with m = n + alpha >= n.
struct Dims {
    int n = 1;
    int alpha = 0;
    int m() const { return n + alpha; }
};

// Rank-one spike Sigma = I + eta * u u^*; c_eta = eta/(eta+1).
struct SpikeParams {
    double eta = 0.0;
    double c_eta() const { return eta / (eta + 1.0); }
};

void validate(const Dims& d);
void validate(const SpikeParams& s);

// One draw X = Z * Sigma^(1/2), Z filled with standard complex Gaussians
// (E|z|^2 = 1) column by column from rng.  u empty means the first
// standard basis vector; otherwise u must be unit norm within 1e-12.
Eigen::MatrixXcd sample_spiked_gaussian(const Dims& dims, const SpikeParams& spike,
                                        Xoshiro256pp& rng,
                                        const Eigen::VectorXcd* u = nullptr);

// All eigenvalues of a Hermitian matrix, ascending.  Rejects inputs with
// max |W - W^*| beyond 1e-10 * max(1, ||W||).
std::vector<double> eigenvalues_hermitian(const Eigen::MatrixXcd& w);

// (sum lambda_k) / lambda_1 for an ascending positive spectrum.
double kappa_sq(std::span<const double> ascending_eigs);

enum class Statistic { kappa_sq, min_eig, trace_over_nsq };

// Deterministic given (seed, trials, dims, spike): trial t always draws
// from stream t regardless of the number of worker threads.
// threads == 0 picks SCNDIST_THREADS or the hardware concurrency.
EmpiricalDistribution monte_carlo(const Dims& dims, const SpikeParams& spike,
                                  long long trials, uint64_t seed,
                                  Statistic statistic, int threads = 0,
                                  const Eigen::VectorXcd* u = nullptr);

// Per-trial (kappa_sq, lambda_min) rows in trial order, for sample dumps.
struct DrawRecord {
    double kappa_sq;
    double lambda_min;
};
std::vector<DrawRecord> sample_draws(const Dims& dims, const SpikeParams& spike,
                                     long long trials, uint64_t seed,
                                     int threads = 0);

// Joint eigenvalue density of the single-spiked Wishart-Laguerre
// ensemble on the ordered region, evaluated at a strictly ascending
// positive tuple (minimum gap 1e-9).  eta == 0 uses the white-Wishart
// limit form directly; the generic expression is 0/0 there.
double joint_density(std::span<const double> eigs_ascending, const Dims& dims,
                     const SpikeParams& spike);

int resolve_thread_count(int threads);

}  // namespace scn
