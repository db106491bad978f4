#include "scn/ensemble.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "scn/gamma.hpp"
#include "scn/signed_log.hpp"

namespace scn {

void validate(const Dims& d) {
    if (d.n < 1) throw std::domain_error("Dims: n must be >= 1");
    if (d.alpha < 0) throw std::domain_error("Dims: alpha must be >= 0");
}

void validate(const SpikeParams& s) {
    if (!(s.eta >= 0.0)) throw std::domain_error("SpikeParams: eta must be >= 0");
}

int resolve_thread_count(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("SCNDIST_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}

Eigen::MatrixXcd sample_spiked_gaussian(const Dims& dims, const SpikeParams& spike,
                                        Xoshiro256pp& rng,
                                        const Eigen::VectorXcd* u) {
    validate(dims);
    validate(spike);
    const int m = dims.m(), n = dims.n;
    Eigen::MatrixXcd x(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) x(i, j) = rng.complex_gaussian();

    const double scale = std::sqrt(1.0 + spike.eta) - 1.0;
    if (scale == 0.0) return x;
    if (u == nullptr || u->size() == 0) {
        x.col(0) *= (1.0 + scale);
        return x;
    }
    if (u->size() != n)
        throw std::invalid_argument("sample_spiked_gaussian: u has wrong length");
    if (std::fabs(u->norm() - 1.0) > 1e-12)
        throw std::invalid_argument("sample_spiked_gaussian: u must be unit norm");
    // X = Z (I + (sqrt(1+eta)-1) u u^*) = Z + (sqrt(1+eta)-1) (Z u) u^*.
    x.noalias() += scale * (x * (*u)) * u->adjoint();
    return x;
}

std::vector<double> eigenvalues_hermitian(const Eigen::MatrixXcd& w) {
    if (w.rows() != w.cols())
        throw std::invalid_argument("eigenvalues_hermitian: matrix not square");
    const double norm = w.cwiseAbs().maxCoeff();
    const double dev = (w - w.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-10 * std::max(1.0, norm))
        throw std::invalid_argument("eigenvalues_hermitian: matrix not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double kappa_sq(std::span<const double> eigs) {
    if (eigs.empty()) throw std::domain_error("kappa_sq: empty spectrum");
    if (!(eigs[0] > 0.0)) throw std::domain_error("kappa_sq: minimum eigenvalue must be positive");
    double sum = 0.0;
    for (double v : eigs) sum += v;
    return sum / eigs[0];
}

namespace {

// Smallest eigenvalue and trace of W = X^* X without keeping the spectrum.
struct WishartStats {
    double lambda_min;
    double trace;
};

WishartStats wishart_stats(const Eigen::MatrixXcd& x) {
    const Eigen::Index n = x.cols();
    Eigen::MatrixXcd w(n, n);
    w.noalias() = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues()(0), w.real().trace()};
}

template <typename PerTrial>
void run_trials(long long trials, int threads, PerTrial&& body) {
    threads = resolve_thread_count(threads);
    if (threads <= 1 || trials < 2 * threads) {
        for (long long t = 0; t < trials; ++t) body(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (long long t = w; t < trials; t += threads) body(t);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

EmpiricalDistribution monte_carlo(const Dims& dims, const SpikeParams& spike,
                                  long long trials, uint64_t seed,
                                  Statistic statistic, int threads,
                                  const Eigen::VectorXcd* u) {
    if (trials < 1) throw std::domain_error("monte_carlo: trials must be >= 1");
    validate(dims);
    validate(spike);
    std::vector<double> out(static_cast<std::size_t>(trials));
    const double nsq = double(dims.n) * double(dims.n);
    run_trials(trials, threads, [&](long long t) {
        Xoshiro256pp rng(seed, uint64_t(t));
        Eigen::MatrixXcd x = sample_spiked_gaussian(dims, spike, rng, u);
        switch (statistic) {
            case Statistic::trace_over_nsq:
                out[t] = x.squaredNorm() / nsq;
                break;
            case Statistic::kappa_sq: {
                WishartStats s = wishart_stats(x);
                out[t] = s.trace / s.lambda_min;
                break;
            }
            case Statistic::min_eig:
                out[t] = wishart_stats(x).lambda_min;
                break;
        }
    });
    return EmpiricalDistribution(std::move(out));
}

std::vector<DrawRecord> sample_draws(const Dims& dims, const SpikeParams& spike,
                                     long long trials, uint64_t seed, int threads) {
    if (trials < 1) throw std::domain_error("sample_draws: trials must be >= 1");
    validate(dims);
    validate(spike);
    std::vector<DrawRecord> out(static_cast<std::size_t>(trials));
    run_trials(trials, threads, [&](long long t) {
        Xoshiro256pp rng(seed, uint64_t(t));
        Eigen::MatrixXcd x = sample_spiked_gaussian(dims, spike, rng);
        WishartStats s = wishart_stats(x);
        out[t] = {s.trace / s.lambda_min, s.lambda_min};
    });
    return out;
}

double joint_density(std::span<const double> eigs, const Dims& dims,
                     const SpikeParams& spike) {
    validate(dims);
    validate(spike);
    const int n = dims.n;
    if (int(eigs.size()) != n)
        throw std::invalid_argument("joint_density: tuple length must equal n");
    if (!(eigs[0] > 0.0))
        throw std::domain_error("joint_density: eigenvalues must be positive");
    for (int i = 1; i < n; ++i)
        if (!(eigs[i] - eigs[i - 1] >= 1e-9))
            throw std::domain_error("joint_density: gap below 1e-9");

    const double alpha = dims.alpha;
    const double eta = spike.eta;
    const double c = spike.c_eta();

    // log K_{n,alpha}
    double log_k = 0.0;
    for (int i = 1; i <= n; ++i)
        log_k -= log_factorial(dims.alpha + n - i) + log_factorial(n - i);

    SignedLog body = SignedLog::one();
    for (double lam : eigs)
        body *= SignedLog::from_log(alpha * std::log(lam) - lam);
    SignedLog delta = SignedLog::one();
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            delta *= SignedLog::from_real(eigs[k] - eigs[i]);
    body *= delta * delta;

    if (eta == 0.0) {
        // eta -> 0 limit: the spiked factor C_{n,a,eta} * sum_k ... tends to
        // K_{n,alpha}, leaving the white Wishart-Laguerre density.
        SignedLog f = SignedLog::from_log(log_k) * body;
        return f.to_real();
    }

    SignedLog spectral_sum = SignedLog::zero();
    for (int k = 0; k < n; ++k) {
        double logmag = c * eigs[k];
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const double d = eigs[k] - eigs[i];
            logmag -= std::log(std::fabs(d));
            if (d < 0.0) sign = -sign;
        }
        spectral_sum = signedlog_add(spectral_sum, SignedLog(sign, logmag));
    }

    const double log_c_const = log_k + log_factorial(n - 1) -
                               (alpha + 1.0) * std::log1p(eta) -
                               (n - 1.0) * std::log(eta);
    SignedLog f = SignedLog::from_log(log_c_const) * body * spectral_sum;
    return f.to_real();
}

}  // namespace scn
