#include "scn/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scn {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
    std::sort(samples_.begin(), samples_.end());
}

EmpiricalDistribution EmpiricalDistribution::merge(
    const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    std::vector<double> merged(a.samples_.size() + b.samples_.size());
    std::merge(a.samples_.begin(), a.samples_.end(),
               b.samples_.begin(), b.samples_.end(), merged.begin());
    EmpiricalDistribution out;
    out.samples_ = std::move(merged);
    return out;
}

double EmpiricalDistribution::ecdf(double x) const {
    if (samples_.empty()) throw std::domain_error("ecdf: empty distribution");
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return double(it - samples_.begin()) / double(samples_.size());
}

double EmpiricalDistribution::quantile(double p) const {
    if (samples_.empty()) throw std::domain_error("quantile: empty distribution");
    if (p < 0.0 || p > 1.0) throw std::domain_error("quantile: p outside [0,1]");
    if (p == 0.0) return samples_.front();
    std::size_t k = static_cast<std::size_t>(std::ceil(p * samples_.size()));
    return samples_[std::min(k, samples_.size()) - 1];
}

double ks_distance(const EmpiricalDistribution& e,
                   const std::function<double(double)>& cdf) {
    const auto& xs = e.samples();
    const double n = double(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::fabs((i + 1) / n - f));
        d = std::max(d, std::fabs(f - i / n));
    }
    return d;
}

double ks_two_sample(const EmpiricalDistribution& a,
                     const EmpiricalDistribution& b) {
    const auto& xa = a.samples();
    const auto& xb = b.samples();
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < xa.size() && j < xb.size()) {
        const double x = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] <= x) ++i;
        while (j < xb.size() && xb[j] <= x) ++j;
        d = std::max(d, std::fabs(double(i) / xa.size() - double(j) / xb.size()));
    }
    return d;
}

double ks_critical_value(std::size_t n, double alpha) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0) / double(n));
}

double ks_two_sample_critical_value(std::size_t n, std::size_t m, double alpha) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) *
           std::sqrt(double(n + m) / (double(n) * double(m)));
}

}  // namespace scn
