#pragma once

#include <functional>
#include <vector>

namespace scn {

// Sorted Monte Carlo samples with ECDF and quantile queries.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<double> samples);

    static EmpiricalDistribution merge(const EmpiricalDistribution& a,
                                       const EmpiricalDistribution& b);

    std::size_t count() const { return samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }

    // Right-continuous ECDF: #{samples <= x} / count.
    double ecdf(double x) const;

    // Order-statistic quantile, p in [0, 1].
    double quantile(double p) const;

private:
    std::vector<double> samples_;
};

// sup_x |ECDF(x) - F(x)| for a continuous CDF F, evaluated at every
// sample point (where the extrema of the difference live).
double ks_distance(const EmpiricalDistribution& e,
                   const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(const EmpiricalDistribution& a,
                     const EmpiricalDistribution& b);

// Critical value sqrt(-ln(alpha/2)/2) * sqrt((n+m)/(n*m)) for the
// two-sample test, and the one-sample analogue with m -> infinity.
double ks_critical_value(std::size_t n, double alpha);
double ks_two_sample_critical_value(std::size_t n, std::size_t m, double alpha);

}  // namespace scn
