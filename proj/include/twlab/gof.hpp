#pragma once

#include <functional>
#include <vector>

#include "twlab/distributions.hpp"

namespace tw {

// Empirical CDF: right-continuous step function with jumps k/n at
// k-fold ties.
class EcdfFunction {
public:
    explicit EcdfFunction(std::vector<double> values);  // sorts a copy

    double operator()(double x) const;  // #{ x_i <= x } / n by binary search
    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

EcdfFunction ecdf(std::vector<double> values);

// Two-sided Kolmogorov-Smirnov distance between a sample and a
// continuous CDF: D = max_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|).
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

// Population-convention (1/n) moments with excess kurtosis.  A constant
// sample reports sd = 0 with the degeneracy flag set.  Requires n >= 2.
SummaryStats summary_stats(const std::vector<double>& values);

}  // namespace tw
