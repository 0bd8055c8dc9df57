#include "twlab/gof.hpp"
#include "twlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tw {

EcdfFunction::EcdfFunction(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty())
        throw invalid_argument_error("EcdfFunction: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EcdfFunction::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EcdfFunction ecdf(std::vector<double> values) {
    return EcdfFunction(std::move(values));
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty())
        throw invalid_argument_error("ks_distance: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(std::abs(hi), std::abs(lo)));
    }
    return d;
}

SummaryStats summary_stats(const std::vector<double>& values) {
    if (values.size() < 2)
        throw invalid_argument_error("summary_stats: need at least two values");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    SummaryStats stats;
    stats.n = values.size();
    stats.mean = mean;
    stats.sd = std::sqrt(m2);
    if (m2 <= 0.0) {
        stats.sd = 0.0;
        stats.skewness = 0.0;
        stats.excess_kurtosis = 0.0;
        stats.degenerate = true;
    } else {
        stats.skewness = m3 / (m2 * stats.sd);
        stats.excess_kurtosis = m4 / (m2 * m2) - 3.0;
        stats.degenerate = false;
    }
    return stats;
}

} // namespace tw
