#pragma once

#include <memory>

#include "twlab/numerics.hpp"
#include "twlab/painleve.hpp"

namespace tw {

// Four-moment summary.  `n` is the sample count (0 for exact moments of
// a distribution).  `degenerate` marks a constant sample (sd = 0).
struct SummaryStats {
    double mean = 0.0;
    double sd = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    std::size_t n = 0;
    bool degenerate = false;
};

// CDF value together with the out-of-window clamp flag.
struct CdfValue {
    double value = 0.0;
    bool clamped = false;
};

// Evaluator for the Tracy-Widom distributions F_beta, beta in {1,2,4},
// built on a Painleve table:
//   F2(s) = exp(-E(s))
//   F1(s) = exp(-J(s)/2) sqrt(F2(s))
//   F4(s) = cosh(J(u)/2) sqrt(F2(u)),  u = s*sqrt(2)
// The sqrt(2) argument convention for F4 reproduces the reference
// moment table; the plain-argument alternative (u = s) sits behind
// `beta4_plain_argument`.  Immutable after construction; safe to share
// across threads.
class DistributionEvaluator {
public:
    explicit DistributionEvaluator(std::shared_ptr<const PainleveTable> table,
                                   bool beta4_plain_argument = false);

    // CDF; out-of-window arguments clamp to exact 0/1 with a flag.
    CdfValue cdf_ex(int beta, double s) const;
    double cdf(int beta, double s) const { return cdf_ex(beta, s).value; }

    // Density, from the analytically differentiated closed forms:
    //   f2 = F2 R
    //   f1 = F1 (q + R)/2
    //   f4(s) = sqrt(2) e^{-E/2} [ (R/2) cosh(J/2) - (q/2) sinh(J/2) ] at u
    // Clamps to 0 outside the window.
    double pdf(int beta, double s) const;

    // Inverse CDF by bracketed root finding over the window.
    // Requires p in (1e-7, 1 - 1e-7); throws domain_error otherwise.
    double quantile(int beta, double p) const;

    // Exact moments by spline quadrature of s^k pdf over the window.
    SummaryStats moments(int beta) const;

    // Working window in the argument of F_beta.
    double window_min(int beta) const;
    double window_max(int beta) const;

    bool beta4_plain_argument() const { return beta4_plain_; }
    const PainleveTable& table() const { return *table_; }

private:
    void check_beta(int beta) const;
    double arg_scale(int beta) const;  // sqrt(2) for beta=4 table convention

    std::shared_ptr<const PainleveTable> table_;
    bool beta4_plain_;
    SplineFunction q_, E_, R_, J_;
};

}  // namespace tw
