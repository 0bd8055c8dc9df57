#pragma once

#include <functional>
#include <vector>

namespace tw {

// Gauss-Legendre quadrature rule on a finite interval (a, b).
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, inside (a, b)
    std::vector<double> weights;  // positive, summing to b - a
    double a = 0.0;
    double b = 0.0;

    template <class F>
    double integrate(F&& f) const {
        // compensated (Kahan) accumulation
        double sum = 0.0, c = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            double term = weights[i] * f(nodes[i]) - c;
            double t = sum + term;
            c = (t - sum) - term;
            sum = t;
        }
        return sum;
    }
};

// n-point rule mapped from [-1,1] to [a,b]; nodes by Newton iteration on
// the Legendre polynomial to 1e-14.
QuadratureRule gauss_legendre(int n, double a, double b);

// Trajectory of an ODE initial value problem.
struct OdeSolution {
    std::vector<double> abscissae;             // strictly monotone
    std::vector<std::vector<double>> states;   // one state vector per abscissa
    double tolerance_used = 0.0;

    const std::vector<double>& final_state() const { return states.back(); }
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dydt)>;

// Embedded Dormand-Prince 5(4) pair with PI step control.  t1 < t0
// integrates backward.  Throws divergence_error on step underflow.
OdeSolution ode_solve(const OdeRhs& rhs, double t0, std::vector<double> y0,
                      double t1, double rel_tol = 1e-10,
                      double abs_tol = 1e-12);

// Bracketed root finding (Brent).  Requires f(a)*f(b) <= 0; the result
// always lies inside [a, b].  Throws bracket_error when no sign change.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol);

// Natural cubic spline through strictly increasing knots.
class SplineFunction {
public:
    SplineFunction() = default;

    // Evaluation; throws domain_error outside [knot_front, knot_back].
    double operator()(double x) const;

    // Derivative of the interpolant (same domain rules).
    double derivative(double x) const;

    // Exact integral of the piecewise cubic over [x0, x1].
    double integrate(double x0, double x1) const;
    double integrate() const;  // over the full knot range

    const std::vector<double>& knots() const { return xs_; }
    const std::vector<double>& values() const { return ys_; }

private:
    friend SplineFunction spline_fit(std::vector<double> xs,
                                     std::vector<double> ys);
    std::size_t interval(double x) const;

    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<double> m_;  // second derivatives at the knots
};

// Fit a natural cubic spline (>= 4 points, strictly increasing xs).
SplineFunction spline_fit(std::vector<double> xs, std::vector<double> ys);

}  // namespace tw
