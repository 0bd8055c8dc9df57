#include "twlab/painleve.hpp"
#include "twlab/airy.hpp"
#include "twlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace tw {
namespace {

inline double rhs(double s, double q) { return s * q + 2.0 * q * q * q; }
inline double rhs_dq(double s, double q) { return s + 6.0 * q * q; }

// Solve tridiagonal system in place (Thomas algorithm).  sub/diag/sup hold
// the three bands, rhs the right-hand side; the solution lands in rhs.
void thomas_solve(std::vector<double>& sub, std::vector<double>& diag,
                  std::vector<double>& sup, std::vector<double>& b) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        b[i] -= w * b[i - 1];
    }
    b[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        b[i] = (b[i] - sup[i] * b[i + 1]) / diag[i];
}

// Fourth-order one-sided first derivative (five-point stencil).
double one_sided_deriv(const double* y, double h, bool forward) {
    if (forward)
        return (-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h);
    return (25.0 * y[0] - 48.0 * y[-1] + 36.0 * y[-2] - 16.0 * y[-3] + 3.0 * y[-4]) / (12.0 * h);
}

} // namespace

PainleveTable solve_hastings_mcleod(double s_min, double s_max, double tol, double step_hint) {
    if (!(s_min <= -8.0) || !(s_max >= 6.0))
        throw invalid_argument_error("solve_hastings_mcleod: window must cover [-8, 6]");
    if (!(tol >= 1e-12 && tol <= 1e-6))
        throw invalid_argument_error("solve_hastings_mcleod: tol outside [1e-12, 1e-6]");
    if (!(step_hint > 0.0 && step_hint <= 0.05))
        throw invalid_argument_error("solve_hastings_mcleod: step_hint outside (0, 0.05]");

    const double span = s_max - s_min;
    const std::size_t n = static_cast<std::size_t>(std::llround(span / step_hint)) + 1;
    const double h = span / static_cast<double>(n - 1);
    const double h2_12 = h * h / 12.0;

    PainleveTable table;
    table.grid.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        table.grid[i] = s_min + h * static_cast<double>(i);
    table.grid[n - 1] = s_max;

    // Boundary values: decaying Airy tail on the right, leading branch of
    // the q ~ sqrt(-s/2) asymptote on the left.  Initial interior guess
    // interpolates between the two regimes and is smooth at s = 0.
    const double ai0 = 0.3550280538878172;
    std::vector<double>& q = table.q;
    q.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = table.grid[i];
        q[i] = (s < 0.0) ? std::sqrt(ai0 * ai0 - 0.5 * s) : airy_eval(s).ai;
    }
    q[0] = std::sqrt(-0.5 * s_min);
    q[n - 1] = airy_eval(s_max).ai;

    // Damped Newton on the Numerov residual
    //   G_i = q_{i-1} - 2 q_i + q_{i+1} - h^2/12 (f_{i-1} + 10 f_i + f_{i+1}).
    const std::size_t m = n - 2;
    std::vector<double> sub(m), diag(m), sup(m), g(m), f(n);
    double nrm = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int iter = 0; iter < 40; ++iter) {
        for (std::size_t i = 0; i < n; ++i)
            f[i] = rhs(table.grid[i], q[i]);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            g[i - 1] = q[i - 1] - 2.0 * q[i] + q[i + 1]
                       - h2_12 * (f[i - 1] + 10.0 * f[i] + f[i + 1]);
            sub[i - 1] = 1.0 - h2_12 * rhs_dq(table.grid[i - 1], q[i - 1]);
            diag[i - 1] = -2.0 - 10.0 * h2_12 * rhs_dq(table.grid[i], q[i]);
            sup[i - 1] = 1.0 - h2_12 * rhs_dq(table.grid[i + 1], q[i + 1]);
            g[i - 1] = -g[i - 1];
        }
        thomas_solve(sub, diag, sup, g);
        nrm = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            nrm = std::max(nrm, std::abs(g[i]));
        const double lambda = (nrm > 0.5) ? 0.5 / nrm : 1.0;
        for (std::size_t i = 0; i < m; ++i)
            q[i + 1] += lambda * g[i];
        if (nrm < 1e-13) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw convergence_error("solve_hastings_mcleod: Newton iteration stagnated");
    table.tol = nrm;

    // Derivative consistent with the Numerov order:
    //   q'_i = (q_{i+1} - q_{i-1}) / 2h - h^2/6 * (f_{i+1} - f_{i-1}) / 2h,
    // one-sided fourth-order stencils at the endpoints.
    for (std::size_t i = 0; i < n; ++i)
        f[i] = rhs(table.grid[i], q[i]);
    table.q_prime.resize(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        table.q_prime[i] = (q[i + 1] - q[i - 1]) / (2.0 * h)
                           - (h * h / 6.0) * (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    table.q_prime[0] = one_sided_deriv(q.data(), h, true);
    table.q_prime[n - 1] = one_sided_deriv(q.data() + (n - 1), h, false);

    painleve_integrals(table);
    return table;
}

void painleve_integrals(PainleveTable& table) {
    const std::size_t n = table.grid.size();
    if (n < 5 || table.q.size() != n || table.q_prime.size() != n)
        throw invalid_argument_error("painleve_integrals: incomplete table");
    const double h = table.step();
    const double t = table.s_max();

    // Tail closures above s_max, where q is the Airy function to working
    // precision: R and X tails are exact Airy integrals, the J tail is the
    // large-t asymptotic series of int_t^inf Ai.
    const AiryPair a = airy_eval(t);
    const double tail_R = a.ai_prime * a.ai_prime - t * a.ai * a.ai;
    const double tail_X = (t * a.ai_prime * a.ai_prime - t * t * a.ai * a.ai
                           - a.ai * a.ai_prime) / 3.0;
    const double tail_J = -a.ai_prime / t - a.ai / (t * t)
                          - 2.0 * a.ai_prime / std::pow(t, 4) - 8.0 * a.ai / std::pow(t, 5);

    table.R.assign(n, 0.0);
    table.J.assign(n, 0.0);
    table.E.assign(n, 0.0);
    std::vector<double> X(n, 0.0);
    table.R[n - 1] = tail_R;
    table.J[n - 1] = tail_J;
    X[n - 1] = tail_X;

    // Backward cumulative corrected trapezoid: for integrand g with known
    // derivative g', the segment [x_i, x_{i+1}] contributes
    //   h/2 (g_i + g_{i+1}) - h^2/12 (g'_{i+1} - g'_i),
    // which is fourth-order accurate.
    for (std::size_t i = n - 1; i-- > 0;) {
        const double qi = table.q[i], qi1 = table.q[i + 1];
        const double pi = table.q_prime[i], pi1 = table.q_prime[i + 1];
        const double xi = table.grid[i], xi1 = table.grid[i + 1];

        const double g_q2_i = qi * qi, g_q2_i1 = qi1 * qi1;
        const double d_q2_i = 2.0 * qi * pi, d_q2_i1 = 2.0 * qi1 * pi1;
        table.R[i] = table.R[i + 1] + 0.5 * h * (g_q2_i + g_q2_i1)
                     - (h * h / 12.0) * (d_q2_i1 - d_q2_i);

        const double g_xq2_i = xi * g_q2_i, g_xq2_i1 = xi1 * g_q2_i1;
        const double d_xq2_i = g_q2_i + xi * d_q2_i, d_xq2_i1 = g_q2_i1 + xi1 * d_q2_i1;
        X[i] = X[i + 1] + 0.5 * h * (g_xq2_i + g_xq2_i1)
               - (h * h / 12.0) * (d_xq2_i1 - d_xq2_i);

        table.J[i] = table.J[i + 1] + 0.5 * h * (qi + qi1)
                     - (h * h / 12.0) * (pi1 - pi);
    }
    for (std::size_t i = 0; i < n; ++i)
        table.E[i] = X[i] - table.grid[i] * table.R[i];
}

} // namespace tw
