#pragma once

#include <vector>

namespace tw {

// Gridded Hastings-McLeod solution of Painleve II (q'' = sq + 2q^3,
// q ~ Ai at +inf) together with the cumulative integrals entering the
// distribution formulas:
//   E(s) = int_s^inf (x - s) q(x)^2 dx
//   R(s) = int_s^inf q(x)^2 dx
//   J(s) = int_s^inf q(x) dx
struct PainleveTable {
    std::vector<double> grid;     // increasing abscissae in [s_min, s_max]
    std::vector<double> q;        // Hastings-McLeod values, positive
    std::vector<double> q_prime;  // derivative
    std::vector<double> E;
    std::vector<double> R;
    std::vector<double> J;
    double tol = 0.0;             // achieved Newton tolerance

    double s_min() const { return grid.front(); }
    double s_max() const { return grid.back(); }
    double step() const { return grid[1] - grid[0]; }
};

inline constexpr double painleve_default_s_min = -13.0;
inline constexpr double painleve_default_s_max = 10.0;
inline constexpr double painleve_default_tol = 1e-10;
inline constexpr double painleve_default_step = 5e-4;

// Solve the two-point boundary value problem on [s_min, s_max]:
// Numerov discretization, damped Newton iteration, right boundary
// q(s_max) = Ai(s_max), left boundary q(s_min) = sqrt(-s_min/2).
// Requires s_min <= -8, s_max >= 6, tol in [1e-12, 1e-6].  The grid
// step is chosen by the solver (default 5e-4, adjusted to divide the
// window evenly; `step_hint` overrides for convergence studies).
// Throws convergence_error if the Newton iteration stagnates.
PainleveTable solve_hastings_mcleod(double s_min = painleve_default_s_min,
                                    double s_max = painleve_default_s_max,
                                    double tol = painleve_default_tol,
                                    double step_hint = painleve_default_step);

// Fill E, R, J by cumulative corrected-trapezoid quadrature from s_max
// downward, with closed-form Airy tail closures above s_max.
void painleve_integrals(PainleveTable& table);

}  // namespace tw
