#pragma once

namespace tw {

// Airy kernel K(x, y) = (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y), with the
// analytic diagonal limit Ai'(x)^2 - x Ai(x)^2 and a second-order Taylor
// correction used for |x - y| < 1e-6.
double airy_kernel(double x, double y);

// F2(s) = det(I - K_Airy) on L^2(s, inf) by Nystrom discretization:
// the algebraic map x = s + L(1+u)/(1-u) takes (s, inf) to u in (-1, 1),
// Gauss-Legendre nodes give a symmetrized matrix sqrt(w) K sqrt(w), and
// the determinant of I - M comes from a Cholesky factorization.
//
// Requires s in [-13, 10] and n >= 20.  Throws resolution_error when a
// Cholesky pivot is non-positive (discretization too coarse; at the
// default n = 100 this happens for s below about -12 where F2 < 1e-60).
double fredholm_det_f2(double s, int n = 100, double map_scale = 10.0);

}  // namespace tw
