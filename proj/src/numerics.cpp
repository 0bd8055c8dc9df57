#include "twlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "twlab/errors.hpp"

namespace tw {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw invalid_argument_error("gauss_legendre: n must be >= 1");
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw invalid_argument_error("gauss_legendre: need finite a < b");

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p0 = x; p1 = 1.0; }
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            double pm = (n == 1) ? 1.0 : p0;
            pp = n * (x * pn - pm) / (x * x - 1.0);
            double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-14) {
                // one polishing step
                p0 = 1.0; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pn = (n == 1) ? x : p1;
                pm = (n == 1) ? 1.0 : p0;
                pp = n * (x * pn - pm) / (x * x - 1.0);
                x -= pn / pp;
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        // map [-1,1] -> [a,b]; x descends with i, so it lands at the tail
        rule.nodes[n - 1 - i] = a + (b - a) * 0.5 * (1.0 + x);
        rule.weights[n - 1 - i] = 0.5 * (b - a) * w;
        rule.nodes[i] = a + (b - a) * 0.5 * (1.0 - x);
        rule.weights[i] = 0.5 * (b - a) * w;
    }
    return rule;
}

namespace {

// Dormand-Prince 5(4) coefficients
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

OdeSolution ode_solve(const OdeRhs& rhs, double t0, std::vector<double> y0,
                      double t1, double rel_tol, double abs_tol) {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw invalid_argument_error("ode_solve: tolerances must be positive");
    const std::size_t dim = y0.size();
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);

    OdeSolution sol;
    sol.tolerance_used = rel_tol;
    sol.abscissae.push_back(t0);
    sol.states.push_back(y0);
    if (span == 0.0) return sol;

    std::vector<double> y = std::move(y0);
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim),
        k7(dim), ytmp(dim), ynew(dim);

    double t = t0;
    double h = dir * std::min(span, std::max(1e-6 * span, 1e-8));
    const double h_min = 1e-14 * std::max(1.0, span);
    double err_prev = 1.0;
    rhs(t, y, k1);

    while (dir * (t1 - t) > 0.0) {
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        if (std::abs(h) < h_min)
            throw divergence_error("ode_solve: step size underflow", t);

        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                  a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
            double scale =
                abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            double r = e / scale;
            err += r * r;
        }
        err = std::sqrt(err / dim);

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            sol.abscissae.push_back(t);
            sol.states.push_back(y);
            // PI controller
            double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
                         std::pow(err_prev, 0.4 / 5.0);
            err_prev = std::max(err, 1e-10);
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            h *= std::clamp(0.9 * std::pow(err, -1.0 / 5.0), 0.1, 1.0);
        }
    }
    return sol;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(tol > 0.0)) throw invalid_argument_error("find_root: tol must be > 0");
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw bracket_error("find_root: no sign change on the bracket");

    // Brent's method
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa, s = b, fs = fb, d = 0.0;
    bool mflag = true;
    for (int iter = 0; iter < 200; ++iter) {
        if (fb == 0.0 || std::abs(a - b) <= tol) break;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        double lo = (3.0 * a + b) / 4.0, hi = b;
        if (lo > hi) std::swap(lo, hi);
        bool cond = (s < lo || s > hi) ||
                    (mflag && std::abs(s - b) >= std::abs(b - c) / 2.0) ||
                    (!mflag && std::abs(s - b) >= std::abs(c - d) / 2.0) ||
                    (mflag && std::abs(b - c) < tol) ||
                    (!mflag && std::abs(c - d) < tol);
        if (cond) {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if (fa * fs < 0.0) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

SplineFunction spline_fit(std::vector<double> xs, std::vector<double> ys) {
    const std::size_t n = xs.size();
    if (n < 4) throw invalid_argument_error("spline_fit: need >= 4 points");
    if (ys.size() != n)
        throw invalid_argument_error("spline_fit: xs/ys size mismatch");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs[i] > xs[i - 1]))
            throw invalid_argument_error("spline_fit: xs must strictly increase");

    // natural spline: solve the tridiagonal system for second derivatives
    std::vector<double> m(n, 0.0), diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double h0 = xs[i] - xs[i - 1], h1 = xs[i + 1] - xs[i];
        sub[i] = h0;
        diag[i] = 2.0 * (h0 + h1);
        rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
    }
    // forward sweep on interior rows (m[0] = m[n-1] = 0)
    std::vector<double> cp(n, 0.0), dp(n, 0.0);
    double den = diag[1];
    cp[1] = (xs[2] - xs[1]) / den;
    dp[1] = rhs[1] / den;
    for (std::size_t i = 2; i + 1 < n; ++i) {
        double h1 = xs[i + 1] - xs[i];
        den = diag[i] - sub[i] * cp[i - 1];
        cp[i] = h1 / den;
        dp[i] = (rhs[i] - sub[i] * dp[i - 1]) / den;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = dp[i] - cp[i] * m[i + 1];
        if (i == 1) break;
    }

    SplineFunction s;
    s.xs_ = std::move(xs);
    s.ys_ = std::move(ys);
    s.m_ = std::move(m);
    return s;
}

std::size_t SplineFunction::interval(double x) const {
    if (x < xs_.front() || x > xs_.back())
        throw domain_error("spline evaluation outside the knot range");
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) return 0;
    if (i >= xs_.size()) return xs_.size() - 2;
    return i - 1;
}

double SplineFunction::operator()(double x) const {
    std::size_t i = interval(x);
    double h = xs_[i + 1] - xs_[i];
    double A = (xs_[i + 1] - x) / h, B = (x - xs_[i]) / h;
    return A * ys_[i] + B * ys_[i + 1] +
           ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h /
               6.0;
}

double SplineFunction::derivative(double x) const {
    std::size_t i = interval(x);
    double h = xs_[i + 1] - xs_[i];
    double A = (xs_[i + 1] - x) / h, B = (x - xs_[i]) / h;
    return (ys_[i + 1] - ys_[i]) / h -
           (3.0 * A * A - 1.0) / 6.0 * h * m_[i] +
           (3.0 * B * B - 1.0) / 6.0 * h * m_[i + 1];
}

double SplineFunction::integrate(double x0, double x1) const {
    if (x1 < x0) return -integrate(x1, x0);
    // integral of one full piece [x_i, x_{i+1}]:
    //   h/2 (y_i + y_{i+1}) - h^3/24 (m_i + m_{i+1})
    auto piece = [&](std::size_t i, double lo, double hi) {
        double h = xs_[i + 1] - xs_[i];
        auto antider = [&](double x) {
            double A = (xs_[i + 1] - x) / h, B = (x - xs_[i]) / h;
            double t = -h * A * A * ys_[i] / 2.0 + h * B * B * ys_[i + 1] / 2.0;
            t += h * h / 6.0 *
                 (m_[i] * h * (-(A * A * A * A) / 4.0 + A * A / 2.0) +
                  m_[i + 1] * h * ((B * B * B * B) / 4.0 - B * B / 2.0));
            return t;
        };
        return antider(hi) - antider(lo);
    };
    std::size_t i0 = interval(x0);
    std::size_t i1 = interval(x1);
    if (i0 == i1) return piece(i0, x0, x1);
    double total = piece(i0, x0, xs_[i0 + 1]);
    for (std::size_t i = i0 + 1; i < i1; ++i)
        total += piece(i, xs_[i], xs_[i + 1]);
    total += piece(i1, xs_[i1], x1);
    return total;
}

double SplineFunction::integrate() const {
    return integrate(xs_.front(), xs_.back());
}

}  // namespace tw
