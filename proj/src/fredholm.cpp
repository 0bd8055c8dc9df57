#include "twlab/fredholm.hpp"
#include "twlab/airy.hpp"
#include "twlab/errors.hpp"
#include "twlab/numerics.hpp"

#include <cmath>
#include <vector>

namespace tw {
namespace {

// Diagonal value and second-order Taylor coefficient of the kernel around
// mid-point m: K(x, y) = N1(m) + (x - y)^2 N3(m) + O((x - y)^4) with
//   N1 = Ai'^2 - m Ai^2,  N3 = Ai Ai'/12 + (m/6)(Ai'^2 - m Ai^2).
double kernel_near_diagonal(double m, double d, double ai, double aip) {
    const double n1 = aip * aip - m * ai * ai;
    const double n3 = ai * aip / 12.0 + (m / 6.0) * n1;
    return n1 + d * d * n3;
}

} // namespace

double airy_kernel(double x, double y) {
    if (std::abs(x - y) < 1e-6) {
        const double m = 0.5 * (x + y);
        const AiryPair am = airy_eval(m);
        return kernel_near_diagonal(m, x - y, am.ai, am.ai_prime);
    }
    const AiryPair ax = airy_eval(x);
    const AiryPair ay = airy_eval(y);
    return (ax.ai * ay.ai_prime - ax.ai_prime * ay.ai) / (x - y);
}

double fredholm_det_f2(double s, int n, double map_scale) {
    if (!(s >= -13.0 && s <= 10.0))
        throw domain_error("fredholm_det_f2: s outside [-13, 10]");
    if (n < 20)
        throw invalid_argument_error("fredholm_det_f2: need at least 20 nodes");
    if (!(map_scale > 0.0 && map_scale <= 100.0))
        throw invalid_argument_error("fredholm_det_f2: map_scale outside (0, 100]");

    const QuadratureRule rule = gauss_legendre(n, -1.0, 1.0);
    const std::size_t m = static_cast<std::size_t>(n);

    // Map (s, inf) to (-1, 1); nodes far enough out that Ai has underflowed
    // contribute exact zeros, so the matrix is the identity there.
    std::vector<double> x(m), sw(m), ai(m), aip(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = rule.nodes[i];
        x[i] = s + map_scale * (1.0 + u) / (1.0 - u);
        const double jac = 2.0 * map_scale / ((1.0 - u) * (1.0 - u));
        sw[i] = std::sqrt(rule.weights[i] * jac);
        if (x[i] > airy_range_max) {
            ai[i] = 0.0;
            aip[i] = 0.0;
        } else {
            const AiryPair a = airy_eval(x[i]);
            ai[i] = a.ai;
            aip[i] = a.ai_prime;
        }
    }

    std::vector<double> a(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double k;
            if (i == j) {
                k = kernel_near_diagonal(x[i], 0.0, ai[i], aip[i]);
            } else if (std::abs(x[i] - x[j]) < 1e-6) {
                const double mid = 0.5 * (x[i] + x[j]);
                const AiryPair am = airy_eval(mid);
                k = kernel_near_diagonal(mid, x[i] - x[j], am.ai, am.ai_prime);
            } else {
                k = (ai[i] * aip[j] - aip[i] * ai[j]) / (x[i] - x[j]);
            }
            const double v = (i == j ? 1.0 : 0.0) - sw[i] * sw[j] * k;
            a[i * m + j] = v;
            a[j * m + i] = v;
        }
    }

    // Cholesky in place; det(I - M) is the product of the pivots, summed in
    // log space.  A non-positive pivot means an eigenvalue of the discretized
    // kernel reached 1, i.e. the determinant is below what this resolution
    // (and double precision) can represent.
    double log_det = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double d = a[j * m + j];
        for (std::size_t k = 0; k < j; ++k)
            d -= a[j * m + k] * a[j * m + k];
        if (!(d > 0.0))
            throw resolution_error("fredholm_det_f2: non-positive Cholesky pivot; "
                                   "determinant not resolvable at this quadrature size");
        log_det += std::log(d);
        const double l = std::sqrt(d);
        a[j * m + j] = l;
        for (std::size_t i = j + 1; i < m; ++i) {
            double v = a[i * m + j];
            for (std::size_t k = 0; k < j; ++k)
                v -= a[i * m + k] * a[j * m + k];
            a[i * m + j] = v / l;
        }
    }
    return std::exp(log_det);
}

} // namespace tw
