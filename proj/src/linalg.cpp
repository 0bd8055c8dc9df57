#include "twlab/linalg.hpp"
#include "twlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tw {
namespace {

// Count of eigenvalues strictly below x via the Sturm sequence of the
// shifted tridiagonal matrix (LDL^T pivot signs).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag,
                double x) {
    const std::size_t n = diag.size();
    int count = 0;
    double d = diag[0] - x;
    if (d < 0.0)
        ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const double b = offdiag[i - 1];
        if (d == 0.0)
            d = 1e-300;
        d = diag[i] - x - b * b / d;
        if (d < 0.0)
            ++count;
    }
    return count;
}

inline double hypot2(double a, double b) { return std::hypot(a, b); }

} // namespace

void householder_tridiag(RealMatrix& a, int n, std::vector<double>& diag,
                         std::vector<double>& offdiag) {
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * n)
        throw invalid_argument_error("householder_tridiag: bad dimensions");
    diag.assign(n, 0.0);
    offdiag.assign(n > 1 ? n - 1 : 0, 0.0);

    std::vector<double> v(n), w(n);
    for (int k = 0; k < n - 2; ++k) {
        // Annihilate column k below the subdiagonal with the reflector
        // H = I - tau v v^T acting on the trailing block.
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i)
            scale += std::abs(a[static_cast<std::size_t>(i) * n + k]);
        if (scale == 0.0) {
            offdiag[k] = a[static_cast<std::size_t>(k + 1) * n + k];
            continue;
        }
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a[static_cast<std::size_t>(i) * n + k] / scale;
            norm2 += v[i] * v[i];
        }
        double alpha = std::sqrt(norm2);
        if (v[k + 1] > 0.0)
            alpha = -alpha;
        offdiag[k] = scale * alpha;
        norm2 -= v[k + 1] * alpha;
        v[k + 1] -= alpha;
        const double tau = 1.0 / norm2;

        // w = tau (A v - (tau/2) (v^T A v) v), then A <- A - v w^T - w v^T.
        double vw = 0.0;
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j)
                s += a[static_cast<std::size_t>(i) * n + j] * v[j];
            w[i] = tau * s;
            vw += v[i] * w[i];
        }
        const double half = 0.5 * tau * vw;
        for (int i = k + 1; i < n; ++i)
            w[i] -= half * v[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j) {
                const double upd = a[static_cast<std::size_t>(i) * n + j]
                                   - v[i] * w[j] - w[i] * v[j];
                a[static_cast<std::size_t>(i) * n + j] = upd;
                a[static_cast<std::size_t>(j) * n + i] = upd;
            }
    }
    if (n > 1)
        offdiag[n - 2] = a[static_cast<std::size_t>(n - 1) * n + (n - 2)];
    for (int i = 0; i < n; ++i)
        diag[i] = a[static_cast<std::size_t>(i) * n + i];
}

void householder_tridiag_hermitian(ComplexMatrix& a, int n, std::vector<double>& diag,
                                   std::vector<double>& offdiag) {
    using cd = std::complex<double>;
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * n)
        throw invalid_argument_error("householder_tridiag_hermitian: bad dimensions");
    diag.assign(n, 0.0);
    offdiag.assign(n > 1 ? n - 1 : 0, 0.0);

    std::vector<cd> v(n), w(n);
    for (int k = 0; k < n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i)
            scale += std::abs(a[static_cast<std::size_t>(i) * n + k]);
        if (scale == 0.0) {
            offdiag[k] = 0.0;
            continue;
        }
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a[static_cast<std::size_t>(i) * n + k] / scale;
            norm2 += std::norm(v[i]);
        }
        const double vnorm = std::sqrt(norm2);
        // alpha = -e^{i arg(v_head)} |v|, so v_head - alpha has the phase of
        // v_head and the resulting subdiagonal entry -scale*|alpha| is real.
        const cd head = v[k + 1];
        const cd phase = (std::abs(head) == 0.0) ? cd(1.0, 0.0) : head / std::abs(head);
        const cd alpha = -phase * vnorm;
        offdiag[k] = scale * vnorm;
        norm2 -= std::real(std::conj(v[k + 1]) * alpha);
        v[k + 1] -= alpha;
        const double tau = 1.0 / norm2;

        cd vw(0.0, 0.0);
        for (int i = k + 1; i < n; ++i) {
            cd s(0.0, 0.0);
            for (int j = k + 1; j < n; ++j)
                s += a[static_cast<std::size_t>(i) * n + j] * v[j];
            w[i] = tau * s;
            vw += std::conj(v[i]) * w[i];
        }
        const cd half = 0.5 * tau * vw;
        for (int i = k + 1; i < n; ++i)
            w[i] -= half * v[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j) {
                const cd upd = a[static_cast<std::size_t>(i) * n + j]
                               - v[i] * std::conj(w[j]) - w[i] * std::conj(v[j]);
                a[static_cast<std::size_t>(i) * n + j] = upd;
                a[static_cast<std::size_t>(j) * n + i] = std::conj(upd);
            }
    }
    if (n > 1) {
        // Absorb the phase of the final subdiagonal entry; eigenvalues are
        // invariant under the induced diagonal unitary similarity.
        offdiag[n - 2] = std::abs(a[static_cast<std::size_t>(n - 1) * n + (n - 2)]);
    }
    for (int i = 0; i < n; ++i)
        diag[i] = std::real(a[static_cast<std::size_t>(i) * n + i]);
}

double tridiag_largest_eigenvalue(const std::vector<double>& diag,
                                  const std::vector<double>& offdiag, double tol) {
    const std::size_t n = diag.size();
    if (n == 0 || offdiag.size() + 1 != n)
        throw invalid_argument_error("tridiag_largest_eigenvalue: bad dimensions");
    if (n == 1)
        return diag[0];

    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double left = (i > 0) ? std::abs(offdiag[i - 1]) : 0.0;
        const double right = (i + 1 < n) ? std::abs(offdiag[i]) : 0.0;
        lo = std::min(lo, diag[i] - left - right);
        hi = std::max(hi, diag[i] + left + right);
    }

    const int want = static_cast<int>(n) - 1;  // eigenvalues strictly below
    const double span = std::max(1.0, hi - lo);
    while (hi - lo > tol * span) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(diag, offdiag, mid) > want)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> tridiag_eigenvalues_ql(std::vector<double> diag,
                                           std::vector<double> offdiag) {
    const std::size_t n = diag.size();
    if (n == 0 || (n > 1 && offdiag.size() + 1 != n))
        throw invalid_argument_error("tridiag_eigenvalues_ql: bad dimensions");
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        e[i - 1] = offdiag[i - 1];

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd)
                    break;
            }
            if (m != l) {
                if (++iter > 50)
                    throw convergence_error("tridiag_eigenvalues_ql: too many iterations");
                double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = diag[m] - diag[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflowed = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        e[m] = 0.0;
                        underflowed = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflowed)
                    continue;
                diag[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

double largest_eigenvalue(RealMatrix& a, int n) {
    std::vector<double> d, e;
    householder_tridiag(a, n, d, e);
    return tridiag_largest_eigenvalue(d, e);
}

double largest_eigenvalue_hermitian(ComplexMatrix& a, int n) {
    std::vector<double> d, e;
    householder_tridiag_hermitian(a, n, d, e);
    return tridiag_largest_eigenvalue(d, e);
}

std::vector<double> dedup_pairs(std::vector<double> values, double rel_tol) {
    if (values.size() % 2 != 0)
        throw invalid_argument_error("dedup_pairs: odd count");
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    out.reserve(values.size() / 2);
    for (std::size_t i = 0; i < values.size(); i += 2) {
        const double a = values[i], b = values[i + 1];
        const double scale = std::max({std::abs(a), std::abs(b), 1e-12});
        if (std::abs(a - b) > rel_tol * scale)
            throw data_error("dedup_pairs: values do not pair up");
        out.push_back(0.5 * (a + b));
    }
    return out;
}

} // namespace tw
