#include "twlab/airy.hpp"
#include "twlab/dd.hpp"
#include "twlab/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace tw {
namespace {

using detail::dd;

// Ai(0) and Ai'(0) split to double-double precision.
constexpr dd kAi0{0.3550280538878172, 2.05233632436212e-17};
constexpr dd kAip0{-0.2588194037928068, 2.522243111610832e-17};

constexpr double kInvTwoSqrtPi = 0.28209479177387814;
constexpr double kInvSqrtPi = 0.5641895835477563;

// Series regime: Maclaurin expansion Ai = Ai(0) f(x) + Ai'(0) g(x), where
// f and g satisfy y'' = x y.  Terms are carried in double-double arithmetic
// so the cancellation near the upper switchover still leaves ~1e-16 relative
// accuracy in the compensated sum.
AiryPair airy_series(double x) {
    const dd xd{x, 0.0};
    const dd x3 = detail::dd_mul(detail::dd_mul(xd, xd), xd);

    dd f{1.0, 0.0}, fp{0.0, 0.0};
    dd g = xd;
    dd gp{1.0, 0.0};
    dd tf{1.0, 0.0};
    dd tg = xd;

    for (int k = 1; k <= 200; ++k) {
        const double a = 3.0 * k;
        // divisors are exact integers, so dd precision survives the update
        tf = detail::dd_div(detail::dd_mul(tf, x3), a * (a - 1.0));
        tg = detail::dd_div(detail::dd_mul(tg, x3), (a + 1.0) * a);
        f = detail::dd_add(f, tf);
        g = detail::dd_add(g, tg);
        if (x != 0.0) {
            fp = detail::dd_add(fp, detail::dd_div(detail::dd_mul(tf, a), x));
            gp = detail::dd_add(gp, detail::dd_div(detail::dd_mul(tg, a + 1.0), x));
        }
        const double gfloor = std::max(std::abs(g.hi), 1e-300);
        if (std::abs(tf.hi) < 1e-40 * std::abs(f.hi) && std::abs(tg.hi) < 1e-40 * gfloor)
            break;
    }

    const dd ai = detail::dd_add(detail::dd_mul(kAi0, f), detail::dd_mul(kAip0, g));
    const dd aip = detail::dd_add(detail::dd_mul(kAi0, fp), detail::dd_mul(kAip0, gp));
    return {x, ai.hi + ai.lo, aip.hi + aip.lo};
}

// Exponential asymptotic regime (x >= 9.5), DLMF 9.7.5/9.7.6:
//   Ai(x)  ~  e^{-z} / (2 sqrt(pi) x^{1/4}) * sum (-1)^k u_k z^{-k}
//   Ai'(x) ~ -x^{1/4} e^{-z} / (2 sqrt(pi)) * sum (-1)^k v_k z^{-k}
// with z = (2/3) x^{3/2}.  The prefactor is assembled inside a single exp so
// the value underflows gracefully to zero instead of producing 0 * inf.
AiryPair airy_asym_pos(double x) {
    const double z = (2.0 / 3.0) * std::pow(x, 1.5);
    double su = 1.0, sv = 1.0;
    double uk = 1.0;
    double prev = 1e300;
    for (int k = 1; k <= 60; ++k) {
        uk *= (6.0 * k - 5.0) * (6.0 * k - 1.0) / (72.0 * k);
        const double vk = -uk * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double tu = sign * uk / std::pow(z, k);
        if (std::abs(tu) > prev)
            break;
        prev = std::abs(tu);
        su += tu;
        sv += sign * vk / std::pow(z, k);
        if (std::abs(tu) < 1e-18 * std::abs(su))
            break;
    }
    const double lx = std::log(x);
    const double ai = std::exp(-z - 0.25 * lx) * kInvTwoSqrtPi * su;
    const double aip = -std::exp(-z + 0.25 * lx) * kInvTwoSqrtPi * sv;
    return {x, ai, aip};
}

// Oscillatory asymptotic regime (x <= -12), A&S 10.4.60/10.4.62 with
// t = -x, z = (2/3) t^{3/2}, w = z + pi/4:
//   Ai(-t)  ~ [sin(w) S_even(u) - cos(w) S_odd(u)] / (sqrt(pi) t^{1/4})
//   Ai'(-t) ~ -[cos(w) S_even(v) + sin(w) S_odd(v)] t^{1/4} / sqrt(pi)
// where S_even/S_odd sum the even/odd-index coefficients with alternating
// signs in powers of z^{-2}.
AiryPair airy_asym_neg(double x) {
    const double t = -x;
    const double z = (2.0 / 3.0) * std::pow(t, 1.5);
    const double w = z + 0.25 * M_PI;

    double u[40], v[40];
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 1; k < 40; ++k) {
        u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 1.0) / (72.0 * k);
        v[k] = -u[k] * (6.0 * k + 1.0) / (6.0 * k - 1.0);
    }

    const auto pair_sums = [&](const double* c, double& even, double& odd) {
        even = 0.0;
        odd = 0.0;
        double prev = 1e300;
        for (int k = 0; k <= 19; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double te = sign * c[2 * k] / std::pow(z, 2 * k);
            const double to = sign * c[2 * k + 1] / std::pow(z, 2 * k + 1);
            if (std::abs(te) > prev)
                break;
            prev = std::abs(te);
            even += te;
            odd += to;
            if (std::abs(te) < 1e-18 * std::abs(even))
                break;
        }
    };

    double sue, suo, sve, svo;
    pair_sums(u, sue, suo);
    pair_sums(v, sve, svo);

    const double t14 = std::pow(t, 0.25);
    const double ai = (std::sin(w) * sue - std::cos(w) * suo) * kInvSqrtPi / t14;
    const double aip = -(std::cos(w) * sve + std::sin(w) * svo) * t14 * kInvSqrtPi;
    return {x, ai, aip};
}

} // namespace

AiryPair airy_eval(double x) {
    if (std::isnan(x) || x < airy_range_min || x > airy_range_max)
        throw domain_error("airy_eval: x outside supported range");
    if (x >= 9.5)
        return airy_asym_pos(x);
    if (x <= -12.0)
        return airy_asym_neg(x);
    return airy_series(x);
}

} // namespace tw
