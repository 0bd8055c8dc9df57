#include "doctest.h"

#include "twlab/distributions.hpp"
#include "twlab/errors.hpp"
#include "twlab/numerics.hpp"
#include "twlab/painleve.hpp"

#include <cmath>
#include <memory>

using namespace tw;

namespace {

std::shared_ptr<const PainleveTable> shared_table() {
    static const auto table =
        std::make_shared<const PainleveTable>(solve_hastings_mcleod());
    return table;
}

const DistributionEvaluator& evaluator() {
    static const DistributionEvaluator ev(shared_table());
    return ev;
}

// Independently checked values of the Painleve integrals at s = 0
// (see the solver tests); the CDFs at 0 are closed forms in them.
constexpr double e_at_0 = 0.03110598530635045;
constexpr double j_at_0 = 0.3369606979309618;

} // namespace

TEST_CASE("cdf at 0 matches the closed forms in E and J") {
    const DistributionEvaluator& ev = evaluator();
    const double f2 = std::exp(-e_at_0);
    const double f1 = std::exp(-j_at_0 / 2.0) * std::sqrt(f2);
    CHECK(ev.cdf(2, 0.0) == doctest::Approx(f2).epsilon(1e-10));
    CHECK(ev.cdf(1, 0.0) == doctest::Approx(f1).epsilon(1e-10));
    // The beta=4 evaluation at s = 0 uses u = 0 regardless of the
    // argument convention.
    const double f4 = std::cosh(j_at_0 / 2.0) * std::sqrt(f2);
    CHECK(ev.cdf(4, 0.0) == doctest::Approx(f4).epsilon(1e-10));
}

TEST_CASE("cdf is increasing and spans (0, 1) across the window") {
    const DistributionEvaluator& ev = evaluator();
    for (int beta : {1, 2, 4}) {
        const double lo = ev.window_min(beta);
        const double hi = ev.window_max(beta);
        double prev = -1.0;
        for (int i = 0; i <= 200; ++i) {
            const double s = lo + (hi - lo) * i / 200.0;
            const double v = ev.cdf(beta, s);
            // monotone up to spline evaluation noise near F = 1
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
        CHECK(ev.cdf(beta, lo) < 1e-30);
        CHECK(ev.cdf(beta, hi) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("cdf_ex clamps outside the window with the flag set") {
    const DistributionEvaluator& ev = evaluator();
    for (int beta : {1, 2, 4}) {
        const double lo = ev.window_min(beta);
        const double hi = ev.window_max(beta);
        const CdfValue below = ev.cdf_ex(beta, lo - 0.5);
        CHECK(below.value == 0.0);
        CHECK(below.clamped);
        const CdfValue above = ev.cdf_ex(beta, hi + 0.5);
        CHECK(above.value == 1.0);
        CHECK(above.clamped);
        CHECK_FALSE(ev.cdf_ex(beta, 0.0).clamped);
    }
    // beta = 4 window is the table window divided by sqrt(2)
    CHECK(ev.window_min(4) ==
          doctest::Approx(ev.window_min(2) / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ev.window_max(4) ==
          doctest::Approx(ev.window_max(2) / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("pdf equals the centered difference of the cdf") {
    const DistributionEvaluator& ev = evaluator();
    const double h = 1e-5;
    for (int beta : {1, 2, 4})
        for (double s : {-3.0, -1.0, 0.0, 1.5}) {
            const double numeric =
                (ev.cdf(beta, s + h) - ev.cdf(beta, s - h)) / (2.0 * h);
            CHECK(ev.pdf(beta, s) == doctest::Approx(numeric).epsilon(1e-5));
        }
}

TEST_CASE("pdf is a probability density: positive bulk, unit mass") {
    const DistributionEvaluator& ev = evaluator();
    for (int beta : {1, 2, 4}) {
        const double lo = ev.window_min(beta);
        const double hi = ev.window_max(beta);
        // composite Gauss-Legendre over the window
        double mass = 0.0;
        const int panels = 48;
        for (int i = 0; i < panels; ++i) {
            const double a = lo + (hi - lo) * i / panels;
            const double b = lo + (hi - lo) * (i + 1) / panels;
            mass += gauss_legendre(20, a, b).integrate(
                [&](double x) { return ev.pdf(beta, x); });
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(ev.pdf(beta, -1.5) > 0.1);
        // vanishing tails and hard clamp outside the window
        CHECK(ev.pdf(beta, lo) < 1e-30);
        CHECK(ev.pdf(beta, lo - 1.0) == 0.0);
        CHECK(ev.pdf(beta, hi + 1.0) == 0.0);
    }
}

TEST_CASE("density mode of F2 sits left of the origin") {
    const DistributionEvaluator& ev = evaluator();
    double best_s = 0.0;
    double best = -1.0;
    for (int i = 0; i <= 600; ++i) {
        const double s = -6.0 + i * 0.02;
        const double v = ev.pdf(2, s);
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    CHECK(best_s > -3.0);
    CHECK(best_s < 0.0);
    CHECK(best > 0.3);
}

TEST_CASE("moments reproduce the reference table values") {
    const DistributionEvaluator& ev = evaluator();
    const SummaryStats m1 = ev.moments(1);
    CHECK(m1.mean == doctest::Approx(-1.2065335747560832).epsilon(1e-8));
    CHECK(m1.sd == doctest::Approx(1.267983056803216).epsilon(1e-8));
    CHECK(m1.skewness == doctest::Approx(0.2934645123209029).epsilon(1e-7));
    CHECK(m1.excess_kurtosis == doctest::Approx(0.1652428309155276).epsilon(1e-6));

    const SummaryStats m2 = ev.moments(2);
    CHECK(m2.mean == doctest::Approx(-1.7710868074106254).epsilon(1e-8));
    CHECK(m2.sd == doctest::Approx(0.901773138229626).epsilon(1e-8));
    CHECK(m2.skewness == doctest::Approx(0.22408420361083986).epsilon(1e-7));
    CHECK(m2.excess_kurtosis == doctest::Approx(0.09344808766081947).epsilon(1e-6));

    const SummaryStats m4 = ev.moments(4);
    CHECK(m4.mean == doctest::Approx(-2.3068848932432124).epsilon(1e-8));
    CHECK(m4.sd == doctest::Approx(0.7195302083765289).epsilon(1e-8));
    CHECK(m4.skewness == doctest::Approx(0.16550949432664896).epsilon(1e-7));
    CHECK(m4.excess_kurtosis == doctest::Approx(0.04919515653960893).epsilon(1e-6));

    for (int beta : {1, 2, 4}) {
        const SummaryStats m = ev.moments(beta);
        CHECK(m.n == 0);
        CHECK_FALSE(m.degenerate);
    }
}

TEST_CASE("quantile inverts the cdf") {
    const DistributionEvaluator& ev = evaluator();
    for (int beta : {1, 2, 4})
        for (double p : {0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999}) {
            const double s = ev.quantile(beta, p);
            CHECK(ev.cdf(beta, s) == doctest::Approx(p).epsilon(1e-8));
        }
    // medians sit in the left-of-zero bulk, ordered by beta
    const double med1 = ev.quantile(1, 0.5);
    const double med2 = ev.quantile(2, 0.5);
    const double med4 = ev.quantile(4, 0.5);
    CHECK(med1 > -1.6);
    CHECK(med1 < -1.0);
    CHECK(med2 < med1);
    CHECK(med4 < med2);
}

TEST_CASE("quantile rejects probabilities outside the supported range") {
    const DistributionEvaluator& ev = evaluator();
    CHECK_THROWS_AS(ev.quantile(2, 1e-8), domain_error);
    CHECK_THROWS_AS(ev.quantile(2, 1.0 - 1e-8), domain_error);
    CHECK_THROWS_AS(ev.quantile(2, 0.0), domain_error);
    CHECK_THROWS_AS(ev.quantile(2, 1.0), domain_error);
    CHECK_NOTHROW(ev.quantile(2, 1e-6));
    CHECK_NOTHROW(ev.quantile(2, 1.0 - 1e-6));
}

TEST_CASE("invalid beta is rejected everywhere") {
    const DistributionEvaluator& ev = evaluator();
    CHECK_THROWS_AS(ev.cdf(3, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(ev.pdf(0, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(ev.quantile(-1, 0.5), invalid_argument_error);
    CHECK_THROWS_AS(ev.moments(5), invalid_argument_error);
    CHECK_THROWS_AS(ev.window_min(6), invalid_argument_error);
    CHECK_THROWS_AS(ev.window_max(7), invalid_argument_error);
}

TEST_CASE("plain beta4 argument convention is a sqrt(2) dilation") {
    const DistributionEvaluator& table_conv = evaluator();
    const DistributionEvaluator plain(shared_table(), true);
    CHECK(plain.beta4_plain_argument());
    CHECK_FALSE(table_conv.beta4_plain_argument());
    const double rt2 = std::sqrt(2.0);
    for (double s : {-4.0, -2.0, -1.0, 0.0, 1.0, 3.0}) {
        CHECK(plain.cdf(4, s * rt2) ==
              doctest::Approx(table_conv.cdf(4, s)).epsilon(1e-12));
        // densities pick up the Jacobian of the dilation
        CHECK(plain.pdf(4, s * rt2) ==
              doctest::Approx(table_conv.pdf(4, s) / rt2).epsilon(1e-10));
    }
    // beta 1 and 2 are untouched by the flag
    CHECK(plain.cdf(1, -0.7) == table_conv.cdf(1, -0.7));
    CHECK(plain.cdf(2, -0.7) == table_conv.cdf(2, -0.7));
    // moments scale accordingly: mean and sd by sqrt(2), shapes fixed
    const SummaryStats mt = table_conv.moments(4);
    const SummaryStats mp = plain.moments(4);
    CHECK(mp.mean == doctest::Approx(mt.mean * rt2).epsilon(1e-8));
    CHECK(mp.sd == doctest::Approx(mt.sd * rt2).epsilon(1e-8));
    CHECK(mp.skewness == doctest::Approx(mt.skewness).epsilon(1e-7));
    CHECK(mp.excess_kurtosis ==
          doctest::Approx(mt.excess_kurtosis).epsilon(1e-6));
}

TEST_CASE("distribution order: larger beta concentrates further left") {
    const DistributionEvaluator& ev = evaluator();
    for (double s : {-3.0, -2.0, -1.0, 0.0, 1.0}) {
        CHECK(ev.cdf(4, s) >= ev.cdf(2, s));
        CHECK(ev.cdf(2, s) >= ev.cdf(1, s));
    }
}
