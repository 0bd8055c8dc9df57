#include "doctest.h"

#include "twlab/ensembles.hpp"
#include "twlab/errors.hpp"
#include "twlab/gof.hpp"
#include "twlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

using namespace tw;

namespace {

// Exhaustive LIS by scanning every subsequence bitmask.
int brute_force_lis(const std::vector<std::uint32_t>& perm) {
    const int n = static_cast<int>(perm.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int len = 0;
        std::uint32_t last = 0;
        bool increasing = true;
        bool first = true;
        for (int i = 0; i < n && increasing; ++i)
            if (mask & (1u << i)) {
                if (!first && perm[i] <= last)
                    increasing = false;
                last = perm[i];
                first = false;
                ++len;
            }
        if (increasing)
            best = std::max(best, len);
    }
    return best;
}

// Exhaustive last passage time: maximum weight over every monotone
// lattice path from (0,0) to (k-1,n-1), enumerated by DFS.
void dfs_paths(const std::vector<double>& w, int k, int n, int i, int j,
               double sum, double& best) {
    sum += w[static_cast<std::size_t>(i) * n + j];
    if (i == k - 1 && j == n - 1) {
        best = std::max(best, sum);
        return;
    }
    if (i + 1 < k)
        dfs_paths(w, k, n, i + 1, j, sum, best);
    if (j + 1 < n)
        dfs_paths(w, k, n, i, j + 1, sum, best);
}

double brute_force_lpp(const std::vector<double>& w, int k, int n) {
    double best = -1.0;
    dfs_paths(w, k, n, 0, 0, 0.0, best);
    return best;
}

} // namespace

TEST_CASE("edge scaling and its inverse follow the stated arithmetic") {
    const ScalingSpec unit{1.0, 64, 1};
    CHECK(scale_value(2.0 * std::sqrt(64.0), unit) == 0.0);
    CHECK(scale_value(16.5, unit) == doctest::Approx(1.0).epsilon(1e-14));
    for (double lam : {-3.0, 0.0, 12.7, 31.9})
        CHECK(unscale_value(scale_value(lam, unit), unit) ==
              doctest::Approx(lam).epsilon(1e-12));

    CHECK_THROWS_AS(scale_value(1.0, ScalingSpec{0.0, 4, 1}), invalid_argument_error);
    CHECK_THROWS_AS(scale_value(1.0, ScalingSpec{-1.0, 4, 1}), invalid_argument_error);
    CHECK_THROWS_AS(unscale_value(1.0, ScalingSpec{1.0, 0, 1}), invalid_argument_error);

    CHECK(ensemble_scaling(1, 100).N == 100);
    CHECK(ensemble_scaling(2, 100).N == 100);
    // beta = 4 scales by the full embedded dimension
    CHECK(ensemble_scaling(4, 100).N == 200);
    CHECK(ensemble_scaling(4, 100).beta == 4);
    CHECK(ensemble_scaling(1, 5).sigma == 1.0);
    CHECK_THROWS_AS(ensemble_scaling(3, 10), invalid_argument_error);
    CHECK_THROWS_AS(ensemble_scaling(2, 0), invalid_argument_error);
}

TEST_CASE("center_scale shifts values into raw and rescales") {
    SampleSet raw;
    raw.model = "goe";
    raw.values = {16.0, 16.5, 15.5};
    const SampleSet scaled = center_scale(raw, ScalingSpec{1.0, 64, 1});
    REQUIRE(scaled.raw.size() == 3);
    CHECK(scaled.raw == raw.values);
    CHECK(scaled.values[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(scaled.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(scaled.values[2] == doctest::Approx(-1.0).epsilon(1e-14));

    SampleSet empty;
    CHECK_THROWS_AS(center_scale(empty, ScalingSpec{1.0, 64, 1}), invalid_argument_error);
}

TEST_CASE("1x1 real ensemble is a centered normal") {
    const SampleSet set = sample_gaussian_ensemble(1, 1, 100000, 7);
    CHECK(set.model == "goe");
    CHECK(set.values.size() == 100000);
    const SummaryStats st = summary_stats(set.values);
    CHECK(std::abs(st.mean) < 0.02);
    // (G + G^T)/sqrt(2) doubles the diagonal variance
    CHECK(st.sd == doctest::Approx(std::sqrt(2.0)).epsilon(0.02));
    for (double v : set.values)
        CHECK(std::isfinite(v));
}

TEST_CASE("2x2 real ensemble matches the closed-form top eigenvalue") {
    const std::uint64_t seed = 99;
    const SampleSet set = sample_gaussian_ensemble(1, 2, 200, seed);
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 200; ++i) {
        // replay the sampler's documented draw order: G row-major
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        const double g00 = rng.next_normal();
        const double g01 = rng.next_normal();
        const double g10 = rng.next_normal();
        const double g11 = rng.next_normal();
        const double a = (g00 + g00) * inv_rt2;
        const double d = (g11 + g11) * inv_rt2;
        const double b = (g01 + g10) * inv_rt2;
        const double lam = (a + d) / 2.0 + std::hypot((a - d) / 2.0, b);
        CHECK(set.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(lam).epsilon(1e-10));
    }
}

TEST_CASE("2x2 complex ensemble matches the closed-form top eigenvalue") {
    const std::uint64_t seed = 4242;
    const SampleSet set = sample_gaussian_ensemble(2, 2, 200, seed);
    CHECK(set.model == "gue");
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 200; ++i) {
        // draw order: diagonal first, then the (re, im) pair, then the
        // second diagonal entry
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        const double a = rng.next_normal();
        const double re = rng.next_normal() * inv_rt2;
        const double im = rng.next_normal() * inv_rt2;
        const double d = rng.next_normal();
        const double lam =
            (a + d) / 2.0 + std::sqrt((a - d) * (a - d) / 4.0 + re * re + im * im);
        CHECK(set.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(lam).epsilon(1e-10));
    }
}

TEST_CASE("1-point quaternion ensemble degenerates to one normal") {
    const std::uint64_t seed = 17;
    const SampleSet set = sample_gaussian_ensemble(4, 1, 100, seed);
    CHECK(set.model == "gse");
    for (int i = 0; i < 100; ++i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        const double z = rng.next_normal();
        // the 2x2 embedding is z*I; its Kramers-doubled spectrum is {z, z}
        CHECK(set.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(z).epsilon(1e-10));
    }
}

TEST_CASE("samplers are pure functions of seed and params") {
    for (int beta : {1, 2, 4}) {
        const SampleSet a = sample_gaussian_ensemble(beta, 6, 40, 5);
        const SampleSet b = sample_gaussian_ensemble(beta, 6, 40, 5);
        CHECK(a.values == b.values);
        const SampleSet c = sample_gaussian_ensemble(beta, 6, 40, 6);
        CHECK(a.values != c.values);
    }
    const SampleSet w1 = sample_wigner(16, EntryLaw::rademacher, 50, 3);
    const SampleSet w2 = sample_wigner(16, EntryLaw::rademacher, 50, 3);
    CHECK(w1.values == w2.values);
    const GrowthOptions opts;
    const GrowthResult g1 = sample_growth_env(opts, 8, 30, 11);
    const GrowthResult g2 = sample_growth_env(opts, 8, 30, 11);
    CHECK(g1.set.values == g2.set.values);
}

TEST_CASE("tridiagonal fast path agrees with the dense sampler") {
    for (int beta : {1, 2, 4}) {
        const SampleSet dense = sample_gaussian_ensemble(beta, 8, 3000, 21);
        const SampleSet fast = sample_gaussian_tridiag(beta, 8, 3000, 22);
        CHECK(fast.params.at("sampler") == "tridiagonal");
        const SummaryStats sd_ = summary_stats(dense.values);
        const SummaryStats sf = summary_stats(fast.values);
        CHECK(sd_.mean == doctest::Approx(sf.mean).epsilon(0.05));
        CHECK(sd_.sd == doctest::Approx(sf.sd).epsilon(0.12));
    }
}

TEST_CASE("one-point entry laws hit their supports") {
    const SampleSet r = sample_wigner(1, EntryLaw::rademacher, 200, 2);
    bool saw_plus = false, saw_minus = false;
    for (std::size_t i = 0; i < r.raw.size(); ++i) {
        CHECK((r.raw[i] == 1.0 || r.raw[i] == -1.0));
        // N = 1 scaling: s = lambda - 2
        CHECK(r.values[i] == doctest::Approx(r.raw[i] - 2.0).epsilon(1e-14));
        (r.raw[i] > 0 ? saw_plus : saw_minus) = true;
    }
    CHECK(saw_plus);
    CHECK(saw_minus);

    const double rt3 = std::sqrt(3.0);
    const SampleSet u = sample_wigner(1, EntryLaw::uniform, 4000, 2);
    for (double v : u.raw) {
        CHECK(v >= -rt3);
        CHECK(v <= rt3);
    }
    const SummaryStats st = summary_stats(u.raw);
    CHECK(std::abs(st.mean) < 0.07);
    CHECK(st.sd == doctest::Approx(1.0).epsilon(0.07));
}

TEST_CASE("wigner spectra reach the semicircle edge") {
    const SampleSet set = sample_wigner(256, EntryLaw::rademacher, 2000, 1);
    CHECK(set.params.at("law") == "rademacher");
    CHECK(set.values.size() == 2000);
    double mean_raw = 0.0;
    for (double v : set.raw)
        mean_raw += v;
    mean_raw /= static_cast<double>(set.raw.size());
    CHECK(mean_raw / (2.0 * std::sqrt(256.0)) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("patience lengths: identity, reversal, and S3 exhaustively") {
    std::vector<std::uint32_t> identity(9);
    std::iota(identity.begin(), identity.end(), 0u);
    CHECK(lis_length(identity) == 9);
    std::vector<std::uint32_t> reversed(identity.rbegin(), identity.rend());
    CHECK(lis_length(reversed) == 1);
    CHECK(lis_length({2, 0, 1, 3}) == 3);

    std::vector<std::uint32_t> perm = {0, 1, 2};
    int total = 0;
    int count = 0;
    do {
        total += lis_length(perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 6);
    // lengths over S3 are {3,2,2,2,2,1}
    CHECK(total == 12);
}

TEST_CASE("patience sorting equals exhaustive search through N = 7") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<std::uint32_t> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0u);
        do {
            CHECK(lis_length(perm) == brute_force_lis(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("lis sampler scales by the sixth root of N") {
    const SampleSet one = sample_lis(1, 5, 9);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(one.raw[i] == 1.0);
        CHECK(one.values[i] == doctest::Approx(-1.0).epsilon(1e-14));
    }

    const SampleSet set = sample_lis(64, 50, 9);
    for (std::size_t i = 0; i < set.values.size(); ++i) {
        const double expected = (set.raw[i] - 16.0) / 2.0;  // 64^{1/6} = 2
        CHECK(set.values[i] == doctest::Approx(expected).epsilon(1e-14));
        CHECK(set.raw[i] >= 1.0);
        CHECK(set.raw[i] <= 64.0);
    }

    const SampleSet s3 = sample_lis(3, 6000, 12);
    double mean = 0.0;
    for (double v : s3.raw)
        mean += v;
    mean /= static_cast<double>(s3.raw.size());
    // exhaustive S3 mean is exactly 2
    CHECK(mean == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("single-station departures are plain sums of services") {
    const std::uint64_t seed = 31;
    const int n = 40;
    const SampleSet set = sample_queue(1, n, ServiceLaw::exponential, 25, seed);
    for (int i = 0; i < 25; ++i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        double total = 0.0;
        for (int j = 0; j < n; ++j)
            total += rng.next_exponential();
        CHECK(set.raw[static_cast<std::size_t>(i)] ==
              doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("deterministic service fills every path identically") {
    const SampleSet set = sample_queue(4, 25, ServiceLaw::deterministic, 6, 1);
    for (std::size_t i = 0; i < set.raw.size(); ++i) {
        CHECK(set.raw[i] == 28.0);  // k + n - 1
        CHECK(set.values[i] == doctest::Approx(3.0 / 5.0).epsilon(1e-14));
    }

    const std::vector<double> ones(3 * 7, 1.0);
    CHECK(lpp_departure(ones, 3, 7) == 9.0);
    CHECK_THROWS_AS(lpp_departure(ones, 4, 7), invalid_argument_error);
    CHECK_THROWS_AS(lpp_departure(ones, 0, 7), invalid_argument_error);
}

TEST_CASE("last-passage recursion equals the exhaustive path maximum") {
    RngStream rng = stream_for(500, 0);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n)
            for (int rep = 0; rep < 10; ++rep) {
                std::vector<double> w(static_cast<std::size_t>(k) * n);
                for (auto& v : w)
                    v = rng.next_exponential();
                CHECK(lpp_departure(w, k, n) ==
                      doctest::Approx(brute_force_lpp(w, k, n)).epsilon(1e-12));
            }
}

TEST_CASE("fixed-k scaling centers the departure times") {
    const SampleSet exp_set = sample_queue(1, 400, ServiceLaw::exponential, 1500, 77);
    CHECK(exp_set.params.at("scaling") == "fixed_k");
    const SummaryStats se = summary_stats(exp_set.values);
    CHECK(std::abs(se.mean) < 0.1);
    CHECK(se.sd == doctest::Approx(1.0).epsilon(0.15));

    const SampleSet geo_set = sample_queue(1, 400, ServiceLaw::geometric, 1500, 78);
    const SummaryStats sg = summary_stats(geo_set.values);
    CHECK(std::abs(sg.mean) < 0.1);
    CHECK(sg.sd == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("cube-root scaling honors supplied constants and labels estimates") {
    QueueOptions supplied;
    supplied.scaling = QueueScaling::cube_root;
    supplied.c1 = 1.5;
    supplied.c2 = 2.0;
    const int n = 27;
    const SampleSet s = sample_queue(2, n, ServiceLaw::exponential, 20, 5, supplied);
    CHECK(s.params.at("scaling") == "cube_root");
    CHECK(s.params.at("constants") == "supplied");
    for (std::size_t i = 0; i < s.raw.size(); ++i)
        CHECK(s.values[i] ==
              doctest::Approx((s.raw[i] - 1.5 * n) / (2.0 * 3.0)).epsilon(1e-12));

    QueueOptions estimated;
    estimated.scaling = QueueScaling::cube_root;
    const SampleSet e = sample_queue(2, 64, ServiceLaw::exponential, 50, 5, estimated);
    CHECK(e.params.at("constants") == "estimated");
    const double c1 = std::stod(e.params.at("c1"));
    const double c2 = std::stod(e.params.at("c2"));
    CHECK(c1 > 0.5);
    CHECK(c1 < 2.5);
    CHECK(c2 > 0.0);
    for (double v : e.values)
        CHECK(std::isfinite(v));

    QueueOptions degen;
    degen.scaling = QueueScaling::cube_root;
    const SampleSet d = sample_queue(3, 16, ServiceLaw::deterministic, 5, 5, degen);
    CHECK(d.params.at("degenerate_scale") == "true");
    CHECK(std::stod(d.params.at("c2")) == 1.0);
}

TEST_CASE("two-station departures follow the 2x2 complex edge law") {
    const SampleSet q = sample_queue(2, 2500, ServiceLaw::exponential, 800, 13);
    const SampleSet g = sample_gaussian_ensemble(2, 2, 800, 14);
    const double d = ks_distance(q.values, ecdf(g.values));
    CHECK(d < 0.1);
}

TEST_CASE("growth profiles: cone, floor, and bookkeeping") {
    GrowthOptions cone;
    cone.p_law = {PLawKind::constant, 1.0, 0.0, 1.0};
    cone.keep_profiles = true;
    const int t = 7;
    const GrowthResult gr = sample_growth_env(cone, t, 3, 2);
    CHECK(gr.set.params.at("p_law") == "constant");
    CHECK(gr.set.params.at("mode") == "annealed");
    CHECK(gr.set.params.at("update") == "sequential");
    REQUIRE(gr.profiles.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(gr.profiles[i].size() == static_cast<std::size_t>(t) + 1);
        for (int x = 0; x <= t; ++x)
            CHECK(gr.profiles[i][static_cast<std::size_t>(x)] == t - x);
        CHECK(gr.set.values[i] == static_cast<double>(t));
    }

    GrowthOptions floor = cone;
    floor.p_law.p = 0.0;
    const GrowthResult gf = sample_growth_env(floor, t, 2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (int x = 0; x <= t; ++x)
            CHECK(gf.profiles[i][static_cast<std::size_t>(x)] == 0);
        CHECK(gf.set.values[i] == 0.0);
    }

    GrowthOptions plain;
    plain.p_law = {PLawKind::constant, 0.6, 0.0, 1.0};
    plain.keep_profiles = true;
    const GrowthResult gp = sample_growth_env(plain, 5, 40, 3);
    for (std::size_t i = 0; i < 40; ++i) {
        CHECK(gp.set.values[i] == static_cast<double>(gp.profiles[i][0]));
        for (long long h : gp.profiles[i]) {
            CHECK(h >= 0);  // every site within the light cone is reached
            CHECK(h <= 5);
        }
    }
}

TEST_CASE("two-step evolution matches exact enumeration of coin strings") {
    // With h(0,0) = 0 the sweep consumes: step 1, one coin at site 0;
    // step 2, a coin at site 0 and, only if the first toss failed, a
    // coin at site 1 (a higher left neighbor updates deterministically).
    for (int bits = 0; bits < 8; ++bits) {
        const bool b1 = bits & 1, b2 = bits & 2, b3 = bits & 4;
        std::vector<bool> script = {b1, b2, b3};
        std::size_t used = 0;
        const auto coin = [&](double p) {
            CHECK(p == 0.5);
            REQUIRE(used < script.size());
            return static_cast<bool>(script[used++]);
        };
        const auto h = growth_evolve(2, [](int) { return 0.5; }, coin);
        REQUIRE(h.size() == 3);
        if (b1) {
            CHECK(used == 2);
            CHECK(h[0] == 1 + (b2 ? 1 : 0));
            CHECK(h[1] == 1);
        } else {
            CHECK(used == 3);
            CHECK(h[0] == (b2 ? 1 : 0));
            CHECK(h[1] == (b3 ? 1 : 0));
        }
        CHECK(h[2] == 0);
        // the origin height is the sum of its own two tosses
        CHECK(h[0] == (b1 ? 1 : 0) + (b2 ? 1 : 0));
    }
}

TEST_CASE("cascade updates read the just-updated neighbor") {
    const auto always = [](double) { return true; };
    const auto p_half = [](int) { return 0.5; };
    const auto seq = growth_evolve(4, p_half, always, GrowthUpdate::sequential);
    const auto cas = growth_evolve(4, p_half, always, GrowthUpdate::cascade);
    for (int x = 0; x <= 4; ++x) {
        CHECK(seq[static_cast<std::size_t>(x)] == 4 - x);
        // in-place sweeps drag the whole cone up to the origin height
        CHECK(cas[static_cast<std::size_t>(x)] == 4);
    }

    GrowthOptions opts;
    opts.update = GrowthUpdate::cascade;
    const GrowthResult gr = sample_growth_env(opts, 3, 4, 8);
    CHECK(gr.set.params.at("update") == "cascade");
}

TEST_CASE("quenched environments are shared, annealed ones refresh") {
    GrowthOptions quenched;
    quenched.p_law = {PLawKind::uniform, 0.5, 0.0, 1.0};
    quenched.mode = GrowthMode::quenched;
    GrowthOptions annealed = quenched;
    annealed.mode = GrowthMode::annealed;

    const int t = 6;
    const GrowthResult gq = sample_growth_env(quenched, t, 4000, 19);
    const GrowthResult ga = sample_growth_env(annealed, t, 4000, 19);
    CHECK(gq.set.params.at("mode") == "quenched");
    CHECK(gq.set.params.at("p_lo") == "0");
    CHECK(gq.set.params.at("p_hi") == "1");

    // conditioned on one environment the origin height is Binomial(t, p0)
    // with variance at most t/4; integrating over environments adds the
    // between-environment term t^2/12
    const SummaryStats sq = summary_stats(gq.set.values);
    const SummaryStats sa = summary_stats(ga.set.values);
    CHECK(sq.sd * sq.sd < static_cast<double>(t) / 4.0 + 0.35);
    CHECK(sa.sd * sa.sd > sq.sd * sq.sd + 0.8);

    const GrowthResult gq2 = sample_growth_env(quenched, t, 4000, 19);
    CHECK(gq.set.values == gq2.set.values);
}

TEST_CASE("worker count never changes results") {
    const auto square = [](int i) { return static_cast<double>(i) * i; };
    const std::vector<double> base = run_indexed(300, 1, square);
    for (int threads : {0, 2, 4, 7}) {
        const std::vector<double> other = run_indexed(300, threads, square);
        CHECK(other == base);
    }
    for (int i = 0; i < 300; ++i)
        CHECK(base[static_cast<std::size_t>(i)] == static_cast<double>(i) * i);
    CHECK(run_indexed(0, 4, square).empty());
    CHECK_THROWS_AS(run_indexed(-1, 1, square), invalid_argument_error);

    const SampleSet l1 = sample_lis(200, 40, 23, 1);
    const SampleSet l4 = sample_lis(200, 40, 23, 4);
    CHECK(l1.values == l4.values);
    const SampleSet g1 = sample_gaussian_ensemble(2, 6, 40, 23, 1);
    const SampleSet g3 = sample_gaussian_ensemble(2, 6, 40, 23, 3);
    CHECK(g1.values == g3.values);
    const SampleSet q1 = sample_queue(2, 50, ServiceLaw::geometric, 40, 23, {}, 1);
    const SampleSet q4 = sample_queue(2, 50, ServiceLaw::geometric, 40, 23, {}, 4);
    CHECK(q1.values == q4.values);
}

TEST_CASE("samplers validate their arguments") {
    CHECK_THROWS_AS(sample_gaussian_ensemble(3, 4, 10, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_gaussian_ensemble(1, 0, 10, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_gaussian_ensemble(1, 4, 0, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_gaussian_tridiag(5, 4, 10, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_wigner(0, EntryLaw::rademacher, 10, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_lis(0, 10, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_queue(0, 5, ServiceLaw::exponential, 10, 1), invalid_argument_error);
    CHECK_THROWS_AS(sample_queue(5, 0, ServiceLaw::exponential, 10, 1), invalid_argument_error);

    GrowthOptions bad_p;
    bad_p.p_law = {PLawKind::constant, 1.5, 0.0, 1.0};
    CHECK_THROWS_AS(sample_growth_env(bad_p, 2, 5, 1), invalid_argument_error);
    GrowthOptions bad_range;
    bad_range.p_law = {PLawKind::uniform, 0.5, 0.8, 0.2};
    CHECK_THROWS_AS(sample_growth_env(bad_range, 2, 5, 1), invalid_argument_error);
    GrowthOptions fine;
    CHECK_THROWS_AS(sample_growth_env(fine, 0, 5, 1), invalid_argument_error);
    CHECK_THROWS_AS(growth_evolve(0, [](int) { return 0.5; },
                                  [](double) { return true; }),
                    invalid_argument_error);
}
