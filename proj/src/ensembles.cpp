#include "twlab/ensembles.hpp"
#include "twlab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <thread>

namespace tw {
namespace {

constexpr std::uint64_t kEnvSalt = 0xC2B2AE3D27D4EB4FULL;
constexpr std::uint64_t kPilotSalt = 0x9E6C63D0A52F2C85ULL;

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void check_count(int count) {
    if (count < 1)
        throw invalid_argument_error("count must be positive");
}

// Sweep-order normal fill of the Hermitian block conventions.  Drawing
// orders are part of the reproducibility contract: row-major, diagonal
// entry first, then the (re, im) pair of each off-diagonal in the row.
void fill_hermitian(ComplexMatrix& x, int n, RngStream& rng) {
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i) * n + i] = rng.next_normal();
        for (int j = i + 1; j < n; ++j) {
            const double re = rng.next_normal() * inv_rt2;
            const double im = rng.next_normal() * inv_rt2;
            x[static_cast<std::size_t>(i) * n + j] = {re, im};
            x[static_cast<std::size_t>(j) * n + i] = {re, -im};
        }
    }
}

double lambda_max_goe(int n, RngStream& rng) {
    // A = (G + G^T)/sqrt(2); G filled row-major with standard normals.
    std::vector<double> g(static_cast<std::size_t>(n) * n);
    for (auto& v : g)
        v = rng.next_normal();
    RealMatrix a(static_cast<std::size_t>(n) * n);
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] =
                (g[static_cast<std::size_t>(i) * n + j]
                 + g[static_cast<std::size_t>(j) * n + i]) * inv_rt2;
    return largest_eigenvalue(a, n);
}

double lambda_max_gue(int n, RngStream& rng) {
    ComplexMatrix a(static_cast<std::size_t>(n) * n);
    fill_hermitian(a, n, rng);
    return largest_eigenvalue_hermitian(a, n);
}

double lambda_max_gse(int n, RngStream& rng) {
    // Self-dual embedding M = [[X, Y], [-conj(Y), conj(X)]], X Hermitian
    // with the beta=2 convention, Y antisymmetric with E|y|^2 = 1.  X is
    // drawn first, then Y row-major above the diagonal.
    using cd = std::complex<double>;
    const int m = 2 * n;
    ComplexMatrix x(static_cast<std::size_t>(n) * n);
    fill_hermitian(x, n, rng);
    ComplexMatrix y(static_cast<std::size_t>(n) * n, cd(0.0, 0.0));
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double re = rng.next_normal() * inv_rt2;
            const double im = rng.next_normal() * inv_rt2;
            y[static_cast<std::size_t>(i) * n + j] = {re, im};
            y[static_cast<std::size_t>(j) * n + i] = {-re, -im};
        }
    ComplexMatrix a(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cd xv = x[static_cast<std::size_t>(i) * n + j];
            const cd yv = y[static_cast<std::size_t>(i) * n + j];
            a[static_cast<std::size_t>(i) * m + j] = xv;
            a[static_cast<std::size_t>(i) * m + (n + j)] = yv;
            a[static_cast<std::size_t>(n + i) * m + j] = -std::conj(yv);
            a[static_cast<std::size_t>(n + i) * m + (n + j)] = std::conj(xv);
        }
    return largest_eigenvalue_hermitian(a, m);
}

double service_sd(ServiceLaw law) {
    switch (law) {
    case ServiceLaw::exponential:
        return 1.0;
    case ServiceLaw::geometric:
        return std::sqrt(2.0);
    default:
        return 1.0;  // degenerate law; keeps the scaling finite
    }
}

const char* service_name(ServiceLaw law) {
    switch (law) {
    case ServiceLaw::exponential:
        return "exponential";
    case ServiceLaw::geometric:
        return "geometric";
    default:
        return "deterministic";
    }
}

void draw_services(std::vector<double>& w, ServiceLaw law, RngStream& rng) {
    switch (law) {
    case ServiceLaw::exponential:
        for (auto& v : w)
            v = rng.next_exponential();
        break;
    case ServiceLaw::geometric:
        for (auto& v : w)
            v = static_cast<double>(rng.next_geometric(0.5));
        break;
    default:
        std::fill(w.begin(), w.end(), 1.0);
        break;
    }
}

double queue_departure(int k, int n, ServiceLaw law, RngStream& rng,
                       std::vector<double>& w) {
    w.resize(static_cast<std::size_t>(k) * n);
    draw_services(w, law, rng);
    return lpp_departure(w, k, n);
}

} // namespace

double scale_value(double lambda, const ScalingSpec& spec) {
    if (!(spec.sigma > 0.0) || spec.N < 1)
        throw invalid_argument_error("scale_value: need sigma > 0 and N >= 1");
    const double nd = static_cast<double>(spec.N);
    return (lambda - 2.0 * spec.sigma * std::sqrt(nd)) * std::pow(nd, 1.0 / 6.0) / spec.sigma;
}

double unscale_value(double s, const ScalingSpec& spec) {
    if (!(spec.sigma > 0.0) || spec.N < 1)
        throw invalid_argument_error("unscale_value: need sigma > 0 and N >= 1");
    const double nd = static_cast<double>(spec.N);
    return 2.0 * spec.sigma * std::sqrt(nd) + s * spec.sigma / std::pow(nd, 1.0 / 6.0);
}

SampleSet center_scale(const SampleSet& raw_set, const ScalingSpec& spec) {
    if (raw_set.values.empty())
        throw invalid_argument_error("center_scale: no values");
    SampleSet out = raw_set;
    out.raw = raw_set.values;
    for (auto& v : out.values)
        v = scale_value(v, spec);
    return out;
}

ScalingSpec ensemble_scaling(int beta, int n) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw invalid_argument_error("ensemble_scaling: beta must be 1, 2, or 4");
    if (n < 1)
        throw invalid_argument_error("ensemble_scaling: n must be positive");
    ScalingSpec spec;
    spec.sigma = 1.0;
    spec.N = (beta == 4) ? 2 * n : n;
    spec.beta = beta;
    return spec;
}

std::vector<double> run_indexed(int count, int threads, const std::function<double(int)>& fn) {
    if (count < 0)
        throw invalid_argument_error("run_indexed: negative count");
    std::vector<double> out(count);
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1)
        workers = 1;
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

SampleSet sample_gaussian_ensemble(int beta, int n, int count, std::uint64_t seed,
                                   int threads) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw invalid_argument_error("sample_gaussian_ensemble: beta must be 1, 2, or 4");
    if (n < 1)
        throw invalid_argument_error("sample_gaussian_ensemble: n must be positive");
    check_count(count);

    SampleSet set;
    set.model = beta == 1 ? "goe" : (beta == 2 ? "gue" : "gse");
    set.params = {{"beta", std::to_string(beta)}, {"n", std::to_string(n)}};
    set.seed = seed;
    set.values = run_indexed(count, threads, [&](int i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        switch (beta) {
        case 1:
            return lambda_max_goe(n, rng);
        case 2:
            return lambda_max_gue(n, rng);
        default:
            return lambda_max_gse(n, rng);
        }
    });
    return set;
}

SampleSet sample_gaussian_tridiag(int beta, int n, int count, std::uint64_t seed,
                                  int threads) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw invalid_argument_error("sample_gaussian_tridiag: beta must be 1, 2, or 4");
    if (n < 1)
        throw invalid_argument_error("sample_gaussian_tridiag: n must be positive");
    check_count(count);

    // Scales matching the dense conventions above under Householder
    // reduction: the beta=1 diagonal keeps variance 2 while the complex
    // and quaternion cases have real N(0,1) diagonals; off-diagonal
    // column norms are chi_{beta(N-k)} of half-variance components
    // except in the real case.
    const double diag_scale = beta == 1 ? std::sqrt(2.0) : 1.0;
    const double off_scale = beta == 1 ? 1.0 : 1.0 / std::sqrt(2.0);
    SampleSet set;
    set.model = beta == 1 ? "goe" : (beta == 2 ? "gue" : "gse");
    set.params = {{"beta", std::to_string(beta)},
                  {"n", std::to_string(n)},
                  {"sampler", "tridiagonal"}};
    set.seed = seed;
    set.values = run_indexed(count, threads, [&](int i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
        for (int j = 0; j < n; ++j)
            d[j] = diag_scale * rng.next_normal();
        for (int k = 1; k < n; ++k) {
            // chi_{beta (n - k)} as the root of a sum of squared normals
            const int df = beta * (n - k);
            double s = 0.0;
            for (int j = 0; j < df; ++j) {
                const double z = rng.next_normal();
                s += z * z;
            }
            e[k - 1] = off_scale * std::sqrt(s);
        }
        return tridiag_largest_eigenvalue(d, e);
    });
    return set;
}

SampleSet sample_wigner(int n, EntryLaw law, int count, std::uint64_t seed, int threads) {
    if (n < 1)
        throw invalid_argument_error("sample_wigner: n must be positive");
    check_count(count);

    const double rt3 = std::sqrt(3.0);
    SampleSet set;
    set.model = "wigner";
    set.params = {{"law", law == EntryLaw::rademacher ? "rademacher" : "uniform"},
                  {"n", std::to_string(n)}};
    set.seed = seed;
    set.raw = run_indexed(count, threads, [&](int i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        RealMatrix a(static_cast<std::size_t>(n) * n);
        // Upper triangle including the diagonal, row-major.
        for (int r = 0; r < n; ++r)
            for (int c = r; c < n; ++c) {
                const double v = (law == EntryLaw::rademacher)
                                     ? rng.next_rademacher()
                                     : (2.0 * rng.next_double() - 1.0) * rt3;
                a[static_cast<std::size_t>(r) * n + c] = v;
                a[static_cast<std::size_t>(c) * n + r] = v;
            }
        return largest_eigenvalue(a, n);
    });
    const ScalingSpec spec{1.0, n, 1};
    set.values.resize(set.raw.size());
    for (std::size_t i = 0; i < set.raw.size(); ++i)
        set.values[i] = scale_value(set.raw[i], spec);
    return set;
}

int lis_length(const std::vector<std::uint32_t>& perm) {
    std::vector<std::uint32_t> tails;
    tails.reserve(perm.size());
    for (const std::uint32_t v : perm) {
        const auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

SampleSet sample_lis(int n, int count, std::uint64_t seed, int threads) {
    if (n < 1)
        throw invalid_argument_error("sample_lis: n must be positive");
    check_count(count);

    SampleSet set;
    set.model = "lis";
    set.params = {{"n", std::to_string(n)}};
    set.seed = seed;
    set.raw = run_indexed(count, threads, [&](int i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        std::vector<std::uint32_t> perm(n);
        random_permutation(perm, rng);
        return static_cast<double>(lis_length(perm));
    });
    // l_N ~ 2 sqrt(N) + N^{1/6} chi_2: the fluctuation scale is N^{1/6},
    // unlike the matrix edge where it is N^{-1/6}.
    const double edge = 2.0 * std::sqrt(static_cast<double>(n));
    const double fluct = std::pow(static_cast<double>(n), 1.0 / 6.0);
    set.values.resize(set.raw.size());
    for (std::size_t i = 0; i < set.raw.size(); ++i)
        set.values[i] = (set.raw[i] - edge) / fluct;
    return set;
}

double lpp_departure(const std::vector<double>& w, int k, int n) {
    if (k < 1 || n < 1 || w.size() != static_cast<std::size_t>(k) * n)
        throw invalid_argument_error("lpp_departure: bad dimensions");
    // Rolling row; the zero out-of-range base is exact for nonnegative
    // service times since every real predecessor is >= 0.
    std::vector<double> d(n, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) {
            const double up = d[j];
            const double left = j > 0 ? d[j - 1] : 0.0;
            d[j] = w[static_cast<std::size_t>(i) * n + j] + std::max(up, left);
        }
    return d[n - 1];
}

SampleSet sample_queue(int k, int n, ServiceLaw service, int count, std::uint64_t seed,
                       const QueueOptions& opts, int threads) {
    if (k < 1 || n < 1)
        throw invalid_argument_error("sample_queue: k and n must be positive");
    check_count(count);

    SampleSet set;
    set.model = "queue";
    set.params = {{"k", std::to_string(k)},
                  {"n", std::to_string(n)},
                  {"service", service_name(service)}};
    set.seed = seed;
    set.raw = run_indexed(count, threads, [&](int i) {
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        std::vector<double> w;
        return queue_departure(k, n, service, rng, w);
    });

    set.values.resize(set.raw.size());
    if (opts.scaling == QueueScaling::fixed_k) {
        set.params["scaling"] = "fixed_k";
        const double sigma = service_sd(service);
        const double rtn = std::sqrt(static_cast<double>(n));
        for (std::size_t i = 0; i < set.raw.size(); ++i)
            set.values[i] = (set.raw[i] - n) / (sigma * rtn);
        return set;
    }

    set.params["scaling"] = "cube_root";
    double c1 = opts.c1, c2 = opts.c2;
    if (std::isnan(c1) || std::isnan(c2)) {
        // Estimate by regression: mean(D) ~ c1 m + b m^{1/3} over pilot
        // sizes m in {n/4, n/2, n}, and c2 = sd(D at n) / n^{1/3}.  Pilot
        // streams are salted so they never overlap the reported samples.
        const int pilot_count = 400;
        const int sizes[3] = {std::max(1, n / 4), std::max(1, n / 2), n};
        double mean[3] = {0.0, 0.0, 0.0};
        double sd_n = 0.0;
        for (int si = 0; si < 3; ++si) {
            const int m = sizes[si];
            std::vector<double> d(pilot_count);
            for (int j = 0; j < pilot_count; ++j) {
                RngStream rng = stream_for(seed ^ kPilotSalt,
                                           static_cast<std::uint64_t>(si) * pilot_count + j);
                std::vector<double> w;
                d[j] = queue_departure(k, m, service, rng, w);
            }
            double mu = 0.0;
            for (double v : d)
                mu += v;
            mu /= pilot_count;
            mean[si] = mu;
            if (si == 2) {
                double var = 0.0;
                for (double v : d)
                    var += (v - mu) * (v - mu);
                sd_n = std::sqrt(var / pilot_count);
            }
        }
        // Least squares for mean = c1 m + b m^{1/3} (2x2 normal equations).
        double s11 = 0.0, s12 = 0.0, s22 = 0.0, r1 = 0.0, r2 = 0.0;
        for (int si = 0; si < 3; ++si) {
            const double m = sizes[si];
            const double u = std::cbrt(m);
            s11 += m * m;
            s12 += m * u;
            s22 += u * u;
            r1 += m * mean[si];
            r2 += u * mean[si];
        }
        const double det = s11 * s22 - s12 * s12;
        c1 = (r1 * s22 - r2 * s12) / det;
        c2 = sd_n / std::cbrt(static_cast<double>(n));
        if (!(c2 > 0.0)) {
            c2 = 1.0;  // degenerate service law; keep values finite
            set.params["degenerate_scale"] = "true";
        }
        set.params["constants"] = "estimated";
    } else {
        set.params["constants"] = "supplied";
    }
    set.params["c1"] = fmt_double(c1);
    set.params["c2"] = fmt_double(c2);
    const double denom = c2 * std::cbrt(static_cast<double>(n));
    for (std::size_t i = 0; i < set.raw.size(); ++i)
        set.values[i] = (set.raw[i] - c1 * n) / denom;
    return set;
}

std::vector<long long> growth_evolve(int t, const std::function<double(int)>& p_of_x,
                                     const std::function<bool(double)>& coin,
                                     GrowthUpdate update) {
    if (t < 1)
        throw invalid_argument_error("growth_evolve: t must be positive");
    // Heights on sites 0..t; -1 encodes "never reached" (-inf).  At step s
    // the reachable window is 0..s, swept left to right.  The sequential
    // update reads the time-(s-1) profile; cascade reads in place.
    std::vector<long long> prev(static_cast<std::size_t>(t) + 1, -1);
    std::vector<long long> cur(static_cast<std::size_t>(t) + 1, -1);
    prev[0] = 0;
    if (update == GrowthUpdate::cascade)
        cur = prev;
    for (int s = 1; s <= t; ++s) {
        std::vector<long long>& src = (update == GrowthUpdate::cascade) ? cur : prev;
        for (int x = 0; x <= s; ++x) {
            const long long own = src[x];
            const long long left = x > 0 ? src[x - 1] : -1;
            if (own == -1 && left == -1) {
                cur[x] = -1;  // not yet reachable; consumes no coin
                continue;
            }
            if (left > own) {
                cur[x] = left;  // deterministic catch-up, no coin
            } else {
                cur[x] = own + (coin(p_of_x(x)) ? 1 : 0);
            }
        }
        if (update != GrowthUpdate::cascade) {
            std::swap(prev, cur);
        }
    }
    return (update == GrowthUpdate::cascade) ? cur : prev;
}

GrowthResult sample_growth_env(const GrowthOptions& opts, int t, int count,
                               std::uint64_t seed, int threads) {
    if (t < 1)
        throw invalid_argument_error("sample_growth_env: t must be positive");
    check_count(count);
    if (opts.p_law.kind == PLawKind::constant) {
        if (!(opts.p_law.p >= 0.0 && opts.p_law.p <= 1.0))
            throw invalid_argument_error("sample_growth_env: p outside [0, 1]");
    } else {
        if (!(opts.p_law.lo >= 0.0 && opts.p_law.lo <= opts.p_law.hi && opts.p_law.hi <= 1.0))
            throw invalid_argument_error("sample_growth_env: uniform bounds outside [0, 1]");
    }

    const bool random_env = opts.p_law.kind == PLawKind::uniform;
    std::vector<double> quenched_env;
    if (random_env && opts.mode == GrowthMode::quenched) {
        RngStream env_rng = stream_for(seed ^ kEnvSalt, 0);
        quenched_env.resize(static_cast<std::size_t>(t) + 1);
        for (auto& p : quenched_env)
            p = opts.p_law.lo + (opts.p_law.hi - opts.p_law.lo) * env_rng.next_double();
    }

    GrowthResult result;
    result.set.model = "growth";
    result.set.params = {{"mode", opts.mode == GrowthMode::quenched ? "quenched" : "annealed"},
                         {"t", std::to_string(t)},
                         {"update", opts.update == GrowthUpdate::cascade ? "cascade"
                                                                         : "sequential"}};
    if (random_env) {
        result.set.params["p_law"] = "uniform";
        result.set.params["p_lo"] = fmt_double(opts.p_law.lo);
        result.set.params["p_hi"] = fmt_double(opts.p_law.hi);
    } else {
        result.set.params["p_law"] = "constant";
        result.set.params["p"] = fmt_double(opts.p_law.p);
    }
    result.set.seed = seed;
    if (opts.keep_profiles)
        result.profiles.resize(count);

    std::vector<std::vector<long long>>* profiles =
        opts.keep_profiles ? &result.profiles : nullptr;
    result.set.values = run_indexed(count, threads, [&](int i) {
        std::vector<double> env;
        const std::vector<double>* env_ptr = nullptr;
        if (random_env) {
            if (opts.mode == GrowthMode::quenched) {
                env_ptr = &quenched_env;
            } else {
                RngStream env_rng = stream_for(seed ^ kEnvSalt, static_cast<std::uint64_t>(i));
                env.resize(static_cast<std::size_t>(t) + 1);
                for (auto& p : env)
                    p = opts.p_law.lo + (opts.p_law.hi - opts.p_law.lo) * env_rng.next_double();
                env_ptr = &env;
            }
        }
        const double const_p = opts.p_law.p;
        const auto p_of_x = [&](int x) {
            return env_ptr ? (*env_ptr)[static_cast<std::size_t>(x)] : const_p;
        };
        RngStream rng = stream_for(seed, static_cast<std::uint64_t>(i));
        const auto coin = [&rng](double p) { return rng.next_double() < p; };
        std::vector<long long> h = growth_evolve(t, p_of_x, coin, opts.update);
        const double h0 = static_cast<double>(h[0]);
        if (profiles)
            (*profiles)[static_cast<std::size_t>(i)] = std::move(h);
        return h0;
    });
    return result;
}

} // namespace tw
