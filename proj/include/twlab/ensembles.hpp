#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "twlab/linalg.hpp"
#include "twlab/rng.hpp"

namespace tw {

// Tagged collection of Monte Carlo statistics.  (model, params, seed)
// fully determines `values`; per-sample RNG streams are derived by a
// counter-based split, so results are independent of worker count.
struct SampleSet {
    std::string model;                         // goe|gue|gse|wigner|lis|queue|growth
    std::map<std::string, std::string> params; // canonical (sorted) key order
    std::uint64_t seed = 0;
    std::vector<double> values;                // the statistic of interest
    std::vector<double> raw;                   // unscaled statistics, if distinct
};

// Parameters of the edge scaling s = (lambda - 2 sigma sqrt(N)) N^{1/6} / sigma.
struct ScalingSpec {
    double sigma = 1.0;  // off-diagonal scale
    int N = 1;           // matrix dimension
    int beta = 2;
};

double scale_value(double lambda, const ScalingSpec& spec);
double unscale_value(double s, const ScalingSpec& spec);

// Apply the edge scaling to every value; the input values move to `raw`.
SampleSet center_scale(const SampleSet& raw_set, const ScalingSpec& spec);

// The scaling the samplers pair with each ensemble at sigma = 1.  For
// beta = 4 the matrix is the 2N x 2N self-dual embedding and N here is
// that full matrix dimension; the scaled statistic then follows the
// plain-argument F4 convention (see DistributionEvaluator).
ScalingSpec ensemble_scaling(int beta, int n);

// --- Gaussian ensembles ----------------------------------------------------

// Raw largest-eigenvalue samples.  Entry conventions (sigma = 1):
//   beta=1: A = (G + G^T)/sqrt(2), G iid standard normal
//   beta=2: Hermitian, diagonal N(0,1), off-diagonal complex E|a|^2 = 1
//   beta=4: 2N x 2N self-dual embedding [[X, Y], [-conj(Y), conj(X)]],
//           X Hermitian with the beta=2 convention, Y antisymmetric with
//           E|y|^2 = 1; the doubled spectrum is deduplicated (the top
//           eigenvalue of a Kramers pair is extracted once).
// lambda_max comes from Householder tridiagonalization plus Sturm
// bisection.  threads = 0 means hardware concurrency.
SampleSet sample_gaussian_ensemble(int beta, int n, int count,
                                   std::uint64_t seed, int threads = 0);

// Optional O(N^2)-per-sample fast path: the tridiagonal beta-ensemble
// model whose lambda_max has exactly the law of the dense sampler above
// (diagonal N(0,2) for beta=1 else N(0,1); off-diagonal
// chi_{beta(N-k)}, scaled by 1/sqrt(2) for beta=2,4).  Off by default;
// selected by a CLI flag and validated against the dense route by
// moment comparison.
SampleSet sample_gaussian_tridiag(int beta, int n, int count,
                                  std::uint64_t seed, int threads = 0);

// --- Wigner matrices ---------------------------------------------------------

enum class EntryLaw { rademacher, uniform };

// Symmetric matrix with iid unit-variance entries on and above the
// diagonal; returns scaled statistics (sigma = 1), raw kept.
SampleSet sample_wigner(int n, EntryLaw law, int count, std::uint64_t seed,
                        int threads = 0);

// --- Longest increasing subsequence ------------------------------------------

// Patience-sorting LIS length of a permutation (O(N log N)).
int lis_length(const std::vector<std::uint32_t>& perm);

// Uniform permutations via Fisher-Yates; values are the scaled lengths
// (l_N - 2 sqrt(N)) / N^{1/6}, raw lengths kept.
SampleSet sample_lis(int n, int count, std::uint64_t seed, int threads = 0);

// --- Tandem queues / last-passage percolation ---------------------------------

enum class ServiceLaw { exponential, geometric, deterministic };
enum class QueueScaling { fixed_k, cube_root };

// Departure time D(k, n) of the last-passage recursion
// D(i,j) = max(D(i-1,j), D(i,j-1)) + w_ij over the service times in
// `w` (row-major k x n).
double lpp_departure(const std::vector<double>& w, int k, int n);

struct QueueOptions {
    QueueScaling scaling = QueueScaling::fixed_k;
    // cube_root constants; NaN means "estimate by regression and label"
    double c1 = std::numeric_limits<double>::quiet_NaN();
    double c2 = std::numeric_limits<double>::quiet_NaN();
};

// Scaled departure times.  fixed_k: (D - n) / (sigma sqrt(n)) with sigma
// the service sd (1 for exponential, sqrt(2) for geometric, and 1 for
// the degenerate deterministic law).  cube_root: (D - c1 n)/(c2 n^{1/3}),
// constants user-supplied or regression-estimated (flagged in params).
SampleSet sample_queue(int k, int n, ServiceLaw service, int count,
                       std::uint64_t seed, const QueueOptions& opts = {},
                       int threads = 0);

// --- Growth in a random environment -------------------------------------------

enum class PLawKind { constant, uniform };

struct PLaw {
    PLawKind kind = PLawKind::constant;
    double p = 0.5;        // constant value
    double lo = 0.0;       // uniform bounds
    double hi = 1.0;
};

enum class GrowthMode { quenched, annealed };

// sequential: each step applies the rule to the time-t configuration
// in a left-to-right sweep (the p=1 environment yields the cone
// h(x,t) = t - x).  cascade: in-place sweep reading the just-updated
// left neighbor, exposed for sensitivity checks.
enum class GrowthUpdate { sequential, cascade };

struct GrowthOptions {
    PLaw p_law;
    GrowthMode mode = GrowthMode::annealed;
    GrowthUpdate update = GrowthUpdate::sequential;
    bool keep_profiles = false;
};

struct GrowthResult {
    SampleSet set;                                   // values: h(0, t)
    std::vector<std::vector<long long>> profiles;    // per sample, if kept
};

// One evolution of the height profile to time t.  `p_of_x` supplies the
// environment; `coin` is consumed in sweep order (x ascending per step)
// and exists so tests can enumerate outcomes exactly.  Sites never
// reached are reported as -1.
std::vector<long long> growth_evolve(int t,
                                     const std::function<double(int)>& p_of_x,
                                     const std::function<bool(double)>& coin,
                                     GrowthUpdate update = GrowthUpdate::sequential);

GrowthResult sample_growth_env(const GrowthOptions& opts, int t, int count,
                               std::uint64_t seed, int threads = 0);

// --- parallel driver ----------------------------------------------------------

// Fill result[i] = fn(i) for i in [0, count) on `threads` workers
// (0 = hardware concurrency).  The output is independent of the worker
// count by construction.
std::vector<double> run_indexed(int count, int threads,
                                const std::function<double(int)>& fn);

}  // namespace tw
