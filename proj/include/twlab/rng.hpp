#pragma once

#include <cstdint>
#include <vector>

namespace tw {

// xoshiro256++ stream with splitmix64 seeding.  Sample i of a Monte
// Carlo run draws from stream_for(seed, i), so results are a pure
// function of (seed, i) and independent of how samples are scheduled
// across workers.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64();

    // uniform double in [0, 1) with 53 random bits
    double next_double();

    // uniform integer in [0, bound), bound >= 1 (Lemire with rejection)
    std::uint64_t next_below(std::uint64_t bound);

    // standard normal via the Marsaglia polar method (caches the spare)
    double next_normal();

    // exponential with mean 1
    double next_exponential();

    // geometric on {0, 1, 2, ...} with P(j) = p (1-p)^j
    std::uint64_t next_geometric(double p);

    // Rademacher +-1
    double next_rademacher();

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

// Derive the per-sample stream from a run seed and the sample index.
RngStream stream_for(std::uint64_t seed, std::uint64_t index);

// In-place Fisher-Yates shuffle of 0..n-1 initialized ascending.
void random_permutation(std::vector<std::uint32_t>& perm, RngStream& rng);

}  // namespace tw
