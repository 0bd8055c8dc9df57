#include "twlab/rng.hpp"
#include "twlab/errors.hpp"

#include <cmath>
#include <numeric>

namespace tw {
namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_)
        word = splitmix64(sm);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    if (bound == 0)
        throw invalid_argument_error("next_below: bound must be positive");
    // Lemire's multiply-shift with rejection of the biased low range.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        while (lo < threshold) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, r2;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        r2 = u * u + v * v;
    } while (r2 >= 1.0 || r2 == 0.0);
    const double f = std::sqrt(-2.0 * std::log(r2) / r2);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

double RngStream::next_exponential() {
    return -std::log1p(-next_double());
}

std::uint64_t RngStream::next_geometric(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw invalid_argument_error("next_geometric: p outside (0, 1]");
    if (p == 1.0)
        return 0;
    // Inversion: j = floor(log(1-u) / log(1-p)) has P(j) = p (1-p)^j.
    const double u = next_double();
    const double j = std::floor(std::log1p(-u) / std::log1p(-p));
    return static_cast<std::uint64_t>(j);
}

double RngStream::next_rademacher() {
    return (next_u64() & 1ULL) ? 1.0 : -1.0;
}

RngStream stream_for(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t sm = seed;
    const std::uint64_t base = splitmix64(sm);
    std::uint64_t mixed = base ^ (index + 0x9E3779B97F4A7C15ULL);
    std::uint64_t sm2 = mixed;
    return RngStream(splitmix64(sm2));
}

void random_permutation(std::vector<std::uint32_t>& perm, RngStream& rng) {
    std::iota(perm.begin(), perm.end(), 0U);
    for (std::size_t i = perm.size(); i > 1; --i) {
        const std::uint64_t j = rng.next_below(i);
        std::swap(perm[i - 1], perm[j]);
    }
}

} // namespace tw
