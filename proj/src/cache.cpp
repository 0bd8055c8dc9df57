#include "twlab/cache.hpp"
#include "twlab/errors.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <vector>

namespace tw {
namespace {

constexpr char kMagic[5] = {'T', 'W', 'L', 'A', 'B'};

// The build targets little-endian platforms; serialization goes through
// memcpy so the only assumption is the in-memory representation.
static_assert(sizeof(double) == 8, "64-bit IEEE doubles required");

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i)
        b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        return false;
    v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return true;
}

bool get_u64(std::istream& in, std::uint64_t& v) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8))
        return false;
    v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return true;
}

bool get_f64(std::istream& in, double& v) {
    std::uint64_t bits;
    if (!get_u64(in, bits))
        return false;
    std::memcpy(&v, &bits, 8);
    return true;
}

bool read_column(std::istream& in, std::vector<double>& col, std::size_t m) {
    col.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        if (!get_f64(in, col[i]))
            return false;
    return true;
}

bool validate(const PainleveTable& t) {
    const std::size_t m = t.grid.size();
    if (m < 8)
        return false;
    if (t.q.size() != m || t.q_prime.size() != m || t.E.size() != m
        || t.R.size() != m || t.J.size() != m)
        return false;
    if (!(t.grid.front() < t.grid.back()))
        return false;
    for (std::size_t i = 1; i < m; ++i)
        if (!(t.grid[i] > t.grid[i - 1]))
            return false;
    for (std::size_t i = 0; i < m; ++i)
        if (!std::isfinite(t.q[i]) || !std::isfinite(t.E[i]))
            return false;
    return true;
}

} // namespace

void save_painleve_table(const std::string& path, const PainleveTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw data_error("cache: cannot open '" + path + "' for writing");
    out.write(kMagic, 5);
    put_u32(out, cache_format_version);
    put_f64(out, table.s_min());
    put_f64(out, table.s_max());
    put_f64(out, table.tol);
    put_u64(out, table.grid.size());
    for (const auto* col : {&table.grid, &table.q, &table.q_prime,
                            &table.E, &table.R, &table.J})
        for (const double v : *col)
            put_f64(out, v);
    out.flush();
    if (!out)
        throw data_error("cache: write to '" + path + "' failed");
}

std::optional<PainleveTable> load_painleve_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    char magic[5];
    if (!in.read(magic, 5) || std::memcmp(magic, kMagic, 5) != 0)
        return std::nullopt;
    std::uint32_t version = 0;
    if (!get_u32(in, version) || version != cache_format_version)
        return std::nullopt;

    double s_min = 0.0, s_max = 0.0, tol = 0.0;
    std::uint64_t m = 0;
    if (!get_f64(in, s_min) || !get_f64(in, s_max) || !get_f64(in, tol) || !get_u64(in, m))
        return std::nullopt;
    if (m < 8 || m > (1ULL << 26))
        return std::nullopt;

    PainleveTable t;
    t.tol = tol;
    const std::size_t count = static_cast<std::size_t>(m);
    if (!read_column(in, t.grid, count) || !read_column(in, t.q, count)
        || !read_column(in, t.q_prime, count) || !read_column(in, t.E, count)
        || !read_column(in, t.R, count) || !read_column(in, t.J, count))
        return std::nullopt;
    in.peek();
    if (!in.eof())
        return std::nullopt;  // trailing bytes: not a canonical file
    if (t.grid.front() != s_min || t.grid.back() != s_max || !validate(t))
        return std::nullopt;
    return t;
}

PainleveTable load_or_build_table(const std::string& path) {
    if (!path.empty()) {
        if (auto cached = load_painleve_table(path))
            return std::move(*cached);
    }
    PainleveTable t = solve_hastings_mcleod();
    if (!path.empty())
        save_painleve_table(path, t);
    return t;
}

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("TWLAB_CACHE"); env && *env)
        return env;
    return "./tw_cache.bin";
}

} // namespace tw
