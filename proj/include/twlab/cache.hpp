#pragma once

#include <optional>
#include <string>

#include "twlab/painleve.hpp"

namespace tw {

// On-disk Painleve table cache.  Layout (all little-endian):
//   bytes 0-4   magic "TWLAB"
//   uint32      format version (currently 1)
//   float64     s_min, s_max, tol
//   uint64      grid length m
//   float64[m]  s, q, q', E, R, J   (six consecutive columns)
// Serialization is canonical: loading then saving is byte-identical.

inline constexpr std::uint32_t cache_format_version = 1;

// Write the table; throws data_error on I/O failure.
void save_painleve_table(const std::string& path, const PainleveTable& table);

// Read a table back.  Returns nullopt when the file is missing, has the
// wrong magic or version, or fails structural validation -- callers then
// rebuild; a cache is never misread.
std::optional<PainleveTable> load_painleve_table(const std::string& path);

// Load from `path` if valid, otherwise build with default parameters
// and save.  Empty path means "do not touch the disk".
PainleveTable load_or_build_table(const std::string& path);

// Resolution order for the cache location: explicit flag value, the
// TWLAB_CACHE environment variable, then "./tw_cache.bin".
std::string resolve_cache_path(const std::string& flag_value);

}  // namespace tw
