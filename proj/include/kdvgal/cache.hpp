#ifndef KDVGAL_CACHE_HPP
#define KDVGAL_CACHE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "kdvgal/engines.hpp"

namespace kdvgal {

// Line-delimited JSON records {"provenance","g","ks","value"}, one per
// memoized correlator. Every line is validated; the first bad line raises a
// CacheError carrying its line number.
std::size_t load_cache(std::istream& in, Engines& engines);

// A missing file loads nothing.
std::size_t load_cache_file(const std::string& path, Engines& engines);

// Writes all completed entries in provenance and key order.
void save_cache(std::ostream& out, const Engines& engines);

// Writes through a temporary file and a rename, then marks the tables clean.
void save_cache_file(const std::string& path, Engines& engines);

// Environment variable naming the cache file when --cache is absent.
inline constexpr const char* kCacheEnv = "KDVGAL_CACHE";

}  // namespace kdvgal

#endif
