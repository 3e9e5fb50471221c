#include "kdvgal/cache.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kdvgal/errors.hpp"

namespace kdvgal {

namespace {

constexpr Provenance kAll[] = {Provenance::WK, Provenance::cBGW, Provenance::NBI};

std::vector<int> parse_ks(const std::string& text, int line) {
  std::vector<int> ks;
  if (text.empty()) return ks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
      throw CacheError("malformed ks '" + text + "'", line);
    }
    ks.push_back(std::stoi(part));
  }
  if (text.back() == ',') throw CacheError("malformed ks '" + text + "'", line);
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i] < ks[i - 1]) throw CacheError("ks '" + text + "' is not ascending", line);
  }
  return ks;
}

void validate_key(Provenance p, const CorrelatorKey& key, int line) {
  const int n = key.n();
  const int dim = 3 * key.genus - 3 + n;
  if (n == 0) throw CacheError("record without insertions", line);
  const bool stable = 2 * key.genus - 2 + n > 0;
  if (p == Provenance::WK && (!stable || key.weight() != dim)) {
    throw CacheError("WK record violates the dimension constraint", line);
  }
  if (p == Provenance::NBI && (!stable || key.weight() > dim)) {
    throw CacheError("NBI record outside the stable dimension range", line);
  }
}

}  // namespace

std::size_t load_cache(std::istream& in, Engines& engines) {
  std::string text;
  int line = 0;
  std::size_t count = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw CacheError(std::string("not JSON: ") + e.what(), line);
    }
    if (!j.is_object() || j.size() != 4 || !j.contains("provenance") || !j.contains("g") || !j.contains("ks") ||
        !j.contains("value")) {
      throw CacheError("expected exactly the keys provenance, g, ks, value", line);
    }
    if (!j["provenance"].is_string() || !j["g"].is_number_integer() || !j["ks"].is_string() ||
        !j["value"].is_string()) {
      throw CacheError("field of the wrong type", line);
    }
    Provenance p;
    try {
      p = parse_provenance(j["provenance"].get<std::string>());
    } catch (const ConfigError& e) {
      throw CacheError(e.what(), line);
    }
    const long g = j["g"].get<long>();
    if (g < 0 || g > 1000) throw CacheError("genus out of range", line);
    CorrelatorKey key{static_cast<int>(g), parse_ks(j["ks"].get<std::string>(), line)};
    validate_key(p, key, line);
    Rational value;
    try {
      value = parse_rational(j["value"].get<std::string>(), true);
    } catch (const std::exception& e) {
      throw CacheError(std::string("bad value: ") + e.what(), line);
    }
    try {
      engines.table(p).insert(key, value);
    } catch (const ConsistencyError& e) {
      throw CacheError(e.what(), line);
    }
    ++count;
  }
  return count;
}

std::size_t load_cache_file(const std::string& path, Engines& engines) {
  std::ifstream in(path);
  if (!in) return 0;
  return load_cache(in, engines);
}

void save_cache(std::ostream& out, const Engines& engines) {
  for (Provenance p : kAll) {
    const CorrelatorTable& t = engines.table(p);
    for (const auto& [key, value] : t.snapshot()) {
      nlohmann::ordered_json j;
      j["provenance"] = provenance_name(p);
      j["g"] = key.genus;
      j["ks"] = key.ks_string();
      j["value"] = to_string(value);
      out << j.dump() << '\n';
    }
  }
}

void save_cache_file(const std::string& path, Engines& engines) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ConfigError("cannot write cache file " + tmp);
    save_cache(out, engines);
    if (!out) throw ConfigError("failed writing cache file " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw ConfigError("cannot replace cache file " + path);
  for (Provenance p : kAll) engines.table(p).mark_clean();
}

}  // namespace kdvgal
