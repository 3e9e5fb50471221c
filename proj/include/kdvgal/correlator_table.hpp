#ifndef KDVGAL_CORRELATOR_TABLE_HPP
#define KDVGAL_CORRELATOR_TABLE_HPP

#include <compare>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdvgal/rational.hpp"

namespace kdvgal {

enum class Provenance { WK, cBGW, NBI };

std::string provenance_name(Provenance p);
Provenance parse_provenance(const std::string& name);

struct CorrelatorKey {
  int genus = 0;
  std::vector<int> ks;  // ascending

  static CorrelatorKey make(int genus, std::vector<int> ks);

  int n() const { return static_cast<int>(ks.size()); }
  int weight() const;  // |k|
  std::string ks_string() const;

  auto operator<=>(const CorrelatorKey&) const = default;
};

// Memo table with a compute-if-absent contract: each key is computed at most
// once, even under concurrent lookups. The lock is never held while computing,
// so recursive lookups of other keys are fine as long as dependencies are
// acyclic.
class CorrelatorTable {
 public:
  explicit CorrelatorTable(Provenance p) : provenance_(p) {}
  CorrelatorTable(const CorrelatorTable&) = delete;
  CorrelatorTable& operator=(const CorrelatorTable&) = delete;

  Provenance provenance() const { return provenance_; }

  Rational get_or_compute(const CorrelatorKey& key, const std::function<Rational()>& compute);
  std::optional<Rational> find(const CorrelatorKey& key) const;

  // Seeds a value (cache load). A conflicting existing value is an error.
  void insert(const CorrelatorKey& key, const Rational& value);

  // Completed entries in key order.
  std::vector<std::pair<CorrelatorKey, Rational>> snapshot() const;
  std::size_t size() const;
  bool dirty() const;
  void mark_clean();

 private:
  Provenance provenance_;
  mutable std::mutex mu_;
  std::map<CorrelatorKey, std::shared_future<Rational>> entries_;
  bool dirty_ = false;
};

}  // namespace kdvgal

#endif
