#include "kdvgal/correlator_table.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "kdvgal/errors.hpp"

namespace kdvgal {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::WK:
      return "WK";
    case Provenance::cBGW:
      return "cBGW";
    case Provenance::NBI:
      return "NBI";
  }
  return "?";
}

Provenance parse_provenance(const std::string& name) {
  if (name == "WK") return Provenance::WK;
  if (name == "cBGW") return Provenance::cBGW;
  if (name == "NBI") return Provenance::NBI;
  throw ConfigError("unknown provenance '" + name + "'");
}

CorrelatorKey CorrelatorKey::make(int genus, std::vector<int> ks) {
  if (genus < 0) throw RangeError("negative genus");
  for (int k : ks) {
    if (k < 0) throw RangeError("negative time index");
  }
  std::sort(ks.begin(), ks.end());
  return CorrelatorKey{genus, std::move(ks)};
}

int CorrelatorKey::weight() const { return std::accumulate(ks.begin(), ks.end(), 0); }

std::string CorrelatorKey::ks_string() const {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ks[i]);
  }
  return s;
}

Rational CorrelatorTable::get_or_compute(const CorrelatorKey& key, const std::function<Rational()>& compute) {
  std::promise<Rational> promise;
  std::shared_future<Rational> fut;
  bool owner = false;
  {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      fut = it->second;
    } else {
      fut = promise.get_future().share();
      entries_.emplace(key, fut);
      owner = true;
    }
  }
  if (!owner) return fut.get();
  try {
    promise.set_value(compute());
  } catch (...) {
    // Drop the failed entry so a later call can retry, then wake any waiters.
    {
      std::lock_guard lock(mu_);
      entries_.erase(key);
    }
    promise.set_exception(std::current_exception());
    throw;
  }
  {
    std::lock_guard lock(mu_);
    dirty_ = true;
  }
  return fut.get();
}

std::optional<Rational> CorrelatorTable::find(const CorrelatorKey& key) const {
  std::shared_future<Rational> fut;
  {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    fut = it->second;
  }
  if (fut.wait_for(std::chrono::seconds(0)) != std::future_status::ready) return std::nullopt;
  return fut.get();
}

void CorrelatorTable::insert(const CorrelatorKey& key, const Rational& value) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second.wait_for(std::chrono::seconds(0)) == std::future_status::ready && it->second.get() != value) {
      throw ConsistencyError("conflicting value for " + provenance_name(provenance_) + " key g=" +
                             std::to_string(key.genus) + " ks=" + key.ks_string());
    }
    return;
  }
  std::promise<Rational> p;
  p.set_value(value);
  entries_.emplace(key, p.get_future().share());
}

std::vector<std::pair<CorrelatorKey, Rational>> CorrelatorTable::snapshot() const {
  std::vector<std::pair<CorrelatorKey, std::shared_future<Rational>>> items;
  {
    std::lock_guard lock(mu_);
    items.assign(entries_.begin(), entries_.end());
  }
  std::vector<std::pair<CorrelatorKey, Rational>> out;
  for (auto& [k, f] : items) {
    if (f.wait_for(std::chrono::seconds(0)) != std::future_status::ready) continue;
    try {
      out.emplace_back(k, f.get());
    } catch (...) {
    }
  }
  return out;
}

std::size_t CorrelatorTable::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

bool CorrelatorTable::dirty() const {
  std::lock_guard lock(mu_);
  return dirty_;
}

void CorrelatorTable::mark_clean() {
  std::lock_guard lock(mu_);
  dirty_ = false;
}

}  // namespace kdvgal
