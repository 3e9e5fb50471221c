#include "kdvgal/report.hpp"

#include <algorithm>

namespace kdvgal {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.ok; }));
}

std::size_t VerificationReport::failed() const { return records.size() - passed(); }

const CheckRecord* VerificationReport::first_failure() const {
  for (const auto& r : records) {
    if (!r.ok) return &r;
  }
  return nullptr;
}

void VerificationReport::check(const std::string& id, const std::string& location, int g,
                               const std::vector<int>& ks, const Rational& lhs, const Rational& rhs) {
  records.push_back({id, location, g, ks, to_string(lhs), to_string(rhs), lhs == rhs});
}

void VerificationReport::check(const std::string& id, const std::string& location, int g,
                               const std::vector<int>& ks, const YPoly& lhs, const YPoly& rhs) {
  records.push_back({id, location, g, ks, lhs.str(), rhs.str(), lhs == rhs});
}

void VerificationReport::merge(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  seconds += other.seconds;
  if (!other.window.empty()) {
    if (!window.empty()) window += "; ";
    window += other.window;
  }
}

std::string ks_label(const std::vector<int>& ks) {
  std::string s = "[";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ks[i]);
  }
  return s + "]";
}

}  // namespace kdvgal
