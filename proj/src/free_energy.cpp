#include "kdvgal/free_energy.hpp"

#include <sstream>

namespace kdvgal {

void ConstantLedger::add(int genus, const Rational& coeff, const std::string& symbol) {
  if (coeff == 0) return;
  auto& slot = entries_[genus];
  auto [it, inserted] = slot.try_emplace(symbol, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) slot.erase(it);
  }
  if (slot.empty()) entries_.erase(genus);
}

Rational ConstantLedger::coeff(int genus, const std::string& symbol) const {
  auto g = entries_.find(genus);
  if (g == entries_.end()) return 0;
  auto s = g->second.find(symbol);
  return s == g->second.end() ? Rational(0) : s->second;
}

std::string ConstantLedger::str() const {
  if (entries_.empty()) return "{}";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [g, syms] : entries_) {
    for (const auto& [sym, c] : syms) {
      if (!first) os << ", ";
      first = false;
      os << "g" << g << ": " << to_string(c) << "*" << sym;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace kdvgal
