#ifndef KDVGAL_WK_HPP
#define KDVGAL_WK_HPP

#include <functional>
#include <map>
#include <vector>

#include "kdvgal/correlator_table.hpp"
#include "kdvgal/free_energy.hpp"
#include "kdvgal/series.hpp"

namespace kdvgal {

bool is_stable(int g, int n);

// Calls f(ks) for every ascending multiset of size n with entries in [0, kmax].
void for_each_multiset(int n, int kmax, const std::function<void(const std::vector<int>&)>& f);

// prod_i e_i! over the multiplicities of a sorted multiset.
Rational automorphisms(const std::vector<int>& ks);

// psi-class intersection numbers <tau_k1 ... tau_kn>_g.
class WkEngine {
 public:
  explicit WkEngine(CorrelatorTable& table);

  Rational correlator(int g, std::vector<int> ks) const;
  GradedSeries free_energy(const TruncationSpec& trunc) const;
  CorrelatorTable& table() const { return table_; }

 private:
  CorrelatorTable& table_;
};

// Fixed point of v = sum_k a_k v^k / k! for a_k = assignment[k].
GradedSeries solve_el(const std::map<int, GradedSeries>& assignment);

// Genus-0 free energy from the Euler-Lagrange solution, stored at grade 0.
GradedSeries genus0_free_energy(const GradedSeries& v, const std::map<int, GradedSeries>& assignment);

// (1/24) log(d0 v), stored at grade 1; the constant part goes to the ledger.
FreeEnergy genus1_free_energy(const GradedSeries& v);

}  // namespace kdvgal

#endif
