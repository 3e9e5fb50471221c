#ifndef KDVGAL_ENGINES_HPP
#define KDVGAL_ENGINES_HPP

#include "kdvgal/bgw.hpp"
#include "kdvgal/correlator_table.hpp"
#include "kdvgal/kappa.hpp"
#include "kdvgal/wk.hpp"

namespace kdvgal {

// The three correlator tables and the engines reading them.
struct Engines {
  CorrelatorTable wk_table{Provenance::WK};
  CorrelatorTable cbgw_table{Provenance::cBGW};
  CorrelatorTable nbi_table{Provenance::NBI};
  WkEngine wk{wk_table};
  BgwEngine bgw{cbgw_table, nbi_table};
  KappaEngine kappa{wk};

  CorrelatorTable& table(Provenance p) {
    switch (p) {
      case Provenance::WK:
        return wk_table;
      case Provenance::cBGW:
        return cbgw_table;
      case Provenance::NBI:
        break;
    }
    return nbi_table;
  }
  const CorrelatorTable& table(Provenance p) const { return const_cast<Engines*>(this)->table(p); }
};

}  // namespace kdvgal

#endif
