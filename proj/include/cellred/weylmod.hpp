#pragma once

#include <map>
#include <string>
#include <vector>

#include "cellred/coxeter.hpp"
#include "cellred/poly.hpp"
#include "cellred/uniptables.hpp"

namespace cellred {

/// dim V(lambda(p)) as a polynomial in t, by symbolic expansion of the Weyl
/// dimension formula. Throws Error(NonDominantTemplate).
IntPoly dim_template(const RootSystem& rs, const WeightTemplate& tmpl, std::int64_t min_prime);

struct DeltaPoly {
  ElemId w = 0;
  IntPoly pi;  // pi_w(p) = dim M_w
  int c = 0;   // lowest degree of pi
};

/// Signed sums of dim_template over each M_w. Throws Error(MissingMwData).
std::map<ElemId, DeltaPoly> delta_table(const WeylGroup& g, const TypeTables& t);

struct DualityMatch {
  ElemId w = 0;
  std::vector<ElemId> candidates;  // all w~ passing both conditions
  int sign = 0;                    // +1 / -1 for the unique candidate, 0 otherwise
};

struct DualityResult {
  std::vector<DualityMatch> matches;  // one per element of the delta table
  /// Unique match for every w and the map is an involution.
  bool is_involution = false;
  std::vector<std::string> findings;  // NoMatch / AmbiguousMatch / not involutive

  /// w~ for a uniquely matched w; -1 otherwise.
  ElemId partner(ElemId w) const;
};

/// w~ with t^nu pi_w(1/t) = +-pi_{w~}(t) and cl(w~) = I - cl(w).
DualityResult find_duality(const WeylGroup& g, const std::map<ElemId, DeltaPoly>& deltas);

}  // namespace cellred
