#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cellred/coxeter.hpp"
#include "cellred/klcells.hpp"
#include "cellred/poly.hpp"

namespace cellred {

/// Rational character table of W. Row 0 is the trivial character; `sign_row`
/// indexes the sign character. Type A rows are labelled by partitions "(3,1)",
/// dihedral rows by triv, sign, eps1 (s1 -> -1), eps2 (s2 -> -1), rho1, rho2, ...
struct WCharTable {
  std::vector<std::string> labels;
  std::vector<ElemId> class_reps;
  std::vector<std::int64_t> class_sizes;
  std::vector<int> class_of;  // element -> class index
  std::vector<std::vector<std::int64_t>> values;  // [row][class]
  int sign_row = 0;

  int num_irreducibles() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
  std::int64_t degree(int row) const { return values[row][0]; }
  std::int64_t value(int row, ElemId w) const { return values[row][class_of[w]]; }
};

/// Murnaghan-Nakayama in type A, closed-form dihedral characters for B2/G2.
WCharTable w_character_table(const WeylGroup& g);

/// Square matrix over Z[v, v^{-1}], row-major.
struct LMatrix {
  int dim = 0;
  std::vector<LaurentPoly> entries;

  static LMatrix identity(int dim);
  LaurentPoly& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
  const LaurentPoly& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
  LaurentPoly trace() const;
  friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
  friend bool operator==(const LMatrix&, const LMatrix&) = default;
};

/// H-module E(u) with (T_s - u)(T_s + 1) = 0, u = v^2.
struct HModule {
  std::string label;
  int dim = 0;
  std::vector<LMatrix> gen_matrices;  // one per generator
};

/// Returns "" when the quadratic and braid relations hold, otherwise a
/// description of the first violation.
std::string verify_relations(const WeylGroup& g, const HModule& m);

/// T_w on the module for every w (indexed by ElemId).
std::vector<LMatrix> element_matrices(const WeylGroup& g, const HModule& m);

/// One module per row of `table`, in row order. Dihedral types use the
/// two-dimensional W-graph formulas, type A uses left-cell modules.
/// Throws Error(ConstructionIncomplete).
std::vector<HModule> build_hecke_modules(const WeylGroup& g, const KLData& kl,
                                         const CellPartition& cells, const WCharTable& table);

struct LeadingData {
  std::vector<int> a_E;  // per row of the character table
  /// c[w][E]
  std::vector<std::vector<std::int64_t>> c;
  /// traces[w][E] = tr(v^{-l(w)} T_w, E(u))
  std::vector<std::vector<LaurentPoly>> traces;

  const std::vector<std::int64_t>& alpha(ElemId w) const { return c[w]; }
  bool alpha_nonzero(ElemId w) const;
};

/// Throws Error(LeadingTermMismatch).
LeadingData leading_data(const WeylGroup& g, const std::vector<HModule>& modules);

}  // namespace cellred
