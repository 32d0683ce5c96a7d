#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cellred/coxeter.hpp"
#include "cellred/kernels.hpp"
#include "cellred/poly.hpp"

namespace cellred {

/// Kazhdan-Lusztig data of a finite Weyl group: Bruhat order, P_{y,w} (as
/// polynomials in q = u, stored in LaurentPoly with exponent = power of q),
/// mu-values and all C'-basis structure constants h_{x,y,z}.
class KLData {
 public:
  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  int size() const { return n_; }

  bool bruhat_le(ElemId y, ElemId w) const { return bruhat_[static_cast<std::size_t>(w) * n_ + y] != 0; }
  /// Zero unless y <= w.
  const LaurentPoly& P(ElemId y, ElemId w) const { return p_[static_cast<std::size_t>(y) * n_ + w]; }
  /// mu(y, w) for y < w; zero otherwise.
  std::int64_t mu(ElemId y, ElemId w) const { return mu_[static_cast<std::size_t>(y) * n_ + w]; }
  /// Symmetrized mu: mu(x, y) if x < y, mu(y, x) if y < x.
  std::int64_t mu_sym(ElemId x, ElemId y) const { return mu(x, y) + mu(y, x); }

  /// Sparse expansion of c_x c_y.
  const std::vector<HTerm>& product(ElemId x, ElemId y) const {
    return h_[static_cast<std::size_t>(x) * n_ + y];
  }
  LaurentPoly h(ElemId x, ElemId y, ElemId z) const;

  const MulTables& mul_tables() const { return tables_; }

  friend KLData compute_kl(std::shared_ptr<const WeylGroup> group, int max_size, Exec exec);

 private:
  std::shared_ptr<const WeylGroup> group_;
  int n_ = 0;
  std::vector<std::uint8_t> bruhat_;
  std::vector<LaurentPoly> p_;
  std::vector<std::int64_t> mu_;
  MulTables tables_;
  std::vector<std::vector<HTerm>> h_;
};

/// Throws Error(GroupTooLarge) when |W| > max_size.
KLData compute_kl(std::shared_ptr<const WeylGroup> group, int max_size = 120,
                  Exec exec = Exec::Parallel);

/// a(z) = max over x, y of deg_v h_{x,y,z}.
std::vector<int> a_function(const KLData& kl);

struct CellPartition {
  std::vector<std::vector<ElemId>> left_cells;
  std::vector<std::vector<ElemId>> right_cells;
  std::vector<std::vector<ElemId>> two_sided_cells;
  std::vector<int> left_of;       // element -> index into left_cells
  std::vector<int> right_of;
  std::vector<int> two_sided_of;
  std::vector<int> a_value;       // per two-sided cell

  bool same_left(ElemId x, ElemId y) const { return left_of[x] == left_of[y]; }
};

/// Cells from the transitive closure of the preorders generated by the
/// appearance of c_x in c_s c_y (left) and c_y c_s (right).
CellPartition compute_cells(const KLData& kl, const std::vector<int>& a);

struct NearInvolutionSet {
  std::vector<ElemId> members;  // ascending

  bool contains(ElemId w) const;
  std::size_t size() const { return members.size(); }
};

/// {w : w and w^{-1} lie in the same left cell}.
NearInvolutionSet near_involutions(const WeylGroup& g, const CellPartition& cells);

/// Element of the J-ring: coefficient of t_w at index w.
using JElement = std::vector<std::int64_t>;

class JRing {
 public:
  int size() const { return gamma_.n; }
  const GammaTable& gamma() const { return gamma_; }
  std::int64_t gamma(ElemId x, ElemId y, ElemId z) const;

  JElement basis(ElemId w) const;
  JElement multiply(const JElement& a, const JElement& b) const;
  /// z * t_x == t_x * z for every basis element t_x.
  bool is_central(const JElement& z) const;

  friend JRing j_ring(const KLData& kl, const std::vector<int>& a, Exec exec);

 private:
  GammaTable gamma_;
};

/// gamma_{x,y,z} = coefficient of v^{a(z)} in h_{x,y,z}, t_x t_y = sum_z gamma_{x,y,z} t_z.
/// Verifies associativity on all basis triples; throws Error(AssociativityFailure).
JRing j_ring(const KLData& kl, const std::vector<int>& a, Exec exec = Exec::Parallel);

}  // namespace cellred
