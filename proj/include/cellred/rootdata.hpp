#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cellred/integer.hpp"

namespace cellred {

/// One of the six supported Cartan types: A1, A2, A3, A4, B2, G2.
class CartanType {
 public:
  /// Throws Error(UnsupportedType) for anything else.
  CartanType(char family, int rank);

  /// Parses "A3", "b2", ... Throws Error(UnsupportedType).
  static CartanType parse(std::string_view text);
  static const std::vector<CartanType>& all();

  char family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_type_a() const noexcept { return family_ == 'A'; }
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  char family_;
  int rank_;
};

/// Weight in fundamental-weight coordinates: lambda = sum_i coords[i] * varpi_i.
struct Weight {
  std::vector<std::int64_t> coords;

  bool is_dominant() const;
  bool is_restricted(std::int64_t p) const;
  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// lambda_{I'} = sum of the fundamental weights indexed by `subset` (0-based).
Weight subset_weight(int rank, const std::vector<int>& subset);

struct RootSystem {
  CartanType type;
  /// cartan[i][j] = <alpha_i^vee, alpha_j>.
  std::vector<std::vector<int>> cartan;
  /// Positive roots in simple-root coordinates.
  std::vector<std::vector<int>> positive_roots;
  /// Row k holds <varpi_i, alpha_k^vee> for the k-th positive root, i.e. the
  /// coroot in simple-coroot coordinates.
  std::vector<std::vector<int>> coroot_pairings;
  /// <rho_W, alpha_k^vee> per positive root.
  std::vector<int> weyl_vector_pairings;

  int rank() const { return type.rank(); }
  int nu() const { return static_cast<int>(positive_roots.size()); }
};

RootSystem build_root_system(const CartanType& type);

/// dim V(lambda) by the Weyl dimension formula, one exact division at the end.
/// Throws Error(NonDominantWeight).
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

}  // namespace cellred
