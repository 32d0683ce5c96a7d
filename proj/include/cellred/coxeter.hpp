#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cellred/rootdata.hpp"

namespace cellred {

/// Dense element index into WeylGroup::elements(); 0 is the identity and
/// indices increase with (length, shortlex word).
using ElemId = int;

/// A Weyl group element as its shortlex-minimal reduced word (0-based
/// generator indices). Rendered as digit strings "121" (1-based), identity "e".
struct WeylElt {
  std::vector<std::uint8_t> word;

  int length() const { return static_cast<int>(word.size()); }
  std::string str() const;

  friend bool operator==(const WeylElt&, const WeylElt&) = default;
  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
};

/// A subset of the generator set I, bit i set for generator i (0-based).
using GenSet = std::uint32_t;

std::string genset_str(GenSet set);

class WeylGroup {
 public:
  static WeylGroup generate(const CartanType& type);

  const CartanType& type() const { return rs_.type; }
  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int size() const { return static_cast<int>(words_.size()); }
  int nu() const { return nu_; }
  ElemId identity() const { return 0; }
  ElemId longest() const { return w0_; }
  ElemId generator(int i) const { return gen_[i]; }

  const WeylElt& element(ElemId w) const { return words_[w]; }
  int length(ElemId w) const { return words_[w].length(); }
  std::string str(ElemId w) const { return words_[w].str(); }
  ElemId index_of(const WeylElt& w) const;

  ElemId right_mult(ElemId w, int i) const { return right_[w * rank() + i]; }
  ElemId left_mult(ElemId w, int i) const { return left_[w * rank() + i]; }
  ElemId inverse(ElemId w) const { return inverse_[w]; }
  ElemId multiply(ElemId x, ElemId y) const;
  /// For w != e: w = s_{first(w)} * tail(w) with tail shorter.
  int first_generator(ElemId w) const { return words_[w].word.front(); }
  ElemId tail(ElemId w) const { return left_mult(w, first_generator(w)); }

  /// Parses "121", "e" or "". Input need not be reduced.
  /// Throws Error(BadGeneratorIndex).
  ElemId parse(std::string_view text) const;
  WeylElt parse_word(std::string_view text) const { return element(parse(text)); }

  /// cl(w) = {i : l(s_i w) < l(w)}.
  GenSet left_descent_set(ElemId w) const { return ldesc_[w]; }
  GenSet right_descent_set(ElemId w) const { return ldesc_[inverse_[w]]; }
  bool has_left_descent(ElemId w, int i) const { return (ldesc_[w] >> i) & 1U; }

  Weight act_on_weight(ElemId w, const Weight& lambda) const;
  /// Order of s_i s_j.
  int coxeter_order(int i, int j) const;
  bool is_involution(ElemId w) const { return inverse_[w] == w; }

 private:
  explicit WeylGroup(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  std::vector<WeylElt> words_;
  std::vector<std::vector<std::int64_t>> matrices_;  // row-major rank x rank
  std::vector<ElemId> right_;
  std::vector<ElemId> left_;
  std::vector<ElemId> inverse_;
  std::vector<GenSet> ldesc_;
  std::vector<ElemId> gen_;
  ElemId w0_ = 0;
  int nu_ = 0;
};

}  // namespace cellred
