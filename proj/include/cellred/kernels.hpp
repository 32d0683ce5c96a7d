#pragma once

// Data-parallel kernels. Every kernel has a serial reference path selected by
// Exec::Serial; Exec::Parallel distributes the outer loop with OpenMP and must
// produce bit-identical results.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cellred/poly.hpp"

namespace cellred {

enum class Exec { Serial, Parallel };

/// One term h_{x,y,z} c_z of a C-basis product c_x c_y.
struct HTerm {
  int z;
  LaurentPoly coef;

  friend bool operator==(const HTerm&, const HTerm&) = default;
};

/// Everything the structure-constant kernel needs about W and the KL data.
/// Element ids must be ordered by length (the WeylGroup enumeration order).
struct MulTables {
  int n = 0;
  int rank = 0;
  std::vector<int> left_mult;             // n * rank, s_i * w
  std::vector<std::uint32_t> left_descent;  // bitmask per element
  std::vector<int> first_gen;             // w = s_{first_gen[w]} * tail[w]
  std::vector<int> tail;
  /// mu_down[w] = {(z, mu(z, w)) : z < w, mu(z, w) != 0}
  std::vector<std::vector<std::pair<int, std::int64_t>>> mu_down;
};

/// products[x * n + y] = sparse expansion of c_x c_y in the C' basis
/// (c_s c_s = (v + v^{-1}) c_s), terms sorted by z.
std::vector<std::vector<HTerm>> structure_constants(const MulTables& tables, Exec exec);

/// Sparse integer structure constants t_x t_y = sum_z gamma[x*n+y][.] t_z.
struct GammaTable {
  int n = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
};

/// First (x, y, w) with (t_x t_y) t_w != t_x (t_y t_w), scanning x-major.
std::optional<std::array<int, 3>> find_associativity_violation(const GammaTable& gamma,
                                                               Exec exec);

/// Rank of a dense row-major matrix over F_p by fraction-free elimination.
/// Entries must already be reduced into [0, p).
std::size_t rank_mod_p(std::vector<std::uint32_t> matrix, std::size_t rows,
                       std::size_t cols, std::uint32_t p, Exec exec);

}  // namespace cellred
