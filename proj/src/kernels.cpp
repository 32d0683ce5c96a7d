#include "cellred/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cellred {

namespace {

using DenseVec = std::vector<LaurentPoly>;

// c_s * (sum_z vec[z] c_z), with
//   c_s c_z = (v + v^{-1}) c_z                                   if s z < z
//   c_s c_z = c_{sz} + sum_{z' < z, s z' < z'} mu(z', z) c_{z'}  otherwise.
DenseVec left_mult_by_generator(const MulTables& t, int s, const DenseVec& vec) {
  DenseVec out(vec.size());
  const std::uint32_t bit = 1U << s;
  for (int z = 0; z < t.n; ++z) {
    const LaurentPoly& f = vec[z];
    if (f.is_zero()) continue;
    if (t.left_descent[z] & bit) {
      out[z].add_scaled(f, 1, 1);
      out[z].add_scaled(f, 1, -1);
    } else {
      out[t.left_mult[z * t.rank + s]] += f;
      for (const auto& [zp, m] : t.mu_down[z])
        if (t.left_descent[zp] & bit) out[zp].add_scaled(f, m);
    }
  }
  return out;
}

// Column y of the product table: c_x c_y for all x, by induction on l(x)
// using c_x = c_s c_{x'} - sum_{z < x', s z < z} mu(z, x') c_z, x = s x'.
void products_with(const MulTables& t, int y, std::vector<std::vector<HTerm>>& out) {
  const int n = t.n;
  std::vector<DenseVec> prod(n);
  prod[0].assign(n, LaurentPoly());
  prod[0][y] = LaurentPoly(1);
  for (int x = 1; x < n; ++x) {
    const int s = t.first_gen[x];
    const int xp = t.tail[x];
    DenseVec cur = left_mult_by_generator(t, s, prod[xp]);
    for (const auto& [z, m] : t.mu_down[xp]) {
      if (!(t.left_descent[z] & (1U << s))) continue;
      for (int k = 0; k < n; ++k)
        if (!prod[z][k].is_zero()) cur[k].add_scaled(prod[z][k], -m);
    }
    prod[x] = std::move(cur);
  }
  for (int x = 0; x < n; ++x) {
    auto& slot = out[static_cast<std::size_t>(x) * n + y];
    slot.clear();
    for (int z = 0; z < n; ++z)
      if (!prod[x][z].is_zero()) slot.push_back(HTerm{z, std::move(prod[x][z])});
  }
}

std::optional<std::array<int, 3>> violation_for(const GammaTable& g, int x) {
  const int n = g.n;
  std::vector<std::int64_t> lhs(n), rhs(n);
  for (int y = 0; y < n; ++y) {
    const auto& xy = g.rows[static_cast<std::size_t>(x) * n + y];
    for (int w = 0; w < n; ++w) {
      const auto& yw = g.rows[static_cast<std::size_t>(y) * n + w];
      if (xy.empty() && yw.empty()) continue;
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      for (const auto& [z, c1] : xy)
        for (const auto& [u, c2] : g.rows[static_cast<std::size_t>(z) * n + w]) lhs[u] += c1 * c2;
      for (const auto& [z, c1] : yw)
        for (const auto& [u, c2] : g.rows[static_cast<std::size_t>(x) * n + z]) rhs[u] += c1 * c2;
      if (lhs != rhs) return std::array<int, 3>{x, y, w};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<HTerm>> structure_constants(const MulTables& tables, Exec exec) {
  const int n = tables.n;
  std::vector<std::vector<HTerm>> out(static_cast<std::size_t>(n) * n);
  if (exec == Exec::Serial) {
    for (int y = 0; y < n; ++y) products_with(tables, y, out);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (int y = 0; y < n; ++y) products_with(tables, y, out);
  return out;
}

std::optional<std::array<int, 3>> find_associativity_violation(const GammaTable& gamma, Exec exec) {
  const int n = gamma.n;
  if (exec == Exec::Serial) {
    for (int x = 0; x < n; ++x)
      if (auto v = violation_for(gamma, x)) return v;
    return std::nullopt;
  }
  std::vector<std::optional<std::array<int, 3>>> per_x(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int x = 0; x < n; ++x) per_x[x] = violation_for(gamma, x);
  for (const auto& v : per_x)
    if (v) return v;
  return std::nullopt;
}

std::size_t rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols,
                       std::uint32_t p, Exec exec) {
  const std::uint64_t P = p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const std::uint32_t* prow = a.data() + rank * cols;
    const std::uint64_t pv = prow[c];
    // row_i <- pv * row_i - a_ic * row_pivot (mod p), columns >= c
    auto eliminate = [&](std::size_t i) {
      std::uint32_t* row = a.data() + i * cols;
      const std::uint64_t f = row[c];
      if (f == 0) return;
      const std::uint64_t negf = P - f;
      for (std::size_t j = c; j < cols; ++j)
        row[j] = static_cast<std::uint32_t>((pv * row[j] + negf * prow[j]) % P);
    };
    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
    if (exec == Exec::Serial) {
      for (std::ptrdiff_t i = first; i < last; ++i) eliminate(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = first; i < last; ++i) eliminate(static_cast<std::size_t>(i));
    }
    ++rank;
  }
  return rank;
}

}  // namespace cellred
