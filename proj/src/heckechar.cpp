#include "cellred/heckechar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "cellred/error.hpp"

namespace cellred {

namespace {

// ------------------------------------------------------------- type A data

std::vector<std::vector<int>> partitions_of(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions_of(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::string partition_label(const std::vector<int>& lambda) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
  os << ')';
  return os.str();
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from b to b - r, with sign (-1)^{beads strictly between}.
std::int64_t mn_character(const std::set<int>& beta, std::vector<int> mu) {
  if (mu.empty()) return 1;
  const int r = mu.back();
  mu.pop_back();
  std::int64_t total = 0;
  for (int b : beta) {
    if (b - r < 0 || beta.count(b - r)) continue;
    int between = 0;
    for (int c : beta)
      if (c > b - r && c < b) ++between;
    std::set<int> next = beta;
    next.erase(b);
    next.insert(b - r);
    const std::int64_t sub = mn_character(next, mu);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

std::int64_t mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::set<int> beta;
  const int k = static_cast<int>(lambda.size());
  for (int i = 0; i < k; ++i) beta.insert(lambda[i] + (k - 1 - i));
  return mn_character(beta, mu);
}

std::vector<int> cycle_type(const WeylGroup& g, ElemId w) {
  const int n = g.rank() + 1;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (auto s : g.element(w).word) std::swap(perm[s], perm[s + 1]);
  std::vector<int> seen(n, 0), type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// ---------------------------------------------------------- dihedral data

// 2 cos(2 pi k / m), exact for m in {2, 3, 4, 6}.
std::int64_t two_cos(std::int64_t k, int m) {
  const double x = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / m);
  const auto r = std::llround(x);
  if (std::abs(x - static_cast<double>(r)) > 1e-9)
    throw std::logic_error("non-integral dihedral character value");
  return r;
}

// Rotation index k with w = (s1 s2)^k, for even-length w.
std::int64_t rotation_index(const WeylGroup& g, ElemId w, int m) {
  const auto& word = g.element(w).word;
  if (word.empty()) return 0;
  const std::int64_t half = static_cast<std::int64_t>(word.size()) / 2;
  return word.front() == 0 ? half : (m - half) % m;
}

}  // namespace

int WCharTable::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(Errc::UnknownLabel, "W-character " + label);
  return static_cast<int>(it - labels.begin());
}

WCharTable w_character_table(const WeylGroup& g) {
  WCharTable t;
  const int n = g.size();
  t.class_of.assign(n, -1);
  for (ElemId w = 0; w < n; ++w) {
    if (t.class_of[w] >= 0) continue;
    const int id = static_cast<int>(t.class_reps.size());
    t.class_reps.push_back(w);
    std::int64_t size = 0;
    for (ElemId x = 0; x < n; ++x) {
      const ElemId c = g.multiply(g.multiply(x, w), g.inverse(x));
      if (t.class_of[c] < 0) {
        t.class_of[c] = id;
        ++size;
      }
    }
    t.class_sizes.push_back(size);
  }

  if (g.type().is_type_a()) {
    const int m = g.rank() + 1;
    for (const auto& lambda : partitions_of(m, m)) {
      t.labels.push_back(partition_label(lambda));
      std::vector<std::int64_t> row;
      for (ElemId rep : t.class_reps) row.push_back(mn_character(lambda, cycle_type(g, rep)));
      t.values.push_back(std::move(row));
    }
    t.sign_row = static_cast<int>(t.labels.size()) - 1;
    return t;
  }

  const int m = g.coxeter_order(0, 1);
  auto letter_parity = [&](ElemId w, int gen) {
    const auto& word = g.element(w).word;
    return std::count(word.begin(), word.end(), gen) % 2 == 0 ? 1 : -1;
  };
  auto add_row = [&](const std::string& label, auto&& value) {
    t.labels.push_back(label);
    std::vector<std::int64_t> row;
    for (ElemId rep : t.class_reps) row.push_back(value(rep));
    t.values.push_back(std::move(row));
  };
  add_row("triv", [](ElemId) { return std::int64_t{1}; });
  add_row("eps1", [&](ElemId w) { return std::int64_t{letter_parity(w, 0)}; });
  add_row("eps2", [&](ElemId w) { return std::int64_t{letter_parity(w, 1)}; });
  for (int j = 1; 2 * j < m; ++j)
    add_row("rho" + std::to_string(j), [&, j](ElemId w) -> std::int64_t {
      if (g.length(w) % 2 == 1) return 0;
      return two_cos(static_cast<std::int64_t>(j) * rotation_index(g, w, m), m);
    });
  add_row("sign", [&](ElemId w) { return std::int64_t{g.length(w) % 2 == 0 ? 1 : -1}; });
  t.sign_row = static_cast<int>(t.labels.size()) - 1;
  return t;
}

// ---------------------------------------------------------------- matrices

LMatrix LMatrix::identity(int dim) {
  LMatrix m{dim, std::vector<LaurentPoly>(static_cast<std::size_t>(dim) * dim)};
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

LaurentPoly LMatrix::trace() const {
  LaurentPoly t;
  for (int i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  LMatrix c{a.dim, std::vector<LaurentPoly>(a.entries.size())};
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

std::string verify_relations(const WeylGroup& g, const HModule& m) {
  const LaurentPoly u = LaurentPoly::monomial(2);
  const LMatrix id = LMatrix::identity(m.dim);
  for (int i = 0; i < g.rank(); ++i) {
    LMatrix minus_u = m.gen_matrices[i], plus_one = m.gen_matrices[i];
    for (int k = 0; k < m.dim; ++k) {
      minus_u.at(k, k) -= u;
      plus_one.at(k, k) += LaurentPoly(1);
    }
    const LMatrix q = minus_u * plus_one;
    for (const auto& e : q.entries)
      if (!e.is_zero()) return "quadratic relation fails for T_" + std::to_string(i + 1);
  }
  for (int i = 0; i < g.rank(); ++i)
    for (int j = i + 1; j < g.rank(); ++j) {
      const int order = g.coxeter_order(i, j);
      LMatrix lhs = id, rhs = id;
      for (int k = 0; k < order; ++k) {
        lhs = lhs * m.gen_matrices[k % 2 == 0 ? i : j];
        rhs = rhs * m.gen_matrices[k % 2 == 0 ? j : i];
      }
      if (!(lhs == rhs))
        return "braid relation fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  return {};
}

std::vector<LMatrix> element_matrices(const WeylGroup& g, const HModule& m) {
  std::vector<LMatrix> out;
  out.reserve(g.size());
  out.push_back(LMatrix::identity(m.dim));
  for (ElemId w = 1; w < g.size(); ++w) {
    const int last = g.element(w).word.back();
    out.push_back(out[g.right_mult(w, last)] * m.gen_matrices[last]);
  }
  return out;
}

namespace {

std::vector<std::int64_t> character_at_one(const WeylGroup& g, const HModule& m, const WCharTable& t) {
  const auto mats = element_matrices(g, m);
  std::vector<std::int64_t> chi;
  for (ElemId rep : t.class_reps) chi.push_back(to_int64(mats[rep].trace().at_one()));
  return chi;
}

// Left-cell module from the W-graph of W: basis e_x (x in the cell),
//   T_s e_x = -e_x                                             if s in L(x)
//   T_s e_x = u e_x + v sum_{y in cell, s in L(y)} mu(x,y) e_y  otherwise.
HModule cell_module(const WeylGroup& g, const KLData& kl, const std::vector<ElemId>& cell) {
  HModule m;
  m.dim = static_cast<int>(cell.size());
  for (int s = 0; s < g.rank(); ++s) {
    LMatrix t{m.dim, std::vector<LaurentPoly>(static_cast<std::size_t>(m.dim) * m.dim)};
    for (int col = 0; col < m.dim; ++col) {
      const ElemId x = cell[col];
      if (g.has_left_descent(x, s)) {
        t.at(col, col) = LaurentPoly(-1);
        continue;
      }
      t.at(col, col) = LaurentPoly::monomial(2);
      for (int row = 0; row < m.dim; ++row) {
        const ElemId y = cell[row];
        if (!g.has_left_descent(y, s)) continue;
        const std::int64_t mu = kl.mu_sym(x, y);
        if (mu != 0) t.at(row, col) = LaurentPoly::monomial(1, mu);
      }
    }
    m.gen_matrices.push_back(std::move(t));
  }
  return m;
}

// Two-dimensional dihedral W-graph module with edge weights (1, mu21);
// braid relation of order m holds iff mu21 = 2 + 2 cos(2 pi j / m).
HModule dihedral_module(std::int64_t mu21) {
  HModule m;
  m.dim = 2;
  LMatrix t1{2, std::vector<LaurentPoly>(4)}, t2{2, std::vector<LaurentPoly>(4)};
  t1.at(0, 0) = LaurentPoly(-1);
  t1.at(1, 1) = LaurentPoly::monomial(2);
  t1.at(0, 1) = LaurentPoly::monomial(1, mu21);
  t2.at(1, 1) = LaurentPoly(-1);
  t2.at(0, 0) = LaurentPoly::monomial(2);
  t2.at(1, 0) = LaurentPoly::monomial(1, 1);
  m.gen_matrices = {t1, t2};
  return m;
}

HModule linear_module(int rank, const std::vector<int>& signs) {
  HModule m;
  m.dim = 1;
  for (int i = 0; i < rank; ++i)
    m.gen_matrices.push_back(
        LMatrix{1, {signs[i] > 0 ? LaurentPoly::monomial(2) : LaurentPoly(-1)}});
  return m;
}

}  // namespace

std::vector<HModule> build_hecke_modules(const WeylGroup& g, const KLData& kl, const CellPartition& cells,
                                         const WCharTable& table) {
  std::vector<HModule> candidates;
  if (g.type().is_type_a()) {
    for (const auto& cell : cells.left_cells) candidates.push_back(cell_module(g, kl, cell));
  } else {
    candidates.push_back(linear_module(g.rank(), {1, 1}));
    candidates.push_back(linear_module(g.rank(), {-1, 1}));
    candidates.push_back(linear_module(g.rank(), {1, -1}));
    candidates.push_back(linear_module(g.rank(), {-1, -1}));
    const int m = g.coxeter_order(0, 1);
    for (int j = 1; 2 * j < m; ++j) candidates.push_back(dihedral_module(2 + two_cos(j, m)));
  }

  std::vector<HModule> out(table.num_irreducibles());
  std::vector<bool> filled(out.size(), false);
  for (auto& cand : candidates) {
    if (const auto why = verify_relations(g, cand); !why.empty())
      throw Error(Errc::ConstructionIncomplete, g.type().name() + ": " + why);
    const auto chi = character_at_one(g, cand, table);
    int row = -1;
    for (int r = 0; r < table.num_irreducibles(); ++r)
      if (table.values[r] == chi) row = r;
    if (row < 0)
      throw Error(Errc::ConstructionIncomplete,
                  g.type().name() + ": module of dimension " + std::to_string(cand.dim) +
                      " has a character matching no irreducible (reducible?)");
    if (filled[row]) continue;
    cand.label = table.labels[row];
    out[row] = std::move(cand);
    filled[row] = true;
  }
  for (std::size_t r = 0; r < out.size(); ++r)
    if (!filled[r])
      throw Error(Errc::ConstructionIncomplete, g.type().name() + ": no module for " + table.labels[r]);
  return out;
}

bool LeadingData::alpha_nonzero(ElemId w) const {
  return std::any_of(c[w].begin(), c[w].end(), [](std::int64_t x) { return x != 0; });
}

LeadingData leading_data(const WeylGroup& g, const std::vector<HModule>& modules) {
  const int n = g.size();
  const int k = static_cast<int>(modules.size());
  LeadingData d;
  d.a_E.assign(k, 0);
  d.c.assign(n, std::vector<std::int64_t>(k, 0));
  d.traces.assign(n, std::vector<LaurentPoly>(k));
  for (int e = 0; e < k; ++e) {
    const auto mats = element_matrices(g, modules[e]);
    int lowest = 0;
    bool any = false;
    for (ElemId w = 0; w < n; ++w) {
      d.traces[w][e] = mats[w].trace().shift(-g.length(w));
      if (d.traces[w][e].is_zero()) continue;
      lowest = any ? std::min(lowest, d.traces[w][e].valuation()) : d.traces[w][e].valuation();
      any = true;
    }
    if (!any || lowest > 0)
      throw Error(Errc::LeadingTermMismatch,
                  modules[e].label + ": traces have no term at a nonpositive power of v");
    d.a_E[e] = -lowest;
    for (ElemId w = 0; w < n; ++w) {
      const Integer lead = d.traces[w][e].coeff(lowest);
      d.c[w][e] = to_int64(g.length(w) % 2 == 0 ? lead : Integer(-lead));
    }
  }
  return d;
}

}  // namespace cellred
