#include "cellred/klcells.hpp"

#include <algorithm>
#include <deque>

#include "cellred/error.hpp"

namespace cellred {

LaurentPoly KLData::h(ElemId x, ElemId y, ElemId z) const {
  for (const auto& term : product(x, y))
    if (term.z == z) return term.coef;
  return {};
}

KLData compute_kl(std::shared_ptr<const WeylGroup> group, int max_size, Exec exec) {
  const WeylGroup& g = *group;
  const int n = g.size();
  if (n > max_size)
    throw Error(Errc::GroupTooLarge, std::to_string(n) + " > " + std::to_string(max_size));

  KLData kl;
  kl.group_ = group;
  kl.n_ = n;
  const auto N = static_cast<std::size_t>(n);

  // Bruhat order: [e, w] is the set of products of subwords of any reduced word of w.
  kl.bruhat_.assign(N * N, 0);
  for (ElemId w = 0; w < n; ++w) {
    std::vector<std::uint8_t> in(N, 0);
    std::vector<ElemId> members{0};
    in[0] = 1;
    for (auto i : g.element(w).word) {
      const std::size_t count = members.size();
      for (std::size_t k = 0; k < count; ++k) {
        const ElemId x = g.right_mult(members[k], i);
        if (!in[x]) {
          in[x] = 1;
          members.push_back(x);
        }
      }
    }
    for (ElemId y = 0; y < n; ++y) kl.bruhat_[w * N + y] = in[y];
  }

  // P_{y,w} by the recursion on w = s v, l(v) = l(w) - 1:
  //   P_{y,w} = q^{1-c} P_{sy,v} + q^c P_{y,v}
  //             - sum_{z < v, sz < z} mu(z, v) q^{(l(w)-l(z))/2} P_{y,z},
  // c = 1 if sy < y else 0.
  kl.p_.assign(N * N, LaurentPoly());
  kl.mu_.assign(N * N, 0);
  kl.tables_.mu_down.assign(N, {});
  kl.p_[0] = LaurentPoly(1);
  for (ElemId w = 1; w < n; ++w) {
    const int s = g.first_generator(w);
    const ElemId v = g.tail(w);
    const int lw = g.length(w);
    for (ElemId y = 0; y < n; ++y) {
      if (!kl.bruhat_le(y, w)) continue;
      const int c = g.has_left_descent(y, s) ? 1 : 0;
      const ElemId sy = g.left_mult(y, s);
      LaurentPoly acc = kl.P(sy, v).shift(1 - c);
      acc.add_scaled(kl.P(y, v), 1, c);
      for (const auto& [z, m] : kl.tables_.mu_down[v]) {
        if (!g.has_left_descent(z, s) || !kl.bruhat_le(y, z)) continue;
        acc.add_scaled(kl.P(y, z), -m, (lw - g.length(z)) / 2);
      }
      kl.p_[y * N + w] = std::move(acc);
    }
    for (ElemId y = 0; y < n; ++y) {
      if (y == w || !kl.bruhat_le(y, w)) continue;
      const int d = lw - g.length(y);
      if (d % 2 == 0) continue;
      const Integer m = kl.P(y, w).coeff((d - 1) / 2);
      if (m != 0) {
        kl.mu_[y * N + w] = to_int64(m);
        kl.tables_.mu_down[w].emplace_back(y, to_int64(m));
      }
    }
  }

  MulTables& t = kl.tables_;
  t.n = n;
  t.rank = g.rank();
  t.left_mult.resize(N * t.rank);
  t.left_descent.resize(N);
  t.first_gen.assign(N, -1);
  t.tail.assign(N, -1);
  for (ElemId w = 0; w < n; ++w) {
    for (int i = 0; i < t.rank; ++i) t.left_mult[w * t.rank + i] = g.left_mult(w, i);
    t.left_descent[w] = g.left_descent_set(w);
    if (w != 0) {
      t.first_gen[w] = g.first_generator(w);
      t.tail[w] = g.tail(w);
    }
  }
  kl.h_ = structure_constants(t, exec);
  return kl;
}

std::vector<int> a_function(const KLData& kl) {
  const int n = kl.size();
  std::vector<int> a(n, -1);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      for (const auto& term : kl.product(x, y)) a[term.z] = std::max(a[term.z], term.coef.degree());
  return a;
}

namespace {

// Equivalence classes of the preorder generated by `edges` (u -> v meaning
// v is below u), numbered by smallest member.
std::pair<std::vector<std::vector<ElemId>>, std::vector<int>> classes_of(
    int n, const std::vector<std::vector<ElemId>>& edges) {
  std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    reach[s][s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : edges[u])
        if (!reach[s][v]) {
          reach[s][v] = 1;
          queue.push_back(v);
        }
    }
  }
  std::vector<int> of(n, -1);
  std::vector<std::vector<ElemId>> cells;
  for (int x = 0; x < n; ++x) {
    if (of[x] >= 0) continue;
    const int id = static_cast<int>(cells.size());
    cells.emplace_back();
    for (int y = x; y < n; ++y)
      if (reach[x][y] && reach[y][x]) {
        of[y] = id;
        cells.back().push_back(y);
      }
  }
  return {cells, of};
}

}  // namespace

CellPartition compute_cells(const KLData& kl, const std::vector<int>& a) {
  const WeylGroup& g = kl.group();
  const int n = kl.size();
  std::vector<std::vector<ElemId>> left(n), right(n), both(n);
  for (ElemId y = 0; y < n; ++y) {
    for (int i = 0; i < g.rank(); ++i) {
      for (const auto& term : kl.product(g.generator(i), y)) left[y].push_back(term.z);
      for (const auto& term : kl.product(y, g.generator(i))) right[y].push_back(term.z);
    }
    both[y] = left[y];
    both[y].insert(both[y].end(), right[y].begin(), right[y].end());
  }
  CellPartition cp;
  std::tie(cp.left_cells, cp.left_of) = classes_of(n, left);
  std::tie(cp.right_cells, cp.right_of) = classes_of(n, right);
  std::tie(cp.two_sided_cells, cp.two_sided_of) = classes_of(n, both);
  for (const auto& cell : cp.two_sided_cells) cp.a_value.push_back(a.at(cell.front()));
  return cp;
}

bool NearInvolutionSet::contains(ElemId w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

NearInvolutionSet near_involutions(const WeylGroup& g, const CellPartition& cells) {
  NearInvolutionSet s;
  for (ElemId w = 0; w < g.size(); ++w)
    if (cells.same_left(w, g.inverse(w))) s.members.push_back(w);
  return s;
}

std::int64_t JRing::gamma(ElemId x, ElemId y, ElemId z) const {
  for (const auto& [u, c] : gamma_.rows[static_cast<std::size_t>(x) * gamma_.n + y])
    if (u == z) return c;
  return 0;
}

JElement JRing::basis(ElemId w) const {
  JElement e(gamma_.n, 0);
  e[w] = 1;
  return e;
}

JElement JRing::multiply(const JElement& a, const JElement& b) const {
  const int n = gamma_.n;
  JElement out(n, 0);
  for (int x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (int y = 0; y < n; ++y) {
      if (b[y] == 0) continue;
      for (const auto& [z, c] : gamma_.rows[static_cast<std::size_t>(x) * n + y]) out[z] += a[x] * b[y] * c;
    }
  }
  return out;
}

bool JRing::is_central(const JElement& z) const {
  for (int x = 0; x < gamma_.n; ++x) {
    const JElement tx = basis(x);
    if (multiply(z, tx) != multiply(tx, z)) return false;
  }
  return true;
}

JRing j_ring(const KLData& kl, const std::vector<int>& a, Exec exec) {
  const int n = kl.size();
  JRing j;
  j.gamma_.n = n;
  j.gamma_.rows.resize(static_cast<std::size_t>(n) * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      for (const auto& term : kl.product(x, y)) {
        const Integer c = term.coef.coeff(a[term.z]);
        if (c != 0) j.gamma_.rows[static_cast<std::size_t>(x) * n + y].emplace_back(term.z, to_int64(c));
      }
  if (auto v = find_associativity_violation(j.gamma_, exec)) {
    const WeylGroup& g = kl.group();
    throw Error(Errc::AssociativityFailure, "(t_" + g.str((*v)[0]) + " t_" + g.str((*v)[1]) + ") t_" +
                                                g.str((*v)[2]));
  }
  return j;
}

}  // namespace cellred
