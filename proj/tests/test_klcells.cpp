#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cellred/error.hpp"
#include "cellred/klcells.hpp"
#include "support.hpp"

using namespace cellred;
using testing_support::context;
using testing_support::group;

namespace {

// KL polynomials through R-polynomials: q^d bar(P_{y,w}) - P_{y,w} =
// sum_{y < z <= w} R_{y,z} P_{z,w}, with P the part of degree <= (d-1)/2.
struct RPolyOracle {
  const WeylGroup& g;
  int n;
  std::vector<LaurentPoly> r;  // r[y * n + w]
  std::vector<LaurentPoly> p;

  explicit RPolyOracle(const WeylGroup& grp) : g(grp), n(grp.size()), r(n * n), p(n * n) {
    const LaurentPoly q = LaurentPoly::monomial(1);
    r[0] = 1;
    for (ElemId w = 1; w < n; ++w) {
      const int s = g.first_generator(w);
      const ElemId sw = g.tail(w);
      for (ElemId y = 0; y < n; ++y) {
        const ElemId sy = g.left_mult(y, s);
        if (g.length(sy) < g.length(y))
          r[y * n + w] = r[sy * n + sw];
        else
          r[y * n + w] = (q - LaurentPoly(1)) * r[y * n + sw] + q * r[sy * n + sw];
      }
    }
    for (ElemId w = 0; w < n; ++w) {
      p[w * n + w] = 1;
      for (ElemId y = w - 1; y >= 0; --y) {
        if (r[y * n + w].is_zero()) continue;
        const int d = g.length(w) - g.length(y);
        LaurentPoly rhs;
        for (ElemId z = y + 1; z <= w; ++z)
          if (!r[y * n + z].is_zero() && !p[z * n + w].is_zero()) rhs += r[y * n + z] * p[z * n + w];
        LaurentPoly low;
        for (const auto& [e, c] : rhs.terms())
          if (2 * e <= d - 1) low -= LaurentPoly::monomial(e, c);
        p[y * n + w] = low;
      }
    }
  }
};

// Robinson-Schensted insertion and recording tableaux of a permutation.
using Tableau = std::vector<std::vector<int>>;
std::pair<Tableau, Tableau> rs(const std::vector<int>& perm) {
  Tableau P, Q;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    int x = perm[k];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(k)});
        break;
      }
      auto it = std::upper_bound(P[row].begin(), P[row].end(), x);
      if (it == P[row].end()) {
        P[row].push_back(x);
        Q[row].push_back(static_cast<int>(k));
        break;
      }
      std::swap(*it, x);
    }
  }
  return {P, Q};
}

std::vector<int> permutation_of(const WeylGroup& g, ElemId w) {
  std::vector<int> perm(g.rank() + 1);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (auto i : g.element(w).word) std::swap(perm[i], perm[i + 1]);
  return perm;
}

std::set<std::set<ElemId>> as_partition(const std::vector<std::vector<ElemId>>& cells) {
  std::set<std::set<ElemId>> out;
  for (const auto& c : cells) out.insert(std::set<ElemId>(c.begin(), c.end()));
  return out;
}

template <class Key>
std::set<std::set<ElemId>> partition_by(int n, Key key) {
  std::map<decltype(key(0)), std::set<ElemId>> groups;
  for (ElemId w = 0; w < n; ++w) groups[key(w)].insert(w);
  std::set<std::set<ElemId>> out;
  for (auto& [k, s] : groups) out.insert(s);
  return out;
}

}  // namespace

TEST_CASE("KL polynomials agree with the R-polynomial oracle") {
  for (const char* name : {"A2", "A3", "B2", "G2", "A4"}) {
    const auto& ctx = context(name);
    const RPolyOracle oracle(ctx.g());
    const int n = ctx.g().size();
    int mismatches = 0;
    for (ElemId y = 0; y < n; ++y)
      for (ElemId w = 0; w < n; ++w) {
        if (ctx.kl.bruhat_le(y, w) != !oracle.r[y * n + w].is_zero()) ++mismatches;
        if (ctx.kl.P(y, w) != oracle.p[y * n + w]) ++mismatches;
      }
    CHECK_MESSAGE(mismatches == 0, name);
  }
}

TEST_CASE("known KL polynomials") {
  const auto& a3 = context("A3");
  const auto& g = a3.g();
  const LaurentPoly one_plus_q = LaurentPoly(1) + LaurentPoly::monomial(1);
  CHECK(a3.kl.P(g.identity(), g.parse("2132")) == one_plus_q);
  CHECK(a3.kl.P(g.parse("2"), g.parse("2132")) == one_plus_q);
  CHECK(a3.kl.P(g.identity(), g.parse("12321")) == one_plus_q);
  CHECK(a3.kl.P(g.identity(), g.parse("123")) == LaurentPoly(1));
  CHECK(a3.kl.mu(g.identity(), g.parse("2132")) == 0);
  CHECK(a3.kl.mu(g.parse("2"), g.parse("12")) == 1);
  CHECK(a3.kl.mu(g.parse("2"), g.parse("212")) == 0);
  // Dihedral groups: every P_{y,w} with y <= w is 1.
  for (const char* name : {"B2", "G2"}) {
    const auto& ctx = context(name);
    for (ElemId y = 0; y < ctx.g().size(); ++y)
      for (ElemId w = 0; w < ctx.g().size(); ++w)
        if (ctx.kl.bruhat_le(y, w)) CHECK(ctx.kl.P(y, w) == LaurentPoly(1));
  }
}

TEST_CASE("C-basis products") {
  const auto& ctx = context("B2");
  const auto& g = ctx.g();
  const ElemId s = g.parse("1");
  // c_s c_s = (v + v^-1) c_s
  const auto& prod = ctx.kl.product(s, s);
  REQUIRE(prod.size() == 1);
  CHECK(prod[0].z == s);
  CHECK(prod[0].coef == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  // c_e is the unit; every coefficient is bar-invariant.
  for (ElemId x = 0; x < g.size(); ++x) {
    CHECK(ctx.kl.h(g.identity(), x, x) == LaurentPoly(1));
    for (ElemId y = 0; y < g.size(); ++y)
      for (const auto& t : ctx.kl.product(x, y)) {
        CHECK(t.coef == t.coef.bar());
        for (const auto& [e, c] : t.coef.terms()) CHECK(c > 0);
      }
  }
  CHECK_THROWS_AS(compute_kl(group("A4"), 100), Error);
}

TEST_CASE("a-function and cells in type A match Robinson-Schensted") {
  for (const char* name : {"A2", "A3", "A4"}) {
    const auto& ctx = context(name);
    const auto& g = ctx.g();
    const int n = g.size();
    auto p_tab = [&](ElemId w) { return rs(permutation_of(g, w)).first; };
    auto q_tab = [&](ElemId w) { return rs(permutation_of(g, w)).second; };
    auto shape = [&](ElemId w) {
      std::vector<std::size_t> sh;
      for (const auto& row : p_tab(w)) sh.push_back(row.size());
      return sh;
    };
    const auto by_p = partition_by(n, p_tab), by_q = partition_by(n, q_tab);
    const auto left = as_partition(ctx.cells.left_cells), right = as_partition(ctx.cells.right_cells);
    CHECK(((left == by_p && right == by_q) || (left == by_q && right == by_p)));
    CHECK(as_partition(ctx.cells.two_sided_cells) == partition_by(n, shape));
    // a(w) = n(lambda) = sum (i-1) lambda_i for the insertion shape lambda
    for (ElemId w = 0; w < n; ++w) {
      const auto sh = shape(w);
      int n_lambda = 0;
      for (std::size_t i = 0; i < sh.size(); ++i) n_lambda += static_cast<int>(i * sh[i]);
      CHECK(ctx.a[w] == n_lambda);
    }
  }
}

TEST_CASE("dihedral cells") {
  for (const char* name : {"B2", "G2"}) {
    const auto& ctx = context(name);
    const auto& g = ctx.g();
    CHECK(ctx.cells.two_sided_cells.size() == 3);
    CHECK(ctx.cells.left_cells.size() == 4);
    for (ElemId w = 0; w < g.size(); ++w) {
      const int expected = w == g.identity() ? 0 : w == g.longest() ? g.nu() : 1;
      CHECK(ctx.a[w] == expected);
      if (w != g.identity() && w != g.longest())
        for (ElemId x = 0; x < g.size(); ++x)
          if (x != g.identity() && x != g.longest())
            CHECK(ctx.cells.same_left(w, x) == (g.right_descent_set(w) == g.right_descent_set(x)));
    }
  }
}

TEST_CASE("near involutions") {
  for (const char* name : {"A1", "A2", "A3", "A4"}) {
    const auto& ctx = context(name);
    std::vector<ElemId> invols;
    for (ElemId w = 0; w < ctx.g().size(); ++w)
      if (ctx.g().is_involution(w)) invols.push_back(w);
    CHECK(ctx.near_inv.members == invols);
  }
  CHECK(context("A4").near_inv.size() == 26);
  const auto& g2 = context("G2");
  std::vector<std::string> words;
  for (ElemId w : g2.near_inv.members) words.push_back(g2.g().str(w));
  CHECK(words == std::vector<std::string>{"e", "1", "2", "121", "212", "12121", "21212", "121212"});
  const auto& b2 = context("B2");
  CHECK(b2.near_inv.size() == 6);
  CHECK_FALSE(b2.near_inv.contains(b2.g().parse("12")));
}

TEST_CASE("J-ring unit is the sum of distinguished involutions") {
  for (const char* name : {"A2", "A3", "A4", "B2", "G2"}) {
    const auto& ctx = context(name);
    const auto& g = ctx.g();
    JElement unit(g.size(), 0);
    for (ElemId w = 0; w < g.size(); ++w) {
      const bool distinguished = g.type().is_type_a()
                                     ? g.is_involution(w)
                                     : (w == g.identity() || w == g.longest() || g.length(w) == 1);
      if (distinguished) unit[w] = 1;
    }
    for (ElemId x = 0; x < g.size(); ++x) {
      CHECK(ctx.jring.multiply(unit, ctx.jring.basis(x)) == ctx.jring.basis(x));
      CHECK(ctx.jring.multiply(ctx.jring.basis(x), unit) == ctx.jring.basis(x));
    }
    CHECK(ctx.jring.is_central(unit));
  }
}

TEST_CASE("J-ring gamma properties") {
  const auto& ctx = context("A3");
  const auto& g = ctx.g();
  for (ElemId x = 0; x < g.size(); ++x)
    for (ElemId y = 0; y < g.size(); ++y)
      for (ElemId z = 0; z < g.size(); z += 1) {
        const auto v = ctx.jring.gamma(x, y, z);
        CHECK(v >= 0);
        // cyclic symmetry gamma_{x,y,z} = gamma_{y,z^{-1},x^{-1}}
        if (v) CHECK(ctx.jring.gamma(y, g.inverse(z), g.inverse(x)) == v);
      }
  CHECK_FALSE(ctx.jring.is_central(ctx.jring.basis(g.parse("1"))));
}

TEST_CASE("serial and parallel KL data agree") {
  const auto g = group("A3");
  const auto serial = compute_kl(g, 120, Exec::Serial);
  const auto& par = context("A3").kl;
  for (ElemId x = 0; x < g->size(); ++x)
    for (ElemId y = 0; y < g->size(); ++y) CHECK(serial.product(x, y) == par.product(x, y));
  const auto a = a_function(serial);
  CHECK(j_ring(serial, a, Exec::Serial).gamma().rows == context("A3").jring.gamma().rows);
}
