#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "cellred/coxeter.hpp"
#include "cellred/error.hpp"
#include "support.hpp"

using namespace cellred;
using testing_support::group;

namespace {

// s_i as the transposition (i, i+1) acting on positions.
std::vector<int> permutation_of(const WeylElt& w, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto i : w.word) std::swap(perm[i], perm[i + 1]);
  return perm;
}

int inversions(const std::vector<int>& perm) {
  int k = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++k;
  return k;
}

}  // namespace

TEST_CASE("group orders and longest element") {
  const std::map<std::string, std::pair<int, int>> expect = {
      {"A1", {2, 1}}, {"A2", {6, 3}}, {"A3", {24, 6}}, {"A4", {120, 10}}, {"B2", {8, 4}}, {"G2", {12, 6}}};
  for (const auto& [name, sz] : expect) {
    const auto g = group(name);
    CHECK(g->size() == sz.first);
    CHECK(g->nu() == sz.second);
    CHECK(g->length(g->longest()) == sz.second);
    CHECK(g->length(g->identity()) == 0);
    CHECK(g->str(g->identity()) == "e");
  }
}

TEST_CASE("type A elements are distinct permutations with matching length") {
  for (const char* name : {"A2", "A3", "A4"}) {
    const auto g = group(name);
    const int n = g->rank() + 1;
    std::set<std::vector<int>> seen;
    for (ElemId w = 0; w < g->size(); ++w) {
      const auto perm = permutation_of(g->element(w), n);
      CHECK(inversions(perm) == g->length(w));
      seen.insert(perm);
    }
    CHECK(static_cast<int>(seen.size()) == g->size());
  }
}

TEST_CASE("coxeter matrix") {
  CHECK(group("A3")->coxeter_order(0, 1) == 3);
  CHECK(group("A3")->coxeter_order(0, 2) == 2);
  CHECK(group("B2")->coxeter_order(0, 1) == 4);
  CHECK(group("G2")->coxeter_order(0, 1) == 6);
  CHECK(group("G2")->coxeter_order(1, 1) == 1);
}

TEST_CASE("words parse to canonical elements") {
  const auto g = group("A3");
  CHECK(g->str(g->parse("13231")) == "12321");
  CHECK(g->parse("31") == g->parse("13"));
  CHECK(g->parse("11") == g->identity());
  CHECK(g->parse("e") == g->identity());
  CHECK(g->parse("") == g->identity());
  CHECK_THROWS_AS(g->parse("4"), Error);
  CHECK_THROWS_AS(g->parse("1x"), Error);
  CHECK(group("B2")->str(group("B2")->longest()) == "1212");
}

TEST_CASE("multiplication, inverse and descents") {
  for (const char* name : {"A3", "B2", "G2"}) {
    const auto g = group(name);
    for (ElemId x = 0; x < g->size(); ++x) {
      CHECK(g->multiply(x, g->inverse(x)) == g->identity());
      CHECK(g->length(g->inverse(x)) == g->length(x));
      for (int i = 0; i < g->rank(); ++i) {
        const ElemId sx = g->left_mult(x, i);
        CHECK(g->has_left_descent(x, i) == (g->length(sx) < g->length(x)));
        CHECK(g->multiply(g->generator(i), x) == sx);
        CHECK(g->right_mult(x, i) == g->multiply(x, g->generator(i)));
      }
      if (x != g->identity()) CHECK(g->left_mult(g->tail(x), g->first_generator(x)) == x);
    }
    // Associativity on a sample of triples.
    for (ElemId x = 0; x < g->size(); x += 3)
      for (ElemId y = 0; y < g->size(); y += 2)
        for (ElemId z = 0; z < g->size(); z += 5)
          CHECK(g->multiply(g->multiply(x, y), z) == g->multiply(x, g->multiply(y, z)));
  }
  const auto a2 = group("A2");
  CHECK(a2->left_descent_set(a2->parse("12")) == 1u);
  CHECK(a2->right_descent_set(a2->parse("12")) == 2u);
  CHECK(genset_str(0b101) == "{1,3}");
}

TEST_CASE("weyl group acts on weights") {
  const auto g = group("A2");
  CHECK(g->act_on_weight(g->parse("1"), Weight{{1, 2}}) == Weight{{-1, 3}});
  CHECK(g->act_on_weight(g->parse("2"), Weight{{1, 2}}) == Weight{{3, -2}});
  // w0 sends lambda to -lambda* (the diagram swap in type A2).
  CHECK(g->act_on_weight(g->longest(), Weight{{1, 2}}) == Weight{{-2, -1}});
  for (const char* name : {"B2", "G2", "A3"}) {
    const auto h = group(name);
    Weight rho;
    rho.coords.assign(h->rank(), 1);
    std::set<Weight> orbit;
    for (ElemId w = 0; w < h->size(); ++w) orbit.insert(h->act_on_weight(w, rho));
    CHECK(static_cast<int>(orbit.size()) == h->size());
  }
}
