#include "doctest.h"

#include "cellred/error.hpp"
#include "cellred/weylmod.hpp"
#include "support.hpp"

using namespace cellred;
using testing_support::context;
using testing_support::group;
using testing_support::P;

namespace {

WeightTemplate tmpl(std::vector<std::pair<std::int64_t, std::int64_t>> c) { return WeightTemplate{std::move(c)}; }

DeltaPoly delta(ElemId w, const IntPoly& pi) {
  DeltaPoly d;
  d.w = w;
  d.pi = pi;
  d.c = lowest_degree(pi);
  return d;
}

}  // namespace

TEST_CASE("dim_template examples") {
  const auto& b2 = group("B2")->root_system();
  CHECK(dim_template(b2, tmpl({{-3, 1}, {0, 0}}), 3) == P("t(t-1)(t-2)/6"));
  CHECK(dim_template(b2, tmpl({{0, 0}, {0, 0}}), 3) == P("1"));
  const auto& a2 = group("A2")->root_system();
  CHECK(dim_template(a2, tmpl({{-1, 1}, {0, 0}}), 2) == P("t(t+1)/2"));
  CHECK_THROWS_AS(dim_template(a2, tmpl({{-3, 1}, {0, 0}}), 2), Error);
  CHECK_THROWS_AS(dim_template(a2, tmpl({{0, -1}, {0, 0}}), 2), Error);
  CHECK_THROWS_AS(dim_template(a2, tmpl({{0, 0}}), 2), Error);
}

TEST_CASE("dim_template agrees with the Weyl dimension formula pointwise") {
  // A polynomial of degree <= nu is pinned down by nu + 1 values.
  for (const auto& t : CartanType::all()) {
    const auto g = group(t.name());
    const auto& rs = g->root_system();
    const int r = rs.rank();
    for (int shape = 0; shape < (1 << r); ++shape) {
      WeightTemplate w;
      for (int i = 0; i < r; ++i) w.coords.push_back((shape >> i) & 1 ? std::pair<std::int64_t, std::int64_t>{-2, 1}
                                                                       : std::pair<std::int64_t, std::int64_t>{i % 2, 0});
      const IntPoly f = dim_template(rs, w, 2);
      CHECK(f.degree() <= rs.nu());
      for (std::int64_t p = 2; p <= 2 + rs.nu() + 1; ++p)
        CHECK(f.eval(p) == Rational(weyl_dim(rs, w.instantiate(p))));
    }
  }
}

TEST_CASE("delta table examples") {
  const auto& a3 = context("A3");
  REQUIRE(a3.deltas.has_value());
  CHECK(a3.deltas->at(a3.g().parse("2")).pi == P("t(2t^2+1)/3"));
  CHECK(a3.deltas->at(a3.g().parse("13")).pi == P("t^2(5t^2+1)/6"));
  CHECK(a3.deltas->at(a3.g().parse("13")).c == 2);
  const auto& a2 = context("A2");
  CHECK(a2.deltas->at(a2.g().parse("121")).pi == P("t^3"));
  // every computed delta equals the transcribed closed form
  for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto& ctx = context(name);
    for (const auto& [w, d] : *ctx.deltas) CHECK(d.pi == ctx.tables.delta->at(w));
  }
  CHECK_THROWS_AS(delta_table(context("A4").g(), TypeTables(context("A4").g().type())), Error);
}

TEST_CASE("duality on the transcribed types") {
  for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto& ctx = context(name);
    const auto res = find_duality(ctx.g(), *ctx.deltas);
    CHECK_MESSAGE(res.is_involution, name);
    CHECK(res.findings.empty());
    for (const auto& m : res.matches) {
      const ElemId x = res.partner(m.w);
      REQUIRE(x >= 0);
      CHECK(ctx.tables.duality->at(m.w) == x);
      CHECK(m.sign == 1);
      CHECK(ctx.deltas->at(m.w).c + ctx.deltas->at(x).c <= ctx.g().nu());
    }
  }
  const auto& b2 = context("B2");
  const auto res = find_duality(b2.g(), *b2.deltas);
  CHECK(res.partner(b2.g().identity()) == b2.g().longest());
  CHECK(res.partner(b2.g().parse("121")) == b2.g().parse("212"));
}

TEST_CASE("duality on synthetic tables") {
  const auto& g = *group("A1");
  const ElemId e = g.identity(), s = g.longest();
  SUBCASE("negative sign") {
    const std::map<ElemId, DeltaPoly> d{{e, delta(e, P("1"))}, {s, delta(s, P("-t"))}};
    const auto res = find_duality(g, d);
    CHECK(res.is_involution);
    CHECK(res.matches[0].sign == -1);
  }
  SUBCASE("no match") {
    const std::map<ElemId, DeltaPoly> d{{e, delta(e, P("1"))}, {s, delta(s, P("t+1"))}};
    const auto res = find_duality(g, d);
    CHECK_FALSE(res.is_involution);
    REQUIRE_FALSE(res.findings.empty());
    CHECK(res.findings[0].rfind("NoMatch", 0) == 0);
    CHECK(res.partner(e) == -1);
  }
  SUBCASE("ambiguous") {
    const auto& a2 = *group("A2");
    // cl(1) = {1}, cl(21) = {2}, cl(12) = {1}: 12 and 1 both face 21 and vice versa
    const ElemId x = a2.parse("1"), y = a2.parse("21"), z = a2.parse("12");
    const std::map<ElemId, DeltaPoly> d{
        {x, delta(x, P("t"))}, {y, delta(y, P("t^2"))}, {z, delta(z, P("t"))}};
    const auto res = find_duality(a2, d);
    CHECK_FALSE(res.is_involution);
    bool ambiguous = false;
    for (const auto& f : res.findings) ambiguous = ambiguous || f.rfind("AmbiguousMatch", 0) == 0;
    CHECK(ambiguous);
  }
}
