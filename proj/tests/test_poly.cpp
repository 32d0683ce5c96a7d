#include "doctest.h"

#include <random>

#include "cellred/error.hpp"
#include "cellred/poly.hpp"
#include "support.hpp"

using namespace cellred;
using testing_support::P;

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPoly v = LaurentPoly::monomial(1);
  const LaurentPoly vi = LaurentPoly::monomial(-1);
  const LaurentPoly s = v + vi;
  CHECK((s * s).str() == "v^-2 + 2 + v^2");
  CHECK(s.bar() == s);
  CHECK((v * vi) == LaurentPoly(1));
  CHECK((s - s).is_zero());
  CHECK(s.degree() == 1);
  CHECK(s.valuation() == -1);
  CHECK(s.shift(2).valuation() == 1);
  CHECK((s * s).at_one() == 4);
  CHECK((s * s).coeff(0) == 2);
  CHECK((s * s).coeff(5) == 0);
  CHECK(s.leading_term() == std::pair<int, Integer>(1, 1));
  CHECK_THROWS_AS(LaurentPoly().leading_term(), Error);

  LaurentPoly acc = 1;
  acc.add_scaled(s, 3, 1);  // 1 + 3v(v + v^-1) = 4 + 3v^2
  CHECK(acc == LaurentPoly(4) + LaurentPoly::monomial(2, 3));
  CHECK(LaurentPoly().str() == "0");
}

TEST_CASE("laurent multiplication against a naive convolution") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), expo(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<int, Integer> a, b;
    LaurentPoly pa, pb;
    for (int k = 0; k < 4; ++k) {
      const int e = expo(rng), c = coef(rng);
      a[e] += c;
      pa += LaurentPoly::monomial(e, c);
      const int e2 = expo(rng), c2 = coef(rng);
      b[e2] += c2;
      pb += LaurentPoly::monomial(e2, c2);
    }
    std::map<int, Integer> prod;
    for (auto& [ea, ca] : a)
      for (auto& [eb, cb] : b) prod[ea + eb] += ca * cb;
    const LaurentPoly pp = pa * pb;
    for (auto& [e, c] : prod) CHECK(pp.coeff(e) == c);
    CHECK((pa * pb) == (pb * pa));
    CHECK((pa * pb).bar() == pa.bar() * pb.bar());
  }
}

TEST_CASE("polynomial parsing and rendering") {
  CHECK(P("t(t+1)(2t+1)/6").eval(3) == 14);
  CHECK(P("p^2+p") == P("t(t+1)"));
  CHECK(P("t^3+t^2+t").eval(2) == 14);
  CHECK(P("t(t^2+1)/2").str() == "t(t^2+1)/2");
  CHECK(P("2*t - 3").coeff(0) == -3);
  CHECK(P("-(t-1)").eval(0) == 1);
  CHECK(P("t(t-1)^2/2").degree() == 3);
  CHECK_THROWS_AS(P("t+"), Error);
  CHECK_THROWS_AS(P("x"), Error);
  CHECK_THROWS_AS(P("t/0"), Error);
  CHECK(IntPoly().str() == "0");
}

TEST_CASE("rendering round trips") {
  for (const char* s : {"1", "t", "t^6", "t(t+1)/2", "t(t-1)(t-2)/6", "t(2t^2+1)/3", "t^2(5t^2+1)/6",
                        "t(t+1)(t-1)(t+3)(t-3)/30", "t(t^4+t^2+1)/3", "-t+2", "t^2-2",
                        "t(t-1)(2t-1)(3t-1)(3t-2)/120", "3t/7+1/2"}) {
    const IntPoly f = P(s);
    CHECK_MESSAGE(IntPoly::parse(f.str()) == f, s);
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-6, 6), deg(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = Rational(coef(rng), 1 + (trial % 4));
    const IntPoly f(cs);
    CHECK(IntPoly::parse(f.str()) == f);
  }
}

TEST_CASE("integer valued, division and powers") {
  CHECK(P("t(t+1)/2").is_integer_valued());
  CHECK_FALSE(P("t/2").is_integer_valued());
  CHECK(P("t^2-1").divide_exact(P("t-1")) == P("t+1"));
  CHECK_THROWS_AS(P("t^2+1").divide_exact(P("t-1")), std::domain_error);
  CHECK(IntPoly::t().pow(4) == P("t^4"));
  CHECK(P("t+1").pow(0) == IntPoly(1));
}

TEST_CASE("reversal and lowest degree") {
  // t^4 f(1/t) for f = t(t+1)(t+2)/6 is t(t+1)(2t+1)/6.
  CHECK(reverse_at(4, P("t(t+1)(t+2)/6")) == P("t(t+1)(2t+1)/6"));
  CHECK(reverse_at(3, IntPoly(1)) == P("t^3"));
  CHECK_THROWS_AS(reverse_at(2, P("t^3")), Error);
  CHECK(lowest_degree(P("t^2(5t^2+1)/6")) == 2);
  CHECK(lowest_degree(IntPoly(1)) == 0);
  CHECK_THROWS_AS(lowest_degree(IntPoly()), Error);
  for (const char* s : {"t(t+1)(t+2)/6", "t^3(t^2+2)/3", "t^2+t"}) {
    const IntPoly f = P(s);
    CHECK(reverse_at(6, reverse_at(6, f)) == f);
  }
}
