#include "doctest.h"

#include "cellred/error.hpp"
#include "cellred/rootdata.hpp"

using namespace cellred;

namespace {

// SL_n dimension from the GL_n formula prod_{i<j} (l_i - l_j + j - i) / (j - i),
// with l the partition attached to the fundamental-weight coordinates.
Integer gl_dimension(const std::vector<std::int64_t>& n) {
  const int r = static_cast<int>(n.size()) + 1;
  std::vector<std::int64_t> l(r, 0);
  for (int i = r - 2; i >= 0; --i) l[i] = l[i + 1] + n[i];
  Integer num = 1, den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      num *= l[i] - l[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

}  // namespace

TEST_CASE("cartan types") {
  CHECK(CartanType::parse("b2").name() == "B2");
  CHECK(CartanType::all().size() == 6);
  CHECK_THROWS_AS(CartanType::parse("E8"), Error);
  CHECK_THROWS_AS(CartanType::parse("A5"), Error);
  CHECK_THROWS_AS(CartanType('C', 2), Error);
  try {
    CartanType::parse("D4");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedType);
  }
}

TEST_CASE("positive roots") {
  const std::map<std::string, int> nu = {{"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4}, {"G2", 6}};
  for (const auto& t : CartanType::all()) {
    const auto rs = build_root_system(t);
    CHECK(rs.nu() == nu.at(t.name()));
    for (int p : rs.weyl_vector_pairings) CHECK(p >= 1);
  }
}

TEST_CASE("weyl dimension closed forms, coordinates up to 6") {
  const auto a1 = build_root_system(CartanType('A', 1));
  const auto a2 = build_root_system(CartanType('A', 2));
  const auto a3 = build_root_system(CartanType('A', 3));
  const auto b2 = build_root_system(CartanType('B', 2));
  const auto g2 = build_root_system(CartanType('G', 2));
  for (std::int64_t x = 0; x <= 6; ++x) {
    const Integer a = x + 1;
    CHECK(weyl_dim(a1, Weight{{x}}) == a);
    for (std::int64_t y = 0; y <= 6; ++y) {
      const Integer b = y + 1;
      CHECK(weyl_dim(a2, Weight{{x, y}}) == a * b * (a + b) / 2);
      CHECK(weyl_dim(b2, Weight{{x, y}}) == a * b * (a + b) * (a + 2 * b) / 6);
      CHECK(weyl_dim(g2, Weight{{x, y}}) ==
            a * b * (a + b) * (a + 2 * b) * (a + 3 * b) * (2 * a + 3 * b) / 120);
      for (std::int64_t z = 0; z <= 6; ++z) {
        const Integer c = z + 1;
        CHECK(weyl_dim(a3, Weight{{x, y, z}}) == a * b * c * (a + b) * (b + c) * (a + b + c) / 12);
      }
    }
  }
}

TEST_CASE("weyl dimension in A4 against the GL formula") {
  const auto a4 = build_root_system(CartanType('A', 4));
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t b = 0; b <= 3; ++b)
      for (std::int64_t c = 0; c <= 3; ++c)
        for (std::int64_t d = 0; d <= 3; ++d)
          CHECK(weyl_dim(a4, Weight{{a, b, c, d}}) == gl_dimension({a, b, c, d}));
}

TEST_CASE("weyl dimension examples and errors") {
  const auto b2 = build_root_system(CartanType('B', 2));
  const auto g2 = build_root_system(CartanType('G', 2));
  CHECK(weyl_dim(b2, Weight{{0, 0}}) == 1);
  CHECK(weyl_dim(b2, Weight{{1, 0}}) == 4);
  CHECK(weyl_dim(b2, Weight{{0, 1}}) == 5);
  CHECK(weyl_dim(g2, Weight{{1, 0}}) == 7);
  CHECK(weyl_dim(g2, Weight{{0, 1}}) == 14);
  CHECK_THROWS_AS(weyl_dim(b2, Weight{{-1, 0}}), Error);
  CHECK_THROWS_AS(weyl_dim(b2, Weight{{1, 0, 0}}), Error);
}

TEST_CASE("weights") {
  CHECK(Weight{{1, 2}}.str() == "(1,2)");
  CHECK(Weight{{0, 4}}.is_restricted(5));
  CHECK_FALSE(Weight{{0, 5}}.is_restricted(5));
  CHECK_FALSE(Weight{{-1, 0}}.is_dominant());
  CHECK(subset_weight(3, {0, 2}) == Weight{{1, 0, 1}});
}
