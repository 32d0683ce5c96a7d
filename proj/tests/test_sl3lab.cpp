#include "doctest.h"

#include <algorithm>
#include <set>

#include "cellred/error.hpp"
#include "cellred/sl3lab.hpp"

using namespace cellred;
using namespace cellred::sl3;

TEST_CASE("prime field") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(6), Error);
}

TEST_CASE("incidence geometry") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto sp = build_incidence(p);
    const std::size_t n = p * p + p + 1;
    CHECK(sp.size() == n);
    CHECK(sp.planes.size() == n);
    for (std::size_t l = 0; l < n; ++l) CHECK(sp.planes_through_line[l].size() == p + 1);
    for (std::size_t q = 0; q < n; ++q) {
      CHECK(sp.lines_in_plane[q].size() == p + 1);
      for (auto l : sp.lines_in_plane[q]) CHECK(sp.incident(l, q));
    }
    CHECK(sp.line_index(sp.lines[n - 1]) == n - 1);
  }
  CHECK(build_incidence(3).line_index({2, 2, 2}) == build_incidence(3).line_index({1, 1, 1}));
  CHECK_THROWS_AS(build_incidence(4), Error);
  CHECK_THROWS_AS(build_incidence(101), Error);
}

TEST_CASE("kernels of tau and tau'") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto sp = build_incidence(p);
    const auto maps = tau_maps(sp);
    CHECK(maps.dim_f1 == sp.size() - 1);
    const auto k = kernel_analysis(maps);
    const std::size_t half = p * (p + 1) / 2;
    CHECK(k.dim_ker_tau == half);
    CHECK(k.dim_ker_tau_prime == half);
    CHECK(k.ker_tau_is_im_tau_prime);
    CHECK(k.ker_tau_prime_is_im_tau);
    const auto s = kernel_analysis(maps, Exec::Serial);
    CHECK(s.rank_tau == k.rank_tau);
    CHECK(s.rank_tau_prime == k.rank_tau_prime);
  }
}

TEST_CASE("tau is sum over incident lines") {
  const auto sp = build_incidence(3);
  std::vector<std::uint32_t> f(sp.size(), 0);
  f[4] = 1;
  const auto img = apply_tau(sp, f);
  for (std::size_t q = 0; q < sp.planes.size(); ++q) CHECK(img[q] == (sp.incident(4, q) ? 1u : 0u));
}

TEST_CASE("GL3 equivariance") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(equivariance_check(build_incidence(p), 10));
}

namespace {

// Orbit of (a, b) mod m under S3 permuting the coordinates of (a+b, b, 0).
std::set<std::pair<int, int>> s3_orbit(int a, int b, int m) {
  std::set<std::pair<int, int>> out;
  std::array<int, 3> v{a + b, b, 0};
  std::sort(v.begin(), v.end());
  do {
    const int x = ((v[0] - v[1]) % m + m) % m, y = ((v[1] - v[2]) % m + m) % m;
    out.insert({x, y});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("principal series orbits") {
  const auto r5 = principal_series_check(5);
  CHECK(r5.classes == 16);
  CHECK(r5.orbits.size() == 1);
  CHECK(r5.all_pass);
  CHECK(r5.orbits[0].sum == 186);
  CHECK(r5.regular_implies_nonzero);
  for (const auto& o : r5.orbits) {
    std::set<std::pair<int, int>> got;
    for (const auto& w : o.classes) got.insert({static_cast<int>(w.coords[0]), static_cast<int>(w.coords[1])});
    CHECK(got == s3_orbit(static_cast<int>(o.classes[0].coords[0]), static_cast<int>(o.classes[0].coords[1]), 4));
    for (const auto& l : o.lifts)
      for (auto c : l.coords) CHECK((c >= 1 && c <= 3));
  }
  const auto r7 = principal_series_check(7);
  CHECK(r7.orbits.size() == 3);
  CHECK(r7.all_pass);
  for (const auto& o : r7.orbits) CHECK(o.sum == 456);
  CHECK_THROWS_AS(principal_series_check(3), std::invalid_argument);
  CHECK_THROWS_AS(principal_series_check(9), Error);
}
