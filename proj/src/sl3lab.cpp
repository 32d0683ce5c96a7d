#include "cellred/sl3lab.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "cellred/coxeter.hpp"
#include "cellred/error.hpp"

namespace cellred::sl3 {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
}

std::uint32_t PrimeField::reduce(std::int64_t a) const {
  const std::int64_t r = a % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of 0 mod " + std::to_string(p_));
  std::uint32_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

namespace {

std::uint32_t dot(const Vec3& a, const Vec3& b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (int i = 0; i < 3; ++i) s += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<std::uint32_t>(s % p);
}

// Index of the normalized representative in the order (1,a,b), (0,1,b), (0,0,1).
std::size_t projective_index(const Vec3& v, std::uint32_t p) {
  const PrimeField f(p);
  if (v[0] % p) {
    const std::uint32_t s = f.inv(v[0]);
    return static_cast<std::size_t>(f.mul(v[1], s)) * p + f.mul(v[2], s);
  }
  if (v[1] % p) return static_cast<std::size_t>(p) * p + f.mul(v[2], f.inv(v[1]));
  if (v[2] % p) return static_cast<std::size_t>(p) * p + p;
  throw std::invalid_argument("zero vector has no projective class");
}

}  // namespace

bool IncidenceSpace::incident(std::size_t line, std::size_t plane) const {
  return dot(lines[line], planes[plane], p) == 0;
}

std::size_t IncidenceSpace::line_index(const Vec3& v) const { return projective_index(v, p); }
std::size_t IncidenceSpace::plane_index(const Vec3& v) const { return projective_index(v, p); }

IncidenceSpace build_incidence(std::uint32_t p, std::uint32_t bound) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  if (p > bound)
    throw Error(Errc::TooLarge, std::to_string(p) + " exceeds the bound " + std::to_string(bound));
  IncidenceSpace sp;
  sp.p = p;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) sp.lines.push_back({1, a, b});
  for (std::uint32_t b = 0; b < p; ++b) sp.lines.push_back({0, 1, b});
  sp.lines.push_back({0, 0, 1});
  sp.planes = sp.lines;

  const std::size_t n = sp.lines.size();
  sp.lines_in_plane.assign(n, {});
  sp.planes_through_line.assign(n, {});
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t q = 0; q < n; ++q)
      if (sp.incident(l, q)) {
        sp.lines_in_plane[q].push_back(static_cast<std::uint32_t>(l));
        sp.planes_through_line[l].push_back(static_cast<std::uint32_t>(q));
      }
  return sp;
}

std::vector<std::uint32_t> SparseMatrix::dense() const {
  std::vector<std::uint32_t> out(rows * cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    for (auto [r, v] : columns[c]) out[r * cols + c] = v;
  return out;
}

namespace {

// Matrix of f -> (X -> sum of f over the points incident to X) on sum-zero
// functions, in the bases {e_i - e_0}. `through_source[i]` lists the targets
// incident to source i.
SparseMatrix incidence_map(const std::vector<std::vector<std::uint32_t>>& through_source,
                           std::size_t n, std::uint32_t p) {
  SparseMatrix m;
  m.rows = n - 1;
  m.cols = n - 1;
  m.columns.resize(n - 1);
  const PrimeField f(p);
  for (std::size_t src = 1; src < n; ++src) {
    // Image of e_src - e_0 as a full function on targets; coordinates are its
    // values at targets 1..n-1.
    std::vector<std::int64_t> image(n, 0);
    for (std::uint32_t t : through_source[src]) ++image[t];
    for (std::uint32_t t : through_source[0]) --image[t];
    for (std::size_t t = 1; t < n; ++t)
      if (const std::uint32_t v = f.reduce(image[t]))
        m.columns[src - 1].emplace_back(static_cast<std::uint32_t>(t - 1), v);
  }
  return m;
}

// Product a * b of sparse column-major matrices over F_p.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, std::uint32_t p) {
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.resize(b.cols);
  std::vector<std::uint64_t> acc(a.rows);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::fill(acc.begin(), acc.end(), 0);
    for (auto [k, bv] : b.columns[j])
      for (auto [i, av] : a.columns[k]) acc[i] = (acc[i] + static_cast<std::uint64_t>(av) * bv) % p;
    for (std::size_t i = 0; i < a.rows; ++i)
      if (acc[i]) out.columns[j].emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(acc[i]));
  }
  return out;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

}  // namespace

TauMaps tau_maps(const IncidenceSpace& sp) {
  TauMaps maps;
  maps.p = sp.p;
  maps.dim_f1 = sp.size() - 1;
  maps.dim_f2 = sp.size() - 1;
  maps.tau = incidence_map(sp.planes_through_line, sp.size(), sp.p);
  maps.tau_prime = incidence_map(sp.lines_in_plane, sp.size(), sp.p);
  return maps;
}

std::vector<std::uint32_t> apply_tau(const IncidenceSpace& sp, const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> out(sp.size(), 0);
  for (std::size_t q = 0; q < sp.size(); ++q) {
    std::uint64_t s = 0;
    for (std::uint32_t l : sp.lines_in_plane[q]) s += f[l];
    out[q] = static_cast<std::uint32_t>(s % sp.p);
  }
  return out;
}

KernelAnalysis kernel_analysis(const TauMaps& maps, Exec exec) {
  KernelAnalysis k;
  k.rank_tau = rank_mod_p(maps.tau.dense(), maps.tau.rows, maps.tau.cols, maps.p, exec);
  k.rank_tau_prime =
      rank_mod_p(maps.tau_prime.dense(), maps.tau_prime.rows, maps.tau_prime.cols, maps.p, exec);
  k.dim_ker_tau = maps.dim_f1 - k.rank_tau;
  k.dim_ker_tau_prime = maps.dim_f2 - k.rank_tau_prime;
  // im tau' lies in ker tau iff tau o tau' = 0; equality then follows from dimensions.
  k.ker_tau_is_im_tau_prime =
      is_zero(multiply(maps.tau, maps.tau_prime, maps.p)) && k.rank_tau_prime == k.dim_ker_tau;
  k.ker_tau_prime_is_im_tau =
      is_zero(multiply(maps.tau_prime, maps.tau, maps.p)) && k.rank_tau == k.dim_ker_tau_prime;
  return k;
}

namespace {

using Mat3 = std::array<std::array<std::uint32_t, 3>, 3>;

Vec3 apply(const Mat3& g, const Vec3& v, const PrimeField& f) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    std::uint64_t s = 0;
    for (int j = 0; j < 3; ++j) s += static_cast<std::uint64_t>(g[i][j]) * v[j];
    out[i] = static_cast<std::uint32_t>(s % f.p());
  }
  return out;
}

// Cofactor matrix: cof(g)^T g = det(g) I, so cof(g) = det * g^{-T}, which
// maps plane annihilators the same way as g^{-T} projectively.
Mat3 cofactor(const Mat3& g, const PrimeField& f) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      c[i][j] = f.sub(f.mul(g[r0][c0], g[r1][c1]), f.mul(g[r0][c1], g[r1][c0]));
    }
  return c;
}

std::uint32_t det(const Mat3& g, const PrimeField& f) {
  const Mat3 c = cofactor(g, f);
  std::uint32_t d = 0;
  for (int j = 0; j < 3; ++j) d = f.add(d, f.mul(g[0][j], c[0][j]));
  return d;
}

}  // namespace

bool equivariance_check(const IncidenceSpace& sp, int samples, std::uint64_t seed) {
  const PrimeField f(sp.p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, sp.p - 1);
  const std::size_t n = sp.size();
  for (int s = 0; s < samples; ++s) {
    Mat3 g{};
    do {
      for (auto& row : g)
        for (auto& x : row) x = coord(rng);
    } while (det(g, f) == 0);
    const Mat3 gt = cofactor(g, f);

    std::vector<std::size_t> line_perm(n), plane_perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      line_perm[i] = sp.line_index(apply(g, sp.lines[i], f));
      plane_perm[i] = sp.plane_index(apply(gt, sp.planes[i], f));
    }
    // Random sum-zero function on lines.
    std::vector<std::uint32_t> fn(n);
    std::uint64_t total = 0;
    for (std::size_t i = 1; i < n; ++i) {
      fn[i] = coord(rng);
      total += fn[i];
    }
    fn[0] = f.reduce(-static_cast<std::int64_t>(total % sp.p));

    // (g.f)(g L) = f(L)
    std::vector<std::uint32_t> gf(n);
    for (std::size_t i = 0; i < n; ++i) gf[line_perm[i]] = fn[i];
    const auto lhs = apply_tau(sp, gf);
    const auto tf = apply_tau(sp, fn);
    std::vector<std::uint32_t> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[plane_perm[i]] = tf[i];
    if (lhs != rhs) return false;
  }
  return true;
}

PrincipalSeriesResult principal_series_check(std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  if (p < 5) throw std::invalid_argument("principal series check needs p >= 5");
  const auto g = WeylGroup::generate(CartanType('A', 2));
  const std::int64_t m = p - 1;
  auto reduce = [m](Weight w) {
    for (auto& c : w.coords) c = ((c % m) + m) % m;
    return w;
  };

  PrincipalSeriesResult res;
  res.p = p;
  res.classes = static_cast<std::size_t>(m * m);
  res.regular_implies_nonzero = true;
  res.all_pass = true;
  const Integer expected = Integer(p + 1) * (Integer(p) * p + p + 1);
  std::set<Weight> seen;
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; b < m; ++b) {
      const Weight zeta{{a, b}};
      if (seen.count(zeta)) continue;
      std::vector<Weight> orbit;
      bool regular = true;
      for (ElemId w = 0; w < g.size(); ++w) {
        Weight image = reduce(g.act_on_weight(w, zeta));
        if (w != g.identity() && image == zeta) regular = false;
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(image);
      }
      seen.insert(orbit.begin(), orbit.end());
      if (!regular) continue;
      res.regular_classes += orbit.size();
      OrbitResult o;
      o.classes = orbit;
      o.expected = expected;
      for (const Weight& z : orbit) {
        if (z.coords[0] == 0 || z.coords[1] == 0) res.regular_implies_nonzero = false;
        // Nonzero residues mod p-1 already lie in [1, p-2].
        o.lifts.push_back(z);
        o.dims.push_back(weyl_dim(g.root_system(), z));
        o.sum += o.dims.back();
      }
      o.pass = o.sum == o.expected && orbit.size() == static_cast<std::size_t>(g.size());
      res.all_pass = res.all_pass && o.pass;
      res.orbits.push_back(std::move(o));
    }
  res.all_pass = res.all_pass && res.regular_implies_nonzero;
  return res;
}

}  // namespace cellred::sl3
