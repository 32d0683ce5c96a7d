#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cellred/integer.hpp"
#include "cellred/kernels.hpp"
#include "cellred/rootdata.hpp"

namespace cellred::sl3 {

bool is_prime(std::uint32_t n);

/// Arithmetic in F_p. Throws Error(NotPrime).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t reduce(std::int64_t a) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

using Vec3 = std::array<std::uint32_t, 3>;

/// Lines and planes of F_p^3 as normalized projective vectors (first nonzero
/// coordinate 1); a plane is stored as the line of its annihilator in the dual.
struct IncidenceSpace {
  std::uint32_t p = 0;
  std::vector<Vec3> lines;
  std::vector<Vec3> planes;
  std::vector<std::vector<std::uint32_t>> lines_in_plane;
  std::vector<std::vector<std::uint32_t>> planes_through_line;

  std::size_t size() const { return lines.size(); }
  bool incident(std::size_t line, std::size_t plane) const;
  std::size_t line_index(const Vec3& v) const;  // v nonzero, any scaling
  std::size_t plane_index(const Vec3& v) const;
};

/// Throws Error(NotPrime) or Error(TooLarge) when p > bound.
IncidenceSpace build_incidence(std::uint32_t p, std::uint32_t bound = 97);

/// Sparse column-major matrix over F_p.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> columns;

  std::vector<std::uint32_t> dense() const;  // row-major
};

/// tau : F1 -> F2 and tau' : F2 -> F1 on the sum-zero function spaces, in the
/// bases {e_L - e_{L0}} and {e_P - e_{P0}} (index 0 is the base point).
struct TauMaps {
  std::uint32_t p = 0;
  std::size_t dim_f1 = 0;
  std::size_t dim_f2 = 0;
  SparseMatrix tau;
  SparseMatrix tau_prime;
};

TauMaps tau_maps(const IncidenceSpace& sp);

/// Applies tau to a function on lines given by its full value vector; the
/// result is the full value vector on planes.
std::vector<std::uint32_t> apply_tau(const IncidenceSpace& sp, const std::vector<std::uint32_t>& f);

struct KernelAnalysis {
  std::size_t rank_tau = 0;
  std::size_t rank_tau_prime = 0;
  std::size_t dim_ker_tau = 0;
  std::size_t dim_ker_tau_prime = 0;
  bool ker_tau_is_im_tau_prime = false;
  bool ker_tau_prime_is_im_tau = false;
};

KernelAnalysis kernel_analysis(const TauMaps& maps, Exec exec = Exec::Parallel);

/// g o tau = tau o g for `samples` random g in GL_3(F_p) acting on lines and planes.
bool equivariance_check(const IncidenceSpace& sp, int samples = 20, std::uint64_t seed = 20240611);

struct OrbitResult {
  std::vector<Weight> classes;  // orbit on X/(p-1)X, representatives in [0, p-2]
  std::vector<Weight> lifts;    // coordinates in [1, p-2]
  std::vector<Integer> dims;
  Integer sum;
  Integer expected;  // (p+1)(p^2+p+1)
  bool pass = false;
};

struct PrincipalSeriesResult {
  std::uint32_t p = 0;
  std::size_t classes = 0;          // (p-1)^2
  std::size_t regular_classes = 0;  // trivial stabilizer
  std::vector<OrbitResult> orbits;  // regular orbits only
  /// Every regular class has all coordinates nonzero mod p-1.
  bool regular_implies_nonzero = false;
  bool all_pass = false;
};

/// Requires p prime, p >= 5. Throws Error(NotPrime) or std::invalid_argument.
PrincipalSeriesResult principal_series_check(std::uint32_t p);

}  // namespace cellred::sl3
