#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cellred/integer.hpp"

namespace cellred {

/// Laurent polynomial with integer coefficients in one indeterminate, used
/// for v = u^{1/2} (and, restricted to nonnegative exponents, for q = u in
/// Kazhdan-Lusztig polynomials).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT

  /// c * v^e
  static LaurentPoly monomial(int exponent, Integer coef = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Highest exponent; requires nonzero.
  int degree() const;
  /// Lowest exponent; requires nonzero.
  int valuation() const;
  Integer coeff(int exponent) const;
  /// (exponent, coefficient) of the highest power. Throws Error(LeadingTermOfZero).
  std::pair<int, Integer> leading_term() const;
  /// Multiplication by v^k.
  LaurentPoly shift(int k) const;
  /// Value at v = 1.
  Integer at_one() const;
  /// Substitution v -> v^{-1}.
  LaurentPoly bar() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// this += c * v^k * o, without temporaries.
  void add_scaled(const LaurentPoly& o, const Integer& c, int k = 0);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Sparse form: (exponent, coefficient) for every nonzero term, ascending.
  std::vector<std::pair<int, Integer>> terms() const;
  /// E.g. "v^-2 + 2 + v^2"; variable name configurable.
  std::string str(std::string_view var = "v") const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;  // coeffs_[k] multiplies v^(low_ + k)
};

/// Polynomial in t with exact rational coefficients; coefficient index is the
/// power of t. Houses dimension polynomials, with t standing for p.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(Rational c);  // NOLINT
  IntPoly(int c) : IntPoly(Rational(c)) {}  // NOLINT
  explicit IntPoly(std::vector<Rational> coeffs);

  /// t
  static IntPoly t();
  /// c0 + c1 * t
  static IntPoly linear(const Integer& c0, const Integer& c1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading_coeff() const;

  Rational eval(const Rational& x) const;
  Rational eval(long long x) const { return eval(Rational(x)); }
  /// True iff f(k) is an integer for k = 0..deg+1, hence for all integers k.
  bool is_integer_valued() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Rational& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly pow(int e) const;
  /// Exact division; throws std::domain_error when the remainder is nonzero.
  IntPoly divide_exact(const IntPoly& d) const;

  /// Factored rendering such as "t(t+1)(2t+1)/6"; parse(str()) == *this.
  std::string str() const;
  /// Accepts +, -, *, ^, /, parentheses, implicit products and the
  /// variable names t or p. Throws Error(ParseError).
  static IntPoly parse(std::string_view text);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// t^nu * f(1/t). Throws Error(DegreeExceedsNu) when deg f > nu.
IntPoly reverse_at(int nu, const IntPoly& f);

/// Largest c with f in t^c Q[t]. Throws Error(ZeroPolynomial).
int lowest_degree(const IntPoly& f);

}  // namespace cellred
