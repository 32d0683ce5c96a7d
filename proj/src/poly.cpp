#include "cellred/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cellred/error.hpp"

namespace cellred {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coef) {
  LaurentPoly p(std::move(coef));
  p.low_ = p.is_zero() ? 0 : exponent;
  return p;
}

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

int LaurentPoly::degree() const {
  if (is_zero()) throw Error(Errc::LeadingTermOfZero, "degree of zero Laurent polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw Error(Errc::LeadingTermOfZero, "valuation of zero Laurent polynomial");
  return low_;
}

Integer LaurentPoly::coeff(int exponent) const {
  const int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

std::pair<int, Integer> LaurentPoly::leading_term() const {
  if (is_zero()) throw Error(Errc::LeadingTermOfZero, "leading term of zero");
  return {degree(), coeffs_.back()};
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -degree();
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Integer& c, int k) {
  if (o.is_zero() || c == 0) return;
  const int olow = o.low_ + k;
  const int ohigh = olow + static_cast<int>(o.coeffs_.size()) - 1;
  if (is_zero()) {
    low_ = olow;
    coeffs_.assign(o.coeffs_.size(), Integer(0));
  } else {
    const int high = degree();
    if (olow < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - olow), Integer(0));
      low_ = olow;
    }
    if (ohigh > high) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(ohigh - high), Integer(0));
  }
  const std::size_t off = static_cast<std::size_t>(olow - low_);
  if (c == 1) {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += c * o.coeffs_[i];
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::string LaurentPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// -------------------------------------------------------------------- IntPoly

IntPoly::IntPoly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::t() { return IntPoly(std::vector<Rational>{0, 1}); }

IntPoly IntPoly::linear(const Integer& c0, const Integer& c1) {
  return IntPoly(std::vector<Rational>{Rational(c0), Rational(c1)});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational IntPoly::leading_coeff() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPoly::is_integer_valued() const {
  for (int k = 0; k <= degree() + 1; ++k)
    if (denominator(eval(k)) != 1) return false;
  return true;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly IntPoly::pow(int e) const {
  IntPoly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  if (degree() < d.degree()) {
    if (is_zero()) return {};
    throw std::domain_error("inexact polynomial division");
  }
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Rational f = rem[k + d.degree()] / d.leading_coeff();
    q[k] = f;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

// Rendering: scalar * t^c * prod (b t - a)^m * rest, with rational roots a/b
// split off from the primitive integer part.
namespace {

using IVec = std::vector<Integer>;

Integer gcd_int(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Integer ipoly_eval_scaled(const IVec& f, const Integer& a, const Integer& b) {
  // b^deg * f(a/b)
  Integer acc = 0;
  const std::size_t n = f.size();
  std::vector<Integer> bp(n, Integer(1));
  for (std::size_t i = 1; i < n; ++i) bp[i] = bp[i - 1] * b;
  Integer apow = 1;
  for (std::size_t i = 0; i < n; ++i) {
    acc += f[i] * apow * bp[n - 1 - i];
    apow *= a;
  }
  return acc;
}

// Divides f by (b t - a), exact.
IVec divide_linear(const IVec& f, const Integer& a, const Integer& b) {
  const std::size_t n = f.size();
  IVec q(n - 1, Integer(0));
  IVec rem = f;
  for (std::size_t k = n - 1; k >= 1; --k) {
    q[k - 1] = rem[k] / b;
    rem[k] -= q[k - 1] * b;
    rem[k - 1] += q[k - 1] * a;
  }
  return q;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> d;
  for (Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k * k != n) d.push_back(n / k);
    }
  std::sort(d.begin(), d.end());
  return d;
}

std::string render_int_poly(const IVec& f) {
  std::ostringstream os;
  bool first = true;
  for (int e = static_cast<int>(f.size()) - 1; e >= 0; --e) {
    const Integer& c = f[e];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e >= 1) os << "t";
    if (e >= 2) os << "^" << e;
  }
  return os.str();
}

}  // namespace

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  // f = (num/den) * G with G primitive integer, positive leading coefficient.
  Integer den = 1;
  for (const auto& c : coeffs_) {
    const Integer d = denominator(c);
    den = den / gcd_int(den, d) * d;
  }
  IVec g;
  for (const auto& c : coeffs_) g.push_back(numerator(c) * (den / denominator(c)));
  Integer content = 0;
  for (const auto& c : g) content = gcd_int(content, c);
  if (g.back() < 0) content = -content;
  for (auto& c : g) c /= content;
  Rational scalar = Rational(content) / den;

  int tpow = 0;
  while (g.front() == 0) {
    g.erase(g.begin());
    ++tpow;
  }
  // (b, a) -> multiplicity for factors (b t - a).
  std::map<std::tuple<Integer, Integer, Integer>, std::pair<std::pair<Integer, Integer>, int>> factors;
  bool progress = true;
  while (g.size() > 1 && progress) {
    progress = false;
    for (const auto& b : positive_divisors(g.back())) {
      for (const auto& am : positive_divisors(g.front())) {
        for (int sgn : {1, -1}) {
          const Integer a = am * sgn;
          if (gcd_int(a, b) != 1) continue;
          if (ipoly_eval_scaled(g, a, b) != 0) continue;
          g = divide_linear(g, a, b);
          const Integer absa = a < 0 ? Integer(-a) : a;
          auto key = std::make_tuple(b, absa, Integer(a < 0 ? 0 : 1));
          auto& slot = factors[key];
          slot.first = {b, a};
          ++slot.second;
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  // g now has no rational roots (or is constant +-1 after the loop above).
  std::ostringstream os;
  const Integer sn = numerator(scalar), sd = denominator(scalar);
  std::string body;
  if (tpow == 1) body += "t";
  if (tpow > 1) body += "t^" + std::to_string(tpow);
  for (const auto& [key, val] : factors) {
    const auto& [ba, mult] = val;
    const auto& [b, a] = ba;
    std::ostringstream f;
    f << "(";
    if (b != 1) f << b;
    f << "t";
    if (a > 0) f << "-" << a;
    if (a < 0) f << "+" << Integer(-a);
    f << ")";
    if (mult > 1) f << "^" << mult;
    body += f.str();
  }
  const bool rest_trivial = g.size() == 1;
  const Integer rest_const = g.front();  // only meaningful when rest_trivial
  Integer lead = sn;
  if (rest_trivial) lead *= rest_const;
  if (!rest_trivial) {
    const std::string r = render_int_poly(g);
    if (body.empty() && lead == 1 && sd == 1) return r;
    body += "(" + r + ")";
  }
  if (body.empty()) {
    os << lead;
  } else {
    if (lead == -1) os << "-";
    else if (lead != 1) os << lead;
    os << body;
  }
  if (sd != 1) os << "/" << sd;
  return os.str();
}

// Parser ---------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPoly parse_all() {
    IntPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at position " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  IntPoly expr() {
    IntPoly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      IntPoly t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return c == '(' || c == 't' || c == 'p' || std::isdigit(static_cast<unsigned char>(c));
  }

  IntPoly term() {
    IntPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        IntPoly d = factor();
        if (d.degree() != 0) fail("division by a non-constant");
        acc *= Rational(1) / d.coeff(0);
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  IntPoly factor() {
    IntPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  IntPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 't' || c == 'p') {
      ++pos_;
      return IntPoly::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return IntPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("expected a term");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

IntPoly reverse_at(int nu, const IntPoly& f) {
  if (f.degree() > nu)
    throw Error(Errc::DegreeExceedsNu, "degree " + std::to_string(f.degree()) + " > " + std::to_string(nu));
  if (f.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(nu) + 1, Rational(0));
  for (int k = 0; k <= f.degree(); ++k) c[nu - k] = f.coeff(k);
  return IntPoly(std::move(c));
}

int lowest_degree(const IntPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "lowest degree of zero");
  int k = 0;
  while (f.coeff(k) == 0) ++k;
  return k;
}

}  // namespace cellred
