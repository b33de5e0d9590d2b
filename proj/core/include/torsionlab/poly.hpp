#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/rational.hpp"

namespace torsionlab {

// Variable tags for the two polynomial rings in play: growth parameter m and
// spectral parameter t. Mixing them in one operation is an error.
enum class Var : unsigned char { m, t };

inline const char* var_name(Var v) { return v == Var::m ? "m" : "t"; }

// Dense univariate polynomial over Q. Coefficients are stored ascending with
// no trailing zeros; the zero polynomial has an empty coefficient list and
// degree deg_neg_inf.
class Poly {
 public:
  static constexpr int deg_neg_inf = INT_MIN;

  explicit Poly(Var v = Var::m) : var_(v) {}
  Poly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

  static Poly constant(Var v, const Rational& c);
  static Poly monomial(Var v, const Rational& c, int k);
  // slope * x + offset
  static Poly affine(Var v, const Rational& slope, const Rational& offset);

  Var var() const { return var_; }
  int degree() const { return c_.empty() ? deg_neg_inf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  // this(inner); the result lives in inner's variable.
  Poly compose(const Poly& inner) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
  Poly operator/(const Rational& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.var_ == b.var_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();

  Var var_;
  std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned e);
std::string to_string(const Poly& p);

// Exact integral of p over [a, b].
Rational definite_integral(const Poly& p, const Rational& a, const Rational& b);

// The unique even polynomial of degree <= 2(k-1) through k nodes (x_i, v_i),
// constrained at both +x_i and -x_i. Abscissas must be distinct in absolute
// value.
Poly interpolate_even(const std::vector<std::pair<Rational, Rational>>& nodes);

// Polynomial in t whose coefficients are polynomials in m.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> coeffs);

  static BiPoly constant(const Poly& coeff_in_m);
  static BiPoly constant(const Rational& c);
  // a(m) * t + b(m)
  static BiPoly affine_in_t(const Poly& a, const Poly& b);
  // reinterpret a polynomial in t as a BiPoly with constant coefficients
  static BiPoly lift_t_poly(const Poly& p);

  int degree_t() const { return c_.empty() ? Poly::deg_neg_inf : static_cast<int>(c_.size()) - 1; }
  int degree_m() const;
  bool is_zero() const { return c_.empty(); }
  bool even_in_t() const;
  const std::vector<Poly>& coeffs() const { return c_; }
  Poly coeff(int k) const;

  Poly eval_t(const Rational& t0) const;  // polynomial in m
  Poly eval_m(const Rational& m0) const;  // polynomial in t
  Rational eval(const Rational& t0, const Rational& m0) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Poly& s, const BiPoly& p);
  friend BiPoly operator*(const Rational& s, const BiPoly& p);
  BiPoly operator/(const Rational& s) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  void trim();

  std::vector<Poly> c_;  // ascending in t; entries are polynomials in m
};

// Integral of integrand(t, m) dt from t = 0 to t = upper(m), as a polynomial
// in m.
Poly integrate_zero_to(const Poly& upper, const BiPoly& integrand);

std::string to_string(const BiPoly& p);

}  // namespace torsionlab
