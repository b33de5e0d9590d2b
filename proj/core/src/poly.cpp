#include "torsionlab/poly.hpp"

#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

void require_same_var(Var a, Var b, const char* op) {
  if (a != b)
    fail(errc::variable_mismatch, std::string("cannot ") + op + " a polynomial in " + var_name(a) +
                                      " and a polynomial in " + var_name(b));
}

}  // namespace

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Var v, const Rational& c) { return Poly(v, {c}); }

Poly Poly::monomial(Var v, const Rational& c, int k) {
  if (k < 0) fail(errc::bad_args, "negative monomial degree");
  std::vector<Rational> cs(static_cast<size_t>(k) + 1, Rational(0));
  cs.back() = c;
  return Poly(v, std::move(cs));
}

Poly Poly::affine(Var v, const Rational& slope, const Rational& offset) {
  return Poly(v, {offset, slope});
}

Rational Poly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::operator()(const Rational& x) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r(inner.var());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * inner;
    r += Poly::constant(inner.var(), *it);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_var(var_, o.var_, "add");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_var(var_, o.var_, "subtract");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_var(a.var_, b.var_, "multiply");
  if (a.is_zero() || b.is_zero()) return Poly(a.var_);
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.var_, std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> r(p.c_);
  for (auto& c : r) c *= s;
  return Poly(p.var_, std::move(r));
}

Poly Poly::operator/(const Rational& s) const {
  if (s.is_zero()) fail(errc::bad_args, "division by zero");
  return (Rational(1) / s) * *this;
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::constant(p.var(), Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    bool unit = (a == Rational(1));
    if (k == 0) {
      os << a.to_string();
    } else {
      if (!unit) os << a.to_string() << "*";
      os << var_name(p.var());
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Rational definite_integral(const Poly& p, const Rational& a, const Rational& b) {
  Rational total(0);
  for (int k = 0; k <= p.degree() && !p.is_zero(); ++k) {
    Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    total += c * (pow(b, k + 1) - pow(a, k + 1)) / Rational(k + 1);
  }
  return total;
}

Poly interpolate_even(const std::vector<std::pair<Rational, Rational>>& nodes) {
  const size_t k = nodes.size();
  if (k == 0) fail(errc::bad_args, "no interpolation nodes");
  std::vector<Rational> u(k);
  for (size_t i = 0; i < k; ++i) u[i] = nodes[i].first * nodes[i].first;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (u[i] == u[j])
        fail(errc::duplicate_abscissa,
             "abscissas must be distinct in absolute value: " + nodes[i].first.to_string() +
                 " vs " + nodes[j].first.to_string());

  // Solve the Vandermonde system in u = t^2 by exact Gaussian elimination.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1, Rational(0)));
  for (size_t i = 0; i < k; ++i) {
    Rational pw(1);
    for (size_t j = 0; j < k; ++j) {
      a[i][j] = pw;
      pw *= u[i];
    }
    a[i][k] = nodes[i].second;
  }
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && a[piv][col].is_zero()) ++piv;
    if (piv == k) fail(errc::identity_failure, "singular even interpolation system");
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (size_t j = col; j <= k; ++j) a[col][j] *= inv;
    for (size_t row = 0; row < k; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (size_t j = col; j <= k; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> coeffs(2 * k - 1, Rational(0));
  for (size_t j = 0; j < k; ++j) coeffs[2 * j] = a[j][k];
  return Poly(Var::t, std::move(coeffs));
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
  for (const auto& p : c_)
    if (p.var() != Var::m)
      fail(errc::variable_mismatch, "BiPoly coefficients must be polynomials in m");
  trim();
}

BiPoly BiPoly::constant(const Poly& coeff_in_m) { return BiPoly({coeff_in_m}); }

BiPoly BiPoly::constant(const Rational& c) { return BiPoly({Poly::constant(Var::m, c)}); }

BiPoly BiPoly::affine_in_t(const Poly& a, const Poly& b) { return BiPoly({b, a}); }

BiPoly BiPoly::lift_t_poly(const Poly& p) {
  if (p.var() != Var::t) fail(errc::variable_mismatch, "expected a polynomial in t");
  std::vector<Poly> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(Poly::constant(Var::m, c));
  return BiPoly(std::move(cs));
}

int BiPoly::degree_m() const {
  int d = Poly::deg_neg_inf;
  for (const auto& p : c_)
    if (!p.is_zero() && p.degree() > d) d = p.degree();
  return d;
}

bool BiPoly::even_in_t() const {
  for (size_t j = 1; j < c_.size(); j += 2)
    if (!c_[j].is_zero()) return false;
  return true;
}

Poly BiPoly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Poly(Var::m);
  return c_[static_cast<size_t>(k)];
}

Poly BiPoly::eval_t(const Rational& t0) const {
  Poly r(Var::m);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = t0 * r + *it;
  return r;
}

Poly BiPoly::eval_m(const Rational& m0) const {
  std::vector<Rational> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) cs.push_back(p(m0));
  return Poly(Var::t, std::move(cs));
}

Rational BiPoly::eval(const Rational& t0, const Rational& m0) const { return eval_t(t0)(m0); }

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(Var::m));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(Var::m));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<Poly> r(a.c_.size() + b.c_.size() - 1, Poly(Var::m));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(r));
}

BiPoly operator*(const Poly& s, const BiPoly& p) {
  if (s.var() != Var::m) fail(errc::variable_mismatch, "BiPoly scale factor must be in m");
  std::vector<Poly> r(p.c_);
  for (auto& c : r) c = c * s;
  return BiPoly(std::move(r));
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
  std::vector<Poly> r(p.c_);
  for (auto& c : r) c = s * c;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::operator/(const Rational& s) const {
  if (s.is_zero()) fail(errc::bad_args, "division by zero");
  return (Rational(1) / s) * *this;
}

Poly integrate_zero_to(const Poly& upper, const BiPoly& integrand) {
  if (upper.var() != Var::m) fail(errc::variable_mismatch, "upper limit must be a polynomial in m");
  Poly total(Var::m);
  Poly upower = upper;  // upper^(j+1), built incrementally
  for (int j = 0; j <= integrand.degree_t() && !integrand.is_zero(); ++j) {
    Poly cj = integrand.coeff(j);
    if (!cj.is_zero()) total += (cj * upower) / Rational(j + 1);
    upower = upower * upper;
  }
  return total;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree_t(); k >= 0; --k) {
    Poly c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (k >= 1) os << "*t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace torsionlab
