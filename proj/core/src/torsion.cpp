#include "torsionlab/torsion.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

SymbolicConstant& SymbolicConstant::operator*=(const SymbolicConstant& o) {
  rational *= o.rational;
  if (rational.is_zero()) {
    pi_exp = vol_x_exp = vol_dual_exp = 0;
    extra.clear();
    return *this;
  }
  pi_exp += o.pi_exp;
  vol_x_exp += o.vol_x_exp;
  vol_dual_exp += o.vol_dual_exp;
  std::map<std::string, int> merged(extra.begin(), extra.end());
  for (const auto& [label, exp] : o.extra) merged[label] += exp;
  extra.clear();
  for (const auto& [label, exp] : merged)
    if (exp != 0) extra.emplace_back(label, exp);
  return *this;
}

std::string SymbolicConstant::to_string() const {
  if (rational.is_zero()) return "0";
  std::ostringstream os;
  os << rational.to_string();
  auto emit = [&os](const std::string& label, int exp) {
    if (exp == 0) return;
    os << " * " << label;
    if (exp != 1) os << "^" << exp;
  };
  emit("pi", pi_exp);
  emit("vol(X)", vol_x_exp);
  emit("vol(Xd)", vol_dual_exp);
  for (const auto& [label, exp] : extra) emit(label, exp);
  return os.str();
}

SymbolicConstant sym_rational(const Rational& r) {
  SymbolicConstant s;
  s.rational = r;
  return s;
}

int deficiency_so(int p, int q) {
  if (q < 1 || p < q) fail(errc::bad_group, "so(p,q) requires p >= q >= 1");
  return (p + q) / 2 - p / 2 - q / 2;
}

int deficiency(const GroupSpec& g) {
  return g.family == Family::sl3 ? 1 : deficiency_so(g.p, g.q);
}

VanishingReport classify_vanishing(const std::string& group_text) {
  VanishingReport r;
  std::string s;
  for (char c : group_text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "sl3") {
    r.group = "sl3";
    r.deficiency = 1;
    r.even_dim = false;  // dim X = 5
    r.zero_flag = false;
    return r;
  }
  auto pq = parse_so_any(s);
  if (!pq) fail(errc::bad_group, "unrecognized group: " + group_text);
  auto [p, q] = *pq;
  r.group = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  r.deficiency = deficiency_so(p, q);
  r.even_dim = (p * q) % 2 == 0;  // dim X = p*q
  r.zero_flag = r.even_dim || r.deficiency != 1;
  return r;
}

SymbolicConstant prefactor_constant(int p, int q) {
  if (p % 2 == 0 || q % 2 == 0 || p < q || q < 1 || p <= 1)
    fail(errc::bad_group, "prefactor constant requires odd p >= q >= 1, p > 1");
  const int n = (p + q - 2) / 2;
  const int p1 = (p - 1) / 2;
  const int eps = q == 1 ? 0 : 1;
  Rational sign = ((p * q - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
  SymbolicConstant c;
  c.rational = sign * Rational(1 << eps) *
               binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(p1));
  c.pi_exp = 1;
  c.vol_dual_exp = -1;
  return c;
}

namespace {

// |lambda(m)| on m >= 1 for an affine lambda of definite sign there.
Poly affine_abs_from_one(const Poly& lam) {
  if (lam.degree() > 1) fail(errc::bad_args, "spectral parameter is not affine");
  Rational at_one = lam(Rational(1));
  Rational slope = lam.coeff(1);
  if (at_one.sign() >= 0 && slope.sign() >= 0) return lam;
  if (at_one.sign() <= 0 && slope.sign() <= 0) return -lam;
  fail(errc::bad_args, "spectral parameter changes sign on m >= 1");
}

Poly sl3_closed_form(const Weight& lambda) {
  auto tau = weight_input_coords(make_sl3(), lambda);
  const Rational t1 = tau[0], t2 = tau[1];
  const Poly m = Poly::affine(Var::m, Rational(1), Rational(0));
  const Poly A[3] = {
      (t1 * m + Poly::constant(Var::m, Rational(1))) / Rational(2),
      ((t1 + t2) * m + Poly::constant(Var::m, Rational(2))) / Rational(2),
      (t2 * m + Poly::constant(Var::m, Rational(1))) / Rational(2),
  };
  const Poly C[3] = {
      ((t1 + Rational(2) * t2) * m + Poly::constant(Var::m, Rational(3))) / Rational(3),
      ((t1 - t2) * m) / Rational(3),
      ((Rational(2) * t1 + t2) * m + Poly::constant(Var::m, Rational(3))) / Rational(3),
  };
  // C_k >= 0 on m >= 0 once theta-normalized, so |C_k| = C_k as polynomials.
  Poly total(Var::m);
  for (int k = 0; k < 3; ++k) {
    Poly term = (A[k] * C[k]) / Rational(4) *
                (Rational(3) * (C[k] * C[k]) - Rational(4) * (A[k] * A[k]));
    total += k % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace

Poly assemble_torsion_poly(const GroupSpec& g, const Weight& lambda) {
  if (theta_normalize(g, lambda) != lambda)
    fail(errc::bad_weight, "assembly expects the theta-normalized representative");
  Poly total(Var::m);
  for (const auto& d : kostant_data(g, lambda)) {
    BiPoly density = reduced_density(g, d.sigma);
    Poly term = integrate_zero_to(affine_abs_from_one(d.lambda), density);
    total += d.length % 2 == 0 ? term : -term;
  }
  return total;
}

TorsionResult l2_torsion(const GroupSpec& g, const Weight& lambda) {
  if (!is_dominant(g, lambda)) fail(errc::not_dominant, "weight is not dominant for " + g.name());
  if (theta_invariant(g, lambda))
    fail(errc::theta_invariant_weight,
         "weight is fixed by the Cartan twist; the torsion-carrying family requires "
         "lambda != theta(lambda)");
  Weight norm = theta_normalize(g, lambda);
  TorsionResult r;
  if (g.family == Family::sl3) {
    r.poly = sl3_closed_form(norm);
    r.prefactor = {Rational(1), 1, 1, -1, {}};
  } else {
    r.poly = assemble_torsion_poly(g, norm);
    SymbolicConstant c = prefactor_constant(g.p, g.q);
    c.vol_x_exp = 1;
    r.prefactor = c;
  }
  r.zero_flag = false;
  return r;
}

LeadingConstant leading_constant(const GroupSpec& g, const Weight& lambda) {
  TorsionResult t = l2_torsion(g, lambda);
  Poly dim = weyl_dim_poly(g, theta_normalize(g, lambda));
  if (t.poly.degree() != dim.degree() + 1)
    fail(errc::degree_mismatch, "torsion polynomial degree is not dim degree + 1");
  LeadingConstant lc;
  lc.value = t.poly.leading() / dim.leading();
  if (lc.value.sign() <= 0)
    fail(errc::identity_failure, "leading torsion constant must be positive");
  Poly residual = t.poly - lc.value * (Poly::monomial(Var::m, Rational(1), 1) * dim);
  lc.residual_degree = residual.degree();
  return lc;
}

Rational euler_ratio(const Rational& weyl_order_g, const Rational& weyl_order_k) {
  if (weyl_order_g.sign() <= 0 || weyl_order_k.sign() <= 0)
    fail(errc::bad_args, "Weyl group orders must be positive");
  Rational chi = weyl_order_g / weyl_order_k;
  if (!chi.is_integer())
    fail(errc::non_integer_ratio, "Weyl order ratio " + chi.to_string() + " is not an integer");
  return chi;
}

EulerCharacteristic euler_characteristic(const FactorDesc& factor, const Poly& dim_tau) {
  EulerCharacteristic e;
  e.dim_tau = dim_tau;
  if (factor.deficiency != 0) {
    e.constant = sym_rational(Rational(0));
    return e;
  }
  if (factor.dim % 2 != 0)
    fail(errc::odd_dual_dimension, "deficiency-zero factor must have even dimension");
  SymbolicConstant c;
  c.rational = (factor.dim / 2) % 2 == 0 ? factor.chi_dual : -factor.chi_dual;
  c.vol_x_exp = 1;
  c.vol_dual_exp = -1;
  e.constant = c;
  return e;
}

TorsionResult product_formula(const DualFactor& factor, const TorsionResult& core) {
  if (factor.dim_x0 < 0 || factor.dim_x0 % 2 != 0)
    fail(errc::odd_dual_dimension, "companion factor dimension must be even and nonnegative");
  TorsionResult r;
  SymbolicConstant sign =
      sym_rational((factor.dim_x0 / 2) % 2 == 0 ? Rational(1) : Rational(-1));
  r.prefactor = core.prefactor * sign * factor.euler_ratio;
  r.zero_flag = core.zero_flag;
  r.poly = core.zero_flag ? Poly(Var::m) : core.poly * factor.dim_tau0;
  return r;
}

}  // namespace torsionlab
