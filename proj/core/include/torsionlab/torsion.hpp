#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torsionlab/plancherel.hpp"

namespace torsionlab {

// Exact multiple of pi^a * vol(X)^b * vol(dual)^c, optionally times named
// extra symbols (label, exponent). Extra factors are kept sorted by label.
struct SymbolicConstant {
  Rational rational{0};
  int pi_exp = 0;
  int vol_x_exp = 0;
  int vol_dual_exp = 0;
  std::vector<std::pair<std::string, int>> extra;

  bool is_zero() const { return rational.is_zero(); }
  SymbolicConstant& operator*=(const SymbolicConstant& o);
  friend SymbolicConstant operator*(SymbolicConstant a, const SymbolicConstant& b) {
    return a *= b;
  }
  friend bool operator==(const SymbolicConstant& a, const SymbolicConstant& b) {
    return a.rational == b.rational && a.pi_exp == b.pi_exp && a.vol_x_exp == b.vol_x_exp &&
           a.vol_dual_exp == b.vol_dual_exp && a.extra == b.extra;
  }
  std::string to_string() const;
};

SymbolicConstant sym_rational(const Rational& r);

// Closed-form torsion growth: log of the torsion equals
// prefactor * poly(m) for the representation family with highest weight
// m*lambda. zero_flag marks the trivially-vanishing case (poly is then 0).
struct TorsionResult {
  Poly poly{Var::m};
  SymbolicConstant prefactor;
  bool zero_flag = false;

  friend bool operator==(const TorsionResult& a, const TorsionResult& b) {
    return a.poly == b.poly && a.prefactor == b.prefactor && a.zero_flag == b.zero_flag;
  }
};

// floor((p+q)/2) - floor(p/2) - floor(q/2); defined for any p >= q >= 1.
int deficiency_so(int p, int q);
int deficiency(const GroupSpec& g);

struct VanishingReport {
  std::string group;
  int deficiency = 0;
  bool even_dim = false;
  bool zero_flag = false;  // torsion identically trivial
};

// Accepts so(p,q) for any integers p >= q >= 1, and sl3.
VanishingReport classify_vanishing(const std::string& group_text);

// C_{p,q}: the constant multiplying vol(X) * P_lambda(m); rational * pi / vol(dual).
SymbolicConstant prefactor_constant(int p, int q);

// Generic assembly: alternating sum over kostant_data of the reduced density
// integrated from 0 to |lambda_k(m)|. Requires lambda theta-normalized.
Poly assemble_torsion_poly(const GroupSpec& g, const Weight& lambda);

TorsionResult l2_torsion(const GroupSpec& g, const Weight& lambda);

struct LeadingConstant {
  Rational value{0};
  int residual_degree = Poly::deg_neg_inf;  // degree of poly - value*m*dim
};

// poly = value * m * dim(m) + lower order; requires deg poly = deg dim + 1.
LeadingConstant leading_constant(const GroupSpec& g, const Weight& lambda);

// Euler characteristic of the compact dual, |W_G| / |W_K|; must be an integer.
Rational euler_ratio(const Rational& weyl_order_g, const Rational& weyl_order_k);

// Descriptor of a compact-type factor: deficiency, (even) dimension, and the
// Euler characteristic of its compact dual.
struct FactorDesc {
  int deficiency = 0;
  int dim = 0;
  Rational chi_dual{0};
};

struct EulerCharacteristic {
  SymbolicConstant constant;  // (-1)^{dim/2} * chi_dual * vol(X) / vol(dual), or 0
  Poly dim_tau{Var::m};
};

EulerCharacteristic euler_characteristic(const FactorDesc& factor, const Poly& dim_tau);

// Even-dimensional companion factor in a product space: its dimension, the
// symbolic ratio chi(dual)/vol(dual) and the dimension polynomial of its
// representation family.
struct DualFactor {
  int dim_x0 = 0;
  SymbolicConstant euler_ratio;
  Poly dim_tau0{Var::m};
};

// Torsion of a product: multiplies the polynomial by dim_tau0 and the
// prefactor by (-1)^{dim_x0/2} * euler_ratio.
TorsionResult product_formula(const DualFactor& factor, const TorsionResult& core);

}  // namespace torsionlab
