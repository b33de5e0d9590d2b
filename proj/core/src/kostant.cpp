#include "torsionlab/kostant.hpp"

#include "torsionlab/errors.hpp"

namespace torsionlab {

std::vector<KostantDatum> kostant_data(const GroupSpec& g, const Weight& lambda) {
  if (!is_dominant(g, lambda)) fail(errc::not_dominant, "weight is not dominant for " + g.name());
  if (theta_normalize(g, lambda) != lambda)
    fail(errc::bad_weight, "kostant_data expects the theta-normalized representative");

  std::vector<KostantDatum> out;
  if (g.family == Family::sl3) {
    auto tau = weight_input_coords(g, lambda);
    const Rational t1 = tau[0], t2 = tau[1];
    // lambda parameters C1, C2, -C3; Levi labels 2*A_k - 1 on f2
    out.push_back({0, Poly::affine(Var::m, (t1 + Rational(2) * t2) / Rational(3), Rational(1)),
                   AffineWeight(WBasis::sl3_levi, {{t1, Rational(0)}})});
    out.push_back({1, Poly::affine(Var::m, (t1 - t2) / Rational(3), Rational(0)),
                   AffineWeight(WBasis::sl3_levi, {{t1 + t2, Rational(1)}})});
    out.push_back({2, Poly::affine(Var::m, -(Rational(2) * t1 + t2) / Rational(3), Rational(-1)),
                   AffineWeight(WBasis::sl3_levi, {{t2, Rational(0)}})});
    return out;
  }

  const int n = g.n;
  const auto& tau = lambda.coords();  // k_1..k_{n+1}, k_{n+1} > 0
  for (int k = 0; k <= n; ++k) {
    KostantDatum d;
    d.length = k;
    d.lambda = Poly::affine(Var::m, tau[static_cast<size_t>(k)], Rational(n - k));
    std::vector<AffineCoord> sig;
    sig.reserve(static_cast<size_t>(n));
    for (int j = 0; j < k; ++j) sig.push_back({tau[static_cast<size_t>(j)], Rational(1)});
    for (int j = k + 1; j <= n; ++j) sig.push_back({tau[static_cast<size_t>(j)], Rational(0)});
    d.sigma = AffineWeight(WBasis::so_levi, std::move(sig));
    out.push_back(std::move(d));
  }
  return out;
}

Poly c_const(const GroupSpec& g, const AffineWeight& sigma) {
  RootSystem rs = build_group(g);
  AffineWeight full = sigma.embedded();
  if (full.size() != rs.rho_m.size())
    fail(errc::basis_mismatch, "sigma has the wrong rank for " + g.name());
  // |sigma + rho_M|^2 expanded coordinate-wise against the diagonal Gram
  Poly total(Var::m);
  for (size_t i = 0; i < full.size(); ++i) {
    Poly coord = Poly::affine(Var::m, full.coords()[i].slope,
                              full.coords()[i].offset + rs.rho_m[i]);
    std::vector<Rational> unit(full.size(), Rational(0));
    unit[i] = 1;
    Rational gram = norm2(Weight(full.basis(), std::move(unit)));
    total += gram * (coord * coord);
  }
  total -= Poly::constant(Var::m, norm2(rs.rho_g));
  return total;
}

CasimirSplitReport verify_casimir_split(const GroupSpec& g, const Weight& lambda) {
  CasimirSplitReport report;
  Weight norm = theta_normalize(g, lambda);
  report.casimir = casimir_poly(g, norm);
  report.all_ok = true;
  for (const auto& d : kostant_data(g, norm)) {
    CasimirSplitCheck chk;
    chk.length = d.length;
    chk.lhs = report.casimir;
    chk.rhs = d.lambda * d.lambda + c_const(g, d.sigma);
    chk.ok = chk.lhs == chk.rhs;
    report.all_ok = report.all_ok && chk.ok;
    report.checks.push_back(std::move(chk));
  }
  return report;
}

}  // namespace torsionlab
