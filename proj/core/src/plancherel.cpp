#include "torsionlab/plancherel.hpp"

#include "torsionlab/errors.hpp"

namespace torsionlab {

BiPoly reduced_density(const GroupSpec& g, const AffineWeight& sigma) {
  if (!affine_dominant_from_one(g, sigma))
    fail(errc::not_dominant, "sigma is not a dominant integral Levi weight for " + g.name());
  RootSystem rs = build_group(g);
  AffineWeight shifted = [&] {
    AffineWeight full = sigma.embedded();
    std::vector<AffineCoord> c(full.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i].offset += rs.rho_m[i];
    return AffineWeight(full.basis(), std::move(c));
  }();

  std::vector<Rational> e1(static_cast<size_t>(rs.rho_g.size()), Rational(0));
  e1[0] = 1;
  Weight a_unit(shifted.basis(), std::move(e1));

  // numerator product of factors <alpha,e1>*t + <alpha, sigma+rho_M>(m),
  // divided once by the constant prod <alpha, rho_G>
  BiPoly num = BiPoly::constant(Rational(1));
  Rational den(1);
  for (const auto& alpha : rs.positive_roots) {
    Poly amount = inner_poly(alpha, shifted);
    num = num * BiPoly::affine_in_t(Poly::constant(Var::m, inner(alpha, a_unit)), amount);
    den *= inner(alpha, rs.rho_g);
  }
  return num / den;
}

PiQ pi_and_q(const std::vector<Rational>& lambdas) {
  const size_t count = lambdas.size();
  if (count == 0) fail(errc::bad_args, "empty spectral parameter list");
  for (size_t i = 0; i < count; ++i) {
    if (lambdas[i].sign() <= 0) fail(errc::bad_args, "spectral parameters must be positive");
    if (i + 1 < count && !(lambdas[i] > lambdas[i + 1]))
      fail(errc::bad_args, "spectral parameters must be strictly decreasing");
  }
  PiQ out;
  out.pi.reserve(count);
  out.q.reserve(count);
  Poly running(Var::t);
  for (size_t k = 0; k < count; ++k) {
    Poly num = Poly::constant(Var::t, Rational(1));
    Rational den(1);
    for (size_t j = 0; j < count; ++j) {
      if (j == k) continue;
      num = num * Poly(Var::t, {-(lambdas[j] * lambdas[j]), Rational(0), Rational(1)});
      den *= lambdas[k] * lambdas[k] - lambdas[j] * lambdas[j];
    }
    Poly pik = num / den;
    running += pik;
    out.pi.push_back(std::move(pik));
    out.q.push_back(running);
  }
  return out;
}

}  // namespace torsionlab
