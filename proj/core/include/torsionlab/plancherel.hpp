#pragma once

#include <vector>

#include "torsionlab/kostant.hpp"

namespace torsionlab {

// Plancherel density of the principal series attached to sigma, with the
// group-dependent constant stripped: product over positive roots alpha of
// <alpha, sigma(m) + rho_M + t*e_1> / <alpha, rho_G>. Even in t of degree 2n;
// coefficients are polynomials in m. sigma must be Levi-dominant for every
// integer m >= 1.
BiPoly reduced_density(const GroupSpec& g, const AffineWeight& sigma);

// Even Lagrange basis on the node set {±lambda_0, ..., ±lambda_n} and its
// partial sums: pi[k] is 1 at ±lambda_k and 0 at the other nodes;
// q[k] = pi[0] + ... + pi[k]. Requires lambda strictly decreasing and
// positive. q[n] is identically 1.
struct PiQ {
  std::vector<Poly> pi;
  std::vector<Poly> q;
};

PiQ pi_and_q(const std::vector<Rational>& lambdas);

}  // namespace torsionlab
