#pragma once

#include <vector>

#include "torsionlab/root_system.hpp"

namespace torsionlab {

// One exterior-degree block of the nilpotent-cohomology decomposition of the
// representation family with highest weight m*lambda: Weyl-element length,
// spectral parameter lambda(m) (signed; consumers integrate over [0, |lambda|])
// and the Levi highest weight sigma(m).
struct KostantDatum {
  int length = 0;
  Poly lambda{Var::m};
  AffineWeight sigma{WBasis::so_levi, {}};

  friend bool operator==(const KostantDatum& a, const KostantDatum& b) {
    return a.length == b.length && a.lambda == b.lambda && a.sigma == b.sigma;
  }
};

// The half of the decomposition that determines the torsion polynomial:
// n+1 entries for SO (lengths 0..n), 3 entries for SL3 (lengths 0,1,2).
// Requires lambda dominant and theta-normalized.
std::vector<KostantDatum> kostant_data(const GroupSpec& g, const Weight& lambda);

// |sigma(m) + rho_M|^2 - |rho_G|^2 as a polynomial in m.
Poly c_const(const GroupSpec& g, const AffineWeight& sigma);

struct CasimirSplitCheck {
  int length = 0;
  Poly lhs{Var::m};  // Casimir eigenvalue of the family
  Poly rhs{Var::m};  // lambda^2 + c(sigma)
  bool ok = false;
};

struct CasimirSplitReport {
  Poly casimir{Var::m};
  std::vector<CasimirSplitCheck> checks;
  bool all_ok = false;
};

// Checks the Casimir factorization lambda(m)^2 + c(sigma(m)) = casimir(m) for
// every entry of kostant_data.
CasimirSplitReport verify_casimir_split(const GroupSpec& g, const Weight& lambda);

}  // namespace torsionlab
