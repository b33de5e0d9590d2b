#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "torsionlab/root_system.hpp"

namespace torsionlab {

// Finite multiset of integer weight labels of a compact SO(3) action, in
// units of the basic torus character. A genuine character is symmetric under
// label negation and decomposes into irreducibles chi_s with label set
// {-s..s}.
class SU2Char {
 public:
  using Map = std::map<long, long>;

  SU2Char() = default;
  static SU2Char irreducible(long spin);

  void add(long label, long mult);
  const Map& labels() const { return labels_; }
  long multiplicity(long label) const;
  long total_mass() const;
  bool is_zero() const { return labels_.empty(); }
  bool symmetric() const;
  long max_label() const;  // requires nonzero

  SU2Char tensor(const SU2Char& o) const;
  // Labels scaled by k (power-sum operation on the underlying torus weights).
  SU2Char adams(unsigned k) const;
  // p-th exterior power via the alternating Newton recursion
  // p*e_p = sum_{i=1..p} (-1)^{i-1} adams(i) * e_{p-i}.
  SU2Char exterior(unsigned p) const;

  // Multiplicity list [(spin, mult)] by stripping highest labels; rejects
  // multisets that are not nonnegative sums of irreducible label sets.
  std::vector<std::pair<long, long>> decompose() const;

  friend bool operator==(const SU2Char& a, const SU2Char& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const SU2Char& a, const SU2Char& b) { return !(a == b); }

 private:
  Map labels_;  // label -> multiplicity, nonzero entries only
};

// Casimir eigenvalue spin(spin+1)/3 of the spin-s type under the normalization
// used by casimir_poly.
Rational su2_casimir(long spin);

// Torus labels (with multiplicity) of the rank-two special-linear irreducible
// representation with highest weight m*lambda, from exact Freudenthal
// multiplicities. lambda in fundamental coordinates via make_weight.
SU2Char sl3_weight_labels(const Weight& lambda, long m);

// min over constituents of Lambda^p(coadjoint 5-dim type) tensor the
// restriction of the family member at m: Casimir(family) - Casimir(type).
// Requires the SL3 group and 0 <= p <= 5.
Rational spectral_gap(const GroupSpec& g, const Weight& lambda, long m, int p);

// Randomized exact check that convex combinations of even-signed permutation
// images of lambda, after deleting the first coordinate, have squared norm at
// most the sum of the largest n squared coordinates. SO families only.
bool convexhull_check(const GroupSpec& g, const Weight& lambda, int samples, std::uint64_t seed);

}  // namespace torsionlab
