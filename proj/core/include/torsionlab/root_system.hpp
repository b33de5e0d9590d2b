#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/poly.hpp"

namespace torsionlab {

enum class Family : unsigned char { so_odd_odd, sl3 };

// Descriptor for the two supported group families: SO0(p,q) with p, q odd
// (p >= q >= 1, p > 1) and SL(3,R).
struct GroupSpec {
  Family family = Family::sl3;
  int p = 0;     // SO only
  int q = 0;     // SO only
  int n = 0;     // restricted-root count parameter; dim of the symmetric space is 2n+1 (SO) or 5 (SL3)
  int v = 0;     // complementary even dimension parameter
  int rank = 0;  // rank of the complexified Lie algebra

  std::string name() const;
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.family == b.family && a.p == b.p && a.q == b.q;
  }
};

GroupSpec make_so(int p, int q);
GroupSpec make_sl3();

// Strict grammar: "so(p,q)" with p, q odd, or "sl3".
GroupSpec parse_group(const std::string& text);
// Relaxed grammar for the vanishing classifier: any integers p >= q >= 1.
std::optional<std::pair<int, int>> parse_so_any(const std::string& text);

// Weight coordinate bases. so_full is the orthonormal e-basis of the Cartan
// subalgebra (rank n+1); so_levi is its restriction to e_2..e_{n+1}. sl3_full
// is the (f1, f2) basis with Gram diag(1, 1/3); sl3_levi is the f2 line.
enum class WBasis : unsigned char { so_full, so_levi, sl3_full, sl3_levi };

const char* basis_name(WBasis b);

class Weight {
 public:
  Weight(WBasis basis, std::vector<Rational> coords)
      : basis_(basis), coords_(std::move(coords)) {}

  WBasis basis() const { return basis_; }
  const std::vector<Rational>& coords() const { return coords_; }
  size_t size() const { return coords_.size(); }
  const Rational& operator[](size_t i) const { return coords_[i]; }

  Weight operator+(const Weight& o) const;
  Weight operator-() const;
  friend Weight operator*(const Rational& s, const Weight& w);

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.basis_ == b.basis_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

 private:
  WBasis basis_;
  std::vector<Rational> coords_;
};

Rational inner(const Weight& a, const Weight& b);
Rational norm2(const Weight& w);
// Levi basis -> full basis, prepending a zero first coordinate.
Weight embed_levi(const Weight& w);

// Weight whose coordinates are affine functions slope*m + offset.
struct AffineCoord {
  Rational slope;
  Rational offset;
  friend bool operator==(const AffineCoord& a, const AffineCoord& b) {
    return a.slope == b.slope && a.offset == b.offset;
  }
};

class AffineWeight {
 public:
  AffineWeight(WBasis basis, std::vector<AffineCoord> coords)
      : basis_(basis), coords_(std::move(coords)) {}

  WBasis basis() const { return basis_; }
  const std::vector<AffineCoord>& coords() const { return coords_; }
  size_t size() const { return coords_.size(); }
  int rank() const { return static_cast<int>(coords_.size()); }
  const AffineCoord& coord(int i) const { return coords_[static_cast<size_t>(i)]; }

  Weight at(const Rational& m0) const;
  AffineWeight embedded() const;  // Levi -> full basis

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.basis_ == b.basis_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const AffineWeight& a, const AffineWeight& b) { return !(a == b); }

 private:
  WBasis basis_;
  std::vector<AffineCoord> coords_;
};

// <fixed, w> as a polynomial in m (same basis required).
Poly inner_poly(const Weight& fixed, const AffineWeight& w);

struct RootSystem {
  GroupSpec group;
  std::vector<Weight> positive_roots;    // full basis
  std::vector<Weight> positive_roots_m;  // Levi subsystem, embedded in the full basis
  Weight rho_g;
  Weight rho_m;  // embedded in the full basis; first coordinate 0
};

RootSystem build_group(const GroupSpec& g);

// Dominant integral highest weight from user coordinates: e-coordinates
// (k_1..k_{n+1}) for SO, fundamental-weight coordinates (tau_1, tau_2) for
// SL3. Validates integrality and dominance.
Weight make_weight(const GroupSpec& g, const std::vector<Rational>& coords);
// Inverse of make_weight's conversion (SL3: back to (tau_1, tau_2)).
std::vector<Rational> weight_input_coords(const GroupSpec& g, const Weight& w);

bool is_dominant(const GroupSpec& g, const Weight& w);
bool theta_invariant(const GroupSpec& g, const Weight& w);
// Cartan-twist: negate the last e-coordinate (SO) or swap (tau_1, tau_2) (SL3).
Weight theta_twist(const GroupSpec& g, const Weight& w);
// Representative of {w, theta(w)} with positive last coordinate (SO) resp.
// tau_1 > tau_2 (SL3). Requires w not theta-invariant.
Weight theta_normalize(const GroupSpec& g, const Weight& w);

// True when sigma is a dominant integral Levi weight for every integer m >= 1.
bool affine_dominant_from_one(const GroupSpec& g, const AffineWeight& sigma);

// dim of the irreducible representation with highest weight m*lambda, as a
// polynomial in m (Weyl dimension formula).
Poly weyl_dim_poly(const GroupSpec& g, const Weight& lambda);
// Casimir eigenvalue |m*lambda + rho|^2 - |rho|^2 as a polynomial in m.
Poly casimir_poly(const GroupSpec& g, const Weight& lambda);

}  // namespace torsionlab
