#include "torsionlab/spectrum.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

#include "torsionlab/errors.hpp"

namespace torsionlab {

SU2Char SU2Char::irreducible(long spin) {
  if (spin < 0) fail(errc::bad_args, "negative spin");
  SU2Char c;
  for (long l = -spin; l <= spin; ++l) c.labels_[l] = 1;
  return c;
}

void SU2Char::add(long label, long mult) {
  if (mult == 0) return;
  auto it = labels_.find(label);
  if (it == labels_.end()) {
    labels_[label] = mult;
  } else {
    it->second += mult;
    if (it->second == 0) labels_.erase(it);
  }
}

long SU2Char::multiplicity(long label) const {
  auto it = labels_.find(label);
  return it == labels_.end() ? 0 : it->second;
}

long SU2Char::total_mass() const {
  long m = 0;
  for (const auto& [l, q] : labels_) m += q;
  return m;
}

bool SU2Char::symmetric() const {
  for (const auto& [l, q] : labels_)
    if (multiplicity(-l) != q) return false;
  return true;
}

long SU2Char::max_label() const {
  if (labels_.empty()) fail(errc::bad_args, "empty character");
  return labels_.rbegin()->first;
}

SU2Char SU2Char::tensor(const SU2Char& o) const {
  SU2Char r;
  for (const auto& [la, qa] : labels_)
    for (const auto& [lb, qb] : o.labels_) r.add(la + lb, qa * qb);
  return r;
}

SU2Char SU2Char::adams(unsigned k) const {
  SU2Char r;
  for (const auto& [l, q] : labels_) r.add(l * static_cast<long>(k), q);
  return r;
}

SU2Char SU2Char::exterior(unsigned p) const {
  std::vector<SU2Char> e(p + 1);
  e[0].add(0, 1);
  for (unsigned d = 1; d <= p; ++d) {
    SU2Char acc;
    for (unsigned i = 1; i <= d; ++i) {
      SU2Char term = adams(i).tensor(e[d - i]);
      for (const auto& [l, q] : term.labels()) acc.add(l, i % 2 == 1 ? q : -q);
    }
    SU2Char scaled;
    for (const auto& [l, q] : acc.labels()) {
      if (q % static_cast<long>(d) != 0)
        fail(errc::identity_failure, "exterior power recursion produced a non-integer");
      scaled.add(l, q / static_cast<long>(d));
    }
    e[d] = std::move(scaled);
  }
  return e[p];
}

std::vector<std::pair<long, long>> SU2Char::decompose() const {
  SU2Char rest = *this;
  std::vector<std::pair<long, long>> out;
  while (!rest.is_zero()) {
    long top = rest.labels_.rbegin()->first;
    long mult = rest.labels_.rbegin()->second;
    if (top < 0 || mult < 0)
      fail(errc::negative_multiplicity, "label multiset is not a genuine character");
    for (long l = -top; l <= top; ++l) rest.add(l, -mult);
    if (!rest.is_zero() && rest.labels_.rbegin()->first > top)
      fail(errc::negative_multiplicity, "label multiset is not a genuine character");
    out.emplace_back(top, mult);
  }
  for (const auto& [s, q] : out)
    if (q < 0) fail(errc::negative_multiplicity, "label multiset is not a genuine character");
  return out;
}

Rational su2_casimir(long spin) { return Rational(spin * (spin + 1), 3); }

namespace {

// Freudenthal multiplicities for the rank-two special-linear algebra in
// three-coordinate (sum-normalized) form, highest weight (a, b, 0).
struct Triple {
  long x, y, z;
  friend bool operator==(const Triple& a, const Triple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

long dot3(const Triple& a, const Triple& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Triple sorted_desc(Triple t) {
  std::array<long, 3> v{t.x, t.y, t.z};
  std::sort(v.begin(), v.end(), std::greater<long>());
  return {v[0], v[1], v[2]};
}

struct TripleHash {
  size_t operator()(const Triple& t) const {
    size_t h = std::hash<long>()(t.x);
    h = h * 1000003u ^ std::hash<long>()(t.y);
    h = h * 1000003u ^ std::hash<long>()(t.z);
    return h;
  }
};

}  // namespace

SU2Char sl3_weight_labels(const Weight& lambda, long m) {
  GroupSpec g = make_sl3();
  if (!is_dominant(g, lambda)) fail(errc::not_dominant, "weight is not dominant for sl3");
  if (m < 0) fail(errc::bad_args, "family parameter m must be nonnegative");
  auto tau = weight_input_coords(g, lambda);
  const long t1 = tau[0].to_long(), t2 = tau[1].to_long();
  const long a = m * (t1 + t2), b = m * t2;

  const Triple top{a, b, 0};
  const Triple rho{1, 0, -1};
  const Triple alpha1{1, -1, 0}, alpha2{0, 1, -1}, alpha3{1, 0, -1};
  const long top_norm = dot3({a + 1, b, -1}, {a + 1, b, -1});

  // dominant weights of the representation, by increasing depth
  std::vector<std::vector<Triple>> by_depth;
  std::unordered_map<Triple, long, TripleHash> mult;
  for (long c1 = 0; c1 <= a; ++c1) {
    for (long c2 = 0; c2 <= a + b; ++c2) {
      Triple mu{a - c1, b + c1 - c2, c2};
      if (mu.x < mu.y || mu.y < mu.z) continue;
      size_t depth = static_cast<size_t>(c1 + c2);
      if (by_depth.size() <= depth) by_depth.resize(depth + 1);
      by_depth[depth].push_back(mu);
    }
  }
  for (size_t depth = 0; depth < by_depth.size(); ++depth) {
    for (const Triple& mu : by_depth[depth]) {
      if (depth == 0) {
        mult[mu] = 1;
        continue;
      }
      long num = 0;
      for (const Triple& alpha : {alpha1, alpha2, alpha3}) {
        for (long k = 1;; ++k) {
          Triple nu{mu.x + k * alpha.x, mu.y + k * alpha.y, mu.z + k * alpha.z};
          auto it = mult.find(sorted_desc(nu));
          if (it == mult.end()) break;
          num += it->second * dot3(nu, alpha);
        }
      }
      Triple shifted{mu.x + rho.x, mu.y + rho.y, mu.z + rho.z};
      long den = top_norm - dot3(shifted, shifted);
      if (den <= 0 || (2 * num) % den != 0)
        fail(errc::identity_failure, "multiplicity recursion failed");
      mult[mu] = 2 * num / den;
    }
  }

  SU2Char out;
  for (const auto& [mu, q] : mult) {
    std::array<long, 3> v{mu.x, mu.y, mu.z};
    std::sort(v.begin(), v.end());
    do {
      out.add(v[0] - v[1], q);  // label of (x,y,z) is x - y
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return out;
}

Rational spectral_gap(const GroupSpec& g, const Weight& lambda, long m, int p) {
  if (g.family != Family::sl3) fail(errc::bad_group, "spectral gaps are defined for sl3 only");
  if (p < 0 || p > 5) fail(errc::bad_args, "exterior degree p must be in 0..5");
  if (m < 1) fail(errc::bad_args, "family parameter m must be >= 1");
  Weight norm = theta_invariant(g, lambda) ? lambda : theta_normalize(g, lambda);
  SU2Char nu = SU2Char::irreducible(2).exterior(static_cast<unsigned>(p))
                   .tensor(sl3_weight_labels(norm, m));
  Rational casimir = casimir_poly(g, norm)(Rational(m));
  Rational gap;
  bool first = true;
  for (const auto& [spin, mult] : nu.decompose()) {
    (void)mult;
    Rational cand = casimir - su2_casimir(spin);
    if (first || cand < gap) gap = cand;
    first = false;
  }
  if (first) fail(errc::identity_failure, "empty spectral decomposition");
  return gap;
}

bool convexhull_check(const GroupSpec& g, const Weight& lambda, int samples, std::uint64_t seed) {
  if (g.family != Family::so_odd_odd)
    fail(errc::bad_group, "convex hull check applies to SO families");
  if (!is_dominant(g, lambda)) fail(errc::not_dominant, "weight is not dominant");
  const size_t rank = lambda.size();
  std::vector<Rational> k(rank);
  for (size_t i = 0; i < rank; ++i) k[i] = lambda[i].abs();
  Rational bound(0);
  for (size_t i = 0; i + 1 < rank; ++i) bound += k[i] * k[i];  // drop the smallest square

  std::mt19937_64 rng(seed);
  auto draw = [&rng](unsigned long mod) { return static_cast<size_t>(rng() % mod); };

  for (int s = 0; s < samples; ++s) {
    size_t points = 1 + draw(4);
    std::vector<Rational> combo(rank, Rational(0));
    long wsum = 0;
    std::vector<long> weights(points);
    for (size_t j = 0; j < points; ++j) {
      weights[j] = 1 + static_cast<long>(draw(8));
      wsum += weights[j];
    }
    for (size_t j = 0; j < points; ++j) {
      std::vector<size_t> perm(rank);
      for (size_t i = 0; i < rank; ++i) perm[i] = i;
      for (size_t i = rank; i > 1; --i) std::swap(perm[i - 1], perm[draw(i)]);
      std::uint64_t mask = rng() & ((1ull << rank) - 1);
      if (__builtin_popcountll(mask) % 2 != 0) mask ^= 1ull;  // even number of sign flips
      for (size_t i = 0; i < rank; ++i) {
        Rational val = lambda[perm[i]];
        if (mask & (1ull << i)) val = -val;
        combo[i] += Rational(weights[j]) * val;
      }
    }
    Rational norm_sq(0);
    for (size_t i = 1; i < rank; ++i) norm_sq += combo[i] * combo[i];
    // compare |proj|^2 <= bound after dividing by wsum^2
    if (norm_sq > bound * Rational(wsum) * Rational(wsum)) return false;
  }
  return true;
}

}  // namespace torsionlab
