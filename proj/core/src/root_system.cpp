#include "torsionlab/root_system.hpp"

#include <cctype>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

Rational gram_entry(WBasis b, size_t i) {
  switch (b) {
    case WBasis::so_full:
    case WBasis::so_levi:
      return Rational(1);
    case WBasis::sl3_full:
      return i == 0 ? Rational(1) : Rational(1, 3);
    case WBasis::sl3_levi:
      return Rational(1, 3);
  }
  return Rational(1);
}

void require_same_basis(const WBasis a, const WBasis b) {
  if (a != b) fail(errc::basis_mismatch, "weights live in different coordinate bases");
}

bool affine_nonneg_from_one(const Rational& slope, const Rational& offset) {
  // slope*m + offset >= 0 for every integer m >= 1
  return slope.sign() >= 0 && (slope + offset).sign() >= 0;
}

}  // namespace

std::string GroupSpec::name() const {
  if (family == Family::sl3) return "sl3";
  std::ostringstream os;
  os << "so(" << p << "," << q << ")";
  return os.str();
}

GroupSpec make_so(int p, int q) {
  if (p < q || q < 1 || p <= 1 || p % 2 == 0 || q % 2 == 0)
    fail(errc::bad_group, "so(p,q) requires odd p >= q >= 1 with p > 1");
  GroupSpec g;
  g.family = Family::so_odd_odd;
  g.p = p;
  g.q = q;
  g.n = (p + q - 2) / 2;
  g.v = (p - 1) * (q - 1) / 2;
  g.rank = g.n + 1;
  return g;
}

GroupSpec make_sl3() {
  GroupSpec g;
  g.family = Family::sl3;
  g.n = 1;
  g.v = 1;
  g.rank = 2;
  return g;
}

std::optional<std::pair<int, int>> parse_so_any(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("so(", 0) != 0 || s.back() != ')') return std::nullopt;
  std::string body = s.substr(3, s.size() - 4);
  auto comma = body.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    size_t used = 0;
    int p = std::stoi(body.substr(0, comma), &used);
    if (used != comma) return std::nullopt;
    std::string qs = body.substr(comma + 1);
    int q = std::stoi(qs, &used);
    if (used != qs.size()) return std::nullopt;
    if (p < q || q < 1) return std::nullopt;
    return std::make_pair(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

GroupSpec parse_group(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "sl3") return make_sl3();
  if (auto pq = parse_so_any(s)) {
    if (pq->first % 2 == 0 || pq->second % 2 == 0 || pq->first <= 1)
      fail(errc::bad_group, text + ": spectral data requires odd p and q (p > 1)");
    return make_so(pq->first, pq->second);
  }
  fail(errc::bad_group, "unrecognized group: " + text);
}

Weight Weight::operator+(const Weight& o) const {
  require_same_basis(basis_, o.basis_);
  if (coords_.size() != o.coords_.size()) fail(errc::basis_mismatch, "weight rank mismatch");
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return Weight(basis_, std::move(c));
}

Weight Weight::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return Weight(basis_, std::move(c));
}

Weight operator*(const Rational& s, const Weight& w) {
  std::vector<Rational> c(w.coords_);
  for (auto& x : c) x *= s;
  return Weight(w.basis_, std::move(c));
}

Rational inner(const Weight& a, const Weight& b) {
  require_same_basis(a.basis(), b.basis());
  if (a.size() != b.size()) fail(errc::basis_mismatch, "weight rank mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += gram_entry(a.basis(), i) * a[i] * b[i];
  return s;
}

Rational norm2(const Weight& w) { return inner(w, w); }

Weight embed_levi(const Weight& w) {
  WBasis full;
  switch (w.basis()) {
    case WBasis::so_levi: full = WBasis::so_full; break;
    case WBasis::sl3_levi: full = WBasis::sl3_full; break;
    default: return w;
  }
  std::vector<Rational> c;
  c.reserve(w.size() + 1);
  c.push_back(Rational(0));
  for (const auto& x : w.coords()) c.push_back(x);
  return Weight(full, std::move(c));
}

Weight AffineWeight::at(const Rational& m0) const {
  std::vector<Rational> c;
  c.reserve(coords_.size());
  for (const auto& a : coords_) c.push_back(a.slope * m0 + a.offset);
  return Weight(basis_, std::move(c));
}

AffineWeight AffineWeight::embedded() const {
  WBasis full;
  switch (basis_) {
    case WBasis::so_levi: full = WBasis::so_full; break;
    case WBasis::sl3_levi: full = WBasis::sl3_full; break;
    default: return *this;
  }
  std::vector<AffineCoord> c;
  c.reserve(coords_.size() + 1);
  c.push_back({Rational(0), Rational(0)});
  for (const auto& x : coords_) c.push_back(x);
  return AffineWeight(full, std::move(c));
}

Poly inner_poly(const Weight& fixed, const AffineWeight& w) {
  require_same_basis(fixed.basis(), w.basis());
  if (fixed.size() != w.size()) fail(errc::basis_mismatch, "weight rank mismatch");
  Rational slope(0), offset(0);
  for (size_t i = 0; i < w.size(); ++i) {
    Rational g = gram_entry(w.basis(), i) * fixed[i];
    slope += g * w.coords()[i].slope;
    offset += g * w.coords()[i].offset;
  }
  return Poly::affine(Var::m, slope, offset);
}

const char* basis_name(WBasis b) {
  switch (b) {
    case WBasis::so_full: return "e";
    case WBasis::so_levi: return "em";
    case WBasis::sl3_full: return "f";
    case WBasis::sl3_levi: return "fm";
  }
  return "?";
}

RootSystem build_group(const GroupSpec& g) {
  if (g.family == Family::sl3) {
    auto W = [](long a, long b) { return Weight(WBasis::sl3_full, {Rational(a), Rational(b)}); };
    RootSystem rs{g,
                  {W(0, 2), W(1, 1), W(1, -1)},
                  {W(0, 2)},
                  W(1, 1),
                  W(0, 1)};
    return rs;
  }
  const int rank = g.rank;
  std::vector<Weight> roots, roots_m;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<Rational> minus(rank, Rational(0)), plus(rank, Rational(0));
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      roots.emplace_back(WBasis::so_full, minus);
      roots.emplace_back(WBasis::so_full, plus);
      if (i >= 1) {
        roots_m.emplace_back(WBasis::so_full, minus);
        roots_m.emplace_back(WBasis::so_full, plus);
      }
    }
  }
  std::vector<Rational> rho(rank), rho_m(rank, Rational(0));
  for (int i = 0; i < rank; ++i) rho[static_cast<size_t>(i)] = Rational(rank - 1 - i);
  for (int i = 1; i < rank; ++i) rho_m[static_cast<size_t>(i)] = Rational(rank - 1 - i);
  return RootSystem{g, std::move(roots), std::move(roots_m),
                    Weight(WBasis::so_full, std::move(rho)),
                    Weight(WBasis::so_full, std::move(rho_m))};
}

Weight make_weight(const GroupSpec& g, const std::vector<Rational>& coords) {
  if (g.family == Family::sl3) {
    if (coords.size() != 2) fail(errc::bad_weight, "sl3 weights take two coordinates (tau1,tau2)");
    for (const auto& c : coords) {
      if (!c.is_integer()) fail(errc::bad_weight, "sl3 weight coordinates must be integers");
      if (c.sign() < 0) fail(errc::not_dominant, "sl3 dominant weights need tau1, tau2 >= 0");
    }
    // tau1*omega1 + tau2*omega2 with omega1 = f1/3 + f2, omega2 = 2*f1/3
    Rational t1 = coords[0], t2 = coords[1];
    return Weight(WBasis::sl3_full, {t1 / Rational(3) + Rational(2) * t2 / Rational(3), t1});
  }
  if (static_cast<int>(coords.size()) != g.rank)
    fail(errc::bad_weight, g.name() + " weights take " + std::to_string(g.rank) + " coordinates");
  for (const auto& c : coords)
    if (!c.is_integer()) fail(errc::bad_weight, "SO weight coordinates must be integers");
  Weight w(WBasis::so_full, coords);
  if (!is_dominant(g, w))
    fail(errc::not_dominant, "coordinates must satisfy k1 >= ... >= k_n >= |k_{n+1}|");
  return w;
}

std::vector<Rational> weight_input_coords(const GroupSpec& g, const Weight& w) {
  if (g.family == Family::sl3) {
    // f-coordinates (a, b) -> (tau1, tau2) = (b, (3a - b)/2)
    Rational t1 = w[1];
    Rational t2 = (Rational(3) * w[0] - w[1]) / Rational(2);
    return {t1, t2};
  }
  return w.coords();
}

bool is_dominant(const GroupSpec& g, const Weight& w) {
  if (g.family == Family::sl3) {
    if (w.basis() != WBasis::sl3_full || w.size() != 2) return false;
    auto tau = weight_input_coords(g, w);
    return tau[0].is_integer() && tau[1].is_integer() && tau[0].sign() >= 0 && tau[1].sign() >= 0;
  }
  if (w.basis() != WBasis::so_full || static_cast<int>(w.size()) != g.rank) return false;
  for (const auto& c : w.coords())
    if (!c.is_integer()) return false;
  for (size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return w[w.size() - 2] >= w[w.size() - 1].abs();
}

bool theta_invariant(const GroupSpec& g, const Weight& w) {
  return theta_twist(g, w) == w;
}

Weight theta_twist(const GroupSpec& g, const Weight& w) {
  if (g.family == Family::sl3) {
    auto tau = weight_input_coords(g, w);
    return make_weight(g, {tau[1], tau[0]});
  }
  std::vector<Rational> c(w.coords());
  c.back() = -c.back();
  return Weight(w.basis(), std::move(c));
}

Weight theta_normalize(const GroupSpec& g, const Weight& w) {
  if (theta_invariant(g, w))
    fail(errc::theta_invariant_weight, "weight is fixed by the Cartan twist");
  if (g.family == Family::sl3) {
    auto tau = weight_input_coords(g, w);
    return tau[0] > tau[1] ? w : theta_twist(g, w);
  }
  return w.coords().back().sign() > 0 ? w : theta_twist(g, w);
}

Poly weyl_dim_poly(const GroupSpec& g, const Weight& lambda) {
  if (!is_dominant(g, lambda)) fail(errc::not_dominant, "weight is not dominant for " + g.name());
  RootSystem rs = build_group(g);
  // product of integer-affine numerators divided by the constant denominator once
  Poly num = Poly::constant(Var::m, Rational(1));
  Rational den(1);
  for (const auto& alpha : rs.positive_roots) {
    num = num * Poly::affine(Var::m, inner(lambda, alpha), inner(rs.rho_g, alpha));
    den *= inner(rs.rho_g, alpha);
  }
  return num / den;
}

Poly casimir_poly(const GroupSpec& g, const Weight& lambda) {
  if (!is_dominant(g, lambda)) fail(errc::not_dominant, "weight is not dominant for " + g.name());
  RootSystem rs = build_group(g);
  std::vector<Rational> c = {Rational(0), Rational(2) * inner(lambda, rs.rho_g), norm2(lambda)};
  return Poly(Var::m, std::move(c));
}

bool affine_dominant_from_one(const GroupSpec& g, const AffineWeight& sigma) {
  if (g.family == Family::sl3) {
    if (sigma.basis() != WBasis::sl3_levi || sigma.size() != 1) return false;
    const auto& a = sigma.coords()[0];
    return a.slope.is_integer() && a.offset.is_integer() &&
           affine_nonneg_from_one(a.slope, a.offset);
  }
  if (sigma.basis() != WBasis::so_levi || static_cast<int>(sigma.size()) != g.n) return false;
  for (const auto& a : sigma.coords())
    if (!a.slope.is_integer() || !a.offset.is_integer()) return false;
  for (size_t i = 0; i + 2 < sigma.size(); ++i) {
    const auto &hi = sigma.coords()[i], &lo = sigma.coords()[i + 1];
    if (!affine_nonneg_from_one(hi.slope - lo.slope, hi.offset - lo.offset)) return false;
  }
  if (sigma.size() >= 2) {
    const auto &hi = sigma.coords()[sigma.size() - 2], &lo = sigma.coords()[sigma.size() - 1];
    if (!affine_nonneg_from_one(hi.slope - lo.slope, hi.offset - lo.offset)) return false;
    if (!affine_nonneg_from_one(hi.slope + lo.slope, hi.offset + lo.offset)) return false;
  }
  return true;
}

}  // namespace torsionlab
