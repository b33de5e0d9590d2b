#include "torsionlab/verify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/serialize.hpp"
#include "torsionlab/spectrum.hpp"

namespace torsionlab {
namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t s) : eng(s) {}
  // modulo draw, deterministic across platforms
  long upto(long hi) {
    return hi <= 0 ? 0 : static_cast<long>(eng() % static_cast<std::uint64_t>(hi + 1));
  }
  long between(long lo, long hi) { return lo + upto(hi - lo); }
};

struct SuiteRun {
  SuiteOutcome out;

  void check(bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) {
      out.passed = false;
      if (out.failures.size() < 8) out.failures.push_back(what);
    }
  }
};

std::string ints_text(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string coords_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

std::vector<Rational> to_rationals(const std::vector<int>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

std::vector<GroupSpec> so_groups(int max_rank) {
  std::vector<GroupSpec> out;
  for (int p = 3; p <= 2 * max_rank - 1; p += 2)
    for (int q = 1; q <= p && (p + q) / 2 <= max_rank; q += 2) out.push_back(make_so(p, q));
  return out;
}

// nonincreasing tuples maxc >= k_1 >= ... >= k_len >= minc
void each_desc_tuple(int len, int maxc, int minc,
                     const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur(len);
  std::function<void(int, int)> rec = [&](int pos, int hi) {
    if (pos == len) {
      f(cur);
      return;
    }
    for (int v = hi; v >= minc; --v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, maxc);
}

Weight random_normalized_weight(const GroupSpec& g, Rng& rng, int maxc) {
  if (g.family == Family::sl3) {
    long t2 = rng.upto(maxc - 1);
    long t1 = rng.between(t2 + 1, maxc);
    return make_weight(g, {Rational(t1), Rational(t2)});
  }
  std::vector<long> v(g.rank);
  for (auto& x : v) x = rng.between(1, maxc);
  std::sort(v.rbegin(), v.rend());
  std::vector<Rational> coords(v.begin(), v.end());
  return make_weight(g, coords);
}

Poly expected_sl3_density(long k) {
  const Rational scale = Rational(9, 8) * Rational(k + 1);
  const Rational root = Rational(k + 1, 3);
  return Poly(Var::t, {-scale * root * root, Rational(0), scale});
}

void suite_exactalg(SuiteRun& run, const VerifyOptions& opt, Rng& rng) {
  const int iters = opt.quick ? 30 : 60;
  auto rand_poly = [&](Var v, int maxdeg) {
    std::vector<Rational> c(static_cast<size_t>(rng.upto(maxdeg)) + 1);
    for (auto& x : c) x = Rational(rng.between(-9, 9), rng.between(1, 4));
    return Poly(v, std::move(c));
  };
  for (int it = 0; it < iters; ++it) {
    Poly a = rand_poly(Var::m, 5), b = rand_poly(Var::m, 5), c = rand_poly(Var::m, 4);
    run.check((a + b) * c == a * c + b * c, "distributivity failed");
    run.check((a * b) * c == a * (b * c), "associativity failed");
    run.check(a * b == b * a, "commutativity failed");
    Rational x(rng.between(-6, 6), rng.between(1, 3));
    run.check((a * b)(x) == a(x) * b(x), "evaluation is not multiplicative");
    run.check((a + b).compose(c) == a.compose(c) + b.compose(c), "composition not additive");
    Rational lo(rng.between(-4, 4)), mid(rng.between(-4, 4)), hi(rng.between(-4, 4));
    run.check(definite_integral(a, lo, mid) + definite_integral(a, mid, hi) ==
                  definite_integral(a, lo, hi),
              "integral not additive over subintervals");
  }
  for (int it = 0; it < iters / 3; ++it) {
    int n = static_cast<int>(rng.between(1, 5));
    std::vector<std::pair<Rational, Rational>> nodes;
    Rational x(0);
    for (int i = 0; i <= n; ++i) {
      x += Rational(rng.between(1, 9), rng.between(1, 3));
      nodes.emplace_back(x, Rational(rng.between(-5, 5), rng.between(1, 4)));
    }
    Poly p = interpolate_even(nodes);
    bool through = true, even = true;
    for (const auto& [xi, vi] : nodes) through = through && p(xi) == vi && p(-xi) == vi;
    for (int d = 1; d <= p.degree(); d += 2) even = even && p.coeff(d).is_zero();
    run.check(through, "even interpolant misses a node");
    run.check(even && p.degree() <= 2 * n, "even interpolant has wrong shape");
  }
  try {
    interpolate_even({{Rational(1), Rational(0)}, {Rational(-1), Rational(2)}});
    run.check(false, "duplicate abscissa was not rejected");
  } catch (const error& e) {
    run.check(e.code() == errc::duplicate_abscissa, "wrong error for duplicate abscissa");
  }
  try {
    Poly bad = Poly::monomial(Var::m, Rational(1), 1) + Poly::monomial(Var::t, Rational(1), 1);
    run.check(false, "variable mismatch was not rejected");
  } catch (const error& e) {
    run.check(e.code() == errc::variable_mismatch, "wrong error for variable mismatch");
  }
  run.check(binomial(6, 3) == Rational(20) && factorial(5) == Rational(120) &&
                pow(Rational(2, 3), 3) == Rational(8, 27),
            "combinatorial helpers broken");
  for (int it = 0; it < iters / 3; ++it) {
    BiPoly bp = BiPoly::affine_in_t(rand_poly(Var::m, 3), rand_poly(Var::m, 3));
    bp = bp * bp + BiPoly::constant(rand_poly(Var::m, 2));
    Rational t0(rng.between(-5, 5), rng.between(1, 3)), m0(rng.between(-5, 5));
    run.check(bp.eval_t(t0)(m0) == bp.eval_m(m0)(t0) && bp.eval(t0, m0) == bp.eval_t(t0)(m0),
              "bivariate evaluations disagree");
  }
}

void suite_rootsys(SuiteRun& run, const VerifyOptions& opt, Rng& rng) {
  for (const GroupSpec& g : so_groups(opt.max_rank)) {
    RootSystem rs = build_group(g);
    const int n = g.n;
    run.check(static_cast<int>(rs.positive_roots.size()) == n * (n + 1),
              g.name() + ": wrong positive root count");
    run.check(static_cast<int>(rs.positive_roots_m.size()) == n * (n - 1),
              g.name() + ": wrong Levi root count");
    bool norms = true;
    for (const auto& a : rs.positive_roots) norms = norms && norm2(a) == Rational(2);
    run.check(norms, g.name() + ": root norms are off");
    Weight half = rs.rho_g;
    {
      Weight sum(half.basis(), std::vector<Rational>(half.size(), Rational(0)));
      for (const auto& a : rs.positive_roots) sum = sum + a;
      run.check(Rational(1, 2) * sum == rs.rho_g, g.name() + ": rho is not the half sum");
      Weight summ(half.basis(), std::vector<Rational>(half.size(), Rational(0)));
      for (const auto& a : rs.positive_roots_m) summ = summ + a;
      run.check(Rational(1, 2) * summ == rs.rho_m, g.name() + ": Levi rho is not the half sum");
    }
    Weight triv = make_weight(g, std::vector<Rational>(g.rank, Rational(0)));
    run.check(weyl_dim_poly(g, triv) == Poly::constant(Var::m, Rational(1)),
              g.name() + ": trivial weight dimension is not 1");
    std::vector<Rational> e1(g.rank, Rational(0));
    e1[0] = Rational(1);
    run.check(weyl_dim_poly(g, make_weight(g, e1))(Rational(1)) == Rational(2 * n + 2),
              g.name() + ": standard representation dimension is off");
    for (int it = 0; it < 4; ++it) {
      Weight w = random_normalized_weight(g, rng, 4);
      run.check(theta_twist(g, theta_twist(g, w)) == w, g.name() + ": twist is not an involution");
      run.check(weyl_dim_poly(g, theta_twist(g, w)) == weyl_dim_poly(g, w),
                g.name() + ": dimension not twist invariant");
      run.check(casimir_poly(g, theta_twist(g, w)) == casimir_poly(g, w),
                g.name() + ": Casimir not twist invariant");
      run.check(theta_normalize(g, theta_twist(g, w)) == w,
                g.name() + ": normalization does not pick the positive representative");
    }
  }
  {
    GroupSpec g = make_sl3();
    RootSystem rs = build_group(g);
    run.check(rs.positive_roots.size() == 3 && rs.positive_roots_m.size() == 1,
              "sl3 root counts are off");
    Weight sum(rs.rho_g.basis(), {Rational(0), Rational(0)});
    for (const auto& a : rs.positive_roots) sum = sum + a;
    run.check(Rational(1, 2) * sum == rs.rho_g, "sl3 rho is not the half sum");
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b) {
        Weight w = make_weight(g, {Rational(a), Rational(b)});
        Rational expect = Rational((a + 1) * (b + 1) * (a + b + 2), 2);
        run.check(weyl_dim_poly(g, w)(Rational(1)) == expect, "sl3 dimension formula is off");
        run.check(weight_input_coords(g, w) == std::vector<Rational>{Rational(a), Rational(b)},
                  "sl3 coordinate round-trip failed");
      }
  }
  auto expect_code = [&](const std::function<void()>& f, errc code, const std::string& what) {
    try {
      f();
      run.check(false, what + ": no error raised");
    } catch (const error& e) {
      run.check(e.code() == code, what + ": got " + error_code_name(e.code()));
    }
  };
  expect_code([] { parse_group("so(4,2)"); }, errc::bad_group, "even-even group accepted");
  expect_code([] { parse_group("so(1,3)"); }, errc::bad_group, "q > p accepted");
  expect_code([] { parse_group("su(3)"); }, errc::bad_group, "unknown family accepted");
  expect_code([] { make_weight(make_so(5, 3), {Rational(1), Rational(2), Rational(0),
                                               Rational(0)}); },
              errc::not_dominant, "non-dominant weight accepted");
  expect_code([] { make_weight(make_sl3(), {Rational(1, 2), Rational(0)}); }, errc::bad_weight,
              "non-integral weight accepted");
  expect_code([] { theta_normalize(make_so(3, 1), Weight(WBasis::so_full,
                                                         {Rational(1), Rational(0)})); },
              errc::theta_invariant_weight, "twist-fixed weight normalized");
}

void suite_kostant(SuiteRun& run, const VerifyOptions& opt, Rng&) {
  const int cap = opt.quick ? 4 : std::min(opt.max_rank, 6);
  const int maxc = opt.quick ? 3 : 4;
  for (const GroupSpec& g : so_groups(cap)) {
    each_desc_tuple(g.rank, maxc, 1, [&](const std::vector<int>& tuple) {
      Weight w = make_weight(g, to_rationals(tuple));
      CasimirSplitReport rep = verify_casimir_split(g, w);
      run.check(rep.all_ok, g.name() + " " + ints_text(tuple) + ": Casimir split failed");
      auto data = kostant_data(g, w);
      run.check(static_cast<int>(data.size()) == g.n + 1,
                g.name() + " " + ints_text(tuple) + ": wrong block count");
      bool decreasing = true, dominant = true;
      for (size_t k = 0; k + 1 < data.size(); ++k) {
        Poly diff = data[k].lambda - data[k + 1].lambda;
        decreasing = decreasing && diff.coeff(1).sign() >= 0 && diff(Rational(1)).sign() > 0;
      }
      for (const auto& d : data) dominant = dominant && affine_dominant_from_one(g, d.sigma);
      run.check(decreasing, g.name() + " " + ints_text(tuple) + ": lambdas not decreasing");
      run.check(dominant, g.name() + " " + ints_text(tuple) + ": sigma not Levi dominant");
    });
  }
  GroupSpec g = make_sl3();
  for (long t1 = 1; t1 <= maxc; ++t1)
    for (long t2 = 0; t2 < t1; ++t2) {
      Weight w = make_weight(g, {Rational(t1), Rational(t2)});
      CasimirSplitReport rep = verify_casimir_split(g, w);
      run.check(rep.all_ok, "sl3 (" + std::to_string(t1) + "," + std::to_string(t2) +
                                "): Casimir split failed");
      run.check(kostant_data(g, w).size() == 3, "sl3: wrong block count");
    }
}

void suite_interpolation(SuiteRun& run, const VerifyOptions& opt, Rng& rng) {
  const int cases = opt.quick ? 40 : 200;
  const int derived = opt.quick ? 10 : 60;
  std::vector<GroupSpec> groups = so_groups(opt.max_rank);
  groups.push_back(make_sl3());

  auto run_tuple = [&](const std::vector<Rational>& lambdas, const std::string& label) {
    const size_t n = lambdas.size() - 1;
    PiQ pq = pi_and_q(lambdas);
    run.check(pq.pi.size() == n + 1 && pq.q.size() == n + 1, label + ": wrong basis size");
    run.check(pq.q[n] == Poly::constant(Var::t, Rational(1)), label + ": top partial sum is not 1");
    bool kronecker = true;
    for (size_t k = 0; k <= n; ++k)
      for (size_t j = 0; j <= n; ++j)
        kronecker = kronecker && pq.pi[k](lambdas[j]) == Rational(k == j ? 1 : 0);
    run.check(kronecker, label + ": interpolation basis is not Kronecker");
    Rational lhs(0), rhs(0);
    bool positive = true;
    for (size_t k = 0; k <= n; ++k) {
      Rational upper = lambdas[k];
      Rational lower = k + 1 <= n ? lambdas[k + 1] : Rational(0);
      lhs += definite_integral(pq.pi[k], Rational(0), upper);
      Rational seg = definite_integral(pq.q[k], lower, upper);
      positive = positive && seg.sign() > 0;
      rhs += seg;
    }
    run.check(lhs == rhs, label + ": telescoped integral identity failed");
    run.check(positive, label + ": a segment integral is not positive");
  };

  for (int it = 0; it < cases - derived; ++it) {
    int n = static_cast<int>(rng.between(1, 6));
    std::vector<Rational> asc;
    Rational x(0);
    for (int i = 0; i <= n; ++i) {
      x += Rational(rng.between(1, 20), rng.between(1, 6));
      asc.push_back(x);
    }
    std::vector<Rational> lambdas(asc.rbegin(), asc.rend());
    run_tuple(lambdas, "random tuple #" + std::to_string(it));
  }
  for (int it = 0; it < derived; ++it) {
    const GroupSpec& g = groups[static_cast<size_t>(rng.upto(static_cast<long>(groups.size()) - 1))];
    Weight w = random_normalized_weight(g, rng, 3);
    Rational m0(rng.between(1, 6));
    std::vector<Rational> values;
    for (const auto& d : kostant_data(g, w)) values.push_back(d.lambda(m0).abs());
    std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) {
      return b < a;
    });
    run_tuple(values, "spectral tuple for " + g.name() + " " +
                          coords_text(weight_input_coords(g, w)));
  }
}

void suite_cross(SuiteRun& run, const VerifyOptions& opt, Rng& rng) {
  const int cap = opt.quick ? 4 : std::min(opt.max_rank, 6);
  for (const GroupSpec& g : so_groups(cap)) {
    std::vector<Weight> weights;
    weights.push_back(make_weight(g, std::vector<Rational>(g.rank, Rational(1))));
    for (int it = 0; it < (opt.quick ? 1 : 2); ++it)
      weights.push_back(random_normalized_weight(g, rng, 3));
    for (const Weight& w : weights) {
      const std::string label = g.name() + " " + coords_text(w.coords());
      auto data = kostant_data(g, w);
      Poly dim = weyl_dim_poly(g, w);
      std::vector<BiPoly> densities;
      int deg_m = 0;
      for (const auto& d : data) {
        densities.push_back(reduced_density(g, d.sigma));
        deg_m = std::max(deg_m, densities.back().degree_m());
      }
      bool ok = true;
      for (long m0 = 1; m0 <= deg_m + 1 && ok; ++m0) {
        std::vector<Rational> values;
        for (const auto& d : data) values.push_back(d.lambda(Rational(m0)));
        PiQ pq = pi_and_q(values);
        Rational dim_val = dim(Rational(m0));
        for (size_t k = 0; k < data.size() && ok; ++k) {
          Rational sign(data[k].length % 2 == 0 ? 1 : -1);
          ok = densities[k].eval_m(Rational(m0)) == sign * dim_val * pq.pi[k];
        }
      }
      run.check(ok, label + ": density does not match the interpolation basis");
    }
  }
}

void suite_theta(SuiteRun& run, const VerifyOptions& opt, Rng&) {
  const int maxc = opt.quick ? 2 : 3;
  std::vector<GroupSpec> groups = {make_so(3, 1), make_so(5, 1), make_so(5, 3), make_so(7, 5),
                                   make_so(9, 7)};
  for (const GroupSpec& g : groups) {
    each_desc_tuple(g.rank, maxc, 1, [&](const std::vector<int>& tuple) {
      Weight w = make_weight(g, to_rationals(tuple));
      Weight tw = theta_twist(g, w);
      run.check(l2_torsion(g, w) == l2_torsion(g, tw),
                g.name() + " " + ints_text(tuple) + ": twist changes the torsion");
    });
  }
  GroupSpec g = make_sl3();
  for (long t1 = 0; t1 <= maxc; ++t1)
    for (long t2 = 0; t2 <= maxc; ++t2) {
      if (t1 == t2) continue;
      Weight w = make_weight(g, {Rational(t1), Rational(t2)});
      run.check(l2_torsion(g, w) == l2_torsion(g, theta_twist(g, w)),
                "sl3 (" + std::to_string(t1) + "," + std::to_string(t2) +
                    "): twist changes the torsion");
    }
}

void suite_routes(SuiteRun& run, const VerifyOptions& opt, Rng&) {
  GroupSpec g = make_sl3();
  const long cap = opt.quick ? 3 : 4;
  for (long t1 = 1; t1 <= cap; ++t1)
    for (long t2 = 0; t2 < t1; ++t2) {
      Weight w = make_weight(g, {Rational(t1), Rational(t2)});
      Poly generic = assemble_torsion_poly(g, w);
      Poly closed = l2_torsion(g, w).poly;
      run.check(generic == closed, "sl3 (" + std::to_string(t1) + "," + std::to_string(t2) +
                                       "): assembly routes disagree");
    }
  const long kmax = opt.quick ? 8 : 20;
  for (long k = 0; k <= kmax; ++k) {
    AffineWeight sigma(WBasis::sl3_levi, {AffineCoord{Rational(0), Rational(k)}});
    BiPoly density = reduced_density(g, sigma);
    run.check(density.degree_m() <= 0 &&
                  density == BiPoly::lift_t_poly(expected_sl3_density(k)),
              "sl3 principal density is off at k = " + std::to_string(k));
  }
}

void suite_constants(SuiteRun& run, const VerifyOptions&, Rng&) {
  GroupSpec sl3 = make_sl3();
  {
    TorsionResult t = l2_torsion(sl3, make_weight(sl3, {Rational(1), Rational(0)}));
    run.check(t.poly == Poly(Var::m, {Rational(1, 2), Rational(4, 3), Rational(1), Rational(2, 9)}),
              "sl3 fundamental torsion polynomial is off");
    run.check(t.prefactor == SymbolicConstant{Rational(1), 1, 1, -1, {}},
              "sl3 prefactor is off");
    run.check(!t.zero_flag, "sl3 torsion flagged as zero");
  }
  for (auto tau : {std::pair<long, long>{1, 0}, std::pair<long, long>{0, 1}}) {
    LeadingConstant lc =
        leading_constant(sl3, make_weight(sl3, {Rational(tau.first), Rational(tau.second)}));
    run.check(lc.value == Rational(4, 9), "sl3 fundamental leading constant is not 4/9");
    run.check(lc.residual_degree <= 2, "sl3 leading residual too large");
  }
  {
    TorsionResult t = l2_torsion(sl3, make_weight(sl3, {Rational(2), Rational(1)}));
    run.check(t.poly.degree() == 4 && t.poly.leading() == Rational(55, 18),
              "sl3 (2,1) leading coefficient is not 55/18");
  }
  {
    GroupSpec g = make_so(3, 1);
    TorsionResult t = l2_torsion(g, make_weight(g, {Rational(1), Rational(1)}));
    run.check(t.poly == Poly(Var::m, {Rational(1, 3), Rational(2), Rational(2)}),
              "so(3,1) fundamental torsion polynomial is off");
    run.check(t.prefactor == SymbolicConstant{Rational(-1), 1, 1, -1, {}},
              "so(3,1) prefactor is off");
    LeadingConstant lc = leading_constant(g, make_weight(g, {Rational(1), Rational(1)}));
    run.check(lc.value == Rational(1), "so(3,1) leading constant is not 1");
  }
  auto expect_const = [&](int p, int q, long r) {
    run.check(prefactor_constant(p, q) == SymbolicConstant{Rational(r), 1, 0, -1, {}},
              "constant for so(" + std::to_string(p) + "," + std::to_string(q) + ") is off");
  };
  expect_const(3, 1, -1);
  expect_const(5, 3, -6);
  expect_const(7, 5, -20);
  for (const GroupSpec& g : so_groups(6)) {
    LeadingConstant lc =
        leading_constant(g, make_weight(g, std::vector<Rational>(g.rank, Rational(1))));
    run.check(lc.value == Rational(1), g.name() + ": all-ones leading constant is not 1");
  }
}

void suite_sandwich(SuiteRun& run, const VerifyOptions& opt, Rng& rng) {
  const int instances = opt.quick ? 10 : 50;
  const long mmax = opt.quick ? 8 : 20;
  std::vector<GroupSpec> groups = so_groups(opt.max_rank);
  for (int it = 0; it < instances; ++it) {
    const GroupSpec& g = groups[static_cast<size_t>(rng.upto(static_cast<long>(groups.size()) - 1))];
    Weight w = random_normalized_weight(g, rng, 4);
    Poly poly = assemble_torsion_poly(g, w);
    Poly dim = weyl_dim_poly(g, w);
    const Rational tau1 = w[0];
    const Rational tau_last = w[w.size() - 1];
    bool ok = true;
    for (long m = 1; m <= mmax && ok; ++m) {
      Rational pv = poly(Rational(m));
      Rational dv = dim(Rational(m));
      Rational lower = tau_last * Rational(m) * dv;
      Rational upper = Rational(g.rank) * (Rational(m) * tau1 + Rational(g.n)) * dv;
      ok = lower <= pv && pv <= upper;
    }
    run.check(ok, g.name() + " " + coords_text(w.coords()) + ": growth bounds violated");
  }
}

void suite_vanishing(SuiteRun& run, const VerifyOptions&, Rng&) {
  for (int p = 1; p <= 9; ++p)
    for (int q = 1; q <= p; ++q) {
      VanishingReport rep =
          classify_vanishing("so(" + std::to_string(p) + "," + std::to_string(q) + ")");
      const bool both_odd = (p % 2 == 1) && (q % 2 == 1);
      run.check(rep.zero_flag == !both_odd,
                rep.group + ": vanishing flag disagrees with the parity rule");
      run.check(rep.deficiency == (both_odd ? 1 : 0), rep.group + ": deficiency is off");
      run.check(rep.even_dim == (p * q % 2 == 0), rep.group + ": dimension parity is off");
    }
  VanishingReport sl = classify_vanishing("sl3");
  run.check(sl.deficiency == 1 && !sl.zero_flag && !sl.even_dim,
            "sl3 classification is off");
}

void suite_spectrum(SuiteRun& run, const VerifyOptions& opt, Rng&) {
  GroupSpec g = make_sl3();
  SU2Char spin2 = SU2Char::irreducible(2);
  std::vector<SU2Char> ext;
  const long expected_dims[6] = {1, 5, 10, 10, 5, 1};
  bool dims_ok = true, dual_ok = true;
  for (int p = 0; p <= 5; ++p) {
    ext.push_back(spin2.exterior(static_cast<unsigned>(p)));
    dims_ok = dims_ok && ext.back().total_mass() == expected_dims[p] && ext.back().symmetric();
  }
  for (int p = 0; p <= 5; ++p) dual_ok = dual_ok && ext[static_cast<size_t>(p)] == ext[static_cast<size_t>(5 - p)];
  run.check(dims_ok, "exterior power dimensions are not (1,5,10,10,5,1)");
  run.check(dual_ok, "exterior powers are not Hodge dual as characters");
  run.check(ext[2].decompose() ==
                std::vector<std::pair<long, long>>({{3, 1}, {1, 1}}),
            "degree-2 exterior power does not split as spins 3 and 1");

  const std::vector<std::pair<long, long>> taus = {{1, 0}, {2, 0}, {2, 1}, {3, 1}};
  const long mass_mmax = opt.quick ? 6 : 12;
  for (auto [t1, t2] : taus) {
    Weight w = make_weight(g, {Rational(t1), Rational(t2)});
    Poly dim = weyl_dim_poly(g, w);
    for (long m = 1; m <= mass_mmax; ++m) {
      SU2Char labels = sl3_weight_labels(w, m);
      run.check(Rational(labels.total_mass()) == dim(Rational(m)),
                "restriction mass misses the dimension at m = " + std::to_string(m));
      run.check(labels.symmetric(), "restriction labels are not symmetric");
      run.check(labels.max_label() == m * (t1 + t2), "top restriction label is off");
      auto parts = labels.decompose();
      run.check(!parts.empty(), "restriction does not decompose");
    }
  }

  const long quad_mmax = opt.quick ? 16 : 40;
  for (auto [t1, t2] : taus) {
    Weight w = make_weight(g, {Rational(t1), Rational(t2)});
    const Rational quad = Rational((t1 - t2) * (t1 - t2), 9);
    std::vector<std::vector<Rational>> gaps(6);
    for (long m = 1; m <= quad_mmax; ++m) {
      SU2Char labels = sl3_weight_labels(w, m);
      Rational casimir = casimir_poly(g, w)(Rational(m));
      for (int p = 0; p <= 5; ++p) {
        SU2Char nu = ext[static_cast<size_t>(p)].tensor(labels);
        bool first = true;
        Rational gap;
        for (const auto& [spin, mult] : nu.decompose()) {
          (void)mult;
          Rational cand = casimir - su2_casimir(spin);
          if (first || cand < gap) gap = cand;
          first = false;
        }
        gaps[static_cast<size_t>(p)].push_back(gap);
      }
    }
    for (int p = 0; p <= 5; ++p) {
      const auto& gs = gaps[static_cast<size_t>(p)];
      std::vector<Rational> defect;  // C so that gap >= quad*m^2 - C*m
      for (long m = 1; m <= quad_mmax; ++m)
        defect.push_back((quad * Rational(m * m) - gs[static_cast<size_t>(m - 1)]) /
                         Rational(m));
      Rational cbound = defect[0];
      for (const auto& c : defect)
        if (cbound < c) cbound = c;
      bool holds = true;
      for (long m = 1; m <= quad_mmax; ++m)
        holds = holds &&
                gs[static_cast<size_t>(m - 1)] >= quad * Rational(m * m) - cbound * Rational(m);
      run.check(holds, "quadratic lower bound fails");
      bool tail = true;
      for (size_t i = defect.size() - std::min<size_t>(defect.size() - 1, 8); i < defect.size();
           ++i)
        tail = tail && !(defect[i - 1] < defect[i]);
      run.check(tail, "linear defect is not settling for (" + std::to_string(t1) + "," +
                          std::to_string(t2) + ") p = " + std::to_string(p));
    }
  }

  Weight trivial = make_weight(g, {Rational(0), Rational(0)});
  for (int p = 0; p <= 5; ++p) {
    Rational gap = spectral_gap(g, trivial, 1, p);
    run.check(gap.sign() <= 0, "trivial family has a positive gap");
    if (p == 0 || p == 5)
      run.check(gap.is_zero(), "trivial family gap nonzero at the boundary degrees");
  }
  {
    Rational gap = spectral_gap(g, make_weight(g, {Rational(1), Rational(0)}), 1, 0);
    run.check(gap == Rational(10, 9), "reference gap value changed");
  }
}

void suite_convexhull(SuiteRun& run, const VerifyOptions& opt, Rng& rng) {
  const int samples = opt.quick ? 1500 : 10000;
  const int lambdas = opt.quick ? 8 : 20;
  std::vector<GroupSpec> groups = so_groups(opt.max_rank);
  for (int it = 0; it < lambdas; ++it) {
    const GroupSpec& g = groups[static_cast<size_t>(rng.upto(static_cast<long>(groups.size()) - 1))];
    std::vector<long> v(g.rank);
    for (auto& x : v) x = rng.upto(6);
    std::sort(v.rbegin(), v.rend());
    if (v.back() > 0 && rng.upto(1) == 1) v.back() = -v.back();
    std::vector<Rational> coords(v.begin(), v.end());
    Weight w = make_weight(g, coords);
    run.check(convexhull_check(g, w, samples, static_cast<std::uint64_t>(rng.eng())),
              g.name() + " " + coords_text(coords) + ": hull bound violated");
  }
}

void suite_golden(SuiteRun& run, const VerifyOptions& opt, Rng&) {
  if (opt.golden_path.empty()) {
    run.check(true, "");
    return;
  }
  std::ifstream in(opt.golden_path);
  if (!in) fail(errc::io_error, "cannot open golden corpus at " + opt.golden_path);
  std::string line;
  long records = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    GoldenRecord rec = parse_golden_record(line);
    ++records;
    GroupSpec g = parse_group(rec.group);
    TorsionResult t = l2_torsion(g, make_weight(g, rec.weight));
    run.check(t.poly.coeffs() == rec.poly_coeffs && t.prefactor == rec.prefactor,
              rec.group + " " + coords_text(rec.weight) + ": drifted from the golden record");
  }
  run.check(records > 0, "golden corpus is empty");
}

using SuiteFn = void (*)(SuiteRun&, const VerifyOptions&, Rng&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"exactalg", suite_exactalg},   {"rootsys", suite_rootsys},
    {"kostant", suite_kostant},     {"interpolation", suite_interpolation},
    {"cross", suite_cross},         {"routes", suite_routes},
    {"constants", suite_constants}, {"theta", suite_theta},
    {"sandwich", suite_sandwich},   {"vanishing", suite_vanishing},
    {"spectrum", suite_spectrum},   {"convexhull", suite_convexhull},
    {"golden", suite_golden},
};

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.name);
  return out;
}

SuiteOutcome run_verify_suite(const std::string& name, const VerifyOptions& opt) {
  for (size_t i = 0; i < std::size(kSuites); ++i) {
    if (name != kSuites[i].name) continue;
    SuiteRun run;
    run.out.name = name;
    Rng rng(opt.seed * 1000003ull + i + 1);
    try {
      kSuites[i].fn(run, opt, rng);
    } catch (const error& e) {
      run.out.passed = false;
      run.out.failures.push_back(std::string("aborted: ") + error_code_name(e.code()) + ": " +
                                 e.what());
    } catch (const std::exception& e) {
      run.out.passed = false;
      run.out.failures.push_back(std::string("aborted: ") + e.what());
    }
    return run.out;
  }
  fail(errc::bad_args, "unknown verify suite: " + name);
}

VerifyReport run_verify(const std::vector<std::string>& names, const VerifyOptions& opt) {
  VerifyReport report;
  report.seed = opt.seed;
  if (names.empty()) {
    for (const auto& s : kSuites) report.suites.push_back(run_verify_suite(s.name, opt));
  } else {
    for (const auto& n : names) report.suites.push_back(run_verify_suite(n, opt));
  }
  return report;
}

std::string to_json(const VerifyReport& r) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : r.suites)
    suites.push_back(nlohmann::json{{"name", s.name},
                                    {"passed", s.passed},
                                    {"checks", s.checks},
                                    {"failures", s.failures}});
  nlohmann::json j{{"command", "verify"},
                   {"seed", r.seed},
                   {"suites", suites},
                   {"passed", r.all_passed()}};
  return j.dump(2) + "\n";
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& s : r.suites) {
    os << "suite " << s.name << ": " << (s.passed ? "pass" : "FAIL") << " (" << s.checks
       << " checks)\n";
    for (const auto& f : s.failures) os << "  " << f << "\n";
  }
  os << (r.all_passed() ? "all suites passed" : "verification FAILED") << " (seed " << r.seed
     << ")\n";
  return os.str();
}

}  // namespace torsionlab
