#include <vector>

#include "common/oracles.hpp"
#include "doctest.h"
#include "torsionlab/errors.hpp"
#include "torsionlab/plancherel.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

AffineWeight const_sigma(WBasis b, std::vector<long> values) {
  std::vector<AffineCoord> c;
  for (long v : values) c.push_back({Rational(0), Rational(v)});
  return AffineWeight(b, std::move(c));
}

}  // namespace

TEST_CASE("rank-one density is a shifted square") {
  GroupSpec g = make_so(3, 1);
  for (long k = 0; k <= 6; ++k) {
    BiPoly d = reduced_density(g, const_sigma(WBasis::so_levi, {k}));
    Poly in_t = d.eval_m(Rational(0));
    CHECK(in_t == Poly(Var::t, {Rational(-k * k), Rational(0), Rational(1)}));
  }
}

TEST_CASE("special linear density matches the closed form") {
  GroupSpec s = make_sl3();
  for (long k = 0; k <= 20; ++k) {
    BiPoly d = reduced_density(s, const_sigma(WBasis::sl3_levi, {k}));
    // (9/8)(k+1)(t^2 - ((k+1)/3)^2)
    Rational a = Rational(9, 8) * Rational(k + 1);
    Poly expected(Var::t, {-a * Rational((k + 1) * (k + 1), 9), Rational(0), a});
    CHECK(d.eval_m(Rational(0)) == expected);
  }
}

TEST_CASE("density is even of full degree") {
  GroupSpec g = make_so(5, 3);
  AffineWeight sigma(WBasis::so_levi,
                     {AffineCoord{Rational(2), Rational(1)}, AffineCoord{Rational(1), Rational(0)},
                      AffineCoord{Rational(1), Rational(0)}});
  BiPoly d = reduced_density(g, sigma);
  CHECK(d.even_in_t());
  CHECK(d.degree_t() == 2 * g.n);

  // evaluation consistency against the slicewise product
  for (long m0 = 1; m0 <= 3; ++m0) {
    Poly slice = d.eval_m(Rational(m0));
    for (long t0 = 0; t0 <= 3; ++t0)
      CHECK(slice(Rational(t0)) == d.eval(Rational(t0), Rational(m0)));
  }
}

TEST_CASE("density rejects non-dominant parameters") {
  GroupSpec g = make_so(5, 3);
  try {
    reduced_density(g, const_sigma(WBasis::so_levi, {1, 2, 0}));
    FAIL_CHECK("increasing sigma accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_dominant);
  }
}

TEST_CASE("even interpolation basis on decreasing nodes") {
  PiQ pq = pi_and_q({Rational(2), Rational(1)});
  REQUIRE(pq.pi.size() == 2);
  REQUIRE(pq.q.size() == 2);
  CHECK(pq.pi[0] == Poly(Var::t, {Rational(-1, 3), Rational(0), Rational(1, 3)}));
  CHECK(pq.pi[1] == Poly(Var::t, {Rational(4, 3), Rational(0), Rational(-1, 3)}));
  CHECK(pq.q[0] == pq.pi[0]);
  CHECK(pq.q[1] == Poly::constant(Var::t, Rational(1)));

  std::vector<Rational> nodes = {Rational(9, 2), Rational(3), Rational(1), Rational(1, 2)};
  PiQ big = pi_and_q(nodes);
  for (size_t k = 0; k < nodes.size(); ++k) {
    for (size_t j = 0; j < nodes.size(); ++j) {
      Rational expect = k == j ? Rational(1) : Rational(0);
      CHECK(big.pi[k](nodes[j]) == expect);
      CHECK(big.pi[k](-nodes[j]) == expect);
    }
    CHECK(big.pi[k].degree() <= 2 * static_cast<int>(nodes.size()) - 2);
  }
  CHECK(big.q.back() == Poly::constant(Var::t, Rational(1)));
}

TEST_CASE("interpolation basis input validation") {
  for (auto bad : {std::vector<Rational>{},
                   std::vector<Rational>{Rational(1), Rational(2)},
                   std::vector<Rational>{Rational(2), Rational(2)},
                   std::vector<Rational>{Rational(2), Rational(0)},
                   std::vector<Rational>{Rational(-1)}}) {
    CAPTURE(bad.size());
    try {
      pi_and_q(bad);
      FAIL_CHECK("invalid node multiset accepted");
    } catch (const error& e) {
      CHECK(e.code() == errc::bad_args);
    }
  }
}

TEST_CASE("density cross identity on a small family") {
  // density at sigma_k, evaluated at integer m, equals
  // (-1)^k dim(m) * pi_k on the node set |lambda_j(m)|
  GroupSpec g = make_so(5, 1);
  Weight w = make_weight(g, {Rational(2), Rational(1), Rational(1)});
  auto data = kostant_data(g, w);
  Poly dim = weyl_dim_poly(g, w);
  for (long m0 = 1; m0 <= 4; ++m0) {
    std::vector<Rational> nodes;
    for (const auto& d : data) nodes.push_back(d.lambda(Rational(m0)).abs());
    PiQ pq = pi_and_q(nodes);
    for (size_t k = 0; k < data.size(); ++k) {
      Poly got = reduced_density(g, data[k].sigma).eval_m(Rational(m0));
      Poly want = (k % 2 == 0 ? Rational(1) : Rational(-1)) * dim(Rational(m0)) * pq.pi[k];
      CHECK(got == want);
    }
  }
}
