// Randomised invariants with fixed seeds.
#include "doctest.h"
#include "penner/boundary.hpp"
#include "penner/catalog.hpp"
#include "penner/factor.hpp"
#include "penner/spectral.hpp"
#include "random_inputs.hpp"

using namespace penner;
using namespace testing_support;

namespace {
RatPoly contractible_limit(int n) {
  RatPoly p = RatPoly(std::vector<mpq_class>{0, 1});
  for (int t = 0; t < n - 2; ++t) p = p * RatPoly(std::vector<mpq_class>{-1, 1});
  return p;
}
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("contractible paths collapse to x(x-1)^(n-2)") {
    Rng rng(1001);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = uniform(rng, 2, 8);
      auto om = random_connected_omega(rng, n, 0.4, 5);
      auto g = graph_of(om);
      auto gamma = random_contractible_path(rng, g, uniform(rng, 1, n), uniform(rng, 0, 5));
      CAPTURE(trial);
      CHECK(f_gamma(BoundaryPoint(om), gamma).charpoly == contractible_limit(n));
    }
  }

  TEST_CASE("boundary limit invariants") {
    Rng rng(1002);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = uniform(rng, 2, 8);
      auto om = random_connected_omega(rng, n, 0.5, 5);
      auto g = graph_of(om);
      auto gamma = random_covering_path(rng, g, uniform(rng, 0, 6));
      BoundaryPoint bp(om);
      auto lm = f_gamma(bp, gamma);
      CAPTURE(trial);
      CHECK(lm.charpoly.coeff(0) == 0);
      CHECK(lm.charpoly.coeff(1) != 0);
      CHECK(complexity(lm.charpoly) <= static_cast<int>(rank_exact(om)) - 1);
      // basis vectors lie in W
      for (const auto& b : lm.w_basis) {
        Rational s = 0;
        for (int t = 0; t < n; ++t) s += om(gamma[0] - 1, t) * b[t];
        CHECK(s == 0);
      }
      // projection identity along i1 -> i2 -> i -> i2 -> i3
      const int i1 = uniform(rng, 1, n);
      const int i2 = random_neighbour(rng, g, i1);
      const int i = random_neighbour(rng, g, i2);
      const int i3 = random_neighbour(rng, g, i2);
      CHECK(q_arrow(bp, i3, i2) * q_arrow(bp, i2, i) * q_arrow(bp, i, i2) * q_arrow(bp, i2, i1) ==
            q_arrow(bp, i3, i2) * q_arrow(bp, i2, i1));
    }
  }

  TEST_CASE("homotopy and rotation invariance") {
    Rng rng(1003);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = uniform(rng, 2, 7);
      auto om = random_connected_omega(rng, n, 0.5, 4);
      auto g = graph_of(om);
      auto gamma = random_covering_path(rng, g, uniform(rng, 0, 5));
      BoundaryPoint bp(om);
      const int pos = uniform(rng, 1, static_cast<int>(gamma.size()));
      const int v = random_neighbour(rng, g, gamma[pos - 1]);
      CHECK(homotopy_invariance_check(bp, gamma, pos, v));
      const int r = uniform(rng, 1, static_cast<int>(gamma.size()) - 1);
      std::vector<int> rot(gamma.begin() + r, gamma.end());
      rot.insert(rot.end(), gamma.begin(), gamma.begin() + r);
      CHECK(f_gamma(bp, rot).charpoly == f_gamma(bp, gamma).charpoly);
    }
  }

  TEST_CASE("algebraic structure of general products") {
    Rng rng(1004);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = uniform(rng, 2, 8);
      const bool bip = trial % 2 == 1;
      auto om = random_connected_omega(rng, n, 0.4, 3, bip);
      auto gamma = random_general_gamma(rng, n, uniform(rng, 0, 4));
      TwistWord w(gamma, random_powers(rng, gamma.size(), 3));
      auto m = twist_product_int(om, w);
      CHECK(determinant(m) == 1);
      auto chi = char_poly_exact(m);
      CHECK(abs(chi.coeff(0)) == 1);
      const std::size_t r = rank_exact(om);
      auto [e, red] = structure_split(chi, n, r);
      CHECK(e == n - static_cast<int>(r));
      CHECK(red.eval(1) != 0);
      CHECK(complexity(chi) == static_cast<int>(r));
      for (auto& [f, mult] : factor_monic(chi).factors) CHECK(abs(f.coeff(0)) == 1);
      if (bip) {
        CHECK(symplectic_check(om, to_rational(m)));
        CHECK(is_reciprocal(red, true));
      }
    }
  }

  TEST_CASE("height increment identity") {
    Rng rng(1005);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = uniform(rng, 1, 7);
      auto om = random_rational_omega(rng, n, 5, 4);
      const int i = uniform(rng, 1, n);
      std::vector<Rational> v(n);
      for (auto& x : v) {
        x = Rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
        x.canonicalize();
      }
      auto qv = generator(om, i).apply(v);
      Rational norm = 0;
      for (int t = 0; t < n; ++t) norm += (qv[t] - v[t]) * (qv[t] - v[t]);
      CHECK(height(om, qv) - height(om, v) == norm);
    }
  }

  TEST_CASE("eigenvector estimate bound") {
    Rng rng(1006);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = uniform(rng, 2, 6);
      auto om = random_connected_omega(rng, n, 0.4, 3);
      auto gamma = random_covering_path(rng, graph_of(om), uniform(rng, 0, 3));
      TwistWord w(gamma, random_powers(rng, gamma.size(), 3));
      auto est = eigenvector_asymptotics(om, w, uniform(rng, 1, 6), 30);
      CAPTURE(trial);
      CHECK(est.lhs <= est.rhs);
    }
  }
}
