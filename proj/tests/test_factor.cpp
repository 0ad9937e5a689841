#include <cmath>

#include "doctest.h"
#include "penner/catalog.hpp"
#include "penner/factor.hpp"
#include "penner/roots.hpp"
#include "random_inputs.hpp"

using namespace penner;
using namespace testing_support;

namespace {
IntPoly expand(const Factorization& f) { return f.product(); }

bool all_unit_constants(const Factorization& f) {
  for (auto& [g, m] : f.factors)
    if (abs(g.coeff(0)) != 1) return false;
  return true;
}
}  // namespace

TEST_SUITE("factor") {
  TEST_CASE("small factorizations") {
    auto f = factor_monic(int_poly({-1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == int_poly({-1, 1}));
    CHECK(f.factors[1].first == int_poly({1, 1}));
    CHECK(f.certified);

    auto p = int_poly({-1, 2, 0, -2, 1}) * int_poly({-1, 0, 1}) * int_poly({1, -3, 1}) * int_poly({-1, -1, 1});
    auto g = factor_monic(p);
    CHECK(expand(g) == p);
    std::vector<std::pair<IntPoly, int>> want{{int_poly({-1, 1}), 4},
                                              {int_poly({1, 1}), 2},
                                              {int_poly({1, -3, 1}), 1},
                                              {int_poly({-1, -1, 1}), 1}};
    CHECK(g.factors == want);  // degree first, then coefficients from the top down

    auto xpow = factor_monic(int_poly({0, 0, 0, 1, 1}));
    CHECK(xpow.factors.front() == std::make_pair(int_poly({0, 1}), 3));
    CHECK(expand(xpow) == int_poly({0, 0, 0, 1, 1}));
  }

  TEST_CASE("fixture polynomials are irreducible") {
    for (auto p : {int_poly({1, 1, -1, 0, -1, -3, 1}), int_poly({-1, -1, 1, -1, -3, 1})}) {
      auto f = factor_monic(p);
      REQUIRE(f.factors.size() == 1);
      CHECK(f.factors[0].first == p);
      CHECK(f.factors[0].second == 1);
      CHECK(f.certified);
      CHECK(admissible_factor_degrees(p).empty());
    }
    auto r6 = pf_root(int_poly({1, 1, -1, 0, -1, -3, 1}), 20, 1, 10).value.to_double();
    auto r5 = pf_root(int_poly({-1, -1, 1, -1, -3, 1}), 20, 1, 10).value.to_double();
    CHECK(std::abs(r6 - 3.318022) < 1e-5);
    CHECK(std::abs(r5 - 3.251034) < 1e-5);
  }

  TEST_CASE("subset search on products of irreducibles") {
    // swinnerton-dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime
    auto sd = int_poly({1, 0, -10, 0, 1});
    auto fs = factor_monic(sd);
    REQUIRE(fs.factors.size() == 1);
    CHECK(fs.certified);
    CHECK_FALSE(admissible_factor_degrees(sd).empty());

    auto a = int_poly({1, 1, -1, 0, -1, -3, 1});
    auto b = int_poly({-1, -1, 1, -1, -3, 1});
    auto c = int_poly({1, -3, 1});
    auto f = factor_monic(a * b * c * sd);
    CHECK(f.certified);
    CHECK(f.factors.size() == 4);
    CHECK(expand(f) == a * b * c * sd);
    CHECK(all_unit_constants(f));
  }

  TEST_CASE("random products re-multiply and keep unit constants") {
    Rng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
      IntPoly p = int_poly({1});
      const int parts = uniform(rng, 1, 3);
      for (int t = 0; t < parts; ++t) {
        const int d = uniform(rng, 1, 4);
        std::vector<mpz_class> c(d + 1);
        c[0] = uniform(rng, 0, 1) ? 1 : -1;
        for (int i = 1; i < d; ++i) c[i] = uniform(rng, -4, 4);
        c[d] = 1;
        p = p * IntPoly(c);
      }
      auto f = factor_monic(p);
      CHECK(expand(f) == p);
      CHECK(all_unit_constants(f));
      CHECK(f.certified);
      for (auto& [g, m] : f.factors) {
        auto again = factor_monic(g);
        CHECK(again.factors.size() == 1);
      }
    }
  }

  TEST_CASE("charpolys of twist products factor exactly") {
    Rng rng(62);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = uniform(rng, 3, 7);
      auto om = random_connected_omega(rng, n, 0.4, 2);
      auto gamma = random_general_gamma(rng, n, 2);
      auto chi = char_poly_exact(twist_product_int(om, TwistWord(gamma)));
      auto f = factor_monic(chi);
      CHECK(expand(f) == chi);
      CHECK(all_unit_constants(f));
    }
  }

  TEST_CASE("degree_of_pf_root") {
    auto rep = spectral_report(m_r(3), TwistWord({1, 2, 3}), 40);
    CHECK(degree_of_pf_root(rep) == 3);

    // reduced poly (x^2-3x+1)(x^2-x-1) with lambda the golden square
    auto red = int_poly({1, -3, 1}) * int_poly({-1, -1, 1});
    auto lam = pf_root(red, 30, 1, 10);
    auto pff = pf_factor(red, lam, 1, 10);
    CHECK(pff.degree == 2);
    CHECK(pff.factor == int_poly({1, -3, 1}));
    CHECK(std::abs(lam.value.to_double() - 2.6180339887) < 1e-9);

    // precision independence
    auto rep2 = spectral_report(m_r(3), TwistWord({1, 2, 3}), 120);
    CHECK(degree_of_pf_root(rep2) == 3);

    auto bad = spectral_report(m_r(3), TwistWord({1, 2}), 20);
    CHECK(error_kind([&] { degree_of_pf_root(bad); }) == ErrorKind::NotPerronFrobenius);
  }

  TEST_CASE("deflate") {
    // (x-2)(x+3) = x^2 + x - 6
    std::vector<Real> c{Real(-6L, 128), Real(1L, 128), Real(1L, 128)};
    Real rem(128);
    auto q = deflate(c, Real(2L, 128), &rem);
    REQUIRE(q.size() == 2);
    CHECK(q[0].to_double() == 3.0);
    CHECK(q[1].to_double() == 1.0);
    CHECK(rem.is_zero());
  }

  TEST_CASE("convergence diagnostic on the triangle ray") {
    auto o3 = m_r(3);
    TwistWord w({1, 2, 3});
    std::vector<ConvergenceInput> seq;
    for (int k = 1; k <= 32; k *= 2) {
      auto chi = char_poly_exact(twist_product_int(scale(o3, k), w));
      seq.push_back({chi, pf_root(chi, 50, 1, mpq_class(1000000000)).value});
    }
    std::vector<Real> v{Real(0L, 200), Real(1L, 200), Real(1L, 200)};
    auto rep = convergence_diagnostic(seq, v, 50);
    CHECK(rep.lambda_diverging);
    CHECK(rep.distances_decreasing);
    REQUIRE(rep.rows.size() == 6);
    CHECK(std::abs(rep.rows.back().distance - 0.17160076) < 1e-6);
    // zero is excluded; only -1 is tracked
    REQUIRE(rep.tracked_roots.size() == 1);
    CHECK(std::abs(rep.tracked_roots[0].re.to_double() + 1) < 1e-12);
    // the charpoly is irreducible, so the root near -1 shares lambda's factor
    for (auto& row : rep.rows) CHECK(row.same_factor == std::vector<bool>{true});

    // bounded lambda sequence is reported as non-diverging
    std::vector<ConvergenceInput> flat(3, seq[0]);
    CHECK_FALSE(convergence_diagnostic(flat, v, 30).lambda_diverging);

    // lambda that is not a root
    std::vector<ConvergenceInput> wrong{{seq[0].u, Real(7L, 200)}};
    CHECK(error_kind([&] { convergence_diagnostic(wrong, v, 30); }) == ErrorKind::RootMismatch);
  }

  TEST_CASE("root finder") {
    auto rs = find_roots(int_poly({1, -3, 1}) * int_poly({2, 0, 1}), 40);
    CHECK(rs.resolved);
    REQUIRE(rs.size() == 4);
    int real = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) real += rs.is_real(i);
    CHECK(real == 2);
  }
}
