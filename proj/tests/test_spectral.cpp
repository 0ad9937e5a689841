#include "doctest.h"
#include "penner/catalog.hpp"
#include "penner/spectral.hpp"
#include "random_inputs.hpp"

using namespace penner;
using namespace testing_support;

namespace {
const char* kLambda3 = "6.222262523120398626674561101108321187374";

bool close_to(const Real& x, const char* decimal, int digits) {
  Real ref(mpq_class(0), x.prec());
  mpfr_set_str(ref.get(), decimal, 10, MPFR_RNDN);
  Real tol(1L, x.prec());
  mpfr_ui_pow_ui(tol.get(), 10, static_cast<unsigned long>(digits), MPFR_RNDN);
  return abs(x - ref) * tol < Real(1L, x.prec());
}
}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("char_poly_exact examples") {
    CHECK(char_poly_exact(IntMatrix::identity(3)) == int_poly({-1, 3, -3, 1}));
    auto m = to_integer(rat_matrix({{1, 1, 1}, {1, 2, 2}, {2, 3, 4}}));
    CHECK(char_poly_exact(m) == int_poly({-1, 5, -7, 1}));
    CHECK(char_poly_exact(IntMatrix(0, 0)) == int_poly({1}));
    // rational input
    RatMatrix h(2, 2);
    h(0, 0) = Rational(1, 2);
    h(0, 1) = Rational(1, 3);
    h(1, 0) = 3;
    h(1, 1) = Rational(-1, 4);
    std::vector<mpq_class> want{Rational(-1, 8) - 1, Rational(-1, 4), 1};
    CHECK(char_poly_exact(h) == RatPoly(want));
  }

  TEST_CASE("multimodular charpoly agrees with Faddeev-LeVerrier") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = uniform(rng, 1, 9);
      IntMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = uniform(rng, -50, 50);
      if (trial % 4 == 0) m(0, 0) = mpz_class("123456789012345678901234567890");
      CHECK(to_rational(char_poly_exact(m)) == char_poly_faddeev(to_rational(m)));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const int n = uniform(rng, 2, 6);
      auto om = random_connected_omega(rng, n, 0.5, 3);
      auto gamma = random_general_gamma(rng, n, 2);
      auto m = twist_product(om, TwistWord(gamma, random_powers(rng, gamma.size(), 5)));
      CHECK(char_poly_exact(m) == char_poly_faddeev(m));
    }
  }

  TEST_CASE("rank_exact") {
    CHECK(rank_exact(m_r(5)) == 5);
    CHECK(rank_exact(catalog_get("S43-max").omega) == 24);
    CHECK(rank_exact(validate_omega(RatMatrix(4, 4))) == 0);
    auto r2 = omega_of({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    CHECK(rank_exact(r2) == 2);
    CHECK(rank_exact(scale(r2, Rational(5, 3))) == 2);
  }

  TEST_CASE("pf_certify") {
    auto o3 = m_r(3);
    TwistWord w({1, 2, 3});
    CHECK(pf_certify(twist_product(o3, w), o3, w));
    auto zero = validate_omega(RatMatrix(3, 3));
    CHECK_FALSE(pf_certify(twist_product(zero, w), zero, w));
    TwistWord w23({2, 3});
    CHECK_FALSE(pf_certify(twist_product(o3, w23), o3, w23));
    auto disc = omega_of({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    TwistWord w4({1, 2, 3, 4});
    CHECK_FALSE(pf_certify(twist_product(disc, w4), disc, w4));
    CHECK(is_primitive_nonnegative(twist_product(o3, w)));
    CHECK_FALSE(is_primitive_nonnegative(twist_product(disc, w4)));
    CHECK_FALSE(is_primitive_nonnegative(twist_product(o3, w23)));
  }

  TEST_CASE("pf_eigenvalue of the triangle product") {
    auto m = rat_matrix({{1, 1, 1}, {1, 2, 2}, {2, 3, 4}});
    auto pf = pf_eigenvalue(m, 40);
    CHECK(close_to(pf.value, kLambda3, 38));
    // exact bracket really brackets a sign change of the charpoly
    auto chi = char_poly_exact(to_integer(m));
    CHECK(sign_at(chi, pf.lo) * sign_at(chi, pf.hi) < 0);
    CHECK(pf.lo < pf.hi);
    auto o3 = m_r(3);
    CHECK_FALSE(error_kind([&] { pf_eigenvalue(twist_product(o3, TwistWord({2, 3})), 20); }) == std::nullopt);
  }

  TEST_CASE("PF value grows along rays and is monotone") {
    Rng rng(41);
    for (int trial = 0; trial < 8; ++trial) {
      const int n = uniform(rng, 2, 5);
      auto om = random_connected_omega(rng, n, 0.5, 3);
      TwistWord w(random_general_gamma(rng, n, 2));
      Real prev(0L, 128);
      for (int k : {1, 2, 4, 8}) {
        auto lam = pf_eigenvalue(twist_product(scale(om, k), w), 20).value;
        CHECK(lam > prev);
        prev = lam;
        // lower bound: smallest row sum of I + k Omega
        Rational minrow = -1;
        auto ik = RatMatrix::identity(n) + scale(om, k).matrix();
        for (int i = 0; i < n; ++i) {
          Rational s = 0;
          for (int j = 0; j < n; ++j) s += ik(i, j);
          if (minrow < 0 || s < minrow) minrow = s;
        }
        CHECK(lam >= Real(minrow, 128));
      }
      // entrywise larger product (one extra generator) has larger PF value
      auto m1 = twist_product(om, w);
      auto m2 = generator(om, 1) * m1;
      CHECK(pf_eigenvalue(m1, 20).value <= pf_eigenvalue(m2, 20).value);
    }
  }

  TEST_CASE("structure_split") {
    auto chi = int_poly({-1, 5, -7, 1});
    auto [e0, red0] = structure_split(chi, 3, 3);
    CHECK(e0 == 0);
    CHECK(red0 == chi);
    auto r2 = omega_of({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    auto m = twist_product_int(r2, TwistWord({1, 2, 3, 4}));
    auto [e2, red2] = structure_split(char_poly_exact(m), 4, 2);
    CHECK(e2 == 2);
    CHECK(red2.degree() == 2);
    CHECK(red2.eval(1) != 0);
    // wrong rank: the reduced part would still vanish at 1
    CHECK(error_kind([] { structure_split(int_poly({-1, 3, -3, 1}), 3, 2); }) == ErrorKind::DivisionFailed);
    CHECK(error_kind([&] { structure_split(chi, 3, 1); }) == ErrorKind::DivisionFailed);
  }

  TEST_CASE("complexity") {
    CHECK(complexity(int_poly({1, -4, 6, -4, 1})) == 0);
    CHECK(complexity(int_poly({0, 1, -2, 1})) == 1);
    CHECK(complexity(int_poly({-1, 5, -7, 1})) == 3);
    CHECK(complexity(rat_poly({0, 1, -2, 1})) == 1);
    std::vector<Real> near{Real(0L, 128), Real(1.0, 128), Real(-2.0 + 1e-20, 128), Real(1.0, 128)};
    CHECK(complexity(near, 1e-6) == 1);
  }

  TEST_CASE("is_reciprocal") {
    CHECK(is_reciprocal(int_poly({1, -3, 1})));
    CHECK_FALSE(is_reciprocal(int_poly({-1, 5, -7, 1})));
    CHECK(is_reciprocal(int_poly({-1, 0, 1}), true));
    CHECK_FALSE(is_reciprocal(int_poly({-1, 0, 1})));
  }

  TEST_CASE("symplectic form") {
    auto big = catalog_get("S43-max").omega;
    CHECK(symplectic_check(big, RatMatrix::identity(24)));
    CHECK(symplectic_check_block(big, RatMatrix::identity(24)));
    for (int i = 1; i <= 24; ++i) CHECK(symplectic_check_block(big, generator(big, i)));
    Rng rng(51);
    auto gamma = random_general_gamma(rng, 24, 6);
    CHECK(symplectic_check(big, twist_product(big, TwistWord(gamma, random_powers(rng, gamma.size(), 2)))));
    CHECK(error_kind([] { symplectic_check(m_r(3), RatMatrix::identity(3)); }) == ErrorKind::NotBipartite);
    // path 1-3-2: bipartite with blocks {1,2},{3}, not contiguous
    auto p = omega_of({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
    CHECK(symplectic_check(p, generator(p, 3)));
    auto p2 = omega_of({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(error_kind([&] { symplectic_check_block(p2, generator(p2, 1)); }) == ErrorKind::BlocksNotContiguous);
    auto f = symplectic_form(p2);
    CHECK(f.order == std::vector<int>{1, 3, 2});
    CHECK(f.a_size == 2);
  }

  TEST_CASE("height") {
    auto o3 = m_r(3);
    CHECK(height(o3, {0, 0, 0}) == 0);
    CHECK(height(o3, {1, 1, 1}) == 3);
    CHECK(error_kind([&] { height(o3, {1, 2}); }) == ErrorKind::DimensionMismatch);
    // kernel vectors are fixed by every generator
    auto r2 = omega_of({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    std::vector<Rational> v{1, 0, -1, 0};
    for (int i = 1; i <= 4; ++i) {
      CHECK(generator(r2, i).apply(v) == v);
      CHECK(height(r2, generator(r2, i).apply(v)) == height(r2, v));
    }
  }

  TEST_CASE("spectral_report pipeline") {
    auto o3 = m_r(3);
    auto rep = spectral_report(o3, TwistWord({1, 2, 3}), 40);
    CHECK(rep.n == 3);
    CHECK(rep.charpoly == int_poly({-1, 5, -7, 1}));
    CHECK(rep.rank == 3);
    CHECK(rep.unit_part_exponent == 0);
    CHECK(rep.complexity == 3);
    CHECK(rep.is_pf);
    REQUIRE(rep.pf.has_value());
    CHECK(close_to(rep.pf->value, kLambda3, 38));

    auto bad = spectral_report(o3, TwistWord({1, 2}), 20);
    CHECK_FALSE(bad.is_pf);
    CHECK_FALSE(bad.pf.has_value());
    CHECK(bad.pf_failure.find("generator 3 unused") != std::string::npos);

    auto disc = omega_of({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    auto rd = spectral_report(disc, TwistWord({1, 2, 3, 4}), 20);
    CHECK_FALSE(rd.is_pf);
    CHECK(rd.pf_failure.find("connected") != std::string::npos);
  }
}
