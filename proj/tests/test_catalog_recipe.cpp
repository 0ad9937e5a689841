#include "doctest.h"
#include "penner/catalog.hpp"
#include "penner/factor.hpp"
#include "penner/recipe.hpp"
#include "penner/spectral.hpp"
#include "random_inputs.hpp"

using namespace penner;
using namespace testing_support;

namespace {
SurfaceSpec S(int g, int n = 0) { return {true, g, n}; }
SurfaceSpec N(int g, int n = 0) { return {false, g, n}; }
}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("every entry has its stated rank") {
    for (const auto& id : catalog_ids()) {
      auto e = catalog_get(id);
      CAPTURE(id);
      CHECK(rank_exact(e.omega) == e.expected_rank);
      CHECK(e.bipartite == is_bipartite(graph_of(e.omega)));
      CHECK(is_connected(graph_of(e.omega)));
    }
    CHECK(catalog_ids().size() == 20);
    CHECK(catalog_get("S43-max").bipartite);
    CHECK(catalog_get("S43-max").surface.name() == "S_{4,3}");
    CHECK(catalog_get("N5-rank5").surface.name() == "N_5");
    CHECK(error_kind([] { catalog_get("nope"); }) == ErrorKind::UnknownId);
    CHECK(error_kind([] { catalog_get("Mr-13"); }) == ErrorKind::UnknownId);
  }

  TEST_CASE("stored matrices") {
    CHECK(catalog_get("N31-rank4").omega.matrix() ==
          rat_matrix({{0, 0, 1, 0}, {0, 0, 1, 2}, {1, 1, 0, 1}, {0, 2, 1, 0}}));
    auto m5 = catalog_get("Mr-5").omega;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(m5(i, j) == (i == j ? 0 : 1));
    auto x = max_rank_block();
    CHECK(x.rows() == 12);
    CHECK(x(0, 0) == 1);
  }

  TEST_CASE("M_r inverse") {
    for (int r = 3; r <= 12; ++r) {
      CHECK(m_r(r).matrix() * m_r_inverse(r) == RatMatrix::identity(r));
      CHECK(m_r_inverse(r)(0, 1) == Rational(1, r - 1));
      CHECK(m_r_inverse(r)(0, 0) == Rational(-(r - 2), r - 1));
    }
  }

  TEST_CASE("crosscap augmentation rank deltas") {
    auto base = catalog_get("N31-rank4").omega;  // curves 1 and 2 are disjoint
    CHECK(rank_exact(crosscap_augment(base, 1, 2, CrosscapVariant::E)) == 4);
    CHECK(rank_exact(crosscap_augment(base, 1, 2, CrosscapVariant::ED1)) == 6);
    auto full = crosscap_augment(base, 1, 2, CrosscapVariant::ED1D2);
    CHECK(rank_exact(full) == 7);
    CHECK(full.n() == 7);
    RatMatrix block(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) block(i, j) = full(4 + i, 4 + j);
    CHECK(block == rat_matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    CHECK(determinant(block) != 0);
    // e meets old curves like c_1 + c_2
    for (int c = 0; c < 4; ++c) CHECK(full(4, c) == base(0, c) + base(1, c));
    CHECK(error_kind([&] { crosscap_augment(base, 1, 3, CrosscapVariant::E); }) == ErrorKind::CurvesIntersect);

    // every entry, every disjoint pair
    for (const auto& id : catalog_ids()) {
      auto e = catalog_get(id).omega;
      if (e.n() > 12) continue;
      const std::size_t r0 = rank_exact(e);
      for (std::size_t i = 1; i <= e.n(); ++i)
        for (std::size_t j = i + 1; j <= e.n(); ++j) {
          if (e(i - 1, j - 1) != 0) continue;
          CAPTURE(id);
          CHECK(rank_exact(crosscap_augment(e, i, j, CrosscapVariant::E)) == r0);
          CHECK(rank_exact(crosscap_augment(e, i, j, CrosscapVariant::ED1)) == r0 + 2);
          CHECK(rank_exact(crosscap_augment(e, i, j, CrosscapVariant::ED1D2)) == r0 + 3);
        }
    }
  }

  TEST_CASE("puncture augmentation rank deltas") {
    CHECK(rank_exact(puncture_augment(m_r(3), 1, PunctureVariant::DE)) == 5);
    auto twice = puncture_augment(puncture_augment(m_r(3), 1, PunctureVariant::DE), 2, PunctureVariant::DE);
    CHECK(rank_exact(twice) == 7);
    CHECK(error_kind([] { puncture_augment(m_r(3), 4, PunctureVariant::D); }) == ErrorKind::IndexOutOfRange);
    for (const auto& id : catalog_ids()) {
      auto e = catalog_get(id).omega;
      const std::size_t r0 = rank_exact(e);
      for (std::size_t c = 1; c <= e.n(); ++c) {
        CAPTURE(id);
        auto d = puncture_augment(e, c, PunctureVariant::D);
        CHECK(rank_exact(d) == r0);
        CHECK(d(e.n(), c - 1) == 0);
        for (std::size_t t = 0; t < e.n(); ++t)
          if (t != c - 1) CHECK(d(e.n(), t) == e(c - 1, t));
        auto de = puncture_augment(e, c, PunctureVariant::DE);
        CHECK(rank_exact(de) == r0 + 2);
        CHECK(de(e.n(), e.n() + 1) == 2);
      }
    }
  }

  TEST_CASE("dimension formulas") {
    CHECK(teich_dim(S(4, 3)) == 24);
    CHECK(teich_dim(N(3, 1)) == 5);
    CHECK(teich_dim(S(2)) == 6);
    CHECK(teich_dim(S(1)) == 2);
    CHECK(teich_dim(S(0, 5)) == 4);
    CHECK(error_kind([] { teich_dim(N(1, 1)); }) == ErrorKind::OutOfFormulaRange);
    CHECK(homology_dim(S(3)) == 6);
    CHECK(homology_dim(N(5)) == 4);
    CHECK_FALSE(admits_pseudo_anosov(N(3)));
    CHECK(admits_pseudo_anosov(N(3, 1)));
    CHECK_FALSE(admits_pseudo_anosov(S(0, 3)));
  }

  TEST_CASE("degree sets") {
    CHECK(degree_set(S(2)).degrees == std::set<int>{2, 3, 4, 6});
    CHECK_FALSE(degree_set(S(2)).ambiguous);
    CHECK(degree_set(N(3, 1)).degrees == std::set<int>{3, 4, 5});
    CHECK(error_kind([] { degree_set(N(3)); }) == ErrorKind::NoPseudoAnosov);
    // S_{3,1}: one puncture, half dimension 7
    auto amb = degree_set(S(3, 1));
    CHECK(amb.ambiguous);
    REQUIRE(amb.alternative.has_value());
    CHECK(amb.degrees == std::set<int>{2, 3, 4, 5, 6, 7, 8, 10, 12, 14});
    CHECK(*amb.alternative == std::set<int>{2, 3, 4, 5, 6, 8, 10, 12, 14});
    CHECK(degree_set(S(4, 3)).degrees.count(24) == 1);
    CHECK(degree_set_plus(N(5)) == std::set<int>{3, 4});
    CHECK(degree_set_plus(N(5, 3)) == std::set<int>{3, 4});
    CHECK(degree_set_plus(S(3)) == std::set<int>{2, 3, 4, 6});
    CHECK(degree_set_plus(S(0, 5)).empty());
    CHECK(format_set({2, 3, 4, 6}) == "{2,3,4,6}");
  }
}

TEST_SUITE("recipe") {
  TEST_CASE("M_5 with a covering tree tour reaches degree 5") {
    auto om = catalog_get("Mr-5").omega;
    auto tour = spanning_tree_tour(graph_of(om));
    RecipeOptions opts;
    opts.digits = 40;
    opts.cross_check = true;
    auto res = run_recipe(om, TwistWord(tour), opts);
    CHECK(res.degree == 5);
    CHECK(res.rank == 5);
    CHECK(res.stable_window == 3);
    CHECK(res.k_star >= 1);
    CHECK(res.minpoly.degree() == 5);
    CHECK(res.minpoly.is_monic());
    CHECK(abs(res.minpoly.coeff(0)) == 1);
    CHECK(sign_at(res.minpoly, res.lambda.lo) * sign_at(res.minpoly, res.lambda.hi) < 0);
    CHECK(factor_monic(res.minpoly).factors.size() == 1);
    CHECK(res.twist_word_expanded.size() == tour.size());
    // leftmost factor is the last path vertex
    CHECK(res.twist_word_expanded.front().first == tour.back());
    CHECK(res.twist_word_expanded.front().second == res.k_star);
  }

  TEST_CASE("preconditions are checked before any computation") {
    auto o3 = m_r(3);
    CHECK(error_kind([&] { run_recipe(o3, TwistWord({1, 2, 3})); }) == ErrorKind::NotContractible);
    auto p = omega_of({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(error_kind([&] { run_recipe(p, TwistWord({1, 3})); }) == ErrorKind::NotSupported);
    CHECK(error_kind([&] { run_recipe(p, TwistWord({1, 2})); }) == ErrorKind::NotGeneralPath);
    RecipeOptions tight;
    tight.k_max = 0;
    CHECK(error_kind([&] { run_recipe(p, TwistWord({1, 2, 3, 2}), tight); }) == ErrorKind::KBudgetExhausted);
  }

  TEST_CASE("powering agrees with the scaled generators") {
    Rng rng(81);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = uniform(rng, 2, 6);
      auto om = random_connected_omega(rng, n, 0.5, 3);
      auto gamma = random_general_gamma(rng, n, 2);
      TwistWord w(gamma, random_powers(rng, gamma.size(), 3));
      for (long k = 1; k <= 3; ++k) CHECK(twist_product_by_powering(om, w, k) == twist_product_int(scale(om, k), w));
    }
  }

  TEST_CASE("deterministic scan") {
    auto om = catalog_get("Mr-4").omega;
    auto tour = spanning_tree_tour(graph_of(om));
    RecipeOptions opts;
    opts.digits = 30;
    auto a = run_recipe(om, TwistWord(tour), opts);
    auto b = run_recipe(om, TwistWord(tour), opts);
    CHECK(a.k_star == b.k_star);
    CHECK(a.minpoly == b.minpoly);
    REQUIRE(a.scan.size() == b.scan.size());
    for (std::size_t i = 0; i < a.scan.size(); ++i) CHECK(a.scan[i].lambda == b.scan[i].lambda);
  }
}
