#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "penner/penner.hpp"
#include "penner/poly.hpp"
#include "penner/spectral.hpp"

namespace penner {

struct RecipeStep {
  long k = 0;
  int degree = 0;
  std::string lambda;  // short decimal form
};

struct RecipeOptions {
  int digits = 50;
  long k_max = 256;
  int window = 3;
  // Also build M(k Omega) by k-fold powering of the generators for k <= 3
  // and require exact agreement.
  bool cross_check = false;
  std::function<void(const RecipeStep&)> progress;
};

struct RecipeResult {
  long k_star = 0;
  PfValue lambda;
  IntPoly minpoly;
  int degree = 0;
  std::size_t rank = 0;
  int stable_window = 0;
  // T_{i_K}^{k p_K} ... T_{i_1}^{k p_1}, leftmost first, as (index, exponent).
  std::vector<std::pair<int, long>> twist_word_expanded;
  std::vector<RecipeStep> scan;
};

// Scans k = 1, 2, ... until the stretch factor of M(k Omega) has degree
// rank(Omega) for `window` consecutive scales. Throws NotContractible,
// NotSupported or NotGeneralPath up front and KBudgetExhausted past k_max.
RecipeResult run_recipe(const IntersectionMatrix& omega, const TwistWord& word, const RecipeOptions& opts = {});

// Product built as (Q_i(Omega)^k)^p factor by factor.
IntMatrix twist_product_by_powering(const IntersectionMatrix& omega, const TwistWord& word, long k);

}  // namespace penner
