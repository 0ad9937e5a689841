#include "penner/recipe.hpp"

#include "penner/error.hpp"
#include "penner/factor.hpp"
#include "penner/graph.hpp"

namespace penner {

IntMatrix twist_product_by_powering(const IntersectionMatrix& omega, const TwistWord& word, long k) {
  word.check_dimension(omega.n());
  IntMatrix m = IntMatrix::identity(omega.n());
  for (std::size_t t = 0; t < word.size(); ++t) {
    const IntMatrix q = to_integer(generator(omega, word.gamma()[t]));
    for (long r = 0; r < k * word.powers()[t]; ++r) m = q * m;
  }
  return m;
}

RecipeResult run_recipe(const IntersectionMatrix& omega, const TwistWord& word, const RecipeOptions& opts) {
  word.check_dimension(omega.n());
  if (!omega.integral()) throw Error(ErrorKind::NotIntegral, "recipe needs an integral intersection matrix");
  if (!is_contractible(word.gamma())) throw Error(ErrorKind::NotContractible, "path " + word.to_string() + " is not contractible");
  const OmegaGraph g = graph_of(omega);
  if (!word_supported(word, g)) throw Error(ErrorKind::NotSupported, "path leaves G(Omega)");
  if (!is_general(word, omega.n())) throw Error(ErrorKind::NotGeneralPath, "path does not visit every vertex");
  if (opts.window < 1) throw Error(ErrorKind::PreconditionViolated, "stability window must be positive");

  RecipeResult res;
  res.rank = rank_exact(omega);
  int streak = 0;
  for (long k = 1; k <= opts.k_max; ++k) {
    const IntersectionMatrix ok = scale(omega, k);
    const IntMatrix m = twist_product_int(ok, word);
    if (opts.cross_check && k <= 3 && !(twist_product_by_powering(omega, word, k) == m))
      throw Error(ErrorKind::PreconditionViolated, "k-fold powering disagrees with generator(k Omega) at k = " +
                                                       std::to_string(k));
    SpectralReport rep = spectral_report(ok, word, m, opts.digits);
    PfFactor pff = pf_factor(rep.reduced_poly, *rep.pf, rep.pf->lo, rep.pf->hi);
    RecipeStep step{k, pff.degree, pff.lambda.value.to_string(12)};
    res.scan.push_back(step);
    if (opts.progress) opts.progress(step);
    if (static_cast<std::size_t>(pff.degree) == res.rank) {
      if (streak == 0) {
        res.k_star = k;
        res.lambda = pff.lambda;
        res.minpoly = pff.factor;
        res.degree = pff.degree;
      }
      if (++streak == opts.window) {
        res.stable_window = streak;
        for (std::size_t t = word.size(); t-- > 0;)
          res.twist_word_expanded.emplace_back(word.gamma()[t], res.k_star * word.powers()[t]);
        return res;
      }
    } else {
      streak = 0;
    }
  }
  throw Error(ErrorKind::KBudgetExhausted, "no run of " + std::to_string(opts.window) + " scales with degree " +
                                               std::to_string(res.rank) + " up to k = " + std::to_string(opts.k_max) +
                                               " (inconclusive)");
}

}  // namespace penner
