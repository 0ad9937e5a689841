// penner: stretch factors of Penner products from the command line.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "penner/boundary.hpp"
#include "penner/catalog.hpp"
#include "penner/error.hpp"
#include "penner/factor.hpp"
#include "penner/graph.hpp"
#include "penner/recipe.hpp"
#include "penner/spectral.hpp"

using namespace penner;
using json = nlohmann::ordered_json;

namespace {

struct Input {
  std::string omega_file;
  std::string catalog_id;
  std::string gamma;
  std::string powers;
  std::string scales = "1,2,4,8,16,32";
  int digits = 50;
  long k_max = 256;
  int window = 3;
  bool json = false;
  bool cross_check = false;
  bool verbose = false;
};

int exit_code(ErrorKind k) {
  switch (error_class(k)) {
    case ErrorClass::Validation: return 2;
    case ErrorClass::Precondition: return 3;
    case ErrorClass::Budget: return 4;
  }
  return 1;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  for (const auto& tok : split(s)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorKind::ParseError, std::string(what) + ": not an integer: '" + tok + "'");
    out.push_back(static_cast<T>(v));
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, std::string(what) + " is empty");
  return out;
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorKind::ParseError, "matrix entries must be integers or \"p/q\" strings");
}

IntersectionMatrix load_omega(const Input& in) {
  if (!in.catalog_id.empty()) {
    if (!in.omega_file.empty()) throw Error(ErrorKind::ParseError, "give either --omega or --catalog, not both");
    return catalog_get(in.catalog_id).omega;
  }
  if (in.omega_file.empty()) throw Error(ErrorKind::ParseError, "an intersection matrix is required (--omega FILE)");
  std::ifstream f(in.omega_file);
  if (!f) throw Error(ErrorKind::ParseError, "cannot read " + in.omega_file);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, in.omega_file + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw Error(ErrorKind::ParseError, "expected {\"n\": int, \"entries\": [[...], ...]}");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : doc["entries"]) {
    if (!r.is_array()) throw Error(ErrorKind::ParseError, "each row of \"entries\" must be an array");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(json_rational(v));
    rows.push_back(std::move(row));
  }
  if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<long>() != static_cast<long>(rows.size())))
    throw Error(ErrorKind::DimensionMismatch,
                "\"n\" = " + doc["n"].dump() + " but \"entries\" has " + std::to_string(rows.size()) + " rows");
  return validate_omega(rows);
}

TwistWord load_word(const Input& in, const IntersectionMatrix& omega, bool allow_auto) {
  std::vector<int> gamma;
  if (in.gamma.empty() || in.gamma == "auto") {
    if (!allow_auto && in.gamma.empty()) {
      gamma.resize(omega.n());
      for (std::size_t i = 0; i < omega.n(); ++i) gamma[i] = static_cast<int>(i + 1);
    } else {
      gamma = spanning_tree_tour(graph_of(omega));
    }
  } else {
    gamma = parse_list<int>(in.gamma, "--gamma");
  }
  std::vector<long> powers(gamma.size(), 1);
  if (!in.powers.empty()) powers = parse_list<long>(in.powers, "--powers");
  TwistWord w(gamma, powers);
  w.check_dimension(omega.n());
  return w;
}

json poly_json(const IntPoly& p) { return json(coefficient_strings(p)); }
json poly_json(const RatPoly& p) { return json(coefficient_strings(p)); }

int cmd_degree(const Input& in) {
  const IntersectionMatrix omega = load_omega(in);
  const TwistWord word = load_word(in, omega, false);
  const SpectralReport rep = spectral_report(omega, word, in.digits);
  if (!rep.is_pf) throw Error(ErrorKind::NotPerronFrobenius, rep.pf_failure);
  const PfFactor pff = pf_factor(rep.reduced_poly, *rep.pf, rep.pf->lo, rep.pf->hi);
  if (in.json) {
    json j;
    j["command"] = "degree";
    j["word"] = word.to_string();
    j["n"] = rep.n;
    j["rank"] = rep.rank;
    j["charpoly"] = poly_json(rep.charpoly);
    j["unit_part_exponent"] = rep.unit_part_exponent;
    j["reduced_poly"] = poly_json(rep.reduced_poly);
    j["complexity"] = rep.complexity;
    j["is_pf"] = rep.is_pf;
    j["lambda"] = pff.lambda.value.to_string(in.digits);
    j["lambda_bracket"] = {pff.lambda.lo.get_str(), pff.lambda.hi.get_str()};
    j["minpoly"] = poly_json(pff.factor);
    j["degree"] = pff.degree;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "word        " << word.to_string() << "\n"
              << "charpoly    " << to_string(rep.charpoly) << "\n"
              << "rank split  n = " << rep.n << ", r = " << rep.rank << ", (x-1)^" << rep.unit_part_exponent
              << " * (" << to_string(rep.reduced_poly) << ")\n"
              << "complexity  " << rep.complexity << "\n"
              << "lambda      " << pff.lambda.value.to_string(in.digits) << "\n"
              << "minpoly     " << to_string(pff.factor) << "\n"
              << "degree      " << pff.degree << "\n";
  }
  return 0;
}

int cmd_recipe(const Input& in) {
  const IntersectionMatrix omega = load_omega(in);
  const TwistWord word = load_word(in, omega, true);
  RecipeOptions opts;
  opts.digits = in.digits;
  opts.k_max = in.k_max;
  opts.window = in.window;
  opts.cross_check = in.cross_check;
  if (in.verbose)
    opts.progress = [](const RecipeStep& s) {
      std::cerr << "k = " << s.k << "  degree " << s.degree << "  lambda " << s.lambda << std::endl;
    };
  const RecipeResult res = run_recipe(omega, word, opts);
  if (in.json) {
    json j;
    j["command"] = "recipe";
    j["word"] = word.to_string();
    j["rank"] = res.rank;
    j["k_star"] = res.k_star;
    j["degree"] = res.degree;
    j["stable_window"] = res.stable_window;
    j["lambda"] = res.lambda.value.to_string(in.digits);
    j["lambda_bracket"] = {res.lambda.lo.get_str(), res.lambda.hi.get_str()};
    j["minpoly"] = poly_json(res.minpoly);
    json tw = json::array();
    for (const auto& [i, e] : res.twist_word_expanded) tw.push_back({i, e});
    j["twist_word_expanded"] = tw;
    json scan = json::array();
    for (const auto& s : res.scan) scan.push_back({{"k", s.k}, {"degree", s.degree}, {"lambda", s.lambda}});
    j["scan"] = scan;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "word        " << word.to_string() << "\n"
              << "rank        " << res.rank << "\n";
    for (const auto& s : res.scan) std::cout << "k = " << s.k << "  degree " << s.degree << "  lambda " << s.lambda << "\n";
    std::cout << "k*          " << res.k_star << " (stable for " << res.stable_window << " scales)\n"
              << "degree      " << res.degree << "\n"
              << "lambda      " << res.lambda.value.to_string(in.digits) << "\n"
              << "minpoly     " << to_string(res.minpoly) << "\n"
              << "map         ";
    for (const auto& [i, e] : res.twist_word_expanded) std::cout << "T" << i << "^" << e << " ";
    std::cout << "\n";
  }
  return 0;
}

int cmd_limit(const Input& in) {
  const IntersectionMatrix omega = load_omega(in);
  const TwistWord word = load_word(in, omega, false);
  std::vector<Rational> ks;
  for (const auto& t : split(in.scales)) ks.push_back(parse_rational(t));
  if (ks.empty()) throw Error(ErrorKind::ParseError, "--scales is empty");
  for (const auto& k : ks)
    if (k <= 0) throw Error(ErrorKind::NonpositiveScale, "scale " + k.get_str());
  const RayReport rep = ray_convergence_experiment(omega, word, ks, in.digits);
  if (in.json) {
    json j;
    j["command"] = "limit";
    j["word"] = word.to_string();
    j["supported"] = rep.supported;
    if (rep.limit) j["limit_charpoly"] = poly_json(*rep.limit);
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json row{{"k", r.k.get_str()}, {"lambda", r.lambda.to_string(20)}};
      if (rep.supported) row["distance"] = r.distance;
      json mags = json::array();
      for (const auto& m : r.magnitudes) mags.push_back(m.to_string(12));
      row["magnitudes"] = mags;
      rows.push_back(row);
    }
    j["rows"] = rows;
    if (rep.supported) {
      j["decreasing"] = rep.decreasing;
      j["tail_start"] = rep.tail_start;
    } else {
      j["exponents"] = rep.exponents;
      j["constants"] = rep.constants;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "word        " << word.to_string() << "\n";
  if (rep.supported) {
    std::cout << "limit       chi(f_gamma) = " << to_string(*rep.limit) << "\n";
    for (const auto& r : rep.rows) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.10f", r.distance);
      std::cout << "k = " << r.k.get_str() << "  lambda " << r.lambda.to_string(15) << "  distance " << buf << "\n";
    }
    std::cout << "distances   " << (rep.decreasing ? "strictly decreasing" : "decreasing from row " + std::to_string(rep.tail_start + 1))
              << "\n";
  } else {
    std::cout << "path leaves G(Omega): divergent regime\n";
    for (const auto& r : rep.rows) {
      std::cout << "k = " << r.k.get_str() << "  |eigenvalues|";
      for (const auto& m : r.magnitudes) std::cout << " " << m.to_string(8);
      std::cout << "\n";
    }
    for (std::size_t j = 0; j < rep.exponents.size(); ++j) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "eigenvalue %zu  ~ %.4f * k^%.4f\n", j + 1, rep.constants[j], rep.exponents[j]);
      std::cout << buf;
    }
  }
  return 0;
}

int cmd_catalog(const Input& in, const std::vector<std::string>& args) {
  if (args.empty()) throw Error(ErrorKind::ParseError, "catalog needs: list | show ID | degrees S|N GENUS PUNCTURES");
  const std::string& what = args[0];
  if (what == "list") {
    json arr = json::array();
    for (const auto& id : catalog_ids()) {
      const CatalogEntry e = catalog_get(id);
      if (in.json) {
        arr.push_back({{"id", id}, {"surface", e.surface.name()}, {"n", e.omega.n()}, {"rank", e.expected_rank},
                       {"bipartite", e.bipartite}});
      } else {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-10s %-8s n=%-3zu rank=%-3zu %s\n", id.c_str(), e.surface.name().c_str(),
                      e.omega.n(), e.expected_rank, e.bipartite ? "bipartite" : "");
        std::cout << buf;
      }
    }
    if (in.json) std::cout << arr.dump(2) << "\n";
    return 0;
  }
  if (what == "show") {
    if (args.size() != 2) throw Error(ErrorKind::ParseError, "usage: catalog show ID");
    const CatalogEntry e = catalog_get(args[1]);
    if (in.json) {
      json rows = json::array();
      for (std::size_t i = 0; i < e.omega.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < e.omega.n(); ++j) row.push_back(e.omega(i, j).get_num().get_si());
        rows.push_back(row);
      }
      json j{{"id", e.id},        {"surface", e.surface.name()}, {"rank", e.expected_rank},
             {"bipartite", e.bipartite}, {"notes", e.notes},  {"n", e.omega.n()}, {"entries", rows}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << e.id << "  " << e.surface.name() << "  rank " << e.expected_rank
                << (e.bipartite ? "  bipartite" : "") << "\n"
                << e.notes << "\n"
                << to_string(e.omega.matrix()) << "\n";
    }
    return 0;
  }
  if (what == "degrees") {
    if (args.size() != 4 || (args[1] != "S" && args[1] != "N"))
      throw Error(ErrorKind::ParseError, "usage: catalog degrees S|N GENUS PUNCTURES");
    SurfaceSpec s{args[1] == "S", parse_list<int>(args[2], "genus")[0], parse_list<int>(args[3], "punctures")[0]};
    if (!admits_pseudo_anosov(s)) {
      if (in.json)
        std::cout << json{{"surface", s.name()}, {"pseudo_anosov", false}}.dump(2) << "\n";
      else
        std::cout << s.name() << ": no pseudo-Anosov maps\n";
      return 0;
    }
    const DegreeSet d = degree_set(s);
    const std::set<int> dp = degree_set_plus(s);
    if (in.json) {
      json j{{"surface", s.name()}, {"pseudo_anosov", true}, {"teich_dim", teich_dim(s)}, {"D", d.degrees},
             {"ambiguous", d.ambiguous}};
      if (d.alternative) j["D_alternative"] = *d.alternative;
      j["D_plus"] = dp;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "D(" << s.name() << ")  = " << format_set(d.degrees);
      if (d.ambiguous) std::cout << "  or " << format_set(*d.alternative) << "  (undecided)";
      std::cout << "\nD+(" << s.name() << ") = " << format_set(dp) << "\n";
    }
    return 0;
  }
  throw Error(ErrorKind::ParseError, "unknown catalog action '" + what + "'");
}

int cmd_selftest() {
  int failed = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok    " : "FAIL  ") << what << "\n";
    failed += !ok;
  };
  const IntersectionMatrix o3 = m_r(3);
  const SpectralReport rep = spectral_report(o3, TwistWord({1, 2, 3}), 30);
  check(to_string(rep.charpoly) == "x^3 - 7*x^2 + 5*x - 1", "triangle charpoly " + to_string(rep.charpoly));
  check(rep.pf && rep.pf->value.to_string(10) == "6.222262523", "triangle lambda " + rep.pf->value.to_string(10));
  check(degree_of_pf_root(rep) == 3, "triangle degree 3");
  for (const char* id : {"S43-max", "N31-rank4", "Mr-7"}) {
    const CatalogEntry e = catalog_get(id);
    check(rank_exact(e.omega) == e.expected_rank, std::string(id) + " rank " + std::to_string(e.expected_rank));
  }
  const IntPoly p6(std::vector<mpz_class>{1, 1, -1, 0, -1, -3, 1});
  const Factorization f = factor_monic(p6);
  check(f.certified && f.factors.size() == 1, "x^6 - 3x^5 - x^4 - x^2 + x + 1 irreducible");
  check(f_gamma(BoundaryPoint(o3), {1, 2, 3}).charpoly == RatPoly(std::vector<mpq_class>{0, 1, 1}),
        "triangle limit x^2 + x");
  check(format_set(degree_set({true, 2, 0}).degrees) == "{2,3,4,6}", "D(S_2) = {2,3,4,6}");
  return failed == 0 ? 0 : 1;
}

void add_matrix_options(CLI::App* sub, Input& in) {
  sub->add_option("--omega", in.omega_file, "JSON file {\"n\": N, \"entries\": [[...]]}; rationals as \"p/q\"");
  sub->add_option("--catalog", in.catalog_id, "use a catalogue matrix instead of --omega");
  sub->add_option("--digits", in.digits, "decimal digits for lambda")->check(CLI::Range(5, 100000));
  sub->add_flag("--json", in.json, "machine-readable report");
}

}  // namespace

int main(int argc, char** argv) {
  Input in;
  if (const char* env = std::getenv("PENNER_PRECISION")) {
    try {
      in.digits = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "penner: PENNER_PRECISION must be an integer\n";
      return 2;
    }
  }

  CLI::App app{"Stretch factors and algebraic degrees of Penner mapping classes"};
  app.require_subcommand(1);

  auto* degree = app.add_subcommand("degree", "charpoly, rank split, lambda and its algebraic degree");
  add_matrix_options(degree, in);
  degree->add_option("--gamma", in.gamma, "closed path, comma-separated 1-based indices (default 1,2,...,n)");
  degree->add_option("--powers", in.powers, "positive exponents, one per path vertex (default all 1)");

  auto* recipe = app.add_subcommand("recipe", "scan k until lambda(k Omega) has degree rank(Omega)");
  add_matrix_options(recipe, in);
  recipe->add_option("--gamma", in.gamma, "contractible path visiting every vertex, or 'auto' (default)");
  recipe->add_option("--powers", in.powers, "positive exponents (default all 1)");
  recipe->add_option("--k-max", in.k_max, "largest scale tried")->check(CLI::PositiveNumber);
  recipe->add_option("--window", in.window, "consecutive scales that must agree")->check(CLI::PositiveNumber);
  recipe->add_flag("--debug-cross-check", in.cross_check, "compare against k-fold powering for k <= 3");
  recipe->add_flag("-v,--verbose", in.verbose, "report each scale on stderr");

  auto* limit = app.add_subcommand("limit", "deflated charpolys along the ray k Omega");
  add_matrix_options(limit, in);
  limit->add_option("--gamma", in.gamma, "closed path (default 1,2,...,n)");
  limit->add_option("--powers", in.powers, "positive exponents (default all 1)");
  limit->add_option("--scales", in.scales, "comma-separated positive rationals");

  std::vector<std::string> catalog_args;
  auto* catalog = app.add_subcommand("catalog", "list | show ID | degrees S|N GENUS PUNCTURES");
  catalog->add_option("args", catalog_args, "action and its arguments");
  catalog->add_flag("--json", in.json, "machine-readable output");

  auto* selftest = app.add_subcommand("selftest", "quick consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*degree) return cmd_degree(in);
    if (*recipe) return cmd_recipe(in);
    if (*limit) return cmd_limit(in);
    if (*catalog) return cmd_catalog(in, catalog_args);
    if (*selftest) return cmd_selftest();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotPerronFrobenius)
      std::cerr << "penner: not Perron-Frobenius: " << std::string(e.what()).substr(kind_name(e.kind()).size() + 2)
                << "\n";
    else
      std::cerr << "penner: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
