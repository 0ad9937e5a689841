#include "penner/catalog.hpp"

#include <sstream>

#include "penner/error.hpp"
#include "penner/graph.hpp"
#include "penner/spectral.hpp"

namespace penner {

namespace {

using Rows = std::vector<std::vector<int>>;

IntersectionMatrix from_rows(const Rows& rows) {
  const std::size_t n = rows.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return validate_omega(m);
}

const Rows kX = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, 1, 2, 2, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 2, 1, 2, 2, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0},
};

struct Fixed {
  const char* id;
  SurfaceSpec surface;
  std::size_t rank;
  Rows rows;
  const char* notes;
};

const std::vector<Fixed>& fixed_entries() {
  static const std::vector<Fixed> entries = {
      {"N5-rank5", {false, 5, 0}, 5,
       {{0, 0, 1, 0, 0}, {0, 0, 1, 1, 2}, {1, 1, 0, 0, 0}, {0, 1, 0, 0, 1}, {0, 2, 0, 1, 0}},
       "rank 5 collection on the closed nonorientable surface of genus 5"},
      {"N31-rank4", {false, 3, 1}, 4,
       {{0, 0, 1, 0}, {0, 0, 1, 2}, {1, 1, 0, 1}, {0, 2, 1, 0}},
       "filling collection on N_{3,1}"},
      {"N40-rank5", {false, 4, 0}, 5,
       {{0, 2, 2, 2, 2}, {2, 0, 2, 2, 2}, {2, 2, 0, 2, 2}, {2, 2, 2, 0, 4}, {2, 2, 2, 4, 0}},
       "filling collection on N_4"},
      {"N41-rank8", {false, 4, 1}, 8,
       {{0, 2, 2, 2, 2, 2, 4, 0},
        {2, 0, 2, 2, 2, 2, 4, 0},
        {2, 2, 0, 4, 4, 4, 8, 0},
        {2, 2, 4, 0, 0, 0, 0, 0},
        {2, 2, 4, 0, 0, 2, 2, 2},
        {2, 2, 4, 0, 2, 0, 2, 2},
        {4, 4, 8, 0, 2, 2, 0, 4},
        {0, 0, 0, 0, 2, 2, 4, 0}},
       "rank 8 collection on N_{4,1}"},
      {"N32-rank7", {false, 3, 2}, 7,
       {{0, 2, 2, 2, 2, 2, 4},
        {2, 0, 0, 2, 4, 4, 4},
        {2, 0, 0, 2, 4, 2, 2},
        {2, 2, 2, 0, 2, 2, 4},
        {2, 4, 4, 2, 0, 0, 4},
        {2, 4, 2, 2, 0, 0, 2},
        {4, 4, 2, 4, 4, 2, 0}},
       "rank 7 collection on N_{3,2}"},
      {"N13-rank3", {false, 1, 3}, 3, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}, "rank 3 collection on N_{1,3}"},
      {"N14-rank4", {false, 1, 4}, 4,
       {{0, 0, 2, 2}, {0, 0, 2, 0}, {2, 2, 0, 2}, {2, 0, 2, 0}},
       "rank 4 collection on N_{1,4}"},
      {"N22-rank3", {false, 2, 2}, 3, {{0, 2, 2}, {2, 0, 4}, {2, 4, 0}}, "rank 3 collection on N_{2,2}"},
      {"N22-rank4", {false, 2, 2}, 4,
       {{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 4}, {2, 2, 4, 0}},
       "rank 4 collection on N_{2,2}"},
  };
  return entries;
}

std::set<int> range(int a, int b, int parity) {
  std::set<int> s;
  for (int d = a; d <= b; ++d)
    if (parity < 0 || d % 2 == parity) s.insert(d);
  return s;
}

std::set<int> unite(std::set<int> a, const std::set<int>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

void check_surface(const SurfaceSpec& s) {
  if (s.genus < 0 || s.punctures < 0) throw Error(ErrorKind::OutOfFormulaRange, "negative genus or punctures");
  if (!s.orientable && s.genus < 1) throw Error(ErrorKind::OutOfFormulaRange, "nonorientable genus must be >= 1");
}

}  // namespace

std::string SurfaceSpec::name() const {
  std::ostringstream os;
  os << (orientable ? "S_" : "N_");
  if (punctures == 0)
    os << genus;
  else
    os << '{' << genus << ',' << punctures << '}';
  return os.str();
}

RatMatrix max_rank_block() {
  RatMatrix x(12, 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) x(i, j) = kX[i][j];
  return x;
}

IntersectionMatrix m_r(int r) {
  if (r < 1) throw Error(ErrorKind::OutOfFormulaRange, "M_r needs r >= 1");
  RatMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = i == j ? 0 : 1;
  return validate_omega(m);
}

RatMatrix m_r_inverse(int r) {
  if (r < 2) throw Error(ErrorKind::OutOfFormulaRange, "M_r is singular for r < 2");
  RatMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = i == j ? Rational(-(r - 2), r - 1) : Rational(1, r - 1);
  return m;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids{"S43-max"};
  for (int r = 3; r <= 12; ++r) ids.push_back("Mr-" + std::to_string(r));
  for (const auto& f : fixed_entries()) ids.emplace_back(f.id);
  return ids;
}

CatalogEntry catalog_get(const std::string& id) {
  CatalogEntry e;
  e.id = id;
  if (id == "S43-max") {
    RatMatrix x = max_rank_block();
    RatMatrix m(24, 24);
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) {
        m(i, 12 + j) = x(i, j);
        m(12 + j, i) = x(i, j);
      }
    e.surface = {true, 4, 3};
    e.omega = validate_omega(m);
    e.expected_rank = 24;
    e.bipartite = true;
    e.notes = "maximal-rank filling pair of multicurves on S_{4,3}, block form [[0,X],[X^T,0]]";
    return e;
  }
  if (id.rfind("Mr-", 0) == 0) {
    int r = 0;
    try {
      r = std::stoi(id.substr(3));
    } catch (...) {
      r = 0;
    }
    if (r >= 3 && r <= 12 && id == "Mr-" + std::to_string(r)) {
      e.surface = {false, r + 1, 0};
      e.omega = m_r(r);
      e.expected_rank = r;
      e.bipartite = false;
      e.notes = "curves around a central crosscap on N_" + std::to_string(r + 1) + ": 0 diagonal, 1 elsewhere";
      return e;
    }
  }
  for (const auto& f : fixed_entries())
    if (id == f.id) {
      e.surface = f.surface;
      e.omega = from_rows(f.rows);
      e.expected_rank = f.rank;
      e.bipartite = is_bipartite(graph_of(e.omega));
      e.notes = f.notes;
      return e;
    }
  throw Error(ErrorKind::UnknownId, "no catalog entry '" + id + "'");
}

IntersectionMatrix crosscap_augment(const IntersectionMatrix& omega, int i1, int i2, CrosscapVariant variant) {
  const std::size_t n = omega.n();
  for (int i : {i1, i2})
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  if (i1 == i2) throw Error(ErrorKind::CurvesIntersect, "the two curves must be distinct");
  if (omega(i1 - 1, i2 - 1) != 0)
    throw Error(ErrorKind::CurvesIntersect, "omega_(" + std::to_string(i1) + "," + std::to_string(i2) + ") = " +
                                                omega(i1 - 1, i2 - 1).get_str());
  const std::size_t extra = variant == CrosscapVariant::E ? 1 : variant == CrosscapVariant::ED1 ? 2 : 3;
  const std::size_t n2 = n + extra;
  RatMatrix m(n2, n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = omega(i, j);
  std::vector<std::vector<Rational>> cols(3, std::vector<Rational>(n));
  for (std::size_t t = 0; t < n; ++t) {
    cols[0][t] = omega(i1 - 1, t) + omega(i2 - 1, t);  // e
    cols[1][t] = omega(i1 - 1, t);                      // d1
    cols[2][t] = omega(i2 - 1, t);                      // d2
  }
  for (std::size_t a = 0; a < extra; ++a) {
    for (std::size_t t = 0; t < n; ++t) m(n + a, t) = m(t, n + a) = cols[a][t];
    for (std::size_t b = 0; b < extra; ++b) m(n + a, n + b) = a == b ? 0 : 2;
  }
  return validate_omega(m);
}

IntersectionMatrix puncture_augment(const IntersectionMatrix& omega, int c, PunctureVariant variant) {
  const std::size_t n = omega.n();
  if (c < 1 || static_cast<std::size_t>(c) > n)
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(c) + " outside 1.." + std::to_string(n));
  const std::size_t extra = variant == PunctureVariant::D ? 1 : 2;
  RatMatrix m(n + extra, n + extra);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = omega(i, j);
  for (std::size_t t = 0; t < n; ++t) m(n, t) = m(t, n) = omega(c - 1, t);
  if (variant == PunctureVariant::DE) m(n, n + 1) = m(n + 1, n) = 2;
  return validate_omega(m);
}

int teich_dim(const SurfaceSpec& s) {
  check_surface(s);
  const int g = s.genus, n = s.punctures;
  if (s.orientable) {
    if (g >= 2) return 6 * g - 6 + 2 * n;
    if (g == 1) return n == 0 ? 2 : 2 * n;
    return n >= 3 ? 2 * n - 6 : 0;
  }
  if (g + n < 3)
    throw Error(ErrorKind::OutOfFormulaRange, s.name() + " lies outside the range of 3g+2n-6");
  return 3 * g + 2 * n - 6;
}

int homology_dim(const SurfaceSpec& s) {
  check_surface(s);
  return s.orientable ? 2 * s.genus : s.genus - 1;
}

bool admits_pseudo_anosov(const SurfaceSpec& s) {
  check_surface(s);
  if (s.orientable) return !(s.genus == 0 && s.punctures <= 3);
  switch (s.punctures) {
    case 0: return s.genus >= 4;
    case 1: return s.genus >= 3;
    case 2: return s.genus >= 2;
    default: return s.genus >= 1;
  }
}

DegreeSet degree_set(const SurfaceSpec& s) {
  if (!admits_pseudo_anosov(s)) throw Error(ErrorKind::NoPseudoAnosov, s.name() + " admits no pseudo-Anosov maps");
  const int t = teich_dim(s);
  DegreeSet out;
  if (!s.orientable) {
    out.degrees = range(3, t, -1);
    return out;
  }
  const int half = t / 2;
  out.degrees = unite(range(2, t, 0), range(3, half, 1));
  if (s.punctures % 2 == 1 && half % 2 == 1) {
    out.ambiguous = true;
    out.alternative = unite(range(2, t, 0), range(3, half - 1, 1));
  }
  return out;
}

std::set<int> degree_set_plus(const SurfaceSpec& s) {
  if (!admits_pseudo_anosov(s)) throw Error(ErrorKind::NoPseudoAnosov, s.name() + " admits no pseudo-Anosov maps");
  const int h = homology_dim(s);
  if (!s.orientable) return range(3, h, -1);
  return unite(range(2, h, 0), range(3, h / 2, 1));
}

std::string format_set(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int d : s) {
    os << (first ? "" : ",") << d;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace penner
