#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "penner/penner.hpp"

namespace penner {

struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;
  int punctures = 0;

  std::string name() const;  // "S_{4,3}", "N_5"
};

struct CatalogEntry {
  std::string id;
  SurfaceSpec surface;
  IntersectionMatrix omega;
  std::size_t expected_rank = 0;
  bool bipartite = false;
  std::string notes;
};

// Ids in catalogue order.
std::vector<std::string> catalog_ids();
CatalogEntry catalog_get(const std::string& id);

// The 12x12 block X of the maximal-rank filling pair on S_{4,3}.
RatMatrix max_rank_block();
// r x r, zero diagonal, ones elsewhere.
IntersectionMatrix m_r(int r);
// Off-diagonal 1/(r-1), diagonal -(r-2)/(r-1).
RatMatrix m_r_inverse(int r);

enum class CrosscapVariant { E, ED1, ED1D2 };
enum class PunctureVariant { D, DE };

// Appends e (row i1 + row i2), then d1 (row i1), then d2 (row i2); the new
// curves meet each other twice. Requires omega_{i1 i2} == 0.
IntersectionMatrix crosscap_augment(const IntersectionMatrix& omega, int i1, int i2, CrosscapVariant variant);
// D appends a parallel copy d of curve c; DE also appends e meeting only d, twice.
IntersectionMatrix puncture_augment(const IntersectionMatrix& omega, int c, PunctureVariant variant);

int teich_dim(const SurfaceSpec& s);
int homology_dim(const SurfaceSpec& s);  // dim H_1 of the filled-in surface
bool admits_pseudo_anosov(const SurfaceSpec& s);

struct DegreeSet {
  std::set<int> degrees;
  bool ambiguous = false;
  std::optional<std::set<int>> alternative;  // second candidate when ambiguous
};

DegreeSet degree_set(const SurfaceSpec& s);
std::set<int> degree_set_plus(const SurfaceSpec& s);

std::string format_set(const std::set<int>& s);

}  // namespace penner
