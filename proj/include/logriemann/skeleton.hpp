#pragma once

// Skeleton graph of a sheet complex: one vertex per core sheet, one marker per
// periodic tail, one edge per glued pair of slit sides labelled by its foot.

#include <optional>
#include <string>
#include <vector>

#include "logriemann/sheet_complex.hpp"

namespace lrs {

struct SkeletonVertex {
  std::string id;
  bool tail = false;  // periodic-tail marker standing for a whole family
};

struct SkeletonEdge {
  int a = -1;
  int b = -1;
  std::string ram;
  bool periodic = false;  // edge into a tail marker
};

struct Skeleton {
  std::vector<SkeletonVertex> vertices;
  std::vector<SkeletonEdge> edges;

  int vertex(const std::string& id) const;  // -1 when absent
};

Skeleton skeleton(const SheetComplex& c);

struct CensusEntry {
  std::string ram;
  std::optional<int> order;  // nullopt: infinite

  bool operator==(const CensusEntry&) const = default;
};

/// Orders read off the subgraphs Gamma(w*), sorted by ram id.
std::vector<CensusEntry> ramification_census(const Skeleton& s);

/// Replaces each finite-order cycle by a star through a new vertex "v(<ram>)".
Skeleton finite_completion(const Skeleton& s);

int component_count(const Skeleton& s);
int betti(const Skeleton& s);

std::string to_dot(const Skeleton& s, const std::string& name = "skeleton");

}  // namespace lrs
