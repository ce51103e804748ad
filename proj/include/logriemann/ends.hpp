#pragma once

// Ends of a finite-type surface: the components of the lift of a large circle.
// A component either covers the circle finitely, or escapes along half-line
// tails; the escaping ones define the permutation u of the infinite-order rams,
// whose cycles are the remaining ends.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "logriemann/exec.hpp"
#include "logriemann/model.hpp"
#include "logriemann/sheet_complex.hpp"
#include "logriemann/skeleton.hpp"

namespace lrs {

struct FiniteCoverEnd {
  int degree = 1;
};

struct CycleEnd {
  std::vector<std::string> cycle;  // w_{j+1} = u(w_j), starting at the smallest id
  std::vector<long> a;
  std::vector<long> a_prime;
  long index = 0;
};

struct EndDescriptor {
  std::variant<FiniteCoverEnd, CycleEnd> kind;
  std::string sheet;  // some core sheet the end passes through
};

struct HalfLines {
  std::string plus_family;
  std::string minus_family;
};

struct CoreDecomposition {
  Skeleton core;  // finite part plus the absorbed initial tail copies
  std::map<std::string, HalfLines> halflines;
  long N = 0, c1 = 0, c2 = 0;
  long extension = 0;  // tail copies absorbed on every half-line
  std::map<std::string, long> ext_minus, ext_plus;  // extra copies per half-line
  std::map<std::string, long> a;
  std::map<std::string, long> a_prime;
};

/// Radius used to classify ends: 2 max(|z0|, max |pi(w*)| + 1).
double ends_radius(const SheetComplex& c);

/// u as a map from each infinite ram to its image.
std::map<std::string, std::string> u_permutation(const SheetComplex& c);
std::map<std::string, std::string> d_permutation(const SheetComplex& c);

/// Smallest N with N >= 8 (#R_inf + 1)(c1 + c2).
long normalization_N(const SheetComplex& c, long c1, long c2);

/// Core grown by equal initial segments of every half-line so that all a_j and
/// a'_j lie in [2N - c1, 2N + c1].  Throws when c1 is too small for that.
CoreDecomposition core_decomposition(const SheetComplex& c, long c1, long c2);

/// Core grown by `uniform` copies on every half-line plus the given extra
/// copies.  No range requirement.
CoreDecomposition core_decomposition(const SheetComplex& c, long c1, long c2, long uniform,
                                     const std::map<std::string, long>& ext_minus,
                                     const std::map<std::string, long>& ext_plus);

/// Smallest c1 >= 2 for which core_decomposition(c, c1, c2) succeeds.
long minimal_c1(const SheetComplex& c, long c2);

/// K = sum (a'_j - a_j) - (n - 1).
long end_index(const std::vector<long>& a, const std::vector<long>& a_prime);
inline long end_index(const CycleEnd& e) { return end_index(e.a, e.a_prime); }

struct EndsReport {
  double radius = 0.0;
  std::vector<EndDescriptor> ends;
  std::map<std::string, std::string> u;
  CoreDecomposition decomposition;
};

/// Ends with a, a' taken from core_decomposition(c, minimal_c1(c, c2), c2).
EndsReport classify_ends(const SheetComplex& c, long c2 = 2);

/// Cycle-end data measured on a given decomposition.
CycleEnd cycle_end(const SheetComplex& c, const std::vector<std::string>& cycle, const CoreDecomposition& d);

struct EmbeddingWitness {
  long k0 = 0;
  std::vector<long> k;
  std::vector<long> k_prime;
  ModelParams target;
};

EmbeddingWitness embedding_witness(const SheetComplex& c, const CycleEnd& e, const CoreDecomposition& d);

struct ComponentTopology {
  std::vector<std::string> sheets;
  int b1 = 0;  // of the finitely completed skeleton
  int genus = 0;
  int punctures = 0;
};

/// One entry per connected component of the surface.
std::vector<ComponentTopology> topology_census(const SheetComplex& c);

/// Brute force: lift_circle from the midpoint of every arc of every core sheet
/// at radius R, merged into components.
struct CircleComponent {
  bool periodic = false;
  int degree = 0;
  std::string w_minus, w_plus;
  int arcs = 0;  // core arcs in the component
};

std::vector<CircleComponent> circle_components(const SheetComplex& c, double R,
                                               ExecPolicy policy = ExecPolicy::Serial);

}  // namespace lrs
