#pragma once

#include <cstdint>
#include <vector>

#include "logriemann/sheet_complex.hpp"

namespace lrs::testing {

struct RandomComplex {
  SheetComplex complex;
  int degree = 0;              // number of base sheets
  int branch_excess = 0;       // sum of (order - 1) over finite rams
  int log_points = 0;          // infinite rams
};

/// Finite branched cover of the plane by `degree` base sheets (monodromy drawn
/// at random, transitive), with `logs` infinite-order points attached to random
/// sheets, each with up to two materialized clean copies on its line.
RandomComplex random_complex(std::uint64_t seed, int max_degree = 4, int max_branch = 3, int max_logs = 3);

/// Three sheets, two order-3 points with the same cyclic monodromy: genus 1, one end.
SheetComplex torus_complex();

}  // namespace lrs::testing
