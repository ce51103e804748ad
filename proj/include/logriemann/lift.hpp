#pragma once

// Lifting straight segments and large circles from the plane to a sheet complex.

#include <string>
#include <variant>
#include <vector>

#include "logriemann/sheet_complex.hpp"

namespace lrs {

struct PathPiece {
  SheetAddress sheet;
  Complex from;
  Complex to;
};

enum class LiftOutcome { Reached, HitRamification, CrossingBudgetExceeded };

struct LiftedPath {
  std::vector<PathPiece> pieces;
  LiftOutcome outcome = LiftOutcome::Reached;
  SheetPoint end;        // Reached: the lifted target; otherwise the last point reached
  std::string ram;       // HitRamification
  double rho = 0.0;      // HitRamification: arc length to the foot
};

/// Maximal lift of the segment [start.pos, target].  Crossing a slit interior moves
/// to the glued sheet; reaching a foot stops at that ramification point.
LiftedPath lift_segment(const SheetComplex& c, const SheetPoint& start, Complex target, int max_crossings);

struct CircleCrossing {
  double angle = 0.0;
  SheetAddress left;   // sheet being left
  std::string slit;    // slit crossed on `left`
  Side side = Side::Bottom;  // side of that slit crossed through
  SheetAddress entered;
  std::string entered_slit;  // slit of `entered` the lift arrives through
};

struct Periodic {
  int degree = 1;
};

struct Escaping {
  std::string w_minus;  // tail reached as t -> -infinity
  std::string w_plus;   // tail reached as t -> +infinity
};

struct CircleLift {
  double radius = 0.0;
  SheetPoint start;
  std::variant<Periodic, Escaping> outcome;
  std::vector<CircleCrossing> crossings;  // counter-clockwise part first, then clockwise
};

/// Smallest radius accepted by lift_circle for this complex.
double min_circle_radius(const SheetComplex& c);

/// Lift of t -> R e^{it} through `start` (|start.pos| = R).
CircleLift lift_circle(const SheetComplex& c, double R, const SheetPoint& start);

}  // namespace lrs
