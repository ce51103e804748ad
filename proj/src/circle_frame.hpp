#pragma once

// Angular bookkeeping for the circle |z| = R on every sheet.  For R beyond all
// feet and z0 each slit ray meets the circle exactly once; the sheets' slits are
// kept in counter-clockwise order of those crossing angles.

#include <cmath>
#include <numbers>
#include <vector>

#include "surface_index.hpp"

namespace lrs::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angle reduced to [0, 2pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Angle at which the ray foot + t*dir (t >= 0) leaves the disc of radius R.
double ray_circle_angle(Complex foot, Complex dir, double R);

class CircleFrame {
 public:
  CircleFrame(const SurfaceIndex& ix, double R);

  double radius() const { return R_; }
  double angle(const Loc& l, int slit) const { return table(l).angle[slit]; }
  int slit_count(const Loc& l) const { return static_cast<int>(table(l).order.size()); }

  /// Next slit met moving counter-clockwise (resp. clockwise) after leaving slit `slit`.
  int next_ccw(const Loc& l, int slit) const;
  int next_cw(const Loc& l, int slit) const;
  /// First slit met moving from angle phi (not itself a slit angle).
  int first_ccw_from(const Loc& l, double phi) const;
  int first_cw_from(const Loc& l, double phi) const;

  /// True when the ccw arc from angle a (exclusive) to angle b (inclusive) covers
  /// `ref` modulo 2pi; `full_turn` marks an arc that leaves through the slit it entered by.
  static bool covers(double a, double b, bool full_turn, double ref) {
    if (full_turn) return true;
    double span = wrap_angle(b - a);
    double off = wrap_angle(ref - a);
    return off > 0.0 && off <= span;
  }

 private:
  struct Table {
    std::vector<double> angle;  // by slit index
    std::vector<int> order;     // slit indices sorted by angle
    std::vector<int> rank;      // inverse of order
  };
  const Table& table(const Loc& l) const { return l.family >= 0 ? fams_[l.family] : cores_[l.core]; }
  static Table make(const std::vector<SlitInfo>& slits, double R);

  double R_;
  std::vector<Table> cores_;
  std::vector<Table> fams_;
};

}  // namespace lrs::detail
