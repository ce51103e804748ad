#include "logriemann/lift.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "circle_frame.hpp"
#include "surface_index.hpp"

namespace lrs {

using detail::CircleFrame;
using detail::Loc;
using detail::SurfaceIndex;

namespace {

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double point_ray_distance(Complex p, Complex foot, Complex dir) {
  double t = ((p - foot) * std::conj(dir)).real();
  if (t <= 0) return std::abs(p - foot);
  return std::abs(cross2(dir, p - foot));
}

void require_off_slits(const SurfaceIndex& ix, const Loc& loc, Complex p) {
  double scale = 1.0 + std::abs(p);
  for (const auto& s : ix.slits(loc))
    if (point_ray_distance(p, s.foot, s.dir) <= kGenericityTol * scale)
      throw SurfaceError("invalid-sheet-point", "point lies on slit " + s.id);
}

}  // namespace

LiftedPath lift_segment(const SheetComplex& c, const SheetPoint& start, Complex target, int max_crossings) {
  if (max_crossings <= 0) throw SurfaceError("invalid-argument", "max_crossings must be positive");
  SurfaceIndex ix(c);
  Loc loc = ix.resolve(start.sheet);
  require_off_slits(ix, loc, start.pos);
  if (std::abs(target - start.pos) == 0.0) throw SurfaceError("invalid-argument", "target equals start");

  LiftedPath out;
  Complex p = start.pos;
  int entered_slit = -1;  // slit we are sitting on after a crossing
  double travelled = 0.0;
  int crossings = 0;
  const double scale = 1.0 + std::abs(start.pos) + std::abs(target);

  while (true) {
    Complex v = target - p;
    double best_s = std::numeric_limits<double>::infinity();
    int best = -1;
    bool best_is_foot = false;
    const auto& slits = ix.slits(loc);
    for (int k = 0; k < static_cast<int>(slits.size()); ++k) {
      const auto& sl = slits[k];
      double denom = cross2(v, sl.dir);
      if (std::abs(denom) <= kTangencyTol * std::abs(v)) {
        // parallel: only a problem when the segment runs along the ray
        if (point_ray_distance(p, sl.foot, sl.dir) <= kTangencyTol * scale && k != entered_slit)
          throw SurfaceError("degenerate-segment", "segment runs along slit " + sl.id);
        double foot_off = std::abs(cross2(v, sl.foot - p)) / std::abs(v);
        double along = ((sl.foot - p) * std::conj(v)).real() / std::norm(v);
        if (foot_off <= kTangencyTol * scale && along > 0 && along <= 1.0 + kTangencyTol) {
          if (along < best_s) {
            best_s = along;
            best = k;
            best_is_foot = true;
          }
        }
        continue;
      }
      double s = cross2(sl.foot - p, sl.dir) / denom;
      double t = cross2(sl.foot - p, v) / denom;
      if (k == entered_slit && s <= 1e-9) continue;
      if (s <= 0.0 || s > 1.0 + kTangencyTol) continue;
      bool at_foot = std::abs(t) <= kTangencyTol * scale;
      if (!at_foot && t < 0) continue;
      if (s < best_s) {
        best_s = s;
        best = k;
        best_is_foot = at_foot;
      }
    }

    if (best < 0) {
      out.pieces.push_back({ix.address(loc), p, target});
      out.outcome = LiftOutcome::Reached;
      out.end = SheetPoint{ix.address(loc), target};
      return out;
    }
    const auto& sl = slits[best];
    if (best_is_foot) {
      out.pieces.push_back({ix.address(loc), p, sl.foot});
      out.outcome = LiftOutcome::HitRamification;
      out.ram = ix.rams[sl.ram].id;
      out.rho = travelled + std::abs(sl.foot - p);
      out.end = SheetPoint{ix.address(loc), sl.foot};
      return out;
    }
    if (best_s >= 1.0 - kTangencyTol)
      throw SurfaceError("degenerate-segment", "target lies on slit " + sl.id);

    Complex q = p + best_s * v;
    out.pieces.push_back({ix.address(loc), p, q});
    travelled += std::abs(q - p);
    if (++crossings > max_crossings) {
      out.outcome = LiftOutcome::CrossingBudgetExceeded;
      out.end = SheetPoint{ix.address(loc), q};
      return out;
    }
    // Left of the ray is the Top side.
    Side side = cross2(sl.dir, p - sl.foot) > 0 ? Side::Top : Side::Bottom;
    auto land = ix.cross(loc, best, side);
    if (!land) throw SurfaceError("involution-incomplete", "slit side " + sl.id + " is unglued");
    loc = land->loc;
    entered_slit = land->slit;
    p = q;
  }
}

double min_circle_radius(const SheetComplex& c) {
  double r = std::abs(c.z0);
  for (const auto& [id, ram] : c.rams) r = std::max(r, std::abs(ram.projection));
  return r;
}

namespace {

struct Walk {
  bool periodic = false;
  int degree = 0;
  int escape_family = -1;
};

// Counter-clockwise (ccw = true) or clockwise lift from angle phi on `start`.
Walk walk_circle(const SurfaceIndex& ix, const CircleFrame& frame, Loc start, double phi, bool ccw,
                 std::vector<CircleCrossing>& log) {
  Walk w;
  if (frame.slit_count(start) == 0) {
    w.periodic = true;
    w.degree = 1;
    return w;
  }
  size_t total_slits = 0;
  for (const auto& s : ix.sheets) total_slits += s.slits.size();
  const long budget = 8 * static_cast<long>(total_slits + ix.families.size() + 4) + 2 * start.copy;

  Loc loc = start;
  int exit = ccw ? frame.first_ccw_from(loc, phi) : frame.first_cw_from(loc, phi);
  int entered = -1;
  int turns = 0;
  std::map<int, long> family_seen;  // family -> copy last landed on

  for (long step = 0; step < budget; ++step) {
    double exit_angle = frame.angle(loc, exit);
    if (entered >= 0) {
      double entry_angle = frame.angle(loc, entered);
      double a = ccw ? entry_angle : exit_angle;
      double b = ccw ? exit_angle : entry_angle;
      if (CircleFrame::covers(a, b, exit == entered, phi)) {
        ++turns;
        if (loc == start) {
          w.periodic = true;
          w.degree = turns;
          return w;
        }
      }
    }
    Side side = ccw ? Side::Bottom : Side::Top;
    auto land = ix.cross(loc, exit, side);
    if (!land) throw SurfaceError("involution-incomplete", "circle lift reached an unglued side");
    log.push_back({exit_angle, ix.address(loc), ix.slits(loc)[exit].id, side, ix.address(land->loc),
                   ix.slits(land->loc)[land->slit].id});
    if (land->loc.family >= 0) {
      auto it = family_seen.find(land->loc.family);
      if (it != family_seen.end() && land->loc.copy > it->second) {
        w.escape_family = land->loc.family;
        return w;
      }
      family_seen[land->loc.family] = land->loc.copy;
    }
    loc = land->loc;
    entered = land->slit;
    exit = ccw ? frame.next_ccw(loc, entered) : frame.next_cw(loc, entered);
  }
  throw SurfaceError("lift-budget", "circle lift did not close or escape");
}

}  // namespace

CircleLift lift_circle(const SheetComplex& c, double R, const SheetPoint& start) {
  SurfaceIndex ix(c);
  double rmin = min_circle_radius(c);
  if (!(R > rmin * (1.0 + 1e-9) + kGenericityTol))
    throw SurfaceError("radius-too-small", "R must exceed |z0| and every |pi(w*)|");
  if (std::abs(std::abs(start.pos) - R) > 1e-9 * R)
    throw SurfaceError("invalid-argument", "start point is not on the circle of radius R");
  Loc loc = ix.resolve(start.sheet);
  CircleFrame frame(ix, R);
  double phi = detail::wrap_angle(std::arg(start.pos));
  for (int k = 0; k < frame.slit_count(loc); ++k)
    if (std::abs(frame.angle(loc, k) - phi) <= 1e-12)
      throw SurfaceError("invalid-sheet-point", "start point lies on a slit");

  CircleLift out;
  out.radius = R;
  out.start = start;
  Walk fwd = walk_circle(ix, frame, loc, phi, true, out.crossings);
  if (fwd.periodic) {
    out.outcome = Periodic{fwd.degree};
    return out;
  }
  Walk back = walk_circle(ix, frame, loc, phi, false, out.crossings);
  if (back.periodic) throw SurfaceError("lift-inconsistent", "circle lift escapes forwards but closes backwards");
  out.outcome = Escaping{ix.rams[ix.families[back.escape_family].ram].id,
                         ix.rams[ix.families[fwd.escape_family].ram].id};
  return out;
}

}  // namespace lrs
