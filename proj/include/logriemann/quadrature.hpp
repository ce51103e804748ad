#pragma once

// Adaptive Gauss-Kronrod (7, 15) quadrature of complex integrands along
// straight segments and circular arcs.

#include <functional>
#include <vector>

#include "logriemann/sheet_complex.hpp"

namespace lrs {

struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  Complex a, b;             // Line endpoints
  Complex center;           // Arc
  double radius = 0.0;
  double t0 = 0.0, t1 = 0.0;  // Arc angles; the arc runs from t0 to t1

  static PathSegment line(Complex a, Complex b) { return {Kind::Line, a, b, {}, 0.0, 0.0, 0.0}; }
  static PathSegment arc(Complex c, double r, double t0, double t1) { return {Kind::Arc, {}, {}, c, r, t0, t1}; }

  Complex point(double s) const;     // s in [0, 1]
  Complex velocity(double s) const;  // d point / ds
  Complex start() const { return point(0.0); }
  Complex end() const { return point(1.0); }
};

using Path = std::vector<PathSegment>;

Path polyline(const std::vector<Complex>& vertices);

struct QuadOptions {
  double tol = 1e-9;          // relative to max(1, |value|)
  long max_evaluations = 10'000'000;
};

struct QuadResult {
  Complex value;
  double est_error = 0.0;
  long evaluations = 0;
};

/// Integral of f(z) dz along the path.  Throws SurfaceError("quadrature-budget")
/// when the tolerance is not met within the evaluation budget.
QuadResult integrate(const std::function<Complex(Complex)>& f, const Path& path, const QuadOptions& opt = {});

}  // namespace lrs
