#include "logriemann/quadrature.hpp"

#include <cmath>
#include <queue>

namespace lrs {

Complex PathSegment::point(double s) const {
  if (kind == Kind::Line) return a + s * (b - a);
  return center + std::polar(radius, t0 + s * (t1 - t0));
}

Complex PathSegment::velocity(double s) const {
  if (kind == Kind::Line) return b - a;
  double t = t0 + s * (t1 - t0);
  return Complex(0.0, t1 - t0) * std::polar(radius, t);
}

Path polyline(const std::vector<Complex>& v) {
  if (v.size() < 2) throw SurfaceError("invalid-path", "a path needs at least two vertices");
  Path p;
  for (size_t i = 0; i + 1 < v.size(); ++i) p.push_back(PathSegment::line(v[i], v[i + 1]));
  return p;
}

namespace {

// Kronrod 15-point nodes (non-negative half) and weights; Gauss 7-point weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  int seg;
  double lo, hi;
  Complex value;
  double err;
  bool operator<(const Piece& o) const { return err < o.err; }
};

Piece rule(const std::function<Complex(Complex)>& f, const PathSegment& s, int seg, double lo, double hi) {
  double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  auto g = [&](double t) { return f(s.point(t)) * s.velocity(t); };
  Complex fc = g(c);
  Complex k = fc * kWgk[7];
  Complex gs = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    Complex sum = g(c - h * kXgk[j]) + g(c + h * kXgk[j]);
    k += sum * kWgk[j];
    if (j % 2 == 1) gs += sum * kWg[j / 2];
  }
  k *= h;
  gs *= h;
  double err = std::abs(k - gs);
  if (!std::isfinite(k.real()) || !std::isfinite(k.imag()))
    throw SurfaceError("quadrature-nonfinite", "integrand is not finite on the path");
  return {seg, lo, hi, k, err};
}

}  // namespace

QuadResult integrate(const std::function<Complex(Complex)>& f, const Path& path, const QuadOptions& opt) {
  if (path.empty()) throw SurfaceError("invalid-path", "empty path");
  if (!(opt.tol > 0.0)) throw SurfaceError("invalid-argument", "tolerance must be positive");
  constexpr int kInitial = 8;
  std::priority_queue<Piece> heap;
  QuadResult r;
  for (int s = 0; s < static_cast<int>(path.size()); ++s)
    for (int i = 0; i < kInitial; ++i) {
      heap.push(rule(f, path[s], s, double(i) / kInitial, double(i + 1) / kInitial));
      r.evaluations += 15;
    }

  auto totals = [&](Complex& v, double& e) {
    auto copy = heap;
    v = 0.0;
    e = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().err;
      copy.pop();
    }
  };
  Complex value;
  double err;
  totals(value, err);
  while (err > opt.tol * std::max(1.0, std::abs(value))) {
    if (r.evaluations + 30 > opt.max_evaluations)
      throw SurfaceError("quadrature-budget", "tolerance not met within " + std::to_string(opt.max_evaluations) +
                                                  " evaluations (estimated error " + std::to_string(err) + ")");
    Piece worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw SurfaceError("quadrature-budget", "subdivision reached machine precision");
    Piece a = rule(f, path[worst.seg], worst.seg, worst.lo, mid);
    Piece b = rule(f, path[worst.seg], worst.seg, mid, worst.hi);
    r.evaluations += 30;
    value += a.value + b.value - worst.value;
    err += a.err + b.err - worst.err;
    heap.push(a);
    heap.push(b);
    if (err <= opt.tol * std::max(1.0, std::abs(value))) totals(value, err);  // drop accumulated rounding
  }
  r.value = value;
  r.est_error = err;
  return r;
}

}  // namespace lrs
