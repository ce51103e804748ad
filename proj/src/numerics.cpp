#include "logriemann/numerics.hpp"

#include <cmath>
#include <numbers>

#include "logriemann/series.hpp"

namespace lrs {

Complex LaurentPoly::operator()(Complex z) const {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return low == 0 ? acc : acc * std::pow(z, low);
}

Complex LaurentPoly::derivative(Complex z) const {
  Complex acc = 0.0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    int e = low + static_cast<int>(i);
    if (e != 0) acc += coeffs[i] * static_cast<double>(e) * std::pow(z, e - 1);
  }
  return acc;
}

bool LaurentPoly::zero() const {
  for (auto c : coeffs)
    if (c != 0.0) return false;
  return true;
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

Complex Polynomial::derivative(Complex z) const {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 1;) acc = acc * z + coeffs[i] * static_cast<double>(i);
  return acc;
}

int Polynomial::degree() const {
  for (size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0.0) return static_cast<int>(i);
  return -1;
}

void ExpForm::check() const {
  if (P.degree() < 1) throw SurfaceError("expform", "P must be nonconstant");
  if (Q.zero()) throw SurfaceError("expform", "Q must not vanish identically");
}

Complex ExpForm::operator()(Complex z) const { return Q(z) * std::exp(P(z)); }

namespace {

double distance_to_origin(const PathSegment& s) {
  if (s.kind == PathSegment::Kind::Line) {
    Complex d = s.b - s.a;
    double len2 = std::norm(d);
    double t = len2 > 0 ? std::clamp(-(s.a * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
    return std::abs(s.a + t * d);
  }
  double best = std::min(std::abs(s.start()), std::abs(s.end()));
  if (std::abs(std::abs(s.center) - s.radius) >= best) return best;
  for (int i = 1; i < 4096; ++i) best = std::min(best, std::abs(s.point(i / 4096.0)));
  return best;
}

}  // namespace

QuadResult integrate_form(const ExpForm& f, const Path& path, const QuadOptions& opt) {
  f.check();
  if (path.empty()) throw SurfaceError("invalid-path", "empty path");
  if (f.Q.low < 0) {
    for (const auto& s : path)
      if (distance_to_origin(s) <= 1e-12) throw SurfaceError("path-through-pole", "path passes through z = 0");
  }
  return integrate([&](Complex z) { return f(z); }, path, opt);
}

QuadResult integrate_form(const ExpForm& f, const std::vector<Complex>& vertices, const QuadOptions& opt) {
  return integrate_form(f, polyline(vertices), opt);
}

double descent_direction(const Polynomial& P, int s) {
  int n = P.degree();
  if (n < 1) throw SurfaceError("expform", "P must be nonconstant");
  return (std::numbers::pi - std::arg(P.coeffs[n]) + 2.0 * std::numbers::pi * s) / n;
}

std::vector<AsymptoticValue> asymptotic_values(const ExpForm& f, Complex base, double tol) {
  f.check();
  if (f.Q.low < 0) throw SurfaceError("expform", "asymptotic values need Q without negative powers");
  if (!(tol > 0)) throw SurfaceError("invalid-argument", "tolerance must be positive");
  const int n = f.P.degree();
  QuadOptions qo;
  qo.tol = std::max(0.1 * tol, 1e-14);

  // |f| at base + t u is at most |f(z_T)| e^{-kappa (t - T)} once kappa > 0 on [T, inf).
  auto kappa = [&](Complex z, Complex u) {
    Complex q = f.Q(z);
    if (q == 0.0) return -1.0;
    return -(f.P.derivative(z) * u).real() - std::abs(f.Q.derivative(z) / q);
  };

  std::vector<AsymptoticValue> out;
  double scale = 1.0 + std::abs(base) + std::pow(std::abs(f.P.coeffs[n]), -1.0 / n);
  for (int s = 0; s < n; ++s) {
    double theta = descent_direction(f.P, s);
    Complex u = std::polar(1.0, theta);
    Complex value = 0.0;
    double t0 = 0.0, t1 = scale;
    bool done = false;
    for (int step = 0; step < 64 && !done; ++step) {
      value += integrate_form(f, Path{PathSegment::line(base + t0 * u, base + t1 * u)}, qo).value;
      Complex z1 = base + t1 * u;
      double k1 = kappa(z1, u), k2 = kappa(base + 2.0 * t1 * u, u);
      if (k1 > 0 && k2 > 0 && std::abs(f(z1)) / k1 < 0.1 * tol) {
        out.push_back({s, theta, value, t1});
        done = true;
      }
      t0 = t1;
      t1 *= 2.0;
    }
    if (!done)
      throw SurfaceError("asymptotic-nonconvergence", "tail does not decay along direction " + std::to_string(theta));
  }
  return out;
}

Complex laurent_residue(const LaurentPoly& Q, const Polynomial& P) {
  if (Q.low >= 0 || Q.coeffs.empty()) return 0.0;
  std::vector<Complex> p = P.coeffs;
  auto e = exp_series(p, static_cast<size_t>(-1 - Q.low));
  Complex r = series_residue(Q.low, Q.coeffs, e);
  return p.empty() ? r : r * std::exp(p[0]);
}

Rational laurent_residue(int low, const std::vector<Rational>& Q, const std::vector<Rational>& P) {
  if (!P.empty() && P[0] != 0) throw SurfaceError("invalid-argument", "exact residues need P(0) = 0");
  if (low >= 0 || Q.empty()) return Rational(0);
  auto e = exp_series(P, static_cast<size_t>(-1 - low));
  return series_residue(low, Q, e);
}

Rational residue_constant(int m, int n, std::optional<long> N) {
  if (m < 1 || n < 1) throw SurfaceError("invalid-argument", "m and n must be positive");
  if ((m - 1) % n != 0) return Rational(0);
  const long k0 = (m - 1) / n;
  const size_t order = static_cast<size_t>(m + n);
  std::vector<Rational> g(order + 1, Rational(0));
  if (!N) {
    std::vector<Rational> p(n + 1, Rational(0));
    p[n] = 1;
    g = exp_series(p, order);
  } else {
    if (*N <= k0) throw SurfaceError("invalid-argument", "N must exceed (m - 1)/n");
    Rational c(1);  // binom(N, k) / N^k
    for (long k = 0; k * n <= static_cast<long>(order) && k <= *N; ++k) {
      g[k * n] = c;
      c *= Rational(*N - k, (k + 1) * *N);
    }
  }
  // residue of (z^{-m} - C z^{-m-n}) G is r0 - C r1
  std::vector<Rational> q0{Rational(1)};
  Rational r0 = series_residue(-m, q0, g);
  Rational r1 = series_residue(-m - n, q0, g);
  return r0 / r1;
}

Complex rn_factor(Complex z, int n, long N) {
  Complex base = 1.0 + std::pow(z, n) / static_cast<double>(N);
  Complex acc = 1.0;
  for (long e = N; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

std::vector<Complex> rn_samples(double r_in, double r_out, int samples) {
  std::vector<Complex> out;
  for (int s = 0; s < samples; ++s) {
    double r = r_in + (r_out - r_in) * ((s % 4) + 0.5) / 4.0;
    double phi = -std::numbers::pi + 2.0 * std::numbers::pi * (s + 0.5) / samples;
    out.push_back(std::polar(r, phi));
  }
  return out;
}

namespace {

Path sample_path(double r_out, Complex z) {
  double r = std::abs(z);
  return Path{PathSegment::line(Complex(r_out, 0.0), Complex(r, 0.0)), PathSegment::arc(0.0, r, 0.0, std::arg(z))};
}

}  // namespace

std::vector<RnError> rn_approx_error(int m, int n, const std::vector<long>& N_list, double r_in, double r_out,
                                     int samples, double tol, ExecPolicy policy) {
  if (!(r_in > 0 && r_out > r_in)) throw SurfaceError("invalid-argument", "annulus needs 0 < r_in < r_out");
  if (samples < 8) throw SurfaceError("invalid-argument", "at least 8 samples are required");
  for (long N : N_list)
    if (N < 1) throw SurfaceError("invalid-argument", "N must be positive");
  const double C = residue_constant(m, n).convert_to<double>();
  const auto zs = rn_samples(r_in, r_out, samples);
  QuadOptions qo;
  qo.tol = tol;
  auto eta = [=](Complex z) { return (std::pow(z, -m) - C * std::pow(z, -m - n)) * std::exp(std::pow(z, n)); };

  std::vector<Complex> F(samples);
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
  for (int s = 0; s < samples; ++s) F[s] = integrate(eta, sample_path(r_out, zs[s]), qo).value;

  std::vector<RnError> out;
  for (long N : N_list) {
    const double CN = residue_constant(m, n, N).convert_to<double>();
    auto rn = [=](Complex z) { return (std::pow(z, -m) - CN * std::pow(z, -m - n)) * rn_factor(z, n, N); };
    std::vector<double> err(samples);
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
    for (int s = 0; s < samples; ++s) err[s] = std::abs(F[s] - integrate(rn, sample_path(r_out, zs[s]), qo).value);
    double mx = 0.0;
    for (double e : err) mx = std::max(mx, e);
    out.push_back({N, mx});
  }
  return out;
}

PuncturedCheck punctured_plane_check(int K, int n, Complex p1, Complex p2, const Polynomial& P) {
  if (K >= 0) throw SurfaceError("invalid-argument", "K must be negative");
  if (n < 1) throw SurfaceError("invalid-argument", "n must be positive");
  if (p1 == 0.0 || p2 == 0.0 || p1 == p2) throw SurfaceError("invalid-argument", "p1, p2 must be distinct and nonzero");
  if (P.degree() != n) throw SurfaceError("invalid-argument", "P must have degree n");
  std::vector<Complex> g{-p2, 1.0};
  for (int i = 0; i < n; ++i) g = poly_mul(g, std::vector<Complex>{-p1, 1.0});
  const size_t order = static_cast<size_t>(-K - 1);
  auto e = exp_series(P.coeffs, order);
  Complex e0 = std::exp(P.coeffs[0]);
  PuncturedCheck out;
  for (size_t i = 0; i < g.size() && i <= order; ++i) {
    out.residue += g[i] * e[order - i];
    out.scale += std::abs(g[i] * e[order - i]);
  }
  out.residue *= e0;
  out.scale *= std::abs(e0);
  out.ok = std::abs(out.residue) <= 1e-10 * out.scale;
  return out;
}

}  // namespace lrs
