#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "logriemann/numerics.hpp"

namespace lrs {

namespace {

std::optional<Complex> ray_limit(const ExpForm& f, double R, double theta, double tol) {
  const int n = f.P.degree();
  Complex lead = f.P.coeffs[n] * std::polar(1.0, n * theta);
  if (lead.real() >= 0.0) return std::nullopt;

  QuadOptions qo;
  qo.tol = tol;
  Complex u = std::polar(1.0, theta);
  double rho = std::min(1.0, 0.5 * R);
  Complex value = integrate_form(f, Path{PathSegment::arc(0.0, rho, 0.0, theta), PathSegment::line(rho * u, R * u)}, qo).value;

  auto kappa = [&](Complex z) {
    Complex q = f.Q(z);
    if (q == 0.0) return -1.0;
    return -(f.P.derivative(z) * u).real() - std::abs(f.Q.derivative(z) / q);
  };
  double t0 = R, t1 = 2.0 * R;
  for (int step = 0; step < 48; ++step) {
    value += integrate_form(f, Path{PathSegment::line(t0 * u, t1 * u)}, qo).value;
    Complex z1 = t1 * u;
    double k1 = kappa(z1), k2 = kappa(2.0 * z1);
    if (k1 > 0 && k2 > 0 && std::abs(f(z1)) / k1 < tol * std::max(1.0, std::abs(value))) return value;
    t0 = t1;
    t1 *= 1.5;
  }
  return std::nullopt;
}

}  // namespace

ProbeReport completion_probe(const ExpForm& f, double R, int n_rays, double cluster_tol, ExecPolicy policy,
                             double tol) {
  f.check();
  if (!(R > 0)) throw SurfaceError("invalid-argument", "radius must be positive");
  if (n_rays < 64) throw SurfaceError("invalid-argument", "at least 64 rays are required");
  if (cluster_tol <= 0) cluster_tol = 1e-4 * R;

  ProbeReport rep;
  rep.rays = n_rays;
  rep.ray_values.resize(n_rays);
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
  for (int k = 0; k < n_rays; ++k)
    rep.ray_values[k] = ray_limit(f, R, 2.0 * std::numbers::pi * (k + 0.5) / n_rays, tol);

  // Rays are linked only to their angular neighbours: two limits belong to the
  // same completion point when the arc between the rays stays convergent.
  std::vector<int> parent(n_rays);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < n_rays; ++k) {
    const auto& a = rep.ray_values[k];
    const auto& b = rep.ray_values[(k + 1) % n_rays];
    if (a && b && std::abs(*a - *b) <= cluster_tol) parent[find(k)] = find((k + 1) % n_rays);
  }

  std::vector<std::vector<Complex>> groups;
  std::vector<int> slot(n_rays, -1);
  for (int k = 0; k < n_rays; ++k) {
    if (!rep.ray_values[k]) {
      ++rep.unclustered;
      continue;
    }
    int r = find(k);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(*rep.ray_values[k]);
  }
  for (const auto& g : groups) {
    Cluster c;
    c.rays = static_cast<int>(g.size());
    for (auto v : g) c.location += v;
    c.location /= static_cast<double>(g.size());
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = i + 1; j < g.size(); ++j) c.diameter = std::max(c.diameter, std::abs(g[i] - g[j]));
    rep.clusters.push_back(c);
  }
  std::stable_sort(rep.clusters.begin(), rep.clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return rep;
}

}  // namespace lrs
