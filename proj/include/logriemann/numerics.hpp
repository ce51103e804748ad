#pragma once

// Exponential 1-forms Q(z) e^{P(z)} dz: primitives, asymptotic values,
// residues, the rational approximants R_N and the completion probe.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "logriemann/exec.hpp"
#include "logriemann/quadrature.hpp"

namespace lrs {

using Rational = boost::multiprecision::cpp_rational;

/// sum_i coeffs[i] z^{low + i}
struct LaurentPoly {
  int low = 0;
  std::vector<Complex> coeffs;

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  bool zero() const;
};

/// sum_i coeffs[i] z^i
struct Polynomial {
  std::vector<Complex> coeffs;

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  int degree() const;  // -1 for the zero polynomial
};

struct ExpForm {
  LaurentPoly Q;
  Polynomial P;

  /// Throws SurfaceError("expform") unless P is nonconstant and Q nonzero.
  void check() const;
  Complex operator()(Complex z) const;
};

/// Integral of f along `path`.  Rejects paths through the pole at 0.
QuadResult integrate_form(const ExpForm& f, const Path& path, const QuadOptions& opt = {});
QuadResult integrate_form(const ExpForm& f, const std::vector<Complex>& vertices, const QuadOptions& opt = {});

/// Direction of steepest descent of the leading term of P in sector s.
double descent_direction(const Polynomial& P, int s);

struct AsymptoticValue {
  int sector = 0;
  double direction = 0.0;
  Complex value;
  double reach = 0.0;  // distance from base integrated before the tail bound held
};

/// Limits of the primitive from `base` along the deg P descent directions (Q must be a polynomial).
std::vector<AsymptoticValue> asymptotic_values(const ExpForm& f, Complex base, double tol = 1e-12);

/// Coefficient of z^{-1} in Q(z) e^{P(z)}.
Complex laurent_residue(const LaurentPoly& Q, const Polynomial& P);
/// Exact version; requires P(0) = 0 so that the result is rational.
Rational laurent_residue(int low, const std::vector<Rational>& Q, const std::vector<Rational>& P);

/// C (N absent) or C_N for the integrand (z^{-m} - C z^{-m-n}) G(z) with
/// G = e^{z^n} or (1 + z^n / N)^N.  Zero when (m - 1)/n is not an integer.
Rational residue_constant(int m, int n, std::optional<long> N = std::nullopt);

/// (1 + z^n / N)^N
Complex rn_factor(Complex z, int n, long N);

struct RnError {
  long N = 0;
  double max_error = 0.0;
};

/// Sample points used by rn_approx_error: radii cycle through four levels,
/// angles spread over (-pi, pi).
std::vector<Complex> rn_samples(double r_in, double r_out, int samples);

std::vector<RnError> rn_approx_error(int m, int n, const std::vector<long>& N_list, double r_in, double r_out,
                                     int samples, double tol = 1e-11, ExecPolicy policy = ExecPolicy::Serial);

struct Cluster {
  Complex location;
  int rays = 0;
  double diameter = 0.0;
};

struct ProbeReport {
  int rays = 0;
  std::vector<Cluster> clusters;
  int unclustered = 0;
  std::vector<std::optional<Complex>> ray_values;  // by ray index; nullopt for divergent rays
};

/// Limits of the primitive (normalized to 0 at min(1, R/2)) along rays leaving
/// the circle |z| = R.  Single-linkage clustering between angularly adjacent
/// convergent rays; cluster_tol <= 0 selects 1e-4 R.
ProbeReport completion_probe(const ExpForm& f, double R, int n_rays, double cluster_tol = 0.0,
                             ExecPolicy policy = ExecPolicy::Serial, double tol = 1e-10);

struct PuncturedCheck {
  Complex residue;
  double scale = 0.0;
  bool ok = false;
};

/// Residue at 0 of z^K (z - p1)^n (z - p2) e^{P(z)} dz.
PuncturedCheck punctured_plane_check(int K, int n, Complex p1, Complex p2, const Polynomial& P);

}  // namespace lrs
