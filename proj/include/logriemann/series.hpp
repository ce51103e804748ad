#pragma once

// Truncated power/Laurent series arithmetic, generic over the coefficient
// field (std::complex<double> or an exact rational type).

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lrs {

/// Coefficients E_0..E_order of exp(P(z) - P(0)) from m E_m = sum_j j p_j E_{m-j}.
template <class T>
std::vector<T> exp_series(const std::vector<T>& p, std::size_t order) {
  std::vector<T> e(order + 1, T(0));
  e[0] = T(1);
  for (std::size_t m = 1; m <= order; ++m) {
    T acc(0);
    for (std::size_t j = 1; j <= m && j < p.size(); ++j) acc += T(static_cast<long>(j)) * p[j] * e[m - j];
    e[m] = acc / T(static_cast<long>(m));
  }
  return e;
}

/// Coefficient of z^{-1} in Q(z) G(z), Q = sum_i q[i] z^{low+i}, G a power series.
/// Throws when G is too short to decide.
template <class T>
T series_residue(int low, const std::vector<T>& q, const std::vector<T>& g) {
  T r(0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    long e = static_cast<long>(low) + static_cast<long>(i);
    if (e > -1) break;
    std::size_t need = static_cast<std::size_t>(-1 - e);
    if (need >= g.size()) throw std::out_of_range("series too short");
    r += q[i] * g[need];
  }
  return r;
}

/// Coefficients of a polynomial product.
template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace lrs
