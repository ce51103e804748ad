#pragma once

// The model surfaces S(w_0, ..., w_{n-1}, w, K): n infinite-order points over
// w_list, plus finite points over w whose orders depend on K
//   K = 0 : one point of order n
//   K > 0 : one point of order n + K
//   K < 0 : one of order n and one of order 2
// Order-1 points (n = 1, K <= 0) are regular and are not registered.
//
// Naming: ram ids "w<j>", "v" (order n or n+K), "v2" (order 2).  Core sheets
// "Cstar<j>", "C<j>_0", "C<j>_1", "Cw<i>" (K > 0), "Cstar0_1", "Cstar0_2" and
// "C0_<k>" (K < 0).  Tails "tail<j>_minus" / "tail<j>_plus".

#include <vector>

#include "logriemann/sheet_complex.hpp"

namespace lrs {

struct ModelParams {
  Complex z0;
  std::vector<Complex> w_list;
  Complex w;
  int K = 0;
};

/// Throws SurfaceError ("model-input" or "z0-genericity") on bad parameters.
SheetComplex build_model_surface(const ModelParams& p);

inline SheetComplex build_model_surface(Complex z0, std::vector<Complex> w_list, Complex w, int K) {
  return build_model_surface(ModelParams{z0, std::move(w_list), w, K});
}

/// Some point w that satisfies the genericity conditions with respect to z0 and
/// w_list.  Deterministic.
Complex generic_partner(Complex z0, const std::vector<Complex>& w_list);

}  // namespace lrs
