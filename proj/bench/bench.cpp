// Serial against OpenMP timings of the parallel kernels.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "logriemann/ends.hpp"
#include "logriemann/model.hpp"
#include "logriemann/numerics.hpp"

using namespace lrs;

namespace {

double time_it(const std::function<void()>& f, int reps) {
  f();
  auto t = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count() / reps;
}

void compare(const char* name, const std::function<void(ExecPolicy)>& f, int reps) {
  double s = time_it([&] { f(ExecPolicy::Serial); }, reps);
  double p = time_it([&] { f(ExecPolicy::Parallel); }, reps);
  std::printf("%-22s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  ExpForm gauss{LaurentPoly{0, {1.0}}, Polynomial{{0.0, 0.0, 1.0}}};
  compare("completion_probe", [&](ExecPolicy p) { completion_probe(gauss, 6.0, 360, 0.0, p); }, 2);

  compare("rn_approx_error", [](ExecPolicy p) { rn_approx_error(3, 2, {8, 64, 512}, 0.5, 2.0, 256, 1e-11, p); }, 2);

  std::vector<Complex> w{{1.0, 0.0}, {0.0, 1.2}, {-1.1, 0.4}, {0.3, -1.5}};
  Complex z0{0.05, -0.13};
  auto c = build_model_surface(z0, w, generic_partner(z0, w), -3);
  double R = ends_radius(c);
  compare("circle_components", [&](ExecPolicy p) { circle_components(c, R, p); }, 5);
}
