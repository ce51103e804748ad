// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logriemann/ends.hpp"
#include "logriemann/model.hpp"
#include "logriemann/numerics.hpp"
#include "logriemann/skeleton.hpp"
#include "random_complex.hpp"

using namespace lrs;

namespace {

const Complex kZ0{0.05, -0.13};

std::vector<Complex> w_list(int n) {
  std::vector<Complex> w;
  for (int j = 0; j < n; ++j) w.push_back(std::polar(1.0 + 0.3 * j, 0.4 + 1.3 * j));
  return w;
}

SheetComplex model(int n, int K) { return build_model_surface(kZ0, w_list(n), generic_partner(kZ0, w_list(n)), K); }

template <class F>
void for_grid(F&& f) {
  for (int n = 1; n <= 4; ++n)
    for (int K = -3; K <= 3; ++K) f(n, K);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

int failures = 0;

void run(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, seconds_since(t),
              o.ok ? "" : " : ", o.note.str().c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string tag(int n, int K) { return "n=" + std::to_string(n) + " K=" + std::to_string(K); }

std::vector<const CycleEnd*> cycle_ends(const EndsReport& r) {
  std::vector<const CycleEnd*> out;
  for (const auto& e : r.ends)
    if (const auto* c = std::get_if<CycleEnd>(&e.kind)) out.push_back(c);
  return out;
}

std::vector<int> cover_degrees(const EndsReport& r) {
  std::vector<int> out;
  for (const auto& e : r.ends)
    if (const auto* f = std::get_if<FiniteCoverEnd>(&e.kind)) out.push_back(f->degree);
  std::sort(out.begin(), out.end());
  return out;
}

void census_grid(Outcome& o) {
  for_grid([&](int n, int K) {
    auto t = std::chrono::steady_clock::now();
    auto c = model(n, K);
    if (!validate(c).ok) return o.fail(tag(n, K) + " does not validate");
    auto census = ramification_census(skeleton(c));
    std::vector<CensusEntry> want;
    for (int j = 0; j < n; ++j) want.push_back({"w" + std::to_string(j), std::nullopt});
    if (K >= 0 && n + K >= 2) want.push_back({"v", n + K});
    if (K < 0 && n >= 2) want.push_back({"v", n});
    if (K < 0) want.push_back({"v2", 2});
    std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return x.ram < y.ram; });
    if (census != want) o.fail(tag(n, K) + " census mismatch");
    if (seconds_since(t) >= 1.0) o.fail(tag(n, K) + " took over 1 s");
  });
}

void rank_checks(Outcome& o) {
  for_grid([&](int n, int K) {
    int b1 = betti(finite_completion(skeleton(model(n, K))));
    if (b1 != (K >= 0 ? 0 : 1)) o.fail(tag(n, K) + " b1 = " + std::to_string(b1));
  });
}

void ends_grid(Outcome& o) {
  for_grid([&](int n, int K) {
    auto r = classify_ends(model(n, K));
    auto ce = cycle_ends(r);
    auto deg = cover_degrees(r);
    if (K >= 0) {
      if (r.ends.size() != 1 || ce.size() != 1 || ce[0]->cycle.size() != size_t(n))
        o.fail(tag(n, K) + " expected one cycle end through all infinite points");
    } else {
      if (r.ends.size() != 2 || ce.size() != 1 || ce[0]->cycle.size() != size_t(n) || deg != std::vector<int>{-K})
        o.fail(tag(n, K) + " expected a cycle end and one cover of degree -K");
    }
  });
}

void index_round_trip(Outcome& o) {
  for_grid([&](int n, int K) {
    auto r = classify_ends(model(n, K));
    auto ce = cycle_ends(r);
    if (ce.size() != 1) return o.fail(tag(n, K) + " has no single cycle end");
    if (ce[0]->index != K || end_index(*ce[0]) != K)
      o.fail(tag(n, K) + " index " + std::to_string(ce[0]->index));
  });
}

void index_invariance(Outcome& o) {
  std::vector<SheetComplex> pool;
  for_grid([&](int n, int K) { pool.push_back(model(n, K)); });
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto rc = testing::random_complex(seed);
    if (rc.log_points > 0) pool.push_back(rc.complex);
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> c_dist(2, 6), ext(0, 40), extra(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& c = pool[trial % pool.size()];
    auto r = classify_ends(c);
    long c1 = c_dist(rng), c2 = c_dist(rng), uniform = ext(rng);
    std::map<std::string, long> em, ep;
    for (const auto& [w, uw] : r.u) em[w] = ep[w] = extra(rng);
    auto d = core_decomposition(c, c1, c2, uniform, em, ep);
    for (const auto* e : cycle_ends(r)) {
      auto again = cycle_end(c, e->cycle, d);
      if (again.index != e->index)
        o.fail("trial " + std::to_string(trial) + ": index " + std::to_string(again.index) + " vs " +
               std::to_string(e->index));
    }
  }
}

void oracle_equivalence(Outcome& o) {
  std::vector<std::pair<std::string, SheetComplex>> pool;
  for_grid([&](int n, int K) { pool.emplace_back(tag(n, K), model(n, K)); });
  for (std::uint64_t seed = 100; seed < 125; ++seed)
    pool.emplace_back("random " + std::to_string(seed), testing::random_complex(seed).complex);
  for (const auto& [name, c] : pool) {
    auto r = classify_ends(c);
    for (double R : {r.radius, 2.0 * r.radius}) {
      std::vector<int> deg;
      std::map<std::string, std::string> u;
      for (const auto& x : circle_components(c, R, ExecPolicy::Parallel)) {
        if (x.periodic)
          deg.push_back(x.degree);
        else
          u[x.w_minus] = x.w_plus;
      }
      std::sort(deg.begin(), deg.end());
      if (deg != cover_degrees(r) || u != r.u) o.fail(name + " disagrees at R = " + std::to_string(R));
    }
  }
}

void witness_soundness(Outcome& o) {
  for_grid([&](int n, int K) {
    auto c = model(n, K);
    auto r = classify_ends(c);
    const auto& d = r.decomposition;
    auto ce = cycle_ends(r);
    if (ce.size() != 1) return o.fail(tag(n, K) + " has no single cycle end");
    const auto& e = *ce[0];
    auto w = embedding_witness(c, e, d);
    long sum = 0;
    for (int j = 0; j < n; ++j) sum += e.a_prime[j] - e.a[j];
    long k_index = sum - (n - 1);
    bool ok = w.k0 == d.N && w.k[0] == w.k0 && w.target.K == K && k_index == K;
    for (int j = 0; j + 1 < n; ++j) {
      ok = ok && w.k_prime[j + 1] == e.a_prime[j] - (w.k[j] + 1);
      ok = ok && w.k[j + 1] == e.a[j + 1] - w.k_prime[j + 1];
    }
    for (long j = 0; j < n; ++j)
      ok = ok && w.k[j] >= d.N - j * d.c1 - d.c2 && w.k[j] <= d.N + j * d.c1 + d.c2;
    ok = ok && w.k_prime[0] == e.a_prime[n - 1] - (w.k[n - 1] + 1 + k_index);
    ok = ok && w.k_prime[0] + w.k[0] + 1 == e.a[0];
    if (!ok) o.fail(tag(n, K) + " witness conditions violated");
  });
}

void topology(Outcome& o) {
  std::vector<std::pair<std::string, SheetComplex>> corpus;
  for_grid([&](int n, int K) { corpus.emplace_back(tag(n, K), model(n, K)); });
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    corpus.emplace_back("random " + std::to_string(seed), testing::random_complex(seed).complex);
  corpus.emplace_back("torus", testing::torus_complex());
  for (const auto& [name, c] : corpus) {
    for (const auto& t : topology_census(c))
      if (t.genus < 0 || 2 - 2 * t.genus - t.punctures != 1 - t.b1) o.fail(name + " breaks the Euler relation");
  }
  for_grid([&](int n, int K) {
    auto t = topology_census(model(n, K));
    int p = K >= 0 ? 1 : 2;
    if (t.size() != 1 || t[0].genus != 0 || t[0].punctures != p) o.fail(tag(n, K) + " wrong (g, p)");
  });
}

ExpForm form(LaurentPoly q, std::vector<Complex> p) { return ExpForm{std::move(q), Polynomial{std::move(p)}}; }

void derivative(Outcome& o) {
  const std::vector<ExpForm> forms{
      form({0, {1.0}}, {0.0, 1.0}),
      form({0, {1.0}}, {0.0, 0.0, 1.0}),
      form({0, {Complex(0.5, -1.0), 2.0, 0.3}}, {Complex(0.1, 0.2), -0.4, Complex(0.0, 0.6)}),
      form({0, {0.0, 1.0}}, {0.0, 0.0, 0.0, Complex(-0.3, 0.4)}),
  };
  QuadOptions opt;
  opt.tol = 1e-13;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> rad(0.1, 2.0), ang(-std::numbers::pi, std::numbers::pi);
  const double h = 1e-4;
  for (int i = 0; i < 200; ++i) {
    const auto& f = forms[i % forms.size()];
    Complex z = std::polar(rad(rng), ang(rng));
    Complex hz = std::polar(h, ang(rng));
    Complex fp = integrate_form(f, std::vector<Complex>{0.0, z + hz}, opt).value;
    Complex fm = integrate_form(f, std::vector<Complex>{0.0, z - hz}, opt).value;
    Complex fd = (fp - fm) / (2.0 * hz);
    double rel = std::abs(fd - f(z)) / std::abs(f(z));
    if (!(rel <= 1e-6)) o.fail("point " + std::to_string(i) + " relative error " + std::to_string(rel));
  }
  const double half_sqrt_pi = std::sqrt(std::numbers::pi) / 2.0;
  auto g = asymptotic_values(form({0, {1.0}}, {0.0, 0.0, 1.0}), 0.0);
  bool ok = g.size() == 2;
  for (const auto& v : g) ok = ok && std::abs(std::abs(v.value.imag()) - half_sqrt_pi) < 1e-8 && std::abs(v.value.real()) < 1e-8;
  ok = ok && g[0].value.imag() * g[1].value.imag() < 0;
  if (!ok) o.fail("asymptotic values of e^{z^2}");
  auto e = asymptotic_values(form({0, {1.0}}, {0.0, 1.0}), 0.0);
  if (e.size() != 1 || std::abs(e[0].value + 1.0) >= 1e-10) o.fail("asymptotic value of e^z");
}

// coefficient of z^k in (1 + z^n / N)^N
Rational binomial_coeff(long N, int n, int k) {
  if (k % n != 0 || k / n > N) return 0;
  long j = k / n;
  Rational c = 1;
  for (long i = 0; i < j; ++i) c = c * Rational(N - i, i + 1) / N;
  return c;
}

void residues(Outcome& o) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {3, 2}, {2, 2}, {5, 2}}) {
    std::string name = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    Rational C = residue_constant(m, n);
    // residue of (z^{-m} - C z^{-m-n}) e^{z^n}
    std::vector<Rational> q(n + 1, 0), p(n + 1, 0);
    q[0] = -C;
    q[n] = 1;
    p[n] = 1;
    if (laurent_residue(-m - n, q, p) != 0) o.fail(name + " residue of the limit form is nonzero");
    bool exact = (m - 1) % n == 0;
    long k0 = exact ? (m - 1) / n : 0;
    Rational prev = -1;
    for (long N = std::max<long>(2 * k0 + 2, 1); N <= 1024; ++N) {
      Rational CN = residue_constant(m, n, N);
      Rational res = binomial_coeff(N, n, m - 1) - CN * binomial_coeff(N, n, m + n - 1);
      if (res != 0) {
        o.fail(name + " residue nonzero at N=" + std::to_string(N));
        break;
      }
      Rational gap = abs(CN - C);
      if (prev >= 0 && gap > prev) {
        o.fail(name + " |C_N - C| increases at N=" + std::to_string(N));
        break;
      }
      prev = gap;
    }
    if (exact && C != 0 && !(prev < Rational(1, 100)))
      o.fail(name + " C_1024 is far from C");
  }
}

void rn_convergence(Outcome& o) {
  // frozen from tests/oracles/rn_reference.py (mpmath, 40 digits)
  const std::vector<double> oracle{0.28683383286726796, 0.040549070147879462, 0.0051606811831764121};
  auto e = rn_approx_error(1, 1, {8, 64, 512}, 0.5, 2.0, 64, 1e-11, ExecPolicy::Parallel);
  for (size_t i = 0; i < e.size(); ++i) {
    if (std::abs(e[i].max_error - oracle[i]) > 1e-9)
      o.fail("N=" + std::to_string(e[i].N) + " error " + std::to_string(e[i].max_error) + " off the oracle");
    if (i > 0 && !(e[i].max_error < e[i - 1].max_error)) o.fail("no strict decrease");
  }
}

void probe(Outcome& o) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}}) {
    auto t = std::chrono::steady_clock::now();
    std::vector<Complex> p(n + 1, 0.0);
    p[n] = 1.0;
    auto r = completion_probe(form({k, {1.0}}, p), 6.0, 360, 0.0, ExecPolicy::Parallel);
    std::string name = "z^" + std::to_string(k) + " e^{z^" + std::to_string(n) + "}";
    if (r.clusters.size() != size_t(n)) o.fail(name + " has " + std::to_string(r.clusters.size()) + " clusters");
    if (seconds_since(t) >= 60.0) o.fail(name + " took over 60 s");
  }
}

}  // namespace

int main() {
  run(1, "model census grid", census_grid);
  run(2, "rank checks", rank_checks);
  run(3, "ends of the model grid", ends_grid);
  run(4, "index round-trip", index_round_trip);
  run(5, "index invariance under re-normalization", index_invariance);
  run(6, "classification agrees with circle lifts", oracle_equivalence);
  run(7, "embedding witness soundness", witness_soundness);
  run(8, "topology", topology);
  run(9, "primitive derivative and asymptotic values", [](Outcome& o) {
    auto t = std::chrono::steady_clock::now();
    derivative(o);
    if (seconds_since(t) >= 30.0) o.fail("took over 30 s");
  });
  run(10, "residue constants", residues);
  run(11, "R_N convergence", rn_convergence);
  run(12, "completion probe", probe);
  return failures == 0 ? 0 : 1;
}
