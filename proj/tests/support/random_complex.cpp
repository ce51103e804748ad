#include "random_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

namespace lrs::testing {

namespace {

struct Draft {
  SheetComplex c;
  void sheet(const std::string& id) {
    c.protos[id] = SheetProto{id, {}};
    c.core_sheets[id] = id;
  }
  void slit(const std::string& sheet, const std::string& slit, const std::string& ram) {
    c.protos[sheet].slits.push_back({slit, c.rams.at(ram).projection, ram});
  }
  // Bottom of a meets Top of b
  void glue(const std::string& a, const std::string& b, const std::string& slit) {
    c.gluing.push_back({SideRef{a, slit, Side::Bottom}, SideRef{b, slit, Side::Top}});
  }
};

bool transitive(int d, const std::vector<std::vector<int>>& perms) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (const auto& s : perms)
    for (int i = 0; i < d; ++i) p[find(i)] = find(s[i]);
  for (int i = 0; i < d; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace

RandomComplex random_complex(std::uint64_t seed, int max_degree, int max_branch, int max_logs) {
  std::mt19937_64 rng(seed);
  auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };

  for (int attempt = 0;; ++attempt) {
    RandomComplex out;
    Draft d;
    d.c.z0 = Complex(uni(-0.2, 0.2), uni(-0.2, 0.2));
    const int deg = pick(1, max_degree);
    out.degree = deg;
    for (int s = 0; s < deg; ++s) d.sheet("S" + std::to_string(s));

    std::vector<std::vector<int>> perms;
    const int branches = deg == 1 ? 0 : pick(1, max_branch);
    for (int b = 0; b < branches; ++b) {
      std::vector<int> sigma(deg);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      perms.push_back(sigma);
    }
    if (deg > 1 && !transitive(deg, perms)) continue;

    for (int b = 0; b < branches; ++b) {
      Complex proj = std::polar(uni(0.8, 3.0), uni(0.0, 6.283185307179586));
      const auto& sigma = perms[b];
      std::vector<bool> done(deg, false);
      int cyc = 0;
      for (int s = 0; s < deg; ++s) {
        if (done[s] || sigma[s] == s) continue;
        std::string ram = "b" + std::to_string(b) + "_" + std::to_string(cyc++);
        std::string slit = "l" + ram;
        int len = 0;
        for (int x = s; !done[x]; x = sigma[x]) {
          done[x] = true;
          ++len;
        }
        d.c.rams[ram] = RamPoint{ram, proj, len};
        out.branch_excess += len - 1;
        for (int x = s;;) {
          d.slit("S" + std::to_string(x), slit, ram);
          d.glue("S" + std::to_string(x), "S" + std::to_string(sigma[x]), slit);
          x = sigma[x];
          if (x == s) break;
        }
      }
    }

    const int logs = pick(0, max_logs);
    out.log_points = logs;
    for (int j = 0; j < logs; ++j) {
      std::string ram = "w" + std::to_string(j);
      std::string slit = "l" + ram;
      d.c.rams[ram] = RamPoint{ram, std::polar(uni(0.8, 3.0), uni(0.0, 6.283185307179586)), std::nullopt};
      std::vector<std::string> line{"S" + std::to_string(pick(0, deg - 1))};
      int copies = pick(0, 2);
      for (int k = 0; k < copies; ++k) {
        std::string id = "E" + std::to_string(j) + "_" + std::to_string(k);
        d.sheet(id);
        line.insert(line.begin() + pick(0, static_cast<int>(line.size())), id);
      }
      for (const auto& s : line) d.slit(s, slit, ram);
      for (size_t k = 0; k + 1 < line.size(); ++k) d.glue(line[k], line[k + 1], slit);
      std::string clean = "clean_" + ram;
      d.c.protos[clean] = SheetProto{clean, {{"l", d.c.rams[ram].projection, ram}}};
      d.c.families.push_back({ram + "_minus", clean, ram, "l", SideRef{line.front(), slit, Side::Top}, Orientation::Minus});
      d.c.families.push_back({ram + "_plus", clean, ram, "l", SideRef{line.back(), slit, Side::Bottom}, Orientation::Plus});
    }
    if (!validate(d.c).ok) continue;
    out.complex = std::move(d.c);
    return out;
  }
}

SheetComplex torus_complex() {
  Draft d;
  d.c.z0 = Complex(0.1, -0.05);
  for (int s = 0; s < 3; ++s) d.sheet("S" + std::to_string(s));
  const Complex proj[2] = {Complex(1.0, 0.3), Complex(-0.7, 1.1)};
  for (int b = 0; b < 2; ++b) {
    std::string ram = "p" + std::to_string(b), slit = "l" + ram;
    d.c.rams[ram] = RamPoint{ram, proj[b], 3};
    for (int s = 0; s < 3; ++s) d.slit("S" + std::to_string(s), slit, ram);
    for (int s = 0; s < 3; ++s) d.glue("S" + std::to_string(s), "S" + std::to_string((s + 1) % 3), slit);
  }
  return d.c;
}

}  // namespace lrs::testing
