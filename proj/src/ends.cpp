#include "logriemann/ends.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <numeric>
#include <set>

#include "circle_frame.hpp"
#include "logriemann/lift.hpp"
#include "surface_index.hpp"

namespace lrs {

using detail::CircleFrame;
using detail::Loc;
using detail::SurfaceIndex;

double ends_radius(const SheetComplex& c) {
  double m = std::abs(c.z0);
  for (const auto& [id, r] : c.rams) m = std::max(m, std::abs(r.projection) + 1.0);
  return 2.0 * m;
}

namespace {

struct Arc {
  int sheet;
  int slit;  // slit at the clockwise end of the arc
  auto operator<=>(const Arc&) const = default;
};

struct Chain {
  int minus_ram;
  int plus_ram;
  std::vector<Arc> arcs;
};

struct CircleGraph {
  const SurfaceIndex& ix;
  CircleFrame frame;
  std::vector<Chain> chains;                     // one per minus family
  std::vector<std::vector<Arc>> cycles;          // periodic components among core arcs
  std::vector<int> empty_sheets;                 // slit-free core sheets

  CircleGraph(const SurfaceIndex& ix_, double R) : ix(ix_), frame(ix_, R) { build(); }

  bool full(const Arc& a) const { return frame.slit_count(Loc{a.sheet, -1, 0}) == 1; }
  int exit_slit(const Arc& a) const { return frame.next_ccw(Loc{a.sheet, -1, 0}, a.slit); }

  bool covers(const Arc& a, double ref) const {
    Loc l{a.sheet, -1, 0};
    return CircleFrame::covers(frame.angle(l, a.slit), frame.angle(l, exit_slit(a)), full(a), ref);
  }

  // Next arc counter-clockwise; nullopt with `family` set when the lift enters a tail.
  std::optional<Arc> step(const Arc& a, int& family) const {
    auto land = ix.cross(Loc{a.sheet, -1, 0}, exit_slit(a), Side::Bottom);
    if (!land) throw SurfaceError("involution-incomplete", "circle lift reached an unglued side");
    if (land->loc.family >= 0) {
      family = land->loc.family;
      return std::nullopt;
    }
    return Arc{land->loc.core, land->slit};
  }

  void build() {
    std::set<Arc> all;
    for (size_t s = 0; s < ix.sheets.size(); ++s) {
      if (ix.sheets[s].slits.empty()) empty_sheets.push_back(static_cast<int>(s));
      for (size_t k = 0; k < ix.sheets[s].slits.size(); ++k) all.insert({int(s), int(k)});
    }
    std::set<Arc> seen;
    const size_t budget = all.size() + 1;
    for (size_t f = 0; f < ix.families.size(); ++f) {
      const auto& fam = ix.families[f];
      if (fam.orientation != Orientation::Minus) continue;
      Chain ch{fam.ram, -1, {}};
      Arc a{fam.attach.sheet, fam.attach.slit};
      for (size_t t = 0;; ++t) {
        if (t > budget || !seen.insert(a).second)
          throw SurfaceError("ends", "circle chain from " + fam.id + " does not reach a tail");
        ch.arcs.push_back(a);
        int family = -1;
        auto next = step(a, family);
        if (!next) {
          if (ix.families[family].orientation != Orientation::Plus)
            throw SurfaceError("ends", "counter-clockwise circle lift entered a minus tail");
          ch.plus_ram = ix.families[family].ram;
          break;
        }
        a = *next;
      }
      chains.push_back(std::move(ch));
    }
    for (const Arc& start : all) {
      if (seen.count(start)) continue;
      std::vector<Arc> cyc;
      Arc a = start;
      for (size_t t = 0;; ++t) {
        if (t > budget || !seen.insert(a).second) throw SurfaceError("ends", "circle lift does not close");
        cyc.push_back(a);
        int family = -1;
        auto next = step(a, family);
        if (!next) throw SurfaceError("ends", "periodic circle lift entered a tail");
        a = *next;
        if (a == start) break;
      }
      cycles.push_back(std::move(cyc));
    }
  }

  int degree(const std::vector<Arc>& cyc) const {
    int d = 0;
    for (const auto& a : cyc) d += covers(a, 0.0) ? 1 : 0;
    return d;
  }

  double ram_angle(int ram) const {
    for (size_t s = 0; s < ix.sheets.size(); ++s)
      for (size_t k = 0; k < ix.sheets[s].slits.size(); ++k)
        if (ix.sheets[s].slits[k].ram == ram) return frame.angle(Loc{int(s), -1, 0}, int(k));
    throw SurfaceError("ends", "ram " + ix.rams[ram].id + " is the foot of no core slit");
  }

  const Chain& chain_from(int minus_ram) const {
    for (const auto& ch : chains)
      if (ch.minus_ram == minus_ram) return ch;
    throw SurfaceError("ends", "no chain leaves the minus tail of " + ix.rams[minus_ram].id);
  }
};

std::vector<std::vector<std::string>> u_cycles(const std::map<std::string, std::string>& u) {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  for (const auto& [w, img] : u) {
    if (seen.count(w)) continue;
    std::vector<std::string> cyc;
    std::string x = w;
    while (!seen.count(x)) {
      seen.insert(x);
      cyc.push_back(x);
      x = u.at(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

long core_sheets_on_line(const SurfaceIndex& ix, int ram) {
  long n = 0;
  for (const auto& sh : ix.sheets)
    for (const auto& sl : sh.slits)
      if (sl.ram == ram) ++n;
  return n;
}

long get(const std::map<std::string, long>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

CycleEnd measure(const SurfaceIndex& ix, const CircleGraph& g, const std::vector<std::string>& cycle,
                 long uniform, const std::map<std::string, long>& ext_minus,
                 const std::map<std::string, long>& ext_plus) {
  CycleEnd e;
  e.cycle = cycle;
  const long n = static_cast<long>(cycle.size());
  double ref = g.ram_angle(ix.ram_ix.at(cycle.front()));
  for (long j = 0; j < n; ++j) {
    const std::string& w = cycle[j];
    const std::string& uw = cycle[(j + 1) % n];
    int r = ix.ram_ix.at(w);
    e.a.push_back(core_sheets_on_line(ix, r) - 1 + 2 * uniform + get(ext_minus, w) + get(ext_plus, w));
    long passes = 0;
    for (const auto& arc : g.chain_from(r).arcs) passes += g.covers(arc, ref) ? 1 : 0;
    passes += 2 * uniform + get(ext_minus, w) + get(ext_plus, uw);
    if (j == n - 1) passes -= 1;
    e.a_prime.push_back(passes);
  }
  e.index = end_index(e.a, e.a_prime);
  return e;
}

std::map<std::string, std::string> u_from(const SurfaceIndex& ix, const CircleGraph& g) {
  std::map<std::string, std::string> u;
  for (const auto& ch : g.chains) u[ix.rams[ch.minus_ram].id] = ix.rams[ch.plus_ram].id;
  return u;
}

Skeleton grown_core(const SheetComplex& c, const SurfaceIndex& ix, long uniform,
                    const std::map<std::string, long>& ext_minus, const std::map<std::string, long>& ext_plus) {
  Skeleton full = skeleton(c);
  Skeleton core;
  std::vector<int> remap(full.vertices.size(), -1);
  for (size_t v = 0; v < full.vertices.size(); ++v) {
    if (full.vertices[v].tail) continue;
    remap[v] = static_cast<int>(core.vertices.size());
    core.vertices.push_back(full.vertices[v]);
  }
  for (const auto& e : full.edges)
    if (!e.periodic) core.edges.push_back({remap[e.a], remap[e.b], e.ram, false});
  for (const auto& f : ix.families) {
    const std::string& ram = ix.rams[f.ram].id;
    long copies = uniform + get(f.orientation == Orientation::Plus ? ext_plus : ext_minus, ram);
    int prev = remap[f.attach.sheet];
    for (long k = 1; k <= copies; ++k) {
      int v = static_cast<int>(core.vertices.size());
      core.vertices.push_back({f.id + "#" + std::to_string(k), false});
      core.edges.push_back({prev, v, ram, false});
      prev = v;
    }
  }
  return core;
}

CoreDecomposition decompose(const SheetComplex& c, long c1, long c2, long uniform,
                            const std::map<std::string, long>& ext_minus,
                            const std::map<std::string, long>& ext_plus) {
  SurfaceIndex ix(c);
  CircleGraph g(ix, ends_radius(c));
  CoreDecomposition d;
  d.N = normalization_N(c, c1, c2);
  d.c1 = c1;
  d.c2 = c2;
  d.extension = uniform;
  d.ext_minus = ext_minus;
  d.ext_plus = ext_plus;
  for (const auto& f : ix.families) {
    auto& h = d.halflines[ix.rams[f.ram].id];
    (f.orientation == Orientation::Plus ? h.plus_family : h.minus_family) = f.id;
  }
  for (const auto& cyc : u_cycles(u_from(ix, g))) {
    CycleEnd e = measure(ix, g, cyc, uniform, ext_minus, ext_plus);
    for (size_t j = 0; j < cyc.size(); ++j) {
      d.a[cyc[j]] = e.a[j];
      d.a_prime[cyc[j]] = e.a_prime[j];
    }
  }
  d.core = grown_core(c, ix, uniform, ext_minus, ext_plus);
  return d;
}

void check_positive(long c1, long c2) {
  if (c1 < 2 || c2 < 2) throw SurfaceError("invalid-argument", "c1 and c2 must be at least 2");
}

}  // namespace

std::map<std::string, std::string> u_permutation(const SheetComplex& c) {
  require_valid(c);
  SurfaceIndex ix(c);
  CircleGraph g(ix, ends_radius(c));
  return u_from(ix, g);
}

std::map<std::string, std::string> d_permutation(const SheetComplex& c) {
  std::map<std::string, std::string> d;
  for (const auto& [w, uw] : u_permutation(c)) d[uw] = w;
  return d;
}

long normalization_N(const SheetComplex& c, long c1, long c2) {
  long inf = 0;
  for (const auto& [id, r] : c.rams)
    if (r.infinite()) ++inf;
  return 8 * (inf + 1) * (c1 + c2);
}

CoreDecomposition core_decomposition(const SheetComplex& c, long c1, long c2, long uniform,
                                     const std::map<std::string, long>& ext_minus,
                                     const std::map<std::string, long>& ext_plus) {
  check_positive(c1, c2);
  require_valid(c);
  if (uniform < 0) throw SurfaceError("invalid-argument", "extension must be non-negative");
  for (const auto* m : {&ext_minus, &ext_plus})
    for (const auto& [w, k] : *m) {
      auto it = c.rams.find(w);
      if (it == c.rams.end() || !it->second.infinite())
        throw SurfaceError("invalid-argument", "extension names " + w + ", not an infinite ram");
      if (k < 0) throw SurfaceError("invalid-argument", "extension must be non-negative");
    }
  return decompose(c, c1, c2, uniform, ext_minus, ext_plus);
}

CoreDecomposition core_decomposition(const SheetComplex& c, long c1, long c2) {
  check_positive(c1, c2);
  require_valid(c);
  CoreDecomposition raw = decompose(c, c1, c2, 0, {}, {});
  if (raw.a.empty()) return raw;
  long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
  for (const auto* m : {&raw.a, &raw.a_prime})
    for (const auto& [w, v] : *m) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  long target = 2 * raw.N - c1;
  long e = std::max(0L, (target - lo + 1) / 2);
  if (hi + 2 * e > 2 * raw.N + c1)
    throw SurfaceError("normalization", "segment lengths spread over " + std::to_string(hi - lo) +
                                            ", more than c1 = " + std::to_string(c1) + " allows");
  return decompose(c, c1, c2, e, {}, {});
}

long minimal_c1(const SheetComplex& c, long c2) {
  require_valid(c);
  CoreDecomposition raw = decompose(c, 2, std::max(c2, 2L), 0, {}, {});
  long spread = 0;
  if (!raw.a.empty()) {
    long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
    for (const auto* m : {&raw.a, &raw.a_prime})
      for (const auto& [w, v] : *m) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    spread = hi - lo;
  }
  for (long c1 = 2; c1 <= spread + 2; ++c1) {
    try {
      core_decomposition(c, c1, c2);
      return c1;
    } catch (const SurfaceError&) {
    }
  }
  throw SurfaceError("normalization", "no admissible c1");
}

long end_index(const std::vector<long>& a, const std::vector<long>& a_prime) {
  if (a.size() != a_prime.size() || a.empty())
    throw SurfaceError("invalid-argument", "a and a' must be non-empty lists of equal length");
  long k = 0;
  for (size_t j = 0; j < a.size(); ++j) k += a_prime[j] - a[j];
  return k - static_cast<long>(a.size() - 1);
}

CycleEnd cycle_end(const SheetComplex& c, const std::vector<std::string>& cycle, const CoreDecomposition& d) {
  CycleEnd e;
  e.cycle = cycle;
  for (const auto& w : cycle) {
    auto ia = d.a.find(w), ib = d.a_prime.find(w);
    if (ia == d.a.end() || ib == d.a_prime.end())
      throw SurfaceError("invalid-argument", "decomposition has no lengths for " + w);
    e.a.push_back(ia->second);
    e.a_prime.push_back(ib->second);
  }
  (void)c;
  e.index = end_index(e.a, e.a_prime);
  return e;
}

EndsReport classify_ends(const SheetComplex& c, long c2) {
  require_valid(c);
  SurfaceIndex ix(c);
  EndsReport rep;
  rep.radius = ends_radius(c);
  CircleGraph g(ix, rep.radius);
  rep.u = u_from(ix, g);
  rep.decomposition = core_decomposition(c, minimal_c1(c, c2), c2);
  for (int s : g.empty_sheets) rep.ends.push_back({FiniteCoverEnd{1}, ix.sheets[s].id});
  for (const auto& cyc : g.cycles) rep.ends.push_back({FiniteCoverEnd{g.degree(cyc)}, ix.sheets[cyc.front().sheet].id});
  for (const auto& cyc : u_cycles(rep.u)) {
    int r = ix.ram_ix.at(cyc.front());
    std::string sheet = ix.sheets[g.chain_from(r).arcs.front().sheet].id;
    rep.ends.push_back({cycle_end(c, cyc, rep.decomposition), sheet});
  }
  return rep;
}

EmbeddingWitness embedding_witness(const SheetComplex& c, const CycleEnd& e, const CoreDecomposition& d) {
  const long n = static_cast<long>(e.cycle.size());
  if (n == 0 || static_cast<long>(e.a.size()) != n || static_cast<long>(e.a_prime.size()) != n)
    throw SurfaceError("invalid-argument", "cycle end lists have inconsistent lengths");
  if (d.N < 8 * (static_cast<long>(d.halflines.size()) + 1) * (d.c1 + d.c2))
    throw SurfaceError("witness-precondition", "N is below 8 (#R_inf + 1)(c1 + c2)");
  for (long j = 0; j < n; ++j)
    for (long v : {e.a[j], e.a_prime[j]})
      if (v < 2 * d.N - d.c1 || v > 2 * d.N + d.c1)
        throw SurfaceError("witness-precondition", "segment length " + std::to_string(v) + " of " + e.cycle[j] +
                                                       " lies outside [2N - c1, 2N + c1]");
  const long K = end_index(e);
  EmbeddingWitness w;
  w.k0 = d.N;
  w.k.assign(n, 0);
  w.k_prime.assign(n, 0);
  w.k[0] = w.k0;
  for (long j = 0; j + 1 < n; ++j) {
    w.k_prime[j + 1] = e.a_prime[j] - (w.k[j] + 1);
    w.k[j + 1] = e.a[j + 1] - w.k_prime[j + 1];
  }
  for (long j = 0; j < n; ++j)
    if (w.k[j] < d.N - j * d.c1 - d.c2 || w.k[j] > d.N + j * d.c1 + d.c2)
      throw SurfaceError("witness-range", "k_" + std::to_string(j) + " = " + std::to_string(w.k[j]) +
                                              " leaves [N - j c1 - c2, N + j c1 + c2]");
  w.k_prime[0] = e.a_prime[n - 1] - (w.k[n - 1] + 1 + K);
  if (w.k_prime[0] + w.k[0] + 1 != e.a[0])
    throw SurfaceError("witness-closing", "k'_0 + k_0 + 1 != a_0");
  w.target.z0 = c.z0;
  for (const auto& id : e.cycle) w.target.w_list.push_back(c.rams.at(id).projection);
  w.target.w = generic_partner(c.z0, w.target.w_list);
  w.target.K = static_cast<int>(K);
  return w;
}

std::vector<ComponentTopology> topology_census(const SheetComplex& c) {
  EndsReport ends = classify_ends(c);
  Skeleton completed = finite_completion(skeleton(c));

  // components of the completed skeleton, by smallest vertex index
  std::vector<int> parent(completed.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : completed.edges) parent[find(e.a)] = find(e.b);

  std::map<int, ComponentTopology> comps;
  std::map<int, int> edges, verts;
  for (size_t v = 0; v < completed.vertices.size(); ++v) {
    int r = find(static_cast<int>(v));
    ++verts[r];
    const auto& vx = completed.vertices[v];
    if (!vx.tail && c.core_sheets.count(vx.id)) comps[r].sheets.push_back(vx.id);
  }
  for (const auto& e : completed.edges) ++edges[find(e.a)];
  for (const auto& end : ends.ends) ++comps[find(completed.vertex(end.sheet))].punctures;

  std::vector<ComponentTopology> out;
  for (auto& [r, t] : comps) {
    t.b1 = edges[r] - verts[r] + 1;
    int twice_g = 1 + t.b1 - t.punctures;
    if (twice_g < 0 || twice_g % 2 != 0)
      throw SurfaceError("topology", "Euler characteristic gives genus " + std::to_string(twice_g) + "/2");
    t.genus = twice_g / 2;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<CircleComponent> circle_components(const SheetComplex& c, double R, ExecPolicy policy) {
  require_valid(c);
  SurfaceIndex ix(c);
  CircleFrame frame(ix, R);
  std::vector<Arc> arcs;
  std::vector<SheetPoint> starts;
  for (size_t s = 0; s < ix.sheets.size(); ++s) {
    Loc l{int(s), -1, 0};
    int m = frame.slit_count(l);
    if (m == 0) {
      arcs.push_back({int(s), -1});
      starts.push_back({ix.address(l), Complex(R, 0.0)});
      continue;
    }
    for (int k = 0; k < m; ++k) {
      double a = frame.angle(l, k);
      double span = m == 1 ? detail::kTwoPi : detail::wrap_angle(frame.angle(l, frame.next_ccw(l, k)) - a);
      arcs.push_back({int(s), k});
      starts.push_back({ix.address(l), std::polar(R, a + 0.5 * span)});
    }
  }

  const long n = static_cast<long>(arcs.size());
  std::vector<CircleLift> lifts(n);
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
  for (long i = 0; i < n; ++i) lifts[i] = lift_circle(c, R, starts[i]);

  std::map<Arc, CircleComponent> comps;
  for (long i = 0; i < n; ++i) {
    std::set<Arc> visited{arcs[i]};
    for (const auto& x : lifts[i].crossings) {
      if (x.entered.in_family()) continue;
      Loc l = ix.resolve(x.entered);
      int slit = ix.slit_index(l, x.entered_slit);
      visited.insert({l.core, x.side == Side::Bottom ? slit : frame.next_cw(l, slit)});
    }
    Arc key = *visited.begin();
    CircleComponent comp;
    if (const auto* p = std::get_if<Periodic>(&lifts[i].outcome)) {
      comp.periodic = true;
      comp.degree = p->degree;
    } else {
      const auto& e = std::get<Escaping>(lifts[i].outcome);
      comp.w_minus = e.w_minus;
      comp.w_plus = e.w_plus;
    }
    comp.arcs = static_cast<int>(visited.size());
    auto [it, fresh] = comps.emplace(key, comp);
    if (!fresh && (it->second.periodic != comp.periodic || it->second.degree != comp.degree ||
                   it->second.w_minus != comp.w_minus || it->second.arcs != comp.arcs))
      throw SurfaceError("lift-inconsistent", "lifts through one component disagree");
  }
  std::vector<CircleComponent> out;
  for (auto& [k, v] : comps) out.push_back(v);
  return out;
}

}  // namespace lrs
