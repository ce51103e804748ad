#include "logriemann/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "surface_index.hpp"

namespace lrs {

int Skeleton::vertex(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

Skeleton skeleton(const SheetComplex& c) {
  require_valid(c);
  detail::SurfaceIndex ix(c);
  Skeleton s;
  for (const auto& sh : ix.sheets) s.vertices.push_back({sh.id, false});
  int base = static_cast<int>(s.vertices.size());
  for (const auto& f : ix.families) s.vertices.push_back({"tail:" + f.id, true});

  std::set<std::pair<SideRef, SideRef>> seen;
  for (const auto& [x, y] : c.gluing) {
    auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    if (!seen.insert(key).second) continue;
    int a = ix.sheet_ix.at(x.sheet), b = ix.sheet_ix.at(y.sheet);
    int slit = ix.slit_index(detail::Loc{a, -1, 0}, x.slit);
    s.edges.push_back({a, b, ix.rams[ix.sheets[a].slits[slit].ram].id, false});
  }
  for (size_t f = 0; f < ix.families.size(); ++f)
    s.edges.push_back({ix.families[f].attach.sheet, base + static_cast<int>(f), ix.rams[ix.families[f].ram].id, true});
  return s;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

std::vector<CensusEntry> ramification_census(const Skeleton& s) {
  std::map<std::string, std::vector<int>> by_ram;
  for (size_t e = 0; e < s.edges.size(); ++e) by_ram[s.edges[e].ram].push_back(static_cast<int>(e));

  std::vector<CensusEntry> out;
  for (const auto& [ram, es] : by_ram) {
    std::map<int, int> degree;
    int periodic = 0;
    UnionFind uf(s.vertices.size());
    int merges = 0;
    for (int e : es) {
      const auto& ed = s.edges[e];
      ++degree[ed.a];
      ++degree[ed.b];
      if (ed.periodic) ++periodic;
      if (uf.unite(ed.a, ed.b)) ++merges;
    }
    bool connected = merges + 1 == static_cast<int>(degree.size());
    if (!connected) throw SurfaceError("census", "Gamma(" + ram + ") is disconnected");
    if (periodic == 0) {
      bool cycle = std::all_of(degree.begin(), degree.end(), [](auto& kv) { return kv.second == 2; });
      if (!cycle || es.size() < 2) throw SurfaceError("census", "Gamma(" + ram + ") is not a cycle");
      out.push_back({ram, static_cast<int>(es.size())});
      continue;
    }
    int ends = 0;
    bool line = periodic == 2;
    for (const auto& [v, d] : degree) {
      if (s.vertices[v].tail) {
        if (d != 1) line = false;
        ++ends;
      } else if (d != 2) {
        line = false;
      }
    }
    if (!line || ends != 2) throw SurfaceError("census", "Gamma(" + ram + ") is not a bi-infinite line");
    out.push_back({ram, std::nullopt});
  }
  return out;
}

Skeleton finite_completion(const Skeleton& s) {
  auto census = ramification_census(s);
  std::set<std::string> finite;
  for (const auto& e : census)
    if (e.order) finite.insert(e.ram);
  Skeleton out;
  out.vertices = s.vertices;
  std::map<std::string, std::set<int>> members;
  for (const auto& e : s.edges) {
    if (!finite.count(e.ram)) {
      out.edges.push_back(e);
      continue;
    }
    members[e.ram].insert(e.a);
    members[e.ram].insert(e.b);
  }
  for (const auto& [ram, vs] : members) {
    int v = static_cast<int>(out.vertices.size());
    out.vertices.push_back({"v(" + ram + ")", false});
    for (int u : vs) out.edges.push_back({u, v, ram, false});
  }
  return out;
}

int component_count(const Skeleton& s) {
  UnionFind uf(s.vertices.size());
  int n = static_cast<int>(s.vertices.size());
  for (const auto& e : s.edges)
    if (uf.unite(e.a, e.b)) --n;
  return n;
}

int betti(const Skeleton& s) {
  return static_cast<int>(s.edges.size()) - static_cast<int>(s.vertices.size()) + component_count(s);
}

std::string to_dot(const Skeleton& s, const std::string& name) {
  std::ostringstream o;
  o << "graph \"" << name << "\" {\n";
  for (size_t i = 0; i < s.vertices.size(); ++i) {
    o << "  n" << i << " [label=\"" << s.vertices[i].id << "\"";
    if (s.vertices[i].tail) o << ", shape=plaintext";
    o << "];\n";
  }
  for (const auto& e : s.edges) {
    o << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.ram << "\"";
    if (e.periodic) o << ", style=dashed";
    o << "];\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace lrs
