#include "logriemann/sheet_complex.hpp"

#include <cmath>
#include <set>

#include "surface_index.hpp"

namespace lrs {

const char* to_string(Side s) { return s == Side::Top ? "top" : "bottom"; }
const char* to_string(Orientation o) { return o == Orientation::Plus ? "plus" : "minus"; }

namespace {

using detail::Across;
using detail::Loc;
using detail::SurfaceIndex;

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

std::string side_name(const SurfaceIndex& ix, int sheet, int slit, Side side) {
  return ix.sheets[sheet].id + "/" + ix.sheets[sheet].slits[slit].id + "/" + to_string(side);
}

struct Collector {
  ValidationReport report;
  void add(const std::string& inv, const std::string& detail) {
    report.ok = false;
    report.violations.push_back({inv, detail});
  }
};

void check_gluing(const SurfaceIndex& ix, Collector& out) {
  for (const auto& s : ix.self_pairs) out.add("involution-self", "side " + s + " is paired with itself");
  for (size_t s = 0; s < ix.sheets.size(); ++s) {
    for (size_t k = 0; k < ix.sheets[s].slits.size(); ++k) {
      for (Side side : {Side::Top, Side::Bottom}) {
        const Across& a = ix.across[s][k][detail::side_ix(side)];
        std::string name = side_name(ix, int(s), int(k), side);
        if (a.uses == 0) {
          out.add("involution-incomplete", "side " + name + " is neither glued nor a family attach point");
          continue;
        }
        if (a.uses > 1)
          out.add("two-star-bound", "side " + name + " is claimed " + std::to_string(a.uses) + " times");
        if (a.kind != Across::Kind::Core) continue;
        const auto& other = a.core;
        // report each pair once
        if (std::make_pair(other.sheet, other.slit) < std::make_pair(int(s), int(k))) continue;
        if (other.sheet == int(s) && other.slit == int(k) && other.side == side) continue;
        std::string oname = side_name(ix, other.sheet, other.slit, other.side);
        if (other.side == side)
          out.add("side-labels", "paired sides " + name + " and " + oname + " carry the same label");
        const auto& sa = ix.sheets[s].slits[k];
        const auto& sb = ix.sheets[other.sheet].slits[other.slit];
        if (sa.ram != sb.ram || std::abs(sa.foot - sb.foot) > kGenericityTol)
          out.add("foot-mismatch", "paired sides " + name + " and " + oname + " have different feet");
        if (other.sheet == int(s) && other.slit == int(k))
          out.add("order-one-gluing", "slit " + name + " is glued to its own opposite side");
      }
    }
  }
}

void check_rams(const SurfaceIndex& ix, Collector& out) {
  std::set<int> referenced;
  auto check_slits = [&](const std::string& owner, const std::vector<detail::SlitInfo>& slits) {
    for (const auto& sl : slits) {
      referenced.insert(sl.ram);
      if (std::abs(sl.foot - ix.rams[sl.ram].projection) > kGenericityTol)
        out.add("foot-mismatch", "slit " + owner + "/" + sl.id + " foot differs from projection of " +
                                     ix.rams[sl.ram].id);
    }
  };
  for (const auto& sh : ix.sheets) check_slits(sh.id, sh.slits);
  for (const auto& f : ix.families) check_slits(f.id, f.slits);
  for (size_t r = 0; r < ix.rams.size(); ++r) {
    const auto& ram = ix.rams[r];
    if (ram.order && *ram.order < 2)
      out.add("order-invalid", "ram " + ram.id + " has order " + std::to_string(*ram.order) +
                                   " (finite orders must be >= 2)");
    if (!referenced.count(int(r))) out.add("ram-unreferenced", "ram " + ram.id + " is the foot of no slit");
  }
}

void check_genericity(const SurfaceIndex& ix, Collector& out) {
  for (size_t i = 0; i < ix.rams.size(); ++i) {
    for (size_t j = i + 1; j < ix.rams.size(); ++j) {
      Complex p = ix.rams[i].projection, q = ix.rams[j].projection;
      double len = std::abs(q - p);
      if (len <= kGenericityTol) continue;
      double dist = std::abs(cross2(q - p, ix.z0 - p)) / len;
      if (dist <= kGenericityTol)
        out.add("z0-genericity", "z0 lies on the line through " + ix.rams[i].id + " and " + ix.rams[j].id +
                                     "; perturb z0");
    }
  }
  auto check_sheet = [&](const std::string& owner, const std::vector<detail::SlitInfo>& slits) {
    for (size_t a = 0; a < slits.size(); ++a)
      for (size_t b = a + 1; b < slits.size(); ++b) {
        Complex da = slits[a].dir, db = slits[b].dir;
        if (std::abs(cross2(da, db)) <= kGenericityTol && (da * std::conj(db)).real() > 0)
          out.add("slit-disjointness", "slits " + slits[a].id + " and " + slits[b].id + " of " + owner +
                                           " overlap");
      }
  };
  for (const auto& sh : ix.sheets) check_sheet(sh.id, sh.slits);
  for (const auto& f : ix.families) check_sheet(f.id, f.slits);
}

void check_families(const SurfaceIndex& ix, Collector& out) {
  for (const auto& f : ix.families) {
    if (f.slits.size() != 1)
      out.add("family-proto", "family " + f.id + " repeats proto " + f.proto + " which has " +
                                  std::to_string(f.slits.size()) + " slits (clean sheets have exactly one)");
    if (f.slits[f.chain_slit].ram != f.ram)
      out.add("family-proto", "family " + f.id + " chain slit is not footed at its ram");
    if (ix.rams[f.ram].order)
      out.add("finite-ram-family", "family " + f.id + " hangs off finite-order ram " + ix.rams[f.ram].id);
    Side want = f.orientation == Orientation::Plus ? Side::Bottom : Side::Top;
    if (f.attach.side != want)
      out.add("family-attach-side", "family " + f.id + " (" + to_string(f.orientation) + ") must attach at a " +
                                        to_string(want) + " side");
    if (ix.sheets[f.attach.sheet].slits[f.attach.slit].ram != f.ram)
      out.add("family-attach-side", "family " + f.id + " attaches to a slit footed elsewhere");
  }
}

// Walks counter-clockwise around the foot of `ram`: arrive on a Top side, leave
// through the Bottom side of the same slit.  Every slit footed at `ram` must be
// visited exactly once.
void check_ram_walks(const SurfaceIndex& ix, Collector& out) {
  for (size_t r = 0; r < ix.rams.size(); ++r) {
    const auto& ram = ix.rams[r];
    std::set<std::pair<int, int>> slits_at;
    for (size_t s = 0; s < ix.sheets.size(); ++s)
      for (size_t k = 0; k < ix.sheets[s].slits.size(); ++k)
        if (ix.sheets[s].slits[k].ram == int(r)) slits_at.insert({int(s), int(k)});
    if (slits_at.empty()) continue;
    const size_t budget = slits_at.size() + 2;

    if (ram.order) {
      auto start = *slits_at.begin();
      Loc loc{start.first, -1, 0};
      int slit = start.second;
      std::set<std::pair<int, int>> seen;
      bool closed = false;
      for (size_t step = 0; step < budget; ++step) {
        seen.insert({loc.core, slit});
        auto land = ix.cross(loc, slit, Side::Bottom);
        if (!land) break;
        if (land->loc.family >= 0) {
          out.add("finite-ram-family", "walk around finite ram " + ram.id + " enters family " +
                                           ix.families[land->loc.family].id);
          break;
        }
        loc = land->loc;
        slit = land->slit;
        if (loc.core == start.first && slit == start.second) {
          closed = true;
          break;
        }
      }
      size_t crossings = 2 * seen.size();
      if (!closed) {
        out.add("cycle-closure", "walk around " + ram.id + " does not close");
      } else if (seen.size() != slits_at.size()) {
        out.add("cycle-closure", "slits footed at " + ram.id + " form more than one cycle");
      } else if (crossings != size_t(2 * *ram.order)) {
        out.add("cycle-closure", "walk around " + ram.id + " closes after " + std::to_string(crossings) +
                                     " side crossings, expected " + std::to_string(2 * *ram.order));
      }
      continue;
    }

    int plus = ix.family_of(int(r), Orientation::Plus);
    int minus = ix.family_of(int(r), Orientation::Minus);
    int nplus = 0, nminus = 0;
    for (const auto& f : ix.families)
      if (f.ram == int(r)) (f.orientation == Orientation::Plus ? nplus : nminus)++;
    if (nplus != 1 || nminus != 1) {
      out.add("infinite-families", "infinite ram " + ram.id + " needs exactly one plus and one minus family (has " +
                                       std::to_string(nplus) + " and " + std::to_string(nminus) + ")");
      continue;
    }
    Loc loc{ix.families[minus].attach.sheet, -1, 0};
    int slit = ix.families[minus].attach.slit;
    std::set<std::pair<int, int>> seen;
    bool reached = false;
    for (size_t step = 0; step < budget; ++step) {
      if (!seen.insert({loc.core, slit}).second) break;
      auto land = ix.cross(loc, slit, Side::Bottom);
      if (!land) break;
      if (land->loc.family >= 0) {
        reached = land->loc.family == plus;
        break;
      }
      loc = land->loc;
      slit = land->slit;
    }
    if (!reached)
      out.add("infinite-line", "walk from the minus tail of " + ram.id + " does not reach its plus tail");
    else if (seen.size() != slits_at.size())
      out.add("infinite-line", "slits footed at " + ram.id + " do not form a single line");
  }
}

}  // namespace

ValidationReport validate(const SheetComplex& c) {
  Collector out;
  std::optional<SurfaceIndex> ix;
  try {
    ix.emplace(c);
  } catch (const SurfaceError& e) {
    out.add(e.invariant(), e.what());
    return out.report;
  }
  check_gluing(*ix, out);
  check_rams(*ix, out);
  check_genericity(*ix, out);
  check_families(*ix, out);
  if (out.report.ok) check_ram_walks(*ix, out);
  return out.report;
}

void require_valid(const SheetComplex& c) {
  auto r = validate(c);
  if (!r.ok) throw SurfaceError(r.violations.front().invariant, r.violations.front().detail);
}

}  // namespace lrs
