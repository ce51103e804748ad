#include "surface_index.hpp"

#include <cmath>

namespace lrs::detail {

int find_slit(const std::vector<SlitInfo>& slits, const std::string& id) {
  for (size_t i = 0; i < slits.size(); ++i)
    if (slits[i].id == id) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<SlitInfo> resolve_slits(const SheetProto& p, Complex z0,
                                    const std::map<std::string, int>& ram_ix) {
  std::vector<SlitInfo> out;
  for (const auto& s : p.slits) {
    auto it = ram_ix.find(s.ram);
    if (it == ram_ix.end())
      throw SurfaceError("dangling-reference", "slit " + p.id + "/" + s.id + " names unknown ram " + s.ram);
    Complex d = s.foot - z0;
    double len = std::abs(d);
    if (!(len > 0.0))
      throw SurfaceError("z0-genericity", "slit " + p.id + "/" + s.id + " has its foot at z0");
    out.push_back({s.id, s.foot, d / len, it->second});
  }
  return out;
}

}  // namespace

SurfaceIndex::SurfaceIndex(const SheetComplex& c) : z0(c.z0) {
  for (const auto& [id, r] : c.rams) {
    ram_ix[id] = static_cast<int>(rams.size());
    rams.push_back({id, r.projection, r.order});
  }
  for (const auto& [id, proto] : c.core_sheets) {
    auto it = c.protos.find(proto);
    if (it == c.protos.end())
      throw SurfaceError("dangling-reference", "core sheet " + id + " names unknown proto " + proto);
    sheet_ix[id] = static_cast<int>(sheets.size());
    sheets.push_back({id, proto, resolve_slits(it->second, z0, ram_ix)});
  }
  across.resize(sheets.size());
  for (size_t s = 0; s < sheets.size(); ++s) across[s].resize(sheets[s].slits.size());

  auto core_side = [&](const SideRef& r, const std::string& ctx) {
    auto it = sheet_ix.find(r.sheet);
    if (it == sheet_ix.end())
      throw SurfaceError("dangling-reference", ctx + " names unknown sheet " + r.sheet);
    int slit = find_slit(sheets[it->second].slits, r.slit);
    if (slit < 0)
      throw SurfaceError("dangling-reference", ctx + " names unknown slit " + r.sheet + "/" + r.slit);
    return CoreSide{it->second, slit, r.side};
  };

  for (const auto& f : c.families) {
    auto pit = c.protos.find(f.proto);
    if (pit == c.protos.end())
      throw SurfaceError("dangling-reference", "family " + f.id + " names unknown proto " + f.proto);
    auto rit = ram_ix.find(f.ram);
    if (rit == ram_ix.end())
      throw SurfaceError("dangling-reference", "family " + f.id + " names unknown ram " + f.ram);
    if (family_ix.count(f.id))
      throw SurfaceError("dangling-reference", "duplicate family id " + f.id);
    FamilyInfo info;
    info.id = f.id;
    info.proto = f.proto;
    info.ram = rit->second;
    info.orientation = f.orientation;
    info.slits = resolve_slits(pit->second, z0, ram_ix);
    info.chain_slit = find_slit(info.slits, f.chain_slit);
    if (info.chain_slit < 0)
      throw SurfaceError("dangling-reference", "family " + f.id + " names unknown chain slit " + f.chain_slit);
    info.attach = core_side(f.attach, "family " + f.id);
    int fi = static_cast<int>(families.size());
    family_ix[f.id] = fi;
    families.push_back(std::move(info));
    auto& a = across[families[fi].attach.sheet][families[fi].attach.slit][side_ix(f.attach.side)];
    if (a.uses == 0) {
      a.kind = Across::Kind::Family;
      a.family = fi;
    }
    ++a.uses;
  }

  for (const auto& [x, y] : c.gluing) {
    CoreSide a = core_side(x, "gluing entry");
    CoreSide b = core_side(y, "gluing entry");
    if (x == y) {
      self_pairs.push_back(x.sheet + "/" + x.slit + "/" + to_string(x.side));
      continue;
    }
    auto& ea = across[a.sheet][a.slit][side_ix(a.side)];
    auto& eb = across[b.sheet][b.slit][side_ix(b.side)];
    if (ea.uses == 0) {
      ea.kind = Across::Kind::Core;
      ea.core = b;
    }
    if (eb.uses == 0) {
      eb.kind = Across::Kind::Core;
      eb.core = a;
    }
    ++ea.uses;
    ++eb.uses;
  }
}

int SurfaceIndex::slit_index(const Loc& l, const std::string& slit_id) const {
  return find_slit(slits(l), slit_id);
}

std::optional<Landing> SurfaceIndex::cross(const Loc& loc, int slit, Side side) const {
  if (loc.family < 0) {
    const Across& a = across[loc.core][slit][side_ix(side)];
    switch (a.kind) {
      case Across::Kind::Core:
        return Landing{Loc{a.core.sheet, -1, 0}, a.core.slit};
      case Across::Kind::Family:
        return Landing{Loc{-1, a.family, 1}, families[a.family].chain_slit};
      case Across::Kind::None:
        return std::nullopt;
    }
    return std::nullopt;
  }
  const FamilyInfo& f = families[loc.family];
  if (slit != f.chain_slit) return std::nullopt;
  // Plus: Bottom leads outward.  Minus: Top leads outward.
  Side outward = f.orientation == Orientation::Plus ? Side::Bottom : Side::Top;
  if (side == outward) return Landing{Loc{-1, loc.family, loc.copy + 1}, f.chain_slit};
  if (loc.copy > 1) return Landing{Loc{-1, loc.family, loc.copy - 1}, f.chain_slit};
  return Landing{Loc{f.attach.sheet, -1, 0}, f.attach.slit};
}

SheetAddress SurfaceIndex::address(const Loc& l) const {
  if (l.family >= 0) return {families[l.family].id, l.copy};
  return {sheets[l.core].id, 0};
}

Loc SurfaceIndex::resolve(const SheetAddress& a) const {
  if (a.copy == 0) {
    auto it = sheet_ix.find(a.id);
    if (it == sheet_ix.end()) throw SurfaceError("dangling-reference", "unknown core sheet " + a.id);
    return Loc{it->second, -1, 0};
  }
  if (a.copy < 0) throw SurfaceError("invalid-sheet-address", "negative copy index for " + a.id);
  auto it = family_ix.find(a.id);
  if (it == family_ix.end()) throw SurfaceError("dangling-reference", "unknown family " + a.id);
  return Loc{-1, it->second, a.copy};
}

std::vector<int> SurfaceIndex::infinite_rams() const {
  std::vector<int> out;
  for (size_t i = 0; i < rams.size(); ++i)
    if (!rams[i].order) out.push_back(static_cast<int>(i));
  return out;
}

int SurfaceIndex::family_of(int ram, Orientation o) const {
  for (size_t i = 0; i < families.size(); ++i)
    if (families[i].ram == ram && families[i].orientation == o) return static_cast<int>(i);
  return -1;
}

}  // namespace lrs::detail
