#pragma once

// Integer-indexed view of a SheetComplex used by every algorithm.  Building it
// resolves all string ids; a dangling id throws SurfaceError.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logriemann/sheet_complex.hpp"

namespace lrs::detail {

struct SlitInfo {
  std::string id;
  Complex foot;
  Complex dir;  // unit vector, foot - z0 normalized
  int ram = -1;
};

struct SheetInfo {
  std::string id;
  std::string proto;
  std::vector<SlitInfo> slits;
};

struct CoreSide {
  int sheet = -1;
  int slit = -1;
  Side side = Side::Top;
};

inline int side_ix(Side s) { return s == Side::Top ? 0 : 1; }

struct Across {
  enum class Kind { None, Core, Family };
  Kind kind = Kind::None;
  CoreSide core;   // Kind::Core
  int family = -1; // Kind::Family
  int uses = 0;    // how many gluing entries / attaches claim this side
};

struct FamilyInfo {
  std::string id;
  std::string proto;
  int ram = -1;
  int chain_slit = -1;
  Orientation orientation = Orientation::Plus;
  CoreSide attach;
  std::vector<SlitInfo> slits;
};

struct RamInfo {
  std::string id;
  Complex projection;
  std::optional<int> order;
};

/// A concrete sheet: core sheet, or copy >= 1 of a family.
struct Loc {
  int core = -1;
  int family = -1;
  long copy = 0;

  bool operator==(const Loc&) const = default;
  auto operator<=>(const Loc&) const = default;
};

/// Where leaving a sheet through a slit side lands.
struct Landing {
  Loc loc;
  int slit = -1;  // slit index on the landing sheet; arrival side is the opposite one
};

class SurfaceIndex {
 public:
  explicit SurfaceIndex(const SheetComplex& c);

  Complex z0;
  std::vector<SheetInfo> sheets;
  std::vector<FamilyInfo> families;
  std::vector<RamInfo> rams;
  std::map<std::string, int> sheet_ix;
  std::map<std::string, int> family_ix;
  std::map<std::string, int> ram_ix;
  // across[sheet][slit][side_ix]
  std::vector<std::vector<std::array<Across, 2>>> across;
  // (a, b) pairs that were glued to themselves; reported by the validator
  std::vector<std::string> self_pairs;

  const std::vector<SlitInfo>& slits(const Loc& l) const {
    return l.family >= 0 ? families[l.family].slits : sheets[l.core].slits;
  }
  int slit_index(const Loc& l, const std::string& slit_id) const;

  /// Leave `loc` through side `side` of slit `slit`.  nullopt when that side is unglued.
  std::optional<Landing> cross(const Loc& loc, int slit, Side side) const;

  SheetAddress address(const Loc& l) const;
  Loc resolve(const SheetAddress& a) const;  // throws on unknown ids or copy < 0
  std::vector<int> infinite_rams() const;
  int family_of(int ram, Orientation o) const;  // -1 when absent
};

int find_slit(const std::vector<SlitInfo>& slits, const std::string& id);

}  // namespace lrs::detail
