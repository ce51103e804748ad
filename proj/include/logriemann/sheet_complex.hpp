#pragma once

// Log-Riemann surfaces of finite type as complexes of slit planes glued along
// their slits.  A sheet is a copy of the plane minus finitely many closed
// half-lines ("slits"); every slit starts at the projection of a ramification
// point and points away from the base point z0.  Each slit has a Top side
// (the left of its direction) and a Bottom side (the right).

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrs {

using Complex = std::complex<double>;

enum class Side { Top, Bottom };
enum class Orientation { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Top ? Side::Bottom : Side::Top; }
const char* to_string(Side s);
const char* to_string(Orientation o);

/// Raised for malformed input: bad documents, dangling ids, degenerate geometry.
class SurfaceError : public std::runtime_error {
 public:
  SurfaceError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

struct Slit {
  std::string id;
  Complex foot;
  std::string ram;
};

struct SheetProto {
  std::string id;
  std::vector<Slit> slits;
};

/// One side of one slit on a core sheet.
struct SideRef {
  std::string sheet;
  std::string slit;
  Side side = Side::Top;

  auto operator<=>(const SideRef&) const = default;
};

/// A periodic tail of identical clean sheets.  Copies are numbered 1, 2, ...
/// For Plus, copy k's Bottom(chain_slit) meets copy k+1's Top and copy 1's Top
/// meets `attach` (a Bottom side).  Minus is the mirror image.
struct HalfLineFamily {
  std::string id;
  std::string proto;
  std::string ram;
  std::string chain_slit;
  SideRef attach;
  Orientation orientation = Orientation::Plus;
};

struct RamPoint {
  std::string id;
  Complex projection;
  std::optional<int> order;  // nullopt: infinite order

  bool infinite() const { return !order.has_value(); }
};

struct SheetComplex {
  Complex z0{0.0, 0.0};
  std::map<std::string, SheetProto> protos;
  std::map<std::string, std::string> core_sheets;  // sheet id -> proto id
  std::vector<HalfLineFamily> families;
  std::vector<std::pair<SideRef, SideRef>> gluing;
  std::map<std::string, RamPoint> rams;
};

/// Core sheet (copy == 0, id names the sheet) or copy `copy` >= 1 of family `id`.
struct SheetAddress {
  std::string id;
  long copy = 0;

  bool in_family() const { return copy > 0; }
  auto operator<=>(const SheetAddress&) const = default;
};

struct SheetPoint {
  SheetAddress sheet;
  Complex pos;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

inline constexpr double kGenericityTol = 1e-9;
inline constexpr double kTangencyTol = 1e-12;

ValidationReport validate(const SheetComplex& c);

/// Throws SurfaceError naming the first violated invariant.
void require_valid(const SheetComplex& c);

}  // namespace lrs
