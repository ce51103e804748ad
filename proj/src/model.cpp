#include "logriemann/model.hpp"

#include <cmath>
#include <numbers>

namespace lrs {

namespace {

double line_distance(Complex p, Complex q, Complex z) {
  Complex d = q - p;
  return std::abs(d.real() * (z - p).imag() - d.imag() * (z - p).real()) / std::abs(d);
}

void check_inputs(const ModelParams& p) {
  if (p.w_list.empty()) throw SurfaceError("model-input", "w_list must contain at least one point");
  const auto& ws = p.w_list;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (std::abs(ws[i] - p.w) <= kGenericityTol)
      throw SurfaceError("model-input", "w coincides with w_list[" + std::to_string(i) + "]");
    if (std::abs(ws[i] - p.z0) <= kGenericityTol)
      throw SurfaceError("z0-genericity", "z0 coincides with w_list[" + std::to_string(i) + "]");
    for (size_t j = i + 1; j < ws.size(); ++j) {
      if (std::abs(ws[i] - ws[j]) <= kGenericityTol) continue;
      if (line_distance(ws[i], ws[j], p.z0) <= kGenericityTol)
        throw SurfaceError("z0-genericity", "z0 lies on the line through w_list[" + std::to_string(i) +
                                                "] and w_list[" + std::to_string(j) + "]; perturb z0");
    }
    if (line_distance(p.z0, ws[i], p.w) <= kGenericityTol)
      throw SurfaceError("z0-genericity", "w lies on the line through z0 and w_list[" + std::to_string(i) +
                                              "]; perturb w");
  }
  if (std::abs(p.w - p.z0) <= kGenericityTol) throw SurfaceError("z0-genericity", "w coincides with z0");
}

class Builder {
 public:
  explicit Builder(const ModelParams& p) : p_(p) { c_.z0 = p.z0; }

  void proto(const std::string& id, std::vector<Slit> slits) { c_.protos[id] = SheetProto{id, std::move(slits)}; }
  void sheet(const std::string& id, const std::string& proto) { c_.core_sheets[id] = proto; }
  void ram(const std::string& id, Complex at, std::optional<int> order) { c_.rams[id] = RamPoint{id, at, order}; }

  // Bottom side of (a, slit_a) meets Top side of (b, slit_b).
  void glue(const std::string& a, const std::string& slit_a, const std::string& b, const std::string& slit_b) {
    c_.gluing.push_back({SideRef{a, slit_a, Side::Bottom}, SideRef{b, slit_b, Side::Top}});
  }

  void tails(int j, const std::string& minus_sheet, const std::string& plus_sheet) {
    std::string lj = "l" + std::to_string(j);
    std::string rj = "w" + std::to_string(j);
    std::string proto = "clean" + std::to_string(j);
    c_.families.push_back({"tail" + std::to_string(j) + "_minus", proto, rj, lj, SideRef{minus_sheet, lj, Side::Top},
                           Orientation::Minus});
    c_.families.push_back({"tail" + std::to_string(j) + "_plus", proto, rj, lj, SideRef{plus_sheet, lj, Side::Bottom},
                           Orientation::Plus});
  }

  SheetComplex take() { return std::move(c_); }

 private:
  const ModelParams& p_;
  SheetComplex c_;
};

std::string idx(const char* prefix, int j) { return prefix + std::to_string(j); }

}  // namespace

SheetComplex build_model_surface(const ModelParams& p) {
  check_inputs(p);
  const int n = static_cast<int>(p.w_list.size());
  const int K = p.K;
  const int cycle_order = K > 0 ? n + K : n;  // order of ram "v"
  const bool has_v = cycle_order >= 2;

  Builder b(p);
  for (int j = 0; j < n; ++j) {
    b.ram(idx("w", j), p.w_list[j], std::nullopt);
    std::string lj = idx("l", j);
    Slit sj{lj, p.w_list[j], idx("w", j)};
    b.proto(idx("clean", j), {sj});
    if (has_v)
      b.proto(idx("star", j), {Slit{"l", p.w, "v"}, sj});
    else
      b.proto(idx("star", j), {sj});
    b.sheet(idx("Cstar", j), idx("star", j));
    b.sheet(idx("C", j) + "_0", idx("clean", j));
    // C_j^(0) -> C*_j
    b.glue(idx("C", j) + "_0", lj, idx("Cstar", j), lj);
  }
  if (has_v) b.ram("v", p.w, cycle_order);

  if (K >= 0) {
    for (int j = 0; j < n; ++j) {
      std::string lj = idx("l", j);
      b.sheet(idx("C", j) + "_1", idx("clean", j));
      b.glue(idx("Cstar", j), lj, idx("C", j) + "_1", lj);
      b.tails(j, idx("C", j) + "_0", idx("C", j) + "_1");
    }
    if (K == 0) {
      if (n >= 2)
        for (int j = 0; j < n; ++j) b.glue(idx("Cstar", j), "l", idx("Cstar", (j + 1) % n), "l");
    } else {
      b.proto("wsheet", {Slit{"l", p.w, "v"}});
      for (int i = 1; i <= K; ++i) b.sheet(idx("Cw", i), "wsheet");
      for (int j = 0; j + 1 < n; ++j) b.glue(idx("Cstar", j), "l", idx("Cstar", j + 1), "l");
      b.glue(idx("Cstar", n - 1), "l", "Cw1", "l");
      for (int i = 1; i < K; ++i) b.glue(idx("Cw", i), "l", idx("Cw", i + 1), "l");
      b.glue(idx("Cw", K), "l", "Cstar0", "l");
    }
    SheetComplex c = b.take();
    require_valid(c);
    return c;
  }

  // K < 0: C_0^(1) and C_0^(1+m) are replaced by two extra copies of C*_0.
  const int m = -K;
  if (n >= 2)
    for (int j = 0; j < n; ++j) b.glue(idx("Cstar", j), "l", idx("Cstar", (j + 1) % n), "l");
  for (int j = 1; j < n; ++j) {
    std::string lj = idx("l", j);
    b.sheet(idx("C", j) + "_1", idx("clean", j));
    b.glue(idx("Cstar", j), lj, idx("C", j) + "_1", lj);
    b.tails(j, idx("C", j) + "_0", idx("C", j) + "_1");
  }
  b.ram("v2", p.w, 2);
  b.proto("star2_0", {Slit{"l", p.w, "v2"}, Slit{"l0", p.w_list[0], "w0"}});
  b.sheet("Cstar0_1", "star2_0");
  b.sheet("Cstar0_2", "star2_0");
  const std::string last = "C0_" + std::to_string(2 + m);
  b.sheet(last, "clean0");
  b.glue("Cstar0", "l0", "Cstar0_1", "l0");
  b.glue("Cstar0_2", "l0", last, "l0");
  b.glue("Cstar0_2", "l", "Cstar0_1", "l");
  b.glue("Cstar0_1", "l", "Cstar0_2", "l");
  if (m > 1) {
    for (int i = 2; i <= m; ++i) b.sheet("C0_" + std::to_string(i), "clean0");
    b.glue("Cstar0_1", "l0", "C0_2", "l0");
    for (int i = 2; i < m; ++i) b.glue("C0_" + std::to_string(i), "l0", "C0_" + std::to_string(i + 1), "l0");
    b.glue("C0_" + std::to_string(m), "l0", "Cstar0_2", "l0");
  } else {
    b.glue("Cstar0_1", "l0", "Cstar0_2", "l0");
  }
  b.tails(0, "C0_0", last);
  SheetComplex c = b.take();
  require_valid(c);
  return c;
}

Complex generic_partner(Complex z0, const std::vector<Complex>& w_list) {
  double scale = 1.0 + std::abs(z0);
  for (auto w : w_list) scale = std::max(scale, 1.0 + std::abs(w));
  // Walk outwards along an irrational spiral until every condition holds with margin.
  for (int t = 1; t < 10000; ++t) {
    double r = scale * (0.5 + 0.137 * t);
    double a = 2.399963229728653 * t;  // golden angle
    Complex w = z0 + std::polar(r, a);
    bool ok = true;
    for (auto wj : w_list) {
      if (std::abs(wj - w) < 1e-3 * scale || line_distance(z0, wj, w) < 1e-3 * scale) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
  }
  throw SurfaceError("model-input", "could not find a generic partner point");
}

}  // namespace lrs
