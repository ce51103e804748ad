#include <algorithm>

#include "doctest.h"
#include "logriemann/model.hpp"
#include "logriemann/spec_io.hpp"
#include "random_complex.hpp"

using namespace lrs;

namespace {

const Complex kW0{1.0, 0.0}, kW1{0.0, 1.0}, kW{-1.0, 1.0};

bool has_violation(const ValidationReport& r, const std::string& inv) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.invariant == inv; });
}

std::map<std::string, std::optional<int>> orders(const SheetComplex& c) {
  std::map<std::string, std::optional<int>> out;
  for (const auto& [id, r] : c.rams) out[id] = r.order;
  return out;
}

}  // namespace

TEST_CASE("single slit-free sheet") {
  auto c = build_from_spec_text(R"({"z0": [0, 0], "protos": {"p": []}, "core_sheets": {"s": "p"}, "rams": {}})");
  CHECK(c.core_sheets.size() == 1);
  CHECK(c.families.empty());
  CHECK(c.gluing.empty());
  CHECK(validate(c).ok);
}

TEST_CASE("surface documents round-trip") {
  auto c = build_model_surface(0.0, {kW0, kW1}, kW, 0);
  nlohmann::json doc = to_spec(c);
  CHECK(to_spec(build_from_spec(doc)) == doc);
  CHECK(to_spec(build_from_spec_text(doc.dump())) == doc);
}

TEST_CASE("document errors") {
  SUBCASE("unknown slit") {
    auto doc = to_spec(build_model_surface(0.0, {kW0, kW1}, kW, 0));
    doc["gluing"][0][0][1] = "nope";
    try {
      build_from_spec(doc);
      FAIL("expected an error");
    } catch (const SurfaceError& e) {
      CHECK(e.invariant() == "dangling-reference");
    }
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(build_from_spec_text("{"), SurfaceError);
    CHECK_THROWS_AS(build_from_spec_text(R"({"z0": [0], "protos": {}, "core_sheets": {}, "rams": {}})"), SurfaceError);
    CHECK_THROWS_AS(build_from_spec_text(
                        R"({"z0": [0,0], "protos": {}, "core_sheets": {}, "rams": {"r": {"projection": [1,0], "order": "big"}}})"),
                    SurfaceError);
  }
}

TEST_CASE("validation") {
  auto c = build_model_surface(0.0, {kW0, kW1}, kW, 0);
  CHECK(validate(c).ok);

  SUBCASE("missing gluing pair") {
    c.gluing.pop_back();
    auto r = validate(c);
    CHECK_FALSE(r.ok);
    CHECK(has_violation(r, "involution-incomplete"));
  }
  SUBCASE("collinear projections") {
    SheetComplex d;
    d.z0 = 0.0;
    d.protos["a"] = SheetProto{"a", {{"l1", 1.0, "r1"}, {"l2", 2.0, "r2"}}};
    d.protos["b"] = SheetProto{"b", {{"l1", 1.0, "r1"}, {"l2", 2.0, "r2"}}};
    d.core_sheets = {{"A", "a"}, {"B", "b"}};
    d.rams["r1"] = RamPoint{"r1", 1.0, 2};
    d.rams["r2"] = RamPoint{"r2", 2.0, 2};
    d.gluing = {{{"A", "l1", Side::Bottom}, {"B", "l1", Side::Top}},
                {{"B", "l1", Side::Bottom}, {"A", "l1", Side::Top}},
                {{"A", "l2", Side::Bottom}, {"B", "l2", Side::Top}},
                {{"B", "l2", Side::Bottom}, {"A", "l2", Side::Top}}};
    auto r = validate(d);
    CHECK(has_violation(r, "z0-genericity"));
  }
  SUBCASE("same labels") {
    c.gluing[0].second.side = c.gluing[0].first.side;
    CHECK(has_violation(validate(c), "side-labels"));
  }
  SUBCASE("wrong order") {
    c.rams["v"].order = 3;
    CHECK(has_violation(validate(c), "cycle-closure"));
  }
  SUBCASE("order one") {
    c.rams["v"].order = 1;
    CHECK(has_violation(validate(c), "order-invalid"));
  }
  SUBCASE("doubly claimed side") {
    c.gluing.push_back(c.gluing.front());
    CHECK(has_violation(validate(c), "two-star-bound"));
  }
  SUBCASE("missing tail") {
    c.families.pop_back();
    CHECK_FALSE(validate(c).ok);
  }
}

TEST_CASE("model census") {
  using O = std::optional<int>;
  auto inf = std::nullopt;
  CHECK(orders(build_model_surface(0.0, {kW0, kW1}, kW, 0)) ==
        std::map<std::string, O>{{"v", 2}, {"w0", inf}, {"w1", inf}});
  CHECK(orders(build_model_surface(0.0, {kW0, kW1}, kW, 2)) ==
        std::map<std::string, O>{{"v", 4}, {"w0", inf}, {"w1", inf}});
  CHECK(orders(build_model_surface(0.0, {kW0, kW1}, kW, -1)) ==
        std::map<std::string, O>{{"v", 2}, {"v2", 2}, {"w0", inf}, {"w1", inf}});
  // order-1 point suppressed
  CHECK(orders(build_model_surface(0.0, {kW0}, kW, -2)) == std::map<std::string, O>{{"v2", 2}, {"w0", inf}});
  CHECK(orders(build_model_surface(0.0, {kW0}, kW, 0)) == std::map<std::string, O>{{"w0", inf}});
}

TEST_CASE("model builder rejects bad input") {
  CHECK_THROWS_AS(build_model_surface(0.0, {kW0, kW1}, kW0, 0), SurfaceError);
  CHECK_THROWS_AS(build_model_surface(0.0, {}, kW, 0), SurfaceError);
  // z0 on the line through w0 and w
  CHECK_THROWS_AS(build_model_surface(0.0, {kW0}, Complex(-2.0, 0.0), 0), SurfaceError);
}

TEST_CASE("model family validates on the grid") {
  for (int n = 1; n <= 4; ++n)
    for (int K = -3; K <= 3; ++K) {
      std::vector<Complex> w;
      for (int j = 0; j < n; ++j) w.push_back(std::polar(1.0 + 0.25 * j, 0.3 + 1.4 * j));
      Complex z0(0.07, -0.11);
      auto c = build_model_surface(z0, w, generic_partner(z0, w), K);
      CAPTURE(n);
      CAPTURE(K);
      CHECK(validate(c).ok);
    }
}

TEST_CASE("gluing is an involution with coherent feet") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto c = testing::random_complex(seed).complex;
    std::map<SideRef, SideRef> partner;
    for (const auto& [a, b] : c.gluing) {
      CHECK(partner.emplace(a, b).second);
      CHECK(partner.emplace(b, a).second);
    }
    for (const auto& [a, b] : partner) {
      CHECK(partner.at(b) == a);
      CHECK(a.side != b.side);
      auto foot = [&](const SideRef& s) {
        for (const auto& sl : c.protos.at(c.core_sheets.at(s.sheet)).slits)
          if (sl.id == s.slit) return sl.foot;
        return Complex(NAN, NAN);
      };
      CHECK(foot(a) == foot(b));
    }
  }
}
