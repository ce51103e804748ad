#include "doctest.h"
#include "logriemann/model.hpp"
#include "logriemann/skeleton.hpp"
#include "logriemann/spec_io.hpp"
#include "random_complex.hpp"

using namespace lrs;

namespace {

const std::vector<Complex> kTwo{{1.0, 0.0}, {0.0, 1.0}};
const Complex kW{-1.0, 1.0};

int finite_edges(const Skeleton& s, const std::string& ram) {
  int n = 0;
  for (const auto& e : s.edges)
    if (e.ram == ram && !e.periodic) ++n;
  return n;
}

}  // namespace

TEST_CASE("skeleton of the plane") {
  auto s = skeleton(build_from_spec_text(R"({"z0": [0, 0], "protos": {"p": []}, "core_sheets": {"s": "p"}, "rams": {}})"));
  CHECK(s.vertices.size() == 1);
  CHECK(s.edges.empty());
  CHECK(ramification_census(s).empty());
  CHECK(betti(s) == 0);
  CHECK(betti(finite_completion(s)) == 0);
}

TEST_CASE("model skeletons") {
  SUBCASE("K = 0: cycle of length 2 and four tails") {
    auto s = skeleton(build_model_surface(0.0, kTwo, kW, 0));
    CHECK(finite_edges(s, "v") == 2);
    int tails = 0;
    for (const auto& v : s.vertices) tails += v.tail ? 1 : 0;
    CHECK(tails == 4);
    int periodic = 0;
    for (const auto& e : s.edges) periodic += e.periodic ? 1 : 0;
    CHECK(periodic == 4);
    CHECK(betti(s) == 1);
  }
  SUBCASE("K = 2: cycle of length 4") {
    auto s = skeleton(build_model_surface(0.0, kTwo, kW, 2));
    CHECK(finite_edges(s, "v") == 4);
  }
}

TEST_CASE("census") {
  using E = CensusEntry;
  CHECK(ramification_census(skeleton(build_model_surface(0.0, kTwo, kW, 0))) ==
        std::vector<E>{{"v", 2}, {"w0", std::nullopt}, {"w1", std::nullopt}});
  std::vector<Complex> three{{1.0, 0.0}, {0.0, 1.0}, {-0.6, -0.9}};
  CHECK(ramification_census(skeleton(build_model_surface(0.05, three, generic_partner(0.05, three), 1))) ==
        std::vector<E>{{"v", 4}, {"w0", std::nullopt}, {"w1", std::nullopt}, {"w2", std::nullopt}});
  CHECK(ramification_census(skeleton(build_model_surface(0.0, kTwo, kW, -1))) ==
        std::vector<E>{{"v", 2}, {"v2", 2}, {"w0", std::nullopt}, {"w1", std::nullopt}});
}

TEST_CASE("census rejects malformed skeletons") {
  Skeleton s;
  s.vertices = {{"a", false}, {"b", false}, {"c", false}};
  s.edges = {{0, 1, "r", false}, {1, 2, "r", false}};
  CHECK_THROWS_AS(ramification_census(s), SurfaceError);
}

TEST_CASE("finite completion") {
  SUBCASE("K = 0") {
    auto s = skeleton(build_model_surface(0.0, kTwo, kW, 0));
    auto x = finite_completion(s);
    CHECK(x.vertices.size() == s.vertices.size() + 1);
    CHECK(x.vertex("v(v)") >= 0);
    CHECK(betti(s) == 1);
    CHECK(betti(x) == 0);
  }
  SUBCASE("K = -2") {
    auto x = finite_completion(skeleton(build_model_surface(0.0, kTwo, kW, -2)));
    CHECK(betti(x) == 1);
  }
  SUBCASE("no finite points") {
    auto s = skeleton(build_model_surface(0.0, {{1.0, 0.0}}, kW, 0));
    auto x = finite_completion(s);
    CHECK(x.vertices.size() == s.vertices.size());
    CHECK(x.edges.size() == s.edges.size());
  }
}

TEST_CASE("completed rank of the model family") {
  for (int n = 1; n <= 4; ++n)
    for (int K = -3; K <= 3; ++K) {
      std::vector<Complex> w;
      for (int j = 0; j < n; ++j) w.push_back(std::polar(1.0 + 0.2 * j, 0.5 + 1.5 * j));
      auto c = build_model_surface(0.03, w, generic_partner(0.03, w), K);
      CAPTURE(n);
      CAPTURE(K);
      CHECK(betti(finite_completion(skeleton(c))) == (K < 0 ? 1 : 0));
    }
}

TEST_CASE("Riemann-Hurwitz on random finite covers") {
  // a degree-d cover with branching excess B has Euler characteristic d - B
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    auto r = testing::random_complex(seed, 4, 3, 0);
    auto x = finite_completion(skeleton(r.complex));
    CAPTURE(seed);
    CHECK(1 - betti(x) == r.degree - r.branch_excess);
    CHECK(component_count(x) == 1);
  }
}

TEST_CASE("dot export") {
  auto dot = to_dot(skeleton(build_model_surface(0.0, kTwo, kW, 0)));
  CHECK(dot.find("graph \"skeleton\"") == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"Cstar0\"") != std::string::npos);
}
