#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_support.hpp"
#include "doctest.h"

using namespace lrs;
using namespace lrs::cli;

TEST_CASE("coefficients") {
  CHECK(parse_coefficient("3") == Complex(3.0, 0.0));
  CHECK(parse_coefficient("-1.5") == Complex(-1.5, 0.0));
  CHECK(parse_coefficient("2i") == Complex(0.0, 2.0));
  CHECK(parse_coefficient("1+2i") == Complex(1.0, 2.0));
  CHECK(parse_coefficient("-0.5-i") == Complex(-0.5, -1.0));
  CHECK(parse_coefficient("i") == Complex(0.0, 1.0));
  CHECK(parse_coefficient("1e-3") == Complex(1e-3, 0.0));
  CHECK_THROWS_AS(parse_coefficient(""), SurfaceError);
  CHECK_THROWS_AS(parse_coefficient("x"), SurfaceError);
  CHECK_THROWS_AS(parse_coefficient("1+"), SurfaceError);
}

TEST_CASE("complex and lists") {
  CHECK(parse_complex("1.5,-2") == Complex(1.5, -2.0));
  CHECK_THROWS_AS(parse_complex("1.5"), SurfaceError);
  CHECK_THROWS_AS(parse_complex("a,b"), SurfaceError);
  auto v = parse_complex_list("0,0;0,10");
  REQUIRE(v.size() == 2);
  CHECK(v[1] == Complex(0.0, 10.0));
  CHECK(parse_long_list("8;64;512") == std::vector<long>{8, 64, 512});
  CHECK_THROWS_AS(parse_long_list("8;x"), SurfaceError);
}

TEST_CASE("polynomials") {
  auto q = parse_laurent("-2:1,0,3");
  CHECK(q.low == -2);
  CHECK(q.coeffs.size() == 3);
  CHECK(q(Complex(2.0, 0.0)) == Complex(0.25 + 3.0, 0.0));
  auto p = parse_polynomial("0,0,1");
  CHECK(p.degree() == 2);
  CHECK_THROWS_AS(parse_laurent("1,2"), SurfaceError);
  CHECK_THROWS_AS(parse_polynomial(""), SurfaceError);
}

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 0.88622692545275801}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("atomic writes") {
  auto dir = std::filesystem::temp_directory_path() / "lrs_cli_support_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "out.json";
  write_atomic(file.string(), "first");
  write_atomic(file.string(), "second");
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  std::filesystem::remove_all(dir);
  CHECK_THROWS(write_atomic((dir / "missing" / "x").string(), "y"));
}
