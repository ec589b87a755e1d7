#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "halo/io.hpp"

using halo::format_g;
using halo::format_shortest;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fixed precision formatting") {
  CHECK(format_g(0.25) == "0.25");
  CHECK(format_g(1.0) == "1");
  CHECK(format_g(-0.5) == "-0.5");
  CHECK(format_g(1e-5) == "1e-05");
  CHECK(format_g(3.14159265358979, 6) == "3.14159");
  CHECK(format_g(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("shortest round-trip formatting") {
  const double samples[] = {0.1,      -2.0 / 3.0, 4.15559e-9, 3.040423e-6,
                            1.2e300,  -0.0,       42.0,       0.15094768687986513};
  for (double v : samples) {
    const std::string s = format_shortest(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == v);
    CHECK(std::signbit(back) == std::signbit(v));
  }
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(-0.0) == "-0");
}

TEST_CASE("table writer layout") {
  std::ostringstream os;
  halo::TableWriter tw(os, {"a", "b"});
  tw.comment("note");
  tw.row({1.0, 0.25});
  CHECK(os.str() == "# a b\n# note\n1\t0.25\n");
}

TEST_CASE("series round trip through text") {
  halo::Series4 s;
  s.add_term({2, 0, 0, 0}, 0.1);
  s.add_term({0, 1, 1, 0}, -2.0 / 3.0);
  s.add_term({0, 0, 0, 4}, 4.15559e-9);

  std::ostringstream os;
  halo::write_series(os, s);
  std::istringstream is(os.str());
  const auto back = halo::read_series<4>(is);

  const auto& ta = s.terms();
  const auto& tb = back.terms();
  REQUIRE(ta.size() == tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    CHECK(ta[i].k == tb[i].k);
    CHECK(ta[i].c == tb[i].c);
  }
}

TEST_CASE("complex series text carries both parts") {
  halo::Series<4, std::complex<double>> s;
  s.add_term({1, 0, 2, 0}, {0.5, -0.25});
  std::ostringstream os;
  halo::write_series(os, s);
  CHECK(os.str() == "1\t0\t2\t0\t0.5\t-0.25\n");
}

TEST_CASE("malformed series lines are rejected") {
  {
    std::istringstream is("1\t0\t0\t0\tnot_a_number\n");
    CHECK_THROWS_AS(halo::read_series<4>(is), halo::DomainError);
  }
  {
    std::istringstream is("2\t1\n");
    CHECK_THROWS_AS(halo::read_series<4>(is), halo::DomainError);
  }
  {
    // comments and blank lines are fine
    std::istringstream is("# header\n\n1\t0\t0\t0\t2.5\n");
    const auto s = halo::read_series<4>(is);
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].c == 2.5);
  }
}

TEST_CASE("shipped data files match their generators") {
  const std::string dir = HALO_DATA_DIR;
  CHECK(slurp(dir + "/systems.tsv") == halo::systems_table_text());
  CHECK(slurp(dir + "/reference_values.tsv") == halo::reference_values_text());
}

TEST_CASE("unwritable output paths are rejected") {
  CHECK_THROWS_AS(halo::open_output("/nonexistent_dir_zz91/out.txt"),
                  halo::DomainError);
}
