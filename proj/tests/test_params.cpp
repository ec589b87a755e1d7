#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "halo/params.hpp"
#include "helpers.hpp"

using halo::build_params;
using halo::DomainError;
using halo::load_case;
using halo::ModelParams;

TEST_CASE("parameter ranges are enforced with named messages") {
  CHECK_THROWS_AS(build_params(0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(build_params(0.6, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(build_params(0.1, -0.1, 0.0), DomainError);
  CHECK_THROWS_AS(build_params(0.1, 0.6, 0.0), DomainError);
  CHECK_THROWS_AS(build_params(0.1, 0.0, -1e-9), DomainError);
  CHECK_THROWS_AS(build_params(0.1, 0.0, 2e-4), DomainError);

  try {
    build_params(-1.0, 0.0, 0.0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("mu") != std::string::npos);
  }
  try {
    build_params(0.1, 0.7, 0.0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("beta") != std::string::npos);
  }
}

TEST_CASE("derived quantities q and n") {
  const ModelParams p = build_params(0.01, 0.02, 4e-9);
  CHECK(p.q() == Catch::Approx(0.98).margin(1e-16));
  CHECK(p.n() * p.n() == Catch::Approx(1.0 + 1.5 * 4e-9).margin(1e-15));
  const ModelParams flat = build_params(0.01, 0.0, 0.0);
  CHECK(flat.n() == 1.0);
}

TEST_CASE("sail performance scales and inverts") {
  const double K = halo::sail_performance(1.0, 1.0);  // L / (4 pi c G M)
  CHECK(K > 0.0);
  CHECK(halo::sail_performance(2.0, 1.0) == Catch::Approx(2.0 * K).epsilon(1e-14));
  CHECK(halo::sail_performance(1.5, 3.0) == Catch::Approx(0.5 * K).epsilon(1e-14));

  // pick B to hit a target beta, then recover it
  const double beta_target = 1e-2;
  const double B = 2.0 * K / beta_target;
  CHECK(halo::sail_performance(2.0, B) == Catch::Approx(beta_target).epsilon(1e-13));

  CHECK_THROWS_AS(halo::sail_performance(0.9, 1.0), DomainError);
  CHECK_THROWS_AS(halo::sail_performance(2.1, 1.0), DomainError);
  CHECK_THROWS_AS(halo::sail_performance(1.5, 0.0), DomainError);
  CHECK_THROWS_AS(halo::sail_performance(1.5, -2.0), DomainError);
}

TEST_CASE("builtin case studies") {
  const auto& table = halo::builtin_systems();
  REQUIRE(table.size() == 3);

  CHECK(table[0].name == "earth-moon");
  CHECK(table[0].mu == testutil::mu_em);
  CHECK(table[0].A == testutil::A_em);
  CHECK(table[0].beta == 0.0);

  CHECK(table[1].name == "sun-barycenter");
  CHECK(table[1].mu == testutil::mu_sb);
  CHECK(table[1].A == testutil::A_sb);
  CHECK(table[1].beta == 1e-2);

  CHECK(table[2].name == "sun-vesta");
  CHECK(table[2].mu == testutil::mu_sv);
  CHECK(table[2].mu == Catch::Approx(1.3574e-10).epsilon(1e-4));
  CHECK(table[2].A == testutil::A_sv);
  CHECK(table[2].beta == 1e-2);

  CHECK_THROWS_AS(halo::find_system(table, "jupiter-europa"), DomainError);
}

TEST_CASE("load_case honors the beta override") {
  const ModelParams def = load_case("sun-vesta");
  CHECK(def.beta == 1e-2);
  CHECK(def.A == testutil::A_sv);

  const ModelParams off = load_case("sun-vesta", 0.0);
  CHECK(off.beta == 0.0);
  CHECK(off.mu == def.mu);

  const ModelParams em = load_case("earth-moon");
  CHECK(em.beta == 0.0);
  CHECK(em.A == testutil::A_em);

  CHECK_THROWS_AS(load_case("nonesuch"), DomainError);
  CHECK_THROWS_AS(load_case("sun-vesta", 0.9), DomainError);
}

TEST_CASE("system tables parse with mixed delimiters") {
  std::istringstream in(
      "# comment line\n"
      "name mu J2 A beta\n"
      "alpha\t0.01\t1e-4\t2e-9\t0\n"
      "bravo,0.02,0,0,0.01\n"
      "charlie 0.03 0 1e-12 0.005\n");
  const auto rows = halo::parse_systems_table(in);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].name == "alpha");
  CHECK(rows[0].A == 2e-9);
  CHECK(rows[1].name == "bravo");
  CHECK(rows[1].beta == 0.01);
  CHECK(rows[2].mu == 0.03);

  std::istringstream bad(
      "name mu J2 A beta\n"
      "broken 0.01 only-three\n");
  CHECK_THROWS_AS(halo::parse_systems_table(bad), DomainError);

  CHECK_THROWS_AS(halo::load_systems_file("/no/such/file.tsv"), DomainError);
}

TEST_CASE("shipped systems file matches the builtin table") {
  const std::string path = std::string(HALO_DATA_DIR) + "/systems.tsv";
  const auto rows = halo::load_systems_file(path);
  const auto& builtin = halo::builtin_systems();
  REQUIRE(rows.size() == builtin.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].name == builtin[i].name);
    CHECK(rows[i].mu == builtin[i].mu);
    CHECK(rows[i].J2 == builtin[i].J2);
    CHECK(rows[i].A == builtin[i].A);
    CHECK(rows[i].beta == builtin[i].beta);
  }
}
