#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "halo/cmflow.hpp"
#include "halo/fli.hpp"
#include "halo/params.hpp"
#include "halo/pipeline.hpp"
#include "halo/sections.hpp"

#include "helpers.hpp"

using halo::CMFlow;
using halo::Series4;
using halo::Vec;

namespace {

const CMFlow& quad_flow() {
  static const CMFlow flow = [] {
    Series4 H;
    H.add_term({2, 0, 0, 0}, 0.55);
    H.add_term({0, 0, 2, 0}, 0.55);
    H.add_term({0, 2, 0, 0}, 0.45);
    H.add_term({0, 0, 0, 2}, 0.45);
    return CMFlow{H};
  }();
  return flow;
}

// sun-vesta with radiation pressure and oblateness switched off: at high
// energy the section slice crosses the stable island boundary near both edges
const CMFlow& sv0_flow() {
  static const CMFlow flow = [] {
    const auto p = halo::build_params(testutil::mu_sv, 0.0, 0.0);
    return CMFlow{halo::run_pipeline(p, 1, 4).cm.CM};
  }();
  return flow;
}

std::size_t argmax(const std::vector<halo::FLIRecord>& recs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < recs.size(); ++i)
    if (recs[i].value > recs[best].value) best = i;
  return best;
}

}  // namespace

TEST_CASE("rotational flow has a flat indicator") {
  const auto recs = halo::fli_grid(quad_flow(), 0.02, -0.1, 0.1, 9, 0.0, 0.0, 1);
  REQUIRE(recs.size() == 9);
  double lo = 1e300, hi = -1e300;
  for (const auto& r : recs) {
    CHECK_FALSE(r.escaped);
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
  }
  CHECK(hi - lo <= 0.2);
  CHECK(hi <= 1e-9);
}

TEST_CASE("indicator grows monotonically on a hyperbolic orbit") {
  const CMFlow& flow = sv0_flow();
  const double h = 0.35;
  const double yb = halo::section_boundary_y(flow, h);
  const auto pz = halo::solve_pz(flow, h, 0.99 * yb, 0.0);
  REQUIRE(pz.has_value());
  const Vec<4> x0{0.99 * yb, 0.0, 0.0, *pz};

  const auto f50 = halo::fli(flow, x0, {1, 0, 0, 0}, 50.0);
  const auto f100 = halo::fli(flow, x0, {1, 0, 0, 0}, 100.0);
  const auto f200 = halo::fli(flow, x0, {1, 0, 0, 0}, 200.0);
  CHECK(f50.value <= f100.value + 1e-9);
  CHECK(f100.value <= f200.value + 1e-9);
  CHECK(f200.value > 1.0);
}

TEST_CASE("ridge location does not depend on the tangent seed") {
  const CMFlow& flow = sv0_flow();
  const double h = 0.35;
  const double yb = halo::section_boundary_y(flow, h);

  const auto r1 = halo::fli_grid(flow, h, -0.99 * yb, 0.99 * yb, 21, 0.0, 0.0, 1,
                                 200.0, {1, 0, 0, 0});
  const auto r2 = halo::fli_grid(flow, h, -0.99 * yb, 0.99 * yb, 21, 0.0, 0.0, 1,
                                 200.0, {0, 1, 0, 0});
  REQUIRE(r1.size() == 21);
  REQUIRE(r2.size() == 21);

  const std::size_t i1 = argmax(r1), i2 = argmax(r2);
  CHECK((i1 > i2 ? i1 - i2 : i2 - i1) <= 1);

  // edges of the slice sit near the separatrix, the middle is regular
  const double edge = std::max(r1.front().value, r1.back().value);
  const double center = r1[10].value;
  CHECK(edge > center + 0.5);
}

TEST_CASE("escapes paint the sentinel value") {
  const auto recs = halo::fli_grid(quad_flow(), 0.02, -0.1, 0.1, 3, 0.0, 0.0, 1,
                                   100.0, {1, 0, 0, 0}, 0.05);
  REQUIRE(recs.size() == 3);
  for (const auto& r : recs) {
    CHECK(r.escaped);
    CHECK(r.value == halo::fli_escape_sentinel);
  }
}

TEST_CASE("indicator input validation") {
  CHECK_THROWS_AS(halo::fli(quad_flow(), {0.1, 0.0, 0.0, 0.0}, {0, 0, 0, 0}),
                  halo::DomainError);
  CHECK_THROWS_AS(halo::fli_grid(quad_flow(), 0.02, -0.1, 0.1, 0, 0.0, 0.0, 1),
                  halo::DomainError);
  CHECK_THROWS_AS(halo::fli_grid(quad_flow(), 0.02, -0.1, 0.1, 3, 0.0, 0.0, 0),
                  halo::DomainError);
}
