#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "halo/cmflow.hpp"
#include "halo/freqmap.hpp"
#include "halo/params.hpp"
#include "halo/pipeline.hpp"
#include "halo/sections.hpp"

#include "helpers.hpp"

using halo::AveragedModel;
using halo::Series4;
using halo::Vec;

namespace {

const halo::PipelineResult& sv2() {
  static const halo::PipelineResult pr = [] {
    const auto p = halo::load_case("sun-vesta");
    return halo::run_pipeline(p, 1, 4);
  }();
  return pr;
}

// spectral frequencies of the y and z oscillations seeded at (y0, 0) on the
// section at energy h
struct SpectralPair {
  double omega_y;
  double omega_z;
};

SpectralPair spectral(const halo::CMFlow& flow, double h, double y0, double omp,
                      double omv) {
  const auto pz = halo::solve_pz(flow, h, y0, 0.0);
  REQUIRE(pz.has_value());
  const double dt = 0.05;
  const auto traj = halo::integrate_cm(flow, {y0, 0.0, 0.0, *pz}, 400.0, 1e-12, dt);
  std::vector<double> sy, sz;
  sy.reserve(traj.x.size());
  sz.reserve(traj.x.size());
  for (const auto& x : traj.x) {
    sy.push_back(x[0]);
    sz.push_back(x[1]);
  }
  return {halo::dominant_frequency(sy, dt, 0.7 * omp, 1.4 * omp),
          halo::dominant_frequency(sz, dt, 0.7 * omv, 1.4 * omv)};
}

}  // namespace

TEST_CASE("angular averages of trig monomials") {
  using halo::detail::trig_average;
  CHECK(trig_average(0, 0) == 1.0);
  CHECK(trig_average(2, 0) == 0.5);
  CHECK(trig_average(0, 2) == 0.5);
  CHECK(trig_average(4, 0) == 0.375);
  CHECK(trig_average(2, 2) == 0.125);
  CHECK(trig_average(1, 0) == 0.0);
  CHECK(trig_average(0, 3) == 0.0);
  CHECK(trig_average(3, 3) == 0.0);
}

TEST_CASE("quartic terms average to action couplings") {
  Series4 cm;
  cm.add_term({2, 0, 0, 0}, 0.55);
  cm.add_term({0, 0, 2, 0}, 0.55);
  cm.add_term({0, 2, 0, 0}, 0.45);
  cm.add_term({0, 0, 0, 2}, 0.45);
  cm.add_term({4, 0, 0, 0}, 1.0);  // y^4   -> 3/2 Jy^2
  cm.add_term({0, 2, 0, 2}, 1.0);  // z^2 pz^2 -> 1/2 Jz^2
  cm.add_term({2, 2, 0, 0}, 1.0);  // y^2 z^2  -> Jy Jz
  cm.add_term({1, 2, 1, 0}, 0.7);  // odd in the y angle: averages out

  const AveragedModel m = halo::average_quartic(cm);
  CHECK(std::abs(m.omp - 1.1) <= 1e-15);
  CHECK(std::abs(m.omv - 0.9) <= 1e-15);
  CHECK(std::abs(m.kyy - 1.5) <= 1e-15);
  CHECK(std::abs(m.kzz - 0.5) <= 1e-15);
  CHECK(std::abs(m.kyz - 1.0) <= 1e-15);
}

TEST_CASE("quadratic model has a flat frequency map") {
  Series4 cm;
  cm.add_term({2, 0, 0, 0}, 0.55);
  cm.add_term({0, 0, 2, 0}, 0.55);
  cm.add_term({0, 2, 0, 0}, 0.45);
  cm.add_term({0, 0, 0, 2}, 0.45);

  const double h = 0.02;
  const double yb = std::sqrt(2.0 * h / 1.1);
  const auto rows = halo::frequency_map(cm, h, 0.0, 0.9 * yb, 7);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) {
    CHECK(std::abs(r.omega_y - 1.1) <= 1e-14);
    CHECK(std::abs(r.omega_z - 0.9) <= 1e-14);
    CHECK(std::abs(r.omega_r - 1.1 / 0.9) <= 1e-13);
  }
}

TEST_CASE("shell action inverts the averaged energy") {
  AveragedModel lin;
  lin.omp = 1.1;
  lin.omv = 0.9;
  const double h = 0.05, Jy = 0.02;
  const auto Jz = halo::shell_action(lin, h, Jy);
  REQUIRE(Jz.has_value());
  CHECK(std::abs(*Jz - (h - lin.omp * Jy) / lin.omv) <= 1e-15);
  CHECK_FALSE(halo::shell_action(lin, 0.01, 0.02).has_value());

  AveragedModel full = lin;
  full.kyy = 0.3;
  full.kyz = -0.2;
  full.kzz = 0.5;
  const auto Jq = halo::shell_action(full, h, Jy);
  REQUIRE(Jq.has_value());
  const double hbar = full.omp * Jy + full.omv * *Jq + full.kyy * Jy * Jy +
                      full.kyz * Jy * *Jq + full.kzz * *Jq * *Jq;
  CHECK(std::abs(hbar - h) <= 1e-12);
}

TEST_CASE("pure tone frequency recovery") {
  const double w = 1.234, dt = 0.05;
  std::vector<double> s(2000);
  for (std::size_t k = 0; k < s.size(); ++k)
    s[k] = std::cos(w * dt * static_cast<double>(k) + 0.3);
  CHECK(std::abs(halo::dominant_frequency(s, dt, 1.0, 1.5) - w) <= 1e-6);
}

TEST_CASE("averaged frequencies track the spectral ones at small amplitude") {
  const auto& pr = sv2();
  const halo::CMFlow flow{pr.cm.CM};
  const AveragedModel m = halo::average_quartic(pr.cm.CM);

  const double h = 0.01;
  const double yb = halo::section_boundary_y(flow, h);
  const double y0 = 0.3 * yb;
  const auto sp = spectral(flow, h, y0, pr.lin.om1, pr.lin.om2);

  const double Jy = 0.5 * y0 * y0;
  const auto Jz = halo::shell_action(m, h, Jy);
  REQUIRE(Jz.has_value());
  CHECK(testutil::rel_err(m.omega_y(Jy, *Jz), sp.omega_y) <= 1e-3);
  CHECK(testutil::rel_err(m.omega_z(Jy, *Jz), sp.omega_z) <= 1e-3);
}

TEST_CASE("frequency ratio dips below unity past the halo energy") {
  const auto& pr = sv2();
  const halo::CMFlow flow{pr.cm.CM};

  const double fractions[] = {0.5, 0.9, 0.96, 0.98};

  double min_low = 1e9;
  const double yb_low = halo::section_boundary_y(flow, 0.04);
  for (double f : fractions) {
    const auto sp = spectral(flow, 0.04, f * yb_low, pr.lin.om1, pr.lin.om2);
    min_low = std::min(min_low, sp.omega_y / sp.omega_z);
  }
  CHECK(min_low > 1.0);

  double min_high = 1e9;
  const double yb_high = halo::section_boundary_y(flow, 0.05);
  for (double f : fractions) {
    const auto sp = spectral(flow, 0.05, f * yb_high, pr.lin.om1, pr.lin.om2);
    min_high = std::min(min_high, sp.omega_y / sp.omega_z);
  }
  CHECK(min_high < 1.0);
}

TEST_CASE("frequency tooling rejects degenerate input") {
  Series4 cm;
  cm.add_term({2, 0, 0, 0}, 0.5);
  CHECK_THROWS_AS(halo::frequency_map(cm, 0.01, 0.0, 0.1, 1), halo::DomainError);
  CHECK_THROWS_AS(halo::dominant_frequency(std::vector<double>(8, 1.0), 0.1, 0.5, 2.0),
                  halo::DomainError);
}
