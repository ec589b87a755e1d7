#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "halo/expansion.hpp"
#include "halo/linear.hpp"
#include "halo/params.hpp"
#include "helpers.hpp"

using halo::build_params;
using halo::expand_hamiltonian;
using halo::Expo;
using halo::linearize;
using halo::locate;
using halo::ModelParams;
using halo::Series6;
using testutil::rel_err;

namespace {

struct TermRef {
  Expo<6> k;
  double c;
};

// All terms of the scaled sun-vesta beta=1e-2 L1 Hamiltonian through degree 4,
// recomputed independently and frozen. Variable order (x, y, z, px, py, pz).
const TermRef sv2_terms[] = {
    {{0, 0, 0, 0, 0, 2}, 0.5},
    {{0, 0, 0, 0, 2, 0}, 0.5},
    {{0, 0, 0, 2, 0, 0}, 0.5},
    {{0, 0, 2, 0, 0, 0}, 0.5018137049561031},
    {{0, 1, 0, 1, 0, 0}, 1.000000000000034},
    {{0, 2, 0, 0, 0, 0}, 0.5018137049341085},
    {{1, 0, 0, 0, 1, 0}, -1.000000000000034},
    {{2, 0, 0, 0, 0, 0}, -1.0036274098902116},
    {{1, 0, 2, 0, 0, 0}, 0.00038314572859609263},
    {{1, 2, 0, 0, 0, 0}, 0.0003831456186227851},
    {{3, 0, 0, 0, 0, 0}, -0.0002554304490729592},
    {{0, 0, 4, 0, 0, 0}, -0.0013599569897118377},
    {{0, 2, 2, 0, 0, 0}, -0.0027199139244370217},
    {{0, 4, 0, 0, 0, 0}, -0.001359956934725184},
    {{2, 0, 2, 0, 0, 0}, 0.010879655862708048},
    {{2, 2, 0, 0, 0, 0}, 0.010879655532788125},
    {{4, 0, 0, 0, 0, 0}, -0.0036265518992493625},
};

// Third x-derivative of the on-axis tail of the scaled potential by a
// five-point stencil with two Richardson levels. The constant and linear
// parts of each geometric-series sum are removed algebraically first, so the
// sampled values are O(x^2) and the stencil stays free of cancellation noise.
double axis_x3_oracle(const ModelParams& p, double gamma, double alpha) {
  const double d1 = alpha / gamma;
  const double d2 = (alpha + 1.0) / gamma;
  const double s1 = d1 < 0.0 ? -1.0 : 1.0;
  const double s2 = d2 < 0.0 ? -1.0 : 1.0;
  const double a1 = std::abs(d1);
  const double g3 = gamma * gamma * gamma;
  const double c1 = p.q() * (1.0 - p.mu) / (g3 * a1);
  const double c2 = p.mu / g3;
  const double c3 = p.A * p.mu / (2.0 * g3 * gamma * gamma);

  auto tail = [&](double x) {
    const double r1 = a1 - s1 * x;
    const double r2 = 1.0 - s2 * x;
    const double t1 = c1 * x * x / (a1 * r1);
    const double t2 = c2 * x * x / r2;
    const double t3 = c3 * x * x * (6.0 - 8.0 * s2 * x + 3.0 * x * x) / (r2 * r2 * r2);
    return -(t1 + t2 + t3);
  };
  auto stencil = [&](double h) {
    return (-tail(-2.0 * h) + 2.0 * tail(-h) - 2.0 * tail(h) + tail(2.0 * h)) /
           (2.0 * h * h * h);
  };
  const double d_h = stencil(0.02);
  const double d_h2 = stencil(0.01);
  const double d_h4 = stencil(0.005);
  const double r1 = (4.0 * d_h2 - d_h) / 3.0;
  const double r2 = (4.0 * d_h4 - d_h2) / 3.0;
  const double d3 = (16.0 * r2 - r1) / 15.0;
  return d3 / 6.0;
}

}  // namespace

TEST_CASE("degree-1 terms vanish at the equilibrium") {
  for (const char* name : {"earth-moon", "sun-vesta"}) {
    const ModelParams p = halo::load_case(name);
    const auto pt = locate(p, 1);
    const auto ex = expand_hamiltonian(p, pt.gamma, pt.alpha, 4);
    INFO(name);
    CHECK(ex.gradient_residual <= 1e-10);
    CHECK(ex.H.min_degree() == 2);
  }
}

TEST_CASE("quadratic part matches the stability coefficients") {
  for (const char* name : {"earth-moon", "sun-vesta"}) {
    const ModelParams p = halo::load_case(name);
    for (int j : {1, 2}) {
      const auto pt = locate(p, j);
      const auto lin = linearize(p, j, pt.alpha);
      const auto ex = expand_hamiltonian(p, pt.gamma, pt.alpha, 4);
      INFO(name << " L" << j);
      CHECK(rel_err(ex.H.coeff({2, 0, 0, 0, 0, 0}), lin.a) <= 1e-12);
      CHECK(rel_err(ex.H.coeff({0, 2, 0, 0, 0, 0}), 0.5 * lin.b) <= 1e-12);
      CHECK(rel_err(ex.H.coeff({0, 0, 2, 0, 0, 0}), 0.5 * lin.c) <= 1e-12);
      CHECK(ex.H.coeff({0, 0, 0, 2, 0, 0}) == 0.5);
      CHECK(ex.H.coeff({0, 0, 0, 0, 2, 0}) == 0.5);
      CHECK(ex.H.coeff({0, 0, 0, 0, 0, 2}) == 0.5);
      CHECK(rel_err(ex.H.coeff({0, 1, 0, 1, 0, 0}), p.n()) <= 1e-12);
      CHECK(rel_err(ex.H.coeff({1, 0, 0, 0, 1, 0}), -p.n()) <= 1e-12);
    }
  }
}

TEST_CASE("sun-vesta expansion matches the frozen terms through degree 4") {
  const ModelParams p = halo::load_case("sun-vesta");
  const auto pt = locate(p, 1);
  const auto ex = expand_hamiltonian(p, pt.gamma, pt.alpha, 6);
  const Series6 low = ex.H.degree_range(2, 4);
  REQUIRE(low.size() == std::size(sv2_terms));
  for (const auto& ref : sv2_terms) {
    INFO("exponents " << int(ref.k[0]) << int(ref.k[1]) << int(ref.k[2])
                      << int(ref.k[3]) << int(ref.k[4]) << int(ref.k[5]));
    CHECK(rel_err(low.coeff(ref.k), ref.c) <= 1e-12);
  }
}

TEST_CASE("cubic axis coefficient agrees with a finite-difference oracle") {
  for (const char* name : {"earth-moon", "sun-vesta"}) {
    const ModelParams p = halo::load_case(name);
    const auto pt = locate(p, 1);
    const auto ex = expand_hamiltonian(p, pt.gamma, pt.alpha, 4);
    const double fd = axis_x3_oracle(p, pt.gamma, pt.alpha);
    INFO(name);
    CHECK(rel_err(ex.H.coeff({3, 0, 0, 0, 0, 0}), fd) <= 1e-8);
  }
}

TEST_CASE("truncation order only appends higher degrees") {
  const ModelParams p = halo::load_case("sun-vesta");
  const auto pt = locate(p, 1);
  const auto lo = expand_hamiltonian(p, pt.gamma, pt.alpha, 4);
  const auto hi = expand_hamiltonian(p, pt.gamma, pt.alpha, 8);
  CHECK((hi.H.degree_range(2, 4) - lo.H).max_abs_coeff() <= 1e-15);
  CHECK(hi.H.max_degree() == 8);
  CHECK(hi.stage_max.size() == 9);
  CHECK(hi.stage_max[2] > 0.0);
}

TEST_CASE("expansion rejects points away from the smaller primary") {
  const ModelParams p = halo::load_case("earth-moon");
  const auto pt = locate(p, 3);
  CHECK_THROWS_AS(expand_hamiltonian(p, pt.gamma, pt.alpha, 4),
                  halo::NumericalError);
}
