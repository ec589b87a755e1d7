#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "halo/cmflow.hpp"
#include "halo/params.hpp"
#include "halo/pipeline.hpp"
#include "halo/sections.hpp"

using halo::CMFlow;
using halo::integrate_cm;
using halo::Series4;
using halo::Vec;

namespace {

constexpr double pi = std::numbers::pi;

const Series4& sv2_cm() {
  static const Series4 cm = [] {
    const auto p = halo::load_case("sun-vesta");
    return halo::run_pipeline(p, 1, 6).cm.CM;
  }();
  return cm;
}

const CMFlow& sv2_flow() {
  static const CMFlow flow{sv2_cm()};
  return flow;
}

Series4 quadratic_cm(double omp, double omv) {
  Series4 H;
  H.add_term({2, 0, 0, 0}, 0.5 * omp);
  H.add_term({0, 0, 2, 0}, 0.5 * omp);
  H.add_term({0, 2, 0, 0}, 0.5 * omv);
  H.add_term({0, 0, 0, 2}, 0.5 * omv);
  return H;
}

}  // namespace

TEST_CASE("gradient and hessian agree with finite differences") {
  const CMFlow& flow = sv2_flow();
  const Vec<4> x{0.05, 0.03, -0.02, 0.04};
  const double eps = 1e-5;

  const Vec<4> g = flow.gradient(x);
  for (int i = 0; i < 4; ++i) {
    Vec<4> xp = x, xm = x;
    xp[i] += eps;
    xm[i] -= eps;
    const double fd = (flow.energy(xp) - flow.energy(xm)) / (2.0 * eps);
    CHECK(std::abs(g[i] - fd) <= 1e-6);
  }

  const auto M = flow.hessian(x);
  for (int i = 0; i < 4; ++i) {
    Vec<4> xp = x, xm = x;
    xp[i] += eps;
    xm[i] -= eps;
    const Vec<4> gp = flow.gradient(xp);
    const Vec<4> gm = flow.gradient(xm);
    for (int j = 0; j < 4; ++j) {
      const double fd = (gp[j] - gm[j]) / (2.0 * eps);
      CHECK(std::abs(M[j][i] - fd) <= 1e-6);
    }
  }
}

TEST_CASE("vector field wires the symplectic gradient") {
  const CMFlow& flow = sv2_flow();
  const Vec<4> x{0.08, -0.02, 0.05, 0.01};
  const Vec<4> g = flow.gradient(x);
  const Vec<4> f = flow.field(x);
  CHECK(f[0] == g[2]);
  CHECK(f[1] == g[3]);
  CHECK(f[2] == -g[0]);
  CHECK(f[3] == -g[1]);
}

TEST_CASE("tangent dynamics linearize the field") {
  const CMFlow& flow = sv2_flow();
  const Vec<4> x{0.04, 0.02, -0.03, 0.05};
  const Vec<4> v{0.3, -0.2, 0.1, 0.4};

  Vec<8> s{};
  for (int i = 0; i < 4; ++i) {
    s[i] = x[i];
    s[4 + i] = v[i];
  }
  const Vec<8> out = flow.field_with_tangent(s);

  const double eps = 1e-6;
  Vec<4> xp = x, xm = x;
  for (int i = 0; i < 4; ++i) {
    xp[i] += eps * v[i];
    xm[i] -= eps * v[i];
  }
  const Vec<4> fp = flow.field(xp);
  const Vec<4> fm = flow.field(xm);
  for (int i = 0; i < 4; ++i) {
    CHECK(out[i] == flow.field(x)[i]);
    CHECK(std::abs(out[4 + i] - (fp[i] - fm[i]) / (2.0 * eps)) <= 1e-6);
  }

  // the matrix variant applied to identity columns reproduces single tangents
  Vec<20> s20{};
  for (int i = 0; i < 4; ++i) s20[i] = x[i];
  for (int col = 0; col < 4; ++col) s20[4 + 5 * col] = 1.0;
  const Vec<20> m20 = flow.field_with_matrix(s20);
  for (int col = 0; col < 4; ++col) {
    Vec<8> sc{};
    for (int i = 0; i < 4; ++i) sc[i] = x[i];
    sc[4 + col] = 1.0;
    const Vec<8> oc = flow.field_with_tangent(sc);
    for (int i = 0; i < 4; ++i) CHECK(m20[4 + 4 * col + i] == oc[4 + i]);
  }
}

TEST_CASE("planar subsystem carries the vertical variational block") {
  const CMFlow& flow = sv2_flow();
  const double y = 0.1, py = -0.05;
  const Vec<4> x{y, 0.0, py, 0.0};
  const auto M = flow.hessian(x);
  const Vec<4> f = flow.field(x);

  const Vec<6> s{y, py, 1.0, 0.0, 0.0, 1.0};  // V = identity, column-major
  const Vec<6> out = flow.planar_field_with_vertical_block(s);
  CHECK(out[0] == f[0]);
  CHECK(out[1] == f[2]);
  CHECK(out[2] == M[3][1]);
  CHECK(out[3] == -M[1][1]);
  CHECK(out[4] == M[3][3]);
  CHECK(out[5] == -M[1][3]);

  CHECK(flow.planar_energy(y, py) == flow.energy(x));
}

TEST_CASE("integration tolerance gate") {
  const CMFlow& flow = sv2_flow();
  const Vec<4> x0{0.01, 0.0, 0.0, 0.01};
  CHECK_THROWS_AS(integrate_cm(flow, x0, 1.0, 1e-15), halo::DomainError);
  CHECK_THROWS_AS(integrate_cm(flow, x0, 1.0, 1e-7), halo::DomainError);
}

TEST_CASE("energy is conserved along a lifted section seed") {
  const CMFlow& flow = sv2_flow();
  const double h = 0.1;
  const double yb = halo::section_boundary_y(flow, h);
  const auto pz = halo::solve_pz(flow, h, 0.5 * yb, 0.0);
  REQUIRE(pz.has_value());
  const Vec<4> x0{0.5 * yb, 0.0, 0.0, *pz};

  const auto traj = integrate_cm(flow, x0, 200.0, 1e-12, 0.5);
  CHECK_FALSE(traj.escaped);
  CHECK(traj.t_final == 200.0);
  CHECK(traj.energy_drift <= 1e-10);
  CHECK(std::abs(flow.energy(x0) - h) <= 1e-13);
}

TEST_CASE("the flow is reversible") {
  const CMFlow& flow = sv2_flow();
  const auto pz = halo::solve_pz(flow, 0.05, 0.1, 0.02);
  REQUIRE(pz.has_value());
  const Vec<4> x0{0.1, 0.0, 0.02, *pz};

  const auto fwd = integrate_cm(flow, x0, 50.0);
  const auto bwd = integrate_cm(flow, fwd.final, -50.0);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(bwd.final[i] - x0[i]) <= 1e-8);
}

TEST_CASE("the planar subspace is invariant") {
  const CMFlow& flow = sv2_flow();
  const Vec<4> x0{0.2, 0.0, 0.05, 0.0};
  const auto traj = integrate_cm(flow, x0, 50.0, 1e-12, 1.0);
  CHECK(std::abs(traj.final[1]) <= 1e-12);
  CHECK(std::abs(traj.final[3]) <= 1e-12);
  for (const auto& xs : traj.x) {
    CHECK(std::abs(xs[1]) <= 1e-12);
    CHECK(std::abs(xs[3]) <= 1e-12);
  }
}

TEST_CASE("quadratic flow rotates at the linear frequencies") {
  const double omp = 1.1, omv = 0.9;
  const CMFlow flow{quadratic_cm(omp, omv)};
  const Vec<4> x0{0.1, 0.0, 0.0, 0.0};

  const double t1 = 1.3;
  const auto mid = integrate_cm(flow, x0, t1);
  CHECK(std::abs(mid.final[0] - 0.1 * std::cos(omp * t1)) <= 1e-11);
  CHECK(std::abs(mid.final[2] + 0.1 * std::sin(omp * t1)) <= 1e-11);

  const auto ret = integrate_cm(flow, x0, 2.0 * pi / omp);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ret.final[i] - x0[i]) <= 1e-10);
}

TEST_CASE("escape radius halts integration") {
  const CMFlow flow{quadratic_cm(1.1, 0.9)};
  const Vec<4> x0{1.0, 0.0, 0.0, 0.0};
  const auto traj = integrate_cm(flow, x0, 10.0, 1e-12, 0.0, 0.5);
  CHECK(traj.escaped);
  CHECK(traj.t_final < 10.0);
}

TEST_CASE("uniform sampling covers the requested span") {
  const CMFlow flow{quadratic_cm(1.1, 0.9)};
  const Vec<4> x0{0.1, 0.05, 0.0, 0.0};

  const auto traj = integrate_cm(flow, x0, 10.0, 1e-12, 1.0);
  REQUIRE(traj.t.size() == 11);
  REQUIRE(traj.x.size() == 11);
  CHECK(traj.t.front() == 0.0);
  CHECK(traj.t.back() == 10.0);
  CHECK(traj.t_final == 10.0);

  const auto back = integrate_cm(flow, x0, -10.0, 1e-12, 1.0);
  CHECK(back.t_final == -10.0);
  REQUIRE(back.t.size() == 11);
  CHECK(back.t.back() == -10.0);
}
