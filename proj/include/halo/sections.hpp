#pragma once

// Surfaces of section for the center-manifold flow.
//
// The working section is z = 0 with rising crossings (zdot > 0). A point
// (y, py) on the section at energy h lifts to phase space through the
// positive momentum root pz of H(y, 0, py, pz) = h; the boundary of the
// admissible region is pz = 0, which is the trace of the planar Lyapunov
// orbit.

#include <cmath>
#include <optional>
#include <vector>

#include "halo/cmflow.hpp"
#include "halo/ode.hpp"

namespace halo {

// positive root of H(y, 0, py, pz) = h in pz; empty when the point lies
// outside the section boundary
inline std::optional<double> solve_pz(const CMFlow& flow, double h, double y, double py,
                                      double residual_tol = 1e-13) {
  auto g = [&](double pz) { return flow.energy({y, 0.0, py, pz}) - h; };
  if (g(0.0) > 0.0) return std::nullopt;

  double lo = 0.0, hi = std::sqrt(2.0 * std::max(h, 1e-12));
  int guard = 0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 60) throw NumericalError("no vertical momentum root below the escape scale");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  double pz = 0.5 * (lo + hi);
  // Newton polish against the residual tolerance
  for (int it = 0; it < 8; ++it) {
    const double r = g(pz);
    if (std::abs(r) <= residual_tol) return pz;
    const double d = flow.gradient({y, 0.0, py, pz})[3];
    if (d == 0.0) break;
    pz -= r / d;
  }
  if (std::abs(g(pz)) > residual_tol)
    throw NumericalError("vertical momentum root did not reach the residual tolerance");
  return pz;
}

// positive root of H(0, 0, py, 0) = h: launch momentum of the planar orbit
inline double solve_py(const CMFlow& flow, double h, double residual_tol = 1e-13) {
  auto g = [&](double py) { return flow.planar_energy(0.0, py) - h; };
  double lo = 0.0, hi = std::sqrt(2.0 * std::max(h, 1e-12));
  int guard = 0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 60) throw NumericalError("no planar momentum root below the escape scale");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  double py = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double r = g(py);
    if (std::abs(r) <= residual_tol) return py;
    const double d = flow.gradient({0.0, 0.0, py, 0.0})[2];
    if (d == 0.0) break;
    py -= r / d;
  }
  if (std::abs(g(py)) > residual_tol)
    throw NumericalError("planar momentum root did not reach the residual tolerance");
  return py;
}

// positive root of H(y, 0, 0, 0) = h: y-extent of the section at py = 0
inline double section_boundary_y(const CMFlow& flow, double h,
                                 double residual_tol = 1e-13) {
  auto g = [&](double y) { return flow.planar_energy(y, 0.0) - h; };
  double lo = 0.0, hi = std::sqrt(2.0 * std::max(h, 1e-12));
  int guard = 0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 60) throw NumericalError("section boundary escapes");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double y = 0.5 * (lo + hi);
  if (std::abs(g(y)) > 1e4 * residual_tol)
    throw NumericalError("section boundary root did not converge");
  return y;
}

struct SectionPoint {
  double t = 0.0;
  double y = 0.0;
  double py = 0.0;
};

struct SectionOrbit {
  std::vector<SectionPoint> points;
  bool escaped = false;  // left the escape radius before collecting all crossings
};

// crossings of z = 0 with zdot > 0, starting from the lifted point (y0, py0)
inline SectionOrbit poincare_crossings(const CMFlow& flow, double h, double y0,
                                       double py0, int n_crossings,
                                       double t_max = 5000.0, double tol = 1e-12,
                                       double escape_radius = 10.0) {
  auto pz0 = solve_pz(flow, h, y0, py0);
  if (!pz0) throw DomainError("seed lies outside the section boundary");
  Vec<4> x0{y0, 0.0, py0, *pz0};

  SectionOrbit orbit;
  const double r2 = escape_radius * escape_radius;
  Event<4> cross;
  cross.g = [](double, const Vec<4>& x) { return x[1]; };
  cross.direction = 1;
  cross.terminal = false;
  Event<4> escape;
  escape.g = [r2](double, const Vec<4>& x) {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - r2;
  };
  escape.direction = 1;
  escape.terminal = true;
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;

  auto rhs = [&flow](double, const Vec<4>& x) { return flow.field(x); };
  // integrate in chunks so the non-terminal crossing events can be harvested
  double t = 0.0;
  Vec<4> x = x0;
  while (static_cast<int>(orbit.points.size()) < n_crossings && t < t_max) {
    const double t_next = std::min(t + 50.0, t_max);
    Event<4> e = cross;
    e.t_min = t + 1e-9;
    auto res = integrate<4>(rhs, t, x, t_next, opt, {e, escape});
    for (const auto& hit : res.events) {
      if (hit.index != 0) continue;
      if (static_cast<int>(orbit.points.size()) >= n_crossings) break;
      orbit.points.push_back({hit.t, hit.y[0], hit.y[2]});
    }
    if (res.terminated) {
      orbit.escaped = true;
      break;
    }
    t = res.t;
    x = res.y;
  }
  return orbit;
}

struct ReturnResult {
  double y = 0.0;
  double py = 0.0;
  double t = 0.0;  // return time
};

// first rising z = 0 crossing after t_min, mapping (y, py) to itself
inline ReturnResult return_map(const CMFlow& flow, double h, double y, double py,
                               double t_min = 1.0, double tol = 1e-12) {
  auto pz = solve_pz(flow, h, y, py);
  if (!pz) throw DomainError("point lies outside the section boundary");
  Vec<4> x0{y, 0.0, py, *pz};
  Event<4> ev;
  ev.g = [](double, const Vec<4>& x) { return x[1]; };
  ev.direction = 1;
  ev.terminal = true;
  ev.t_min = t_min;
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;
  auto rhs = [&flow](double, const Vec<4>& x) { return flow.field(x); };
  auto res = integrate<4>(rhs, 0.0, x0, 500.0, opt, {ev});
  if (!res.terminated) throw NumericalError("return map: no section crossing found");
  return {res.y[0], res.y[2], res.t};
}

struct FixedPoint {
  double y = 0.0;
  double py = 0.0;
  double period = 0.0;
  int iterations = 0;
};

// Newton solve of the return-map fixed point; the out-of-plane periodic orbit
// crosses the section once per period
inline FixedPoint section_fixed_point(const CMFlow& flow, double h, double y_init = 0.0,
                                      double py_init = 0.0, double newton_tol = 1e-11,
                                      double fd_step = 1e-7, int max_iter = 60,
                                      double tol = 1e-12) {
  double y = y_init, py = py_init;
  FixedPoint fp;
  for (int it = 0; it < max_iter; ++it) {
    const ReturnResult r0 = return_map(flow, h, y, py, 1.0, tol);
    const double fy = r0.y - y;
    const double fp_ = r0.py - py;
    fp.period = r0.t;
    fp.iterations = it + 1;
    if (std::abs(fy) < newton_tol && std::abs(fp_) < newton_tol) {
      fp.y = y;
      fp.py = py;
      return fp;
    }
    const ReturnResult ry = return_map(flow, h, y + fd_step, py, 1.0, tol);
    const ReturnResult rp = return_map(flow, h, y, py + fd_step, 1.0, tol);
    const double j11 = (ry.y - r0.y) / fd_step - 1.0;
    const double j21 = (ry.py - r0.py) / fd_step;
    const double j12 = (rp.y - r0.y) / fd_step;
    const double j22 = (rp.py - r0.py) / fd_step - 1.0;
    const double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-14) throw NumericalError("singular Jacobian in fixed-point solve");
    y -= (j22 * fy - j12 * fp_) / det;
    py -= (-j21 * fy + j11 * fp_) / det;
  }
  throw NumericalError("fixed-point Newton iteration did not converge");
}

}  // namespace halo
