#pragma once

// Numerical bifurcation oracle.
//
// Planar mode: the planar Lyapunov orbit at energy h is the 1-DOF contour
// through (y, py) = (0, py0(h)); its out-of-plane stability is the half-trace
// of the vertical 2x2 monodromy block over one full period. Halo orbits
// appear where the index crosses +1.
//
// Vertical mode: the vertical Lyapunov orbit is the fixed point of the rising
// z = 0 return map; its index is (tr M - 2)/2 from the full 4x4 monodromy,
// which discards the trivial unit pair tangent to the orbit and the energy
// level.

#include <cmath>
#include <functional>
#include <vector>

#include "halo/cmflow.hpp"
#include "halo/ode.hpp"
#include "halo/sections.hpp"

namespace halo {

// half-trace of the vertical variational block over one planar period
inline double planar_vertical_index(const CMFlow& flow, double h, double tol = 1e-12) {
  const double py0 = solve_py(flow, h);
  Vec<6> s0{0.0, py0, 1.0, 0.0, 0.0, 1.0};
  if (flow.gradient({0.0, 0.0, py0, 0.0})[2] <= 0.0)
    throw NumericalError("planar orbit does not launch in the rising direction");
  Event<6> ev;
  ev.g = [](double, const Vec<6>& s) { return s[0]; };
  ev.direction = 1;
  ev.terminal = true;
  ev.t_min = 1.0;
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;
  auto rhs = [&flow](double, const Vec<6>& s) {
    return flow.planar_field_with_vertical_block(s);
  };
  auto res = integrate<6>(rhs, 0.0, s0, 500.0, opt, {ev});
  if (!res.terminated) throw NumericalError("planar orbit did not close");
  return 0.5 * (res.y[2] + res.y[5]);
}

struct VerticalIndexResult {
  double index = 0.0;
  FixedPoint fp;
};

// stability index of the out-of-plane periodic orbit at energy h; the fixed
// point found at one energy seeds the next call through (y_init, py_init)
inline VerticalIndexResult vertical_orbit_index(const CMFlow& flow, double h,
                                                double y_init = 0.0, double py_init = 0.0,
                                                double tol = 1e-12) {
  VerticalIndexResult out;
  out.fp = section_fixed_point(flow, h, y_init, py_init, 1e-11, 1e-7, 60, tol);
  auto pz = solve_pz(flow, h, out.fp.y, out.fp.py);
  if (!pz) throw NumericalError("fixed point fell outside the section boundary");
  Vec<20> s0{};
  s0[0] = out.fp.y;
  s0[1] = 0.0;
  s0[2] = out.fp.py;
  s0[3] = *pz;
  for (int i = 0; i < 4; ++i) s0[4 + 5 * i] = 1.0;
  Event<20> ev;
  ev.g = [](double, const Vec<20>& s) { return s[1]; };
  ev.direction = 1;
  ev.terminal = true;
  ev.t_min = 1.0;
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;
  auto rhs = [&flow](double, const Vec<20>& s) { return flow.field_with_matrix(s); };
  auto res = integrate<20>(rhs, 0.0, s0, 500.0, opt, {ev});
  if (!res.terminated) throw NumericalError("out-of-plane orbit did not close");
  const double tr = res.y[4] + res.y[9] + res.y[14] + res.y[19];
  out.index = 0.5 * (tr - 2.0);
  return out;
}

struct IndexCrossing {
  double h = 0.0;    // bisected crossing energy
  int level = 0;     // +1 or -1
  bool rising = false;  // index moves upward through the level
};

// locate level crossings (+1 and -1) of a scalar index over [h_lo, h_hi]
inline std::vector<IndexCrossing> scan_index_crossings(
    const std::function<double(double)>& index, double h_lo, double h_hi, double step,
    double bisect_tol = 1e-5) {
  std::vector<IndexCrossing> out;
  if (!(h_hi > h_lo) || !(step > 0.0)) throw DomainError("bad scan range");
  double ha = h_lo;
  double ia = index(ha);
  for (double hb = h_lo + step; ha < h_hi; hb = std::min(hb + step, h_hi)) {
    hb = std::min(hb, h_hi);
    const double ib = index(hb);
    for (int level : {+1, -1}) {
      const double fa = ia - level;
      const double fb = ib - level;
      if (fa == 0.0 || fa * fb >= 0.0) continue;
      double lo = ha, hi = hb, flo = fa;
      while (hi - lo > bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = index(mid) - level;
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      IndexCrossing c;
      c.h = 0.5 * (lo + hi);
      c.level = level;
      c.rising = fb > fa;
      out.push_back(c);
    }
    ha = hb;
    ia = ib;
    if (hb >= h_hi) break;
  }
  return out;
}

inline std::vector<IndexCrossing> planar_bifurcation_scan(const CMFlow& flow, double h_lo,
                                                          double h_hi, double step,
                                                          double bisect_tol = 1e-5,
                                                          double tol = 1e-12) {
  return scan_index_crossings(
      [&](double h) { return planar_vertical_index(flow, h, tol); }, h_lo, h_hi, step,
      bisect_tol);
}

inline std::vector<IndexCrossing> vertical_bifurcation_scan(const CMFlow& flow,
                                                            double h_lo, double h_hi,
                                                            double step,
                                                            double bisect_tol = 1e-5,
                                                            double tol = 1e-12) {
  // warm-start the fixed point along the family
  double y = 0.0, py = 0.0;
  auto index = [&](double h) {
    auto r = vertical_orbit_index(flow, h, y, py, tol);
    y = r.fp.y;
    py = r.fp.py;
    return r.index;
  };
  return scan_index_crossings(index, h_lo, h_hi, step, bisect_tol);
}

}  // namespace halo
