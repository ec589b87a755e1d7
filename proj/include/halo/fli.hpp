#pragma once

// Fast Lyapunov Indicator on the center manifold:
//   FLI(x0, v0, T) = sup_{0 < t <= T} log ||eta(t)||
// with eta the tangent flow of v0 along the orbit of x0. The supremum is
// taken over accepted integration steps, which is exact at the printed
// precision because ||eta|| grows monotonically on hyperbolic stretches and
// oscillates slowly elsewhere. Orbits leaving the escape radius are flagged;
// grid writers substitute the sentinel below so escapes paint as ridges.

#include <cmath>
#include <vector>

#include "halo/cmflow.hpp"
#include "halo/ode.hpp"
#include "halo/sections.hpp"

namespace halo {

inline constexpr double fli_escape_sentinel = 50.0;

struct FLIResult {
  double value = 0.0;
  bool escaped = false;
  double t_final = 0.0;
};

template <class Field>
inline FLIResult fli_generic(Field&& field, const Vec<8>& s0, double T,
                             double escape_radius, double tol) {
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;
  Dop853<8, Field> stepper(static_cast<Field&&>(field), 0.0, s0, T, opt);
  FLIResult out;
  const double r2 = escape_radius * escape_radius;
  auto tangent_log = [](const Vec<8>& s) {
    return 0.5 * std::log(s[4] * s[4] + s[5] * s[5] + s[6] * s[6] + s[7] * s[7]);
  };
  while (!stepper.finished()) {
    stepper.step();
    const Vec<8>& s = stepper.y();
    out.value = std::max(out.value, tangent_log(s));
    const double rad2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3];
    if (rad2 > r2) {
      out.escaped = true;
      out.t_final = stepper.t();
      return out;
    }
  }
  out.t_final = stepper.t();
  return out;
}

inline FLIResult fli(const CMFlow& flow, const Vec<4>& x0, const Vec<4>& v0 = {1, 0, 0, 0},
                     double T = 100.0, double escape_radius = 10.0, double tol = 1e-12) {
  if (v0[0] == 0.0 && v0[1] == 0.0 && v0[2] == 0.0 && v0[3] == 0.0)
    throw DomainError("tangent vector must be nonzero");
  Vec<8> s0{x0[0], x0[1], x0[2], x0[3], v0[0], v0[1], v0[2], v0[3]};
  auto rhs = [&flow](double, const Vec<8>& s) { return flow.field_with_tangent(s); };
  return fli_generic(rhs, s0, T, escape_radius, tol);
}

struct FLIRecord {
  double y = 0.0;
  double py = 0.0;
  double value = 0.0;
  bool escaped = false;
};

// grid over the z = 0, pz > 0 section at energy h; off-shell points skipped
inline std::vector<FLIRecord> fli_grid(const CMFlow& flow, double h, double y_lo,
                                       double y_hi, int ny, double py_lo, double py_hi,
                                       int npy, double T = 100.0,
                                       const Vec<4>& tangent = {1, 0, 0, 0},
                                       double escape_radius = 10.0, double tol = 1e-12) {
  if (ny < 1 || npy < 1) throw DomainError("grid must have at least one point per axis");
  std::vector<FLIRecord> out;
  for (int i = 0; i < ny; ++i) {
    const double y = (ny == 1) ? y_lo : y_lo + (y_hi - y_lo) * i / (ny - 1);
    for (int j = 0; j < npy; ++j) {
      const double py = (npy == 1) ? py_lo : py_lo + (py_hi - py_lo) * j / (npy - 1);
      auto pz = solve_pz(flow, h, y, py);
      if (!pz) continue;
      const FLIResult r = fli(flow, {y, 0.0, py, *pz}, tangent, T, escape_radius, tol);
      FLIRecord rec;
      rec.y = y;
      rec.py = py;
      rec.value = r.escaped ? fli_escape_sentinel : r.value;
      rec.escaped = r.escaped;
      out.push_back(rec);
    }
  }
  return out;
}

}  // namespace halo
