#pragma once

// First-order bifurcation thresholds in the detuning.
//
// In action-angle variables the quartic resonant normal form reads
//   H = om_v (I2 + I3) + delta I2 + a20 I2^2 + a02 I3^2 + a11 I2 I3
//       + 2 b11 I2 I3 cos(2 theta2 - 2 theta3),
// and the critical points of the reduced system on the sphere I2 + I3 = const
// detach from the axes at specific values of the integral E = om_v (I2 + I3).
// The four detachment values below mark, in order of appearance, the birth of
// the halo (loop) family from the planar orbit, the planar re-stabilization
// (inclined or anti-halo family), and the collapse onto the vertical orbit.
// Energies are reported both as E and as h = E / om_v.

#include <cmath>
#include <numbers>
#include <string>

#include "halo/params.hpp"
#include "halo/resonant.hpp"

namespace halo {

struct Thresholds {
  double E_iy = 0.0;  // inclined family detaching from the planar orbit
  double E_iz = 0.0;  // inclined family reaching the vertical orbit
  double E_ly = 0.0;  // loop (halo) family detaching from the planar orbit
  double E_lz = 0.0;  // loop family reaching the vertical orbit
  double h_iy = 0.0;
  double h_iz = 0.0;
  double h_ly = 0.0;
  double h_lz = 0.0;
};

inline Thresholds thresholds(const ResonantForm& rc) {
  const double num = rc.delta * rc.omv * rc.omv;
  const double d_iy = -rc.a11 + 2.0 * (rc.a20 - rc.b11);
  const double d_iz = -2.0 * rc.a02 + rc.a11 + 2.0 * rc.b11;
  const double d_ly = -rc.a11 + 2.0 * (rc.a20 + rc.b11);
  const double d_lz = -2.0 * rc.a02 - rc.a11 + 2.0 * rc.b11;
  for (double d : {d_iy, d_iz, d_ly, d_lz})
    if (std::abs(d) < 1e-14) throw DomainError("degenerate resonance: vanishing threshold denominator");
  Thresholds t;
  t.E_iy = num / d_iy;
  t.E_iz = num / d_iz;
  t.E_ly = num / d_ly;
  t.E_lz = num / d_lz;
  t.h_iy = t.E_iy / rc.omv;
  t.h_iz = t.E_iz / rc.omv;
  t.h_ly = t.E_ly / rc.omv;
  t.h_lz = t.E_lz / rc.omv;
  return t;
}

enum class FamilyKind { inclined, loop };

// The critical angle psi = theta2 - theta3 of a bifurcating fixed point
// determines its family: in-phase/anti-phase points are inclined (anti-halo),
// quadrature points are loops (halos).
inline FamilyKind family_classification(double psi) {
  constexpr double tol = 1e-9;
  constexpr double pi = std::numbers::pi;
  const double tau = 2.0 * pi;
  double r = std::fmod(psi, tau);
  if (r < 0) r += tau;
  auto near = [&](double v) { return std::abs(r - v) < tol; };
  if (near(0.0) || near(pi) || near(tau)) return FamilyKind::inclined;
  if (near(0.5 * pi) || near(1.5 * pi)) return FamilyKind::loop;
  throw DomainError("psi is not a critical angle");
}

inline std::string family_name(FamilyKind k) {
  return k == FamilyKind::inclined ? "inclined" : "loop";
}

}  // namespace halo
