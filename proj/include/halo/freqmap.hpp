#pragma once

// Averaging-based frequency map on the center manifold.
//
// In harmonic actions y = sqrt(2 Jy) cos ty, py = -sqrt(2 Jy) sin ty (and
// likewise for z), the quartic part of the CM Hamiltonian averages over both
// angles to a quadratic form in the actions,
//   Hbar = om_p Jy + om_v Jz + kyy Jy^2 + kyz Jy Jz + kzz Jz^2,
// using <cos^{2a} sin^{2b}> = (2a-1)!!(2b-1)!!/(2a+2b)!!; the cubic part has
// zero angular average. Frequencies are the action gradients of Hbar.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "halo/cmflow.hpp"
#include "halo/series.hpp"

namespace halo {

namespace detail {

inline double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

// angular average of cos^a sin^b over one period
inline double trig_average(int a, int b) {
  if (a % 2 || b % 2) return 0.0;
  return double_factorial(a - 1) * double_factorial(b - 1) / double_factorial(a + b);
}

}  // namespace detail

struct AveragedModel {
  double omp = 0.0;
  double omv = 0.0;
  double kyy = 0.0;
  double kyz = 0.0;
  double kzz = 0.0;

  double omega_y(double Jy, double Jz) const { return omp + 2.0 * kyy * Jy + kyz * Jz; }
  double omega_z(double Jy, double Jz) const { return omv + kyz * Jy + 2.0 * kzz * Jz; }
};

inline AveragedModel average_quartic(const Series4& cm) {
  AveragedModel m;
  const Series4 quad = cm.degree_part(2);
  const Series4 quartic = cm.degree_part(4);
  for (const auto& t : quad.terms()) {
    // only y^2, py^2, z^2, pz^2 survive the average
    if (t.k[0] == 2)
      m.omp += t.c;
    else if (t.k[2] == 2)
      m.omp += t.c;
    else if (t.k[1] == 2)
      m.omv += t.c;
    else if (t.k[3] == 2)
      m.omv += t.c;
  }
  for (const auto& t : quartic.terms()) {
    const int ay = t.k[0], az = t.k[1], by = t.k[2], bz = t.k[3];
    const double avg = detail::trig_average(ay, by) * detail::trig_average(az, bz);
    if (avg == 0.0) continue;
    const int py_pow = (ay + by) / 2;  // power of (2 Jy)
    const int pz_pow = (az + bz) / 2;
    const double w = t.c * avg * std::pow(2.0, py_pow + pz_pow);
    if (py_pow == 2)
      m.kyy += w;
    else if (pz_pow == 2)
      m.kzz += w;
    else
      m.kyz += w;
  }
  return m;
}

// Jz on the averaged shell Hbar(Jy, Jz) = h; empty when the shell is not
// reachable or the action comes out negative
inline std::optional<double> shell_action(const AveragedModel& m, double h, double Jy) {
  const double A = m.kzz;
  const double B = m.omv + m.kyz * Jy;
  const double C = m.omp * Jy + m.kyy * Jy * Jy - h;
  const double linear = -C / B;  // kzz -> 0 limit
  if (std::abs(A) < 1e-14) {
    if (linear < 0.0) return std::nullopt;
    return linear;
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double r1 = (-B + sq) / (2.0 * A);
  const double r2 = (-B - sq) / (2.0 * A);
  const double root = (std::abs(r1 - linear) <= std::abs(r2 - linear)) ? r1 : r2;
  if (root < 0.0) return std::nullopt;
  return root;
}

struct FreqRow {
  double Jy = 0.0;
  double omega_y = 0.0;
  double omega_z = 0.0;
  double omega_r = 0.0;
};

// scan over y0 at fixed energy with z = 0 and p_y = py0
inline std::vector<FreqRow> frequency_map(const Series4& cm, double h, double y_lo,
                                          double y_hi, int n, double py0 = 0.0) {
  if (n < 2) throw DomainError("frequency map needs at least two scan points");
  const AveragedModel m = average_quartic(cm);
  std::vector<FreqRow> rows;
  for (int i = 0; i < n; ++i) {
    const double y0 = y_lo + (y_hi - y_lo) * i / (n - 1);
    const double Jy = 0.5 * (y0 * y0 + py0 * py0);
    const auto Jz = shell_action(m, h, Jy);
    if (!Jz) continue;
    FreqRow r;
    r.Jy = Jy;
    r.omega_y = m.omega_y(Jy, *Jz);
    r.omega_z = m.omega_z(Jy, *Jz);
    if (r.omega_z == 0.0) continue;
    r.omega_r = std::abs(r.omega_y / r.omega_z);
    rows.push_back(r);
  }
  return rows;
}

// dominant frequency of a uniformly sampled signal: coarse maximization of
// the Hann-windowed spectral amplitude followed by golden-section refinement
inline double dominant_frequency(const std::vector<double>& s, double dt, double w_lo,
                                 double w_hi) {
  const std::size_t n = s.size();
  if (n < 16) throw DomainError("spectral estimate needs more samples");

  std::vector<double> win(n);
  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = std::numbers::pi * static_cast<double>(k) / (n - 1);
    win[k] = std::sin(u) * std::sin(u);
  }

  auto amp = [&](double w) {
    std::complex<double> acc(0.0, 0.0);
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, -w * dt));
    std::complex<double> ph(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      acc += win[k] * (s[k] - mean) * ph;
      ph *= rot;
    }
    return std::abs(acc);
  };

  const double T = dt * static_cast<double>(n);
  const double dw = 2.0 * std::numbers::pi / T;  // Fourier bin
  double best_w = w_lo, best_a = -1.0;
  for (double w = w_lo; w <= w_hi; w += 0.25 * dw) {
    const double a = amp(w);
    if (a > best_a) {
      best_a = a;
      best_w = w;
    }
  }
  double lo = best_w - 0.5 * dw, hi = best_w + 0.5 * dw;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = amp(x1), f2 = amp(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = amp(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = amp(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace halo
