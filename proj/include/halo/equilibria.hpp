#pragma once

// Collinear equilibria of the SRP + oblateness restricted problem.
//
// The distance gamma_j of the collinear point L_j from the closer primary
// satisfies a generalized Euler septic. Points are labeled so that L1 lies
// between the primaries, L2 beyond the smaller primary, and L3 beyond the
// larger one; in synodic coordinates X = gamma_1 + mu - 1, -gamma_2 + mu - 1,
// gamma_3 + mu respectively.

#include <array>
#include <cmath>
#include <stdexcept>

#include "halo/params.hpp"

namespace halo {

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CollinearPoint {
  int j = 0;          // 1, 2, or 3
  double gamma = 0.0;  // distance from the closer primary
  double alpha = 0.0;  // signed offset used by the expansion around the point
  double X = 0.0;      // synodic abscissa
  double septic_residual = 0.0;  // normalized residual of the defining septic
  double eqx_residual = 0.0;     // residual of the 1-D equilibrium equation
};

// Coefficients c[k] of the septic sum_k c[k] gamma^k = 0 for point j.
inline std::array<double, 8> septic_coefficients(int j, const ModelParams& p) {
  const double mu = p.mu, q = p.q(), A = p.A;
  const double n2 = p.n() * p.n();
  if (j == 1 || j == 2) {
    const double s = (j == 1) ? 1.0 : -1.0;  // upper sign for L1
    return {-s * 3.0 * A * mu,
            6.0 * A * mu,
            -s * (2.0 * mu + 3.0 * A * mu),
            4.0 * mu,
            2.0 * n2 * mu - 2.0 * q * mu - 2.0 * n2 + 2.0 * q - s * 2.0 * mu,
            s * (6.0 * n2 - 4.0 * n2 * mu),
            2.0 * n2 * mu - 6.0 * n2,
            s * 2.0 * n2};
  }
  if (j == 3) {
    return {2.0 * q * mu - 2.0 * q,
            8.0 * q * mu - 8.0 * q,
            2.0 * n2 * mu - 3.0 * A * mu + 12.0 * q * mu - 12.0 * q - 2.0 * mu,
            2.0 * n2 - 8.0 * q - 4.0 * mu + 8.0 * n2 * mu + 8.0 * q * mu,
            8.0 * n2 + 2.0 * q * mu + 12.0 * n2 * mu - 2.0 * q - 2.0 * mu,
            12.0 * n2 + 8.0 * n2 * mu,
            8.0 * n2 + 2.0 * n2 * mu,
            2.0 * n2};
  }
  throw DomainError("collinear point index must be 1, 2, or 3");
}

inline double septic_eval(const std::array<double, 8>& c, double x) {
  double v = 0.0;
  for (int k = 7; k >= 0; --k) v = v * x + c[static_cast<std::size_t>(k)];
  return v;
}

inline double septic_deriv(const std::array<double, 8>& c, double x) {
  double v = 0.0;
  for (int k = 7; k >= 1; --k) v = v * x + k * c[static_cast<std::size_t>(k)];
  return v;
}

// Magnitude scale used to normalize the septic residual.
inline double septic_scale(const std::array<double, 8>& c, double x) {
  double s = 0.0, xk = 1.0;
  for (int k = 0; k <= 7; ++k) {
    s = std::max(s, std::abs(c[static_cast<std::size_t>(k)] * xk));
    xk *= x;
  }
  return s > 0.0 ? s : 1.0;
}

inline std::array<double, 2> gamma_bracket(int j, const ModelParams& p) {
  if (j == 1) return {1e-12, 1.0 - p.mu - 1e-9};
  if (j == 2) return {1e-12, 1.0};
  return {1e-12, 2.0};
}

// Number of sign changes of the septic on a fine grid over the bracket;
// used as a uniqueness probe.
inline int septic_sign_changes(int j, const ModelParams& p, int samples = 20000) {
  const auto c = septic_coefficients(j, p);
  const auto br = gamma_bracket(j, p);
  int changes = 0;
  double prev = septic_eval(c, br[0]);
  for (int i = 1; i <= samples; ++i) {
    const double x = br[0] + (br[1] - br[0]) * static_cast<double>(i) / samples;
    const double v = septic_eval(c, x);
    if (prev * v < 0.0) ++changes;
    if (v != 0.0) prev = v;
  }
  return changes;
}

// Root of the septic in the standard bracket: bisection to a tight interval,
// then Newton polish to 1e-14 relative.
inline double gamma_root(int j, const ModelParams& p) {
  const auto c = septic_coefficients(j, p);
  auto br = gamma_bracket(j, p);
  double a = br[0], b = br[1];
  double fa = septic_eval(c, a), fb = septic_eval(c, b);
  if (fa * fb > 0.0) {
    // scan for a bracketing subinterval
    const int ns = 20000;
    bool found = false;
    double prev_x = a, prev_f = fa;
    for (int i = 1; i <= ns; ++i) {
      const double x = br[0] + (br[1] - br[0]) * static_cast<double>(i) / ns;
      const double f = septic_eval(c, x);
      if (prev_f * f <= 0.0) {
        a = prev_x;
        b = x;
        fa = prev_f;
        found = true;
        break;
      }
      prev_x = x;
      prev_f = f;
    }
    if (!found) throw NumericalError("no bracket for the collinear septic");
  }
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = septic_eval(c, m);
    if (fa * fm <= 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  double g = 0.5 * (a + b);
  for (int it = 0; it < 50; ++it) {
    const double f = septic_eval(c, g);
    const double df = septic_deriv(c, g);
    if (df == 0.0) break;
    const double g2 = g - f / df;
    const bool done = std::abs(g2 - g) < 1e-14 * std::max(1.0, std::abs(g));
    g = g2;
    if (done) break;
  }
  return g;
}

inline double abscissa_of(int j, double gamma, double mu) {
  if (j == 1) return gamma + mu - 1.0;
  if (j == 2) return -gamma + mu - 1.0;
  return gamma + mu;
}

inline double alpha_of(int j, double gamma) {
  if (j == 1) return -1.0 + gamma;
  if (j == 2) return -1.0 - gamma;
  return gamma;
}

// Residual of the 1-D equilibrium condition on the X axis,
// n^2 X = q(1-mu)(X-mu)/|X-mu|^3 + mu(1+X-mu)/|1+X-mu|^3
//       + (3/2) A mu (1+X-mu)/|1+X-mu|^5.
inline double axis_equation(double X, const ModelParams& p) {
  const double mu = p.mu, q = p.q(), A = p.A;
  const double n2 = p.n() * p.n();
  const double r1 = std::abs(X - mu);
  const double r2 = std::abs(1.0 + X - mu);
  return n2 * X - q * (1.0 - mu) * (X - mu) / (r1 * r1 * r1) -
         mu * (1.0 + X - mu) / (r2 * r2 * r2) -
         1.5 * A * mu * (1.0 + X - mu) / (r2 * r2 * r2 * r2 * r2);
}

// Time derivatives of (X, Y, Z, PX, PY, PZ) under the synodic Hamiltonian;
// used to certify that located points are genuine equilibria in all six
// components.
inline std::array<double, 6> synodic_rhs(const ModelParams& p,
                                         const std::array<double, 6>& s) {
  const double mu = p.mu, q = p.q(), A = p.A, n = p.n();
  const double X = s[0], Y = s[1], Z = s[2], PX = s[3], PY = s[4], PZ = s[5];
  const double dx1 = X - mu, dx2 = X - mu + 1.0;
  const double r1sq = dx1 * dx1 + Y * Y + Z * Z;
  const double r2sq = dx2 * dx2 + Y * Y + Z * Z;
  const double r1 = std::sqrt(r1sq), r2 = std::sqrt(r2sq);
  const double r13 = r1 * r1sq, r23 = r2 * r2sq;
  const double r25 = r23 * r2sq, r27 = r25 * r2sq;

  // V = -q(1-mu)/r1 - mu/r2 - A mu/(2 r2^3) + 3 A mu Z^2/(2 r2^5)
  const double c1 = q * (1.0 - mu) / r13;
  const double c2 = mu / r23;
  const double c3 = 1.5 * A * mu / r25;
  const double c4 = 7.5 * A * mu * Z * Z / r27;
  const double dVx = c1 * dx1 + (c2 + c3 - c4) * dx2;
  const double dVy = (c1 + c2 + c3 - c4) * Y;
  const double dVz = (c1 + c2 + c3 - c4) * Z + 3.0 * A * mu * Z / r25;

  return {PX + n * Y, PY - n * X, PZ, n * PY - dVx, -n * PX - dVy, -dVz};
}

inline CollinearPoint locate(const ModelParams& p, int j) {
  const double g = gamma_root(j, p);
  const auto c = septic_coefficients(j, p);
  CollinearPoint pt;
  pt.j = j;
  pt.gamma = g;
  pt.alpha = alpha_of(j, g);
  pt.X = abscissa_of(j, g, p.mu);
  pt.septic_residual = std::abs(septic_eval(c, g)) / septic_scale(c, g);
  pt.eqx_residual = std::abs(axis_equation(pt.X, p));
  return pt;
}

}  // namespace halo
