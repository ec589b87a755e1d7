#pragma once

// Polynomial expansion of the synodic Hamiltonian around a collinear point.
//
// After the shift and scaling by gamma, both inverse distances expand in
// solid polynomials W_n = rho^n C_n^(s)(sigma x / rho) generated by the
// three-term recurrence
//   n W_n = 2 sigma x (n + s - 1) W_{n-1} - (n + 2s - 2) rho^2 W_{n-2},
// with rho^2 = x^2 + y^2 + z^2. Family s = 1/2 serves the two 1/r series,
// s = 3/2 serves 1/r2^3, s = 5/2 serves z^2/r2^5.

#include <array>
#include <cmath>
#include <vector>

#include "halo/equilibria.hpp"
#include "halo/params.hpp"
#include "halo/series.hpp"

namespace halo {

enum class SolidFamily { half = 0, three_half = 1, five_half = 2 };

inline std::vector<Series6> solid_polynomials(double sigma, SolidFamily fam, int N) {
  const double s = 0.5 + static_cast<double>(fam);
  const Series6 x = Series6::variable(0);
  Series6 rho2;
  for (int i = 0; i < 3; ++i) {
    Expo<6> k{};
    k[static_cast<std::size_t>(i)] = 2;
    rho2.add_term(k, 1.0);
  }
  std::vector<Series6> W;
  W.reserve(static_cast<std::size_t>(N) + 1);
  W.push_back(Series6::constant(1.0));
  // C_1^(1/2)(u) = u, C_1^(s)(u) = 2su otherwise
  if (N >= 1)
    W.push_back(Series6::variable(0, fam == SolidFamily::half ? sigma : sigma * 2.0 * s));
  for (int n = 2; n <= N; ++n) {
    Series6 t1 = Series6::mul(x, W[static_cast<std::size_t>(n - 1)], N) *
                 (sigma * 2.0 * (n + s - 1.0) / n);
    Series6 t2 = Series6::mul(rho2, W[static_cast<std::size_t>(n - 2)], N) *
                 (-(n + 2.0 * s - 2.0) / n);
    W.push_back(t1 + t2);
  }
  return W;
}

struct ExpansionResult {
  Series6 H;                       // degrees 2..N, variables (x,y,z,px,py,pz)
  double d1 = 0.0, d2 = 0.0;       // scaled centers of the two primaries
  double gradient_residual = 0.0;  // largest leftover degree-1 coefficient
  std::vector<double> stage_max;   // max |coeff| per degree, index = degree
};

// Expand the scaled Hamiltonian around L_j up to total degree N.
// gamma and alpha come from the located equilibrium. The constant and the
// degree-1 part are dropped; the latter must vanish (equilibrium condition)
// up to grad_tol.
inline ExpansionResult expand_hamiltonian(const ModelParams& p, double gamma,
                                          double alpha, int N,
                                          double grad_tol = 1e-9) {
  const double mu = p.mu, q = p.q(), A = p.A, n = p.n();
  ExpansionResult out;
  out.d1 = alpha / gamma;
  out.d2 = (alpha + 1.0) / gamma;
  const double sig1 = out.d1 < 0.0 ? -1.0 : 1.0;
  const double sig2 = out.d2 < 0.0 ? -1.0 : 1.0;
  const double a1 = std::abs(out.d1);
  const double a2 = std::abs(out.d2);
  if (std::abs(a2 - 1.0) > 1e-12)
    throw NumericalError("scaled second-primary distance must be unity at L1/L2");

  const auto T1 = solid_polynomials(sig1, SolidFamily::half, N);
  const auto T2 = solid_polynomials(sig2, SolidFamily::half, N);
  const auto U2 = solid_polynomials(sig2, SolidFamily::three_half, N);
  const auto V2 = solid_polynomials(sig2, SolidFamily::five_half, N);

  Series6 H;
  for (int sl = 3; sl <= 5; ++sl) {
    Expo<6> k{};
    k[static_cast<std::size_t>(sl)] = 2;
    H.add_term(k, 0.5);
  }
  {
    Expo<6> k{};
    k[1] = 1;
    k[3] = 1;
    H.add_term(k, n);  // n y px
  }
  {
    Expo<6> k{};
    k[0] = 1;
    k[4] = 1;
    H.add_term(k, -n);  // -n x py
  }
  {
    Expo<6> k{};
    k[0] = 1;
    H.add_term(k, n * n * (mu + alpha) / gamma);
  }

  const double c1 = q * (1.0 - mu) / (gamma * gamma * gamma * a1);
  const double c2 = mu / (gamma * gamma * gamma * a2);
  const double g5 = gamma * gamma * gamma * gamma * gamma;
  const double c3 = A * mu / (2.0 * g5 * a2 * a2 * a2);
  const double c4 = 3.0 * A * mu / (2.0 * g5 * a2 * a2 * a2 * a2 * a2);

  double inv1 = 1.0, inv2 = 1.0;
  for (int d = 0; d <= N; ++d) {
    H += T1[static_cast<std::size_t>(d)] * (-c1 * inv1);
    H += T2[static_cast<std::size_t>(d)] * (-c2 * inv2);
    H += U2[static_cast<std::size_t>(d)] * (-c3 * inv2);
    inv1 /= a1;
    inv2 /= a2;
  }
  Series6 z2;
  {
    Expo<6> k{};
    k[2] = 2;
    z2.add_term(k, 1.0);
  }
  inv2 = 1.0;
  for (int d = 0; d + 2 <= N; ++d) {
    H += Series6::mul(z2, V2[static_cast<std::size_t>(d)], N) * (c4 * inv2);
    inv2 /= a2;
  }

  out.gradient_residual = H.degree_part(1).max_abs_coeff();
  if (out.gradient_residual > grad_tol)
    throw NumericalError("degree-1 terms do not vanish: point is not an equilibrium");

  out.H = H.degree_range(2, N);
  out.stage_max.assign(static_cast<std::size_t>(N) + 1, 0.0);
  for (int d = 2; d <= N; ++d)
    out.stage_max[static_cast<std::size_t>(d)] = out.H.degree_part(d).max_abs_coeff();
  return out;
}

}  // namespace halo
