#pragma once

// Linear data at a collinear point: stability coefficients of the quadratic
// Hamiltonian, the saddle and center frequencies, and the symplectic basis
// that brings the quadratic part to the normal form
//   H2 = lambda1 x px + (omega1/2)(y^2 + py^2) + (omega2/2)(z^2 + pz^2).

#include <array>
#include <cmath>

#include "halo/equilibria.hpp"
#include "halo/params.hpp"

namespace halo {

struct LinearData {
  double a = 0.0, b = 0.0, c = 0.0;  // quadratic coefficients: a x^2, (b/2) y^2, (c/2) z^2
  double Delta = 0.0;                // oblateness correction
  double lam1 = 0.0;                 // hyperbolic exponent
  double om1 = 0.0;                  // planar elliptic frequency
  double om2 = 0.0;                  // vertical frequency
  double s1 = 0.0, s2 = 0.0;         // eigenvector normalization factors
  std::array<std::array<double, 6>, 6> C{};  // old = C * new, order (x,y,z,px,py,pz)
};

// Stability coefficients at L1/L2. The building blocks are
//   t1 = q(1-mu)/alpha^3, t2 = +-mu/(1+alpha)^3, Delta = 3 A mu/(2 |1+alpha|^5),
// combined as b = -t1 + t2 + Delta, a = -(b + Delta), c = b + 2 Delta.
// alpha is negative at both points, so the signed cubes matter.
inline void stability_coefficients(int j, const ModelParams& p, double alpha,
                                   double& a, double& b, double& c, double& Delta) {
  if (j != 1 && j != 2)
    throw DomainError("stability coefficients are defined for L1 and L2 only");
  const double s = (j == 1) ? 1.0 : -1.0;
  const double mu = p.mu, q = p.q(), A = p.A;
  const double a3 = alpha * alpha * alpha;
  const double op = 1.0 + alpha;
  const double op3 = op * op * op;
  const double op5 = op3 * op * op;
  const double t1 = q * (1.0 - mu) / a3;
  const double t2 = s * mu / op3;
  Delta = s * 1.5 * A * mu / op5;
  b = -t1 + t2 + Delta;
  a = -(b + Delta);
  c = b + 2.0 * Delta;
}

// Saddle x center x center test, expressed in (b, Delta, n). Returns true
// when the quadratic part has exactly one hyperbolic and two elliptic pairs.
inline bool saddle_center_center(double b, double Delta, double n) {
  const double n2 = n * n;
  const double disc =
      9.0 * b * b + 4.0 * Delta * (-4.0 * n2 + Delta) + b * (-8.0 * n2 + 12.0 * Delta);
  if (disc < 0.0) return false;
  const double root = std::sqrt(disc);
  return (b - 2.0 * n2 + 2.0 * Delta + root > 0.0) &&
         (b - 2.0 * n2 + 2.0 * Delta - root < 0.0);
}

// Characteristic polynomial of the planar linearization,
// p(L) = L^4 + (2n^2 + 2a + b) L^2 + (n^4 - 2an^2 - bn^2 + 2ab).
inline double char_poly(double L, double a, double b, double n) {
  const double n2 = n * n;
  const double L2 = L * L;
  return L2 * L2 + (2.0 * n2 + 2.0 * a + b) * L2 +
         (n2 * n2 - 2.0 * a * n2 - b * n2 + 2.0 * a * b);
}

inline void frequencies(double a, double b, double c, double n, double& lam1,
                        double& om1, double& om2) {
  const double n2 = n * n;
  const double disc = 16.0 * a * n2 + 4.0 * a * a + 8.0 * b * n2 - 4.0 * a * b + b * b;
  if (disc < 0.0) throw NumericalError("complex quartet in the planar spectrum");
  const double root = std::sqrt(disc);
  const double eta1 = 0.5 * (-2.0 * n2 - 2.0 * a - b - root);
  const double eta2 = 0.5 * (-2.0 * n2 - 2.0 * a - b + root);
  if (!(eta2 > 0.0) || !(eta1 < 0.0) || !(c > 0.0))
    throw NumericalError("equilibrium is not of saddle x center x center type");
  lam1 = std::sqrt(eta2);
  om1 = std::sqrt(-eta1);
  om2 = std::sqrt(c);
}

// Planar eigenvector of the linearization for eigenvalue L, in (x, y, px, py):
// (2nL, L^2 + 2a - n^2, nL^2 - 2an + n^3, L^3 + (2a + n^2) L).
inline std::array<double, 4> planar_eigvec(double L, double a, double n) {
  return {2.0 * n * L, L * L + 2.0 * a - n * n, n * L * L - 2.0 * a * n + n * n * n,
          L * L * L + (2.0 * a + n * n) * L};
}

inline LinearData linearize(const ModelParams& p, int j, double alpha) {
  LinearData d;
  stability_coefficients(j, p, alpha, d.a, d.b, d.c, d.Delta);
  const double n = p.n();
  frequencies(d.a, d.b, d.c, n, d.lam1, d.om1, d.om2);

  const double a = d.a, b = d.b, lam = d.lam1, om = d.om1;
  const double n2 = n * n, n4 = n2 * n2;

  const double d_lam = -2.0 * lam *
                       ((-4.0 * n2 + 2.0 * a - b) * lam * lam - 4.0 * n4 + b * n2 +
                        6.0 * a * n2 - 2.0 * a * b + 4.0 * a * a);
  const double d_om = -om * ((-4.0 * n2 + 2.0 * a - b) * om * om + 4.0 * n4 - b * n2 -
                             6.0 * a * n2 + 2.0 * a * b - 4.0 * a * a);
  if (!(d_lam > 0.0) || !(d_om > 0.0))
    throw NumericalError("eigenvector normalization factor is not positive");
  d.s1 = std::sqrt(d_lam);
  d.s2 = std::sqrt(d_om);

  const std::array<double, 4> u_lam = planar_eigvec(lam, a, n);
  const std::array<double, 4> v_mlam = {-2.0 * n * lam, lam * lam + 2.0 * a - n2,
                                        n * lam * lam - 2.0 * a * n + n2 * n,
                                        -lam * lam * lam - (2.0 * a + n2) * lam};
  // real and imaginary parts of the eigenvector at L = i om
  const std::array<double, 4> u_om = {0.0, -om * om + 2.0 * a - n2,
                                      -n * om * om - 2.0 * a * n + n2 * n, 0.0};
  const std::array<double, 4> v_om = {2.0 * n * om, 0.0, 0.0,
                                      -om * om * om + (2.0 * a + n2) * om};

  // planar block in slots (x, y, px, py) = (0, 1, 3, 4); columns are the new
  // variables in the same slot order
  const std::array<int, 4> slot = {0, 1, 3, 4};
  for (int r = 0; r < 4; ++r) {
    const auto rr = static_cast<std::size_t>(slot[static_cast<std::size_t>(r)]);
    const auto ri = static_cast<std::size_t>(r);
    d.C[rr][static_cast<std::size_t>(slot[0])] = u_lam[ri] / d.s1;
    d.C[rr][static_cast<std::size_t>(slot[1])] = u_om[ri] / d.s2;
    d.C[rr][static_cast<std::size_t>(slot[2])] = v_mlam[ri] / d.s1;
    d.C[rr][static_cast<std::size_t>(slot[3])] = v_om[ri] / d.s2;
  }
  // vertical pair rescaled to unit frequency form
  d.C[2][2] = 1.0 / std::sqrt(d.om2);
  d.C[5][5] = std::sqrt(d.om2);
  return d;
}

// Max-norm of C^T J C - J, the symplecticity defect of a 6x6 basis with
// canonical pairs (x, px), (y, py), (z, pz) stacked as (x,y,z,px,py,pz).
inline double symplectic_defect(const std::array<std::array<double, 6>, 6>& C) {
  auto J = [](int r, int s) -> double {
    if (r < 3 && s == r + 3) return 1.0;
    if (r >= 3 && s == r - 3) return -1.0;
    return 0.0;
  };
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      double v = 0.0;
      for (int r = 0; r < 6; ++r)
        for (int s = 0; s < 6; ++s)
          v += C[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] * J(r, s) *
               C[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
      worst = std::max(worst, std::abs(v - J(i, j)));
    }
  }
  return worst;
}

}  // namespace halo
