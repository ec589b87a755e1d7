#pragma once

// Resonant Birkhoff normal form of the center-manifold Hamiltonian.
//
// The planar and vertical frequencies of a collinear point satisfy an
// approximate 1:1 resonance, so the quartic normal form keeps, besides the
// action monomials Jy^2, Jy Jz, Jz^2, the resonant coupling Q2^2 P3^2 whose
// divisor is proportional to om_p - om_v. Degree-3 terms carry no resonant
// combination and are removed entirely.

#include <cmath>
#include <complex>
#include <vector>

#include "halo/lie.hpp"
#include "halo/series.hpp"

namespace halo {

using C4Matrix = std::array<std::array<std::complex<double>, 4>, 4>;

// real (y, z, py, pz) expressed in complex (Q2, Q3, P2, P3)
inline C4Matrix complexification_matrix4() {
  const std::complex<double> i(0.0, 1.0);
  C4Matrix M{};
  M[0][0] = inv_sqrt2;
  M[0][2] = i * inv_sqrt2;
  M[1][1] = inv_sqrt2;
  M[1][3] = i * inv_sqrt2;
  M[2][0] = i * inv_sqrt2;
  M[2][2] = inv_sqrt2;
  M[3][1] = i * inv_sqrt2;
  M[3][3] = inv_sqrt2;
  return M;
}

// Coefficients of the time-rescaled normal form in which the leading part is
// the total action: H/om_v = (I2+I3) + atilde I2 + a I2^2 + b (I2+I3)^2
// + c I3 (I2+I3) + d I2 I3 sin^2(theta2-theta3) after regrouping the quartic.
struct RescaledCoeffs {
  double atilde = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

// complex (Q2, Q3, P2, P3) expressed in real (y, z, py, pz)
inline C4Matrix realification_matrix4() {
  const std::complex<double> i(0.0, 1.0);
  C4Matrix M{};
  M[0][0] = inv_sqrt2;
  M[0][2] = -i * inv_sqrt2;
  M[1][1] = inv_sqrt2;
  M[1][3] = -i * inv_sqrt2;
  M[2][0] = -i * inv_sqrt2;
  M[2][2] = inv_sqrt2;
  M[3][1] = -i * inv_sqrt2;
  M[3][3] = inv_sqrt2;
  return M;
}

struct ResonantForm {
  double omp = 0.0;   // planar frequency
  double omv = 0.0;   // vertical frequency
  double delta = 0.0; // omp - omv
  double a20 = 0.0;   // (Q2 P2)^2
  double a02 = 0.0;   // (Q3 P3)^2
  double a11 = 0.0;   // Q2 Q3 P2 P3
  double b11 = 0.0;   // Q2^2 P3^2 resonant coupling
  RescaledCoeffs hnew;
  CSeries4 H_normal;               // full normalized complex series
  std::vector<CSeries4> generators;
  std::vector<double> residuals;   // per degree 3..N
  double conj_residual = 0.0;      // b11 versus its conjugate monomial
  double imag_residual = 0.0;      // imaginary part left on the kept terms
};

// Normalize the center-manifold Hamiltonian up to degree N (N >= 4).
inline ResonantForm resonant_normal_form(const Series4& cm, double omp, double omv,
                                         int N) {
  ResonantForm out;
  out.omp = omp;
  out.omv = omv;
  out.delta = omp - omv;

  CSeries4 Hc = subst_linear(to_complex(cm), complexification_matrix4(), N);

  {
    CSeries4 expect;
    const std::complex<double> i(0.0, 1.0);
    Expo<4> k2{1, 0, 1, 0};
    Expo<4> k3{0, 1, 0, 1};
    expect.add_term(k2, i * omp);
    expect.add_term(k3, i * omv);
    const double defect = (Hc.degree_part(2) - expect).max_abs_coeff();
    if (defect > 1e-9)
      throw NumericalError("center-manifold quadratic part is not diagonal");
  }

  const double alarm = 0.5 * std::min(omp, omv);
  for (int deg = 3; deg <= N; ++deg) {
    CSeries4 Hk = Hc.degree_part(deg);
    CSeries4 G;
    for (const auto& t : Hk.terms()) {
      const int d2 = static_cast<int>(t.k[2]) - t.k[0];
      const int d3 = static_cast<int>(t.k[3]) - t.k[1];
      if (d2 + d3 == 0) continue;  // resonant under the 1:1 module
      const std::complex<double> div(0.0, d2 * omp + d3 * omv);
      if (std::abs(div) < alarm)
        throw NumericalError("small divisor in the resonant normal form");
      G.add_term(t.k, -t.c / div);
    }
    out.generators.push_back(G);
    if (!G.empty()) Hc = lie_transform(Hc, G, N);

    double resid = 0.0;
    const CSeries4 Hk_after = Hc.degree_part(deg);
    for (const auto& t : Hk_after.terms()) {
      const int d2 = static_cast<int>(t.k[2]) - t.k[0];
      const int d3 = static_cast<int>(t.k[3]) - t.k[1];
      if (d2 + d3 != 0) resid = std::max(resid, std::abs(t.c));
    }
    out.residuals.push_back(resid);
    if (resid > 1e-11)
      throw NumericalError("resonant homological equation left a residual above 1e-11");
  }

  out.H_normal = Hc;

  auto pick = [&Hc](std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
    Expo<4> k{a, b, c, d};
    return Hc.coeff(k);
  };
  const auto c20 = pick(2, 0, 2, 0);
  const auto c02 = pick(0, 2, 0, 2);
  const auto c11 = pick(1, 1, 1, 1);
  const auto cb = pick(2, 0, 0, 2);
  const auto cbc = pick(0, 2, 2, 0);
  out.a20 = c20.real();
  out.a02 = c02.real();
  out.a11 = c11.real();
  out.b11 = cb.real();
  out.conj_residual = std::abs(cb - std::conj(cbc));
  out.imag_residual = std::max({std::abs(c20.imag()), std::abs(c02.imag()),
                                std::abs(c11.imag()), std::abs(cb.imag())});

  out.hnew.atilde = out.delta / omv;
  out.hnew.a = (out.a20 + out.a02 - out.a11) / omv;
  out.hnew.b = out.a02 / omv;
  out.hnew.c = (out.a11 - 2.0 * out.a02) / omv;
  out.hnew.d = -2.0 * out.b11 / omv;
  return out;
}

}  // namespace halo
