#pragma once

// Lie-series reduction to the center manifold.
//
// Starting from the degree-N expansion, the quadratic part is brought to
//   H2 = lam1 x px + (om1/2)(y^2 + py^2) + (om2/2)(z^2 + pz^2)
// by the symplectic basis of linear.hpp, complexified to
//   H2 = lam1 q1 p1 + i om1 q2 p2 + i om2 q3 p3,
// and every monomial with unequal exponents on (q1, p1) is removed degree by
// degree with polynomial generating functions. Restricting the realified
// result to q1 = p1 = 0 yields the center-manifold Hamiltonian in
// (y, z, py, pz).

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "halo/linear.hpp"
#include "halo/series.hpp"

namespace halo {

inline constexpr double inv_sqrt2 = 0.70710678118654752440;

using C6Matrix = std::array<std::array<std::complex<double>, 6>, 6>;

// real (x,y,z,px,py,pz) expressed in complex (q1,q2,q3,p1,p2,p3):
// x = q1, y = (q2 + i p2)/sqrt2, z = (q3 + i p3)/sqrt2,
// px = p1, py = (i q2 + p2)/sqrt2, pz = (i q3 + p3)/sqrt2.
inline C6Matrix complexification_matrix() {
  const std::complex<double> i(0.0, 1.0);
  C6Matrix M{};
  M[0][0] = 1.0;
  M[3][3] = 1.0;
  M[1][1] = inv_sqrt2;
  M[1][4] = i * inv_sqrt2;
  M[2][2] = inv_sqrt2;
  M[2][5] = i * inv_sqrt2;
  M[4][1] = i * inv_sqrt2;
  M[4][4] = inv_sqrt2;
  M[5][2] = i * inv_sqrt2;
  M[5][5] = inv_sqrt2;
  return M;
}

// complex (q1,q2,q3,p1,p2,p3) expressed in real (x,y,z,px,py,pz):
// q2 = (y - i py)/sqrt2, p2 = (py - i y)/sqrt2, likewise for (q3, p3).
inline C6Matrix realification_matrix() {
  const std::complex<double> i(0.0, 1.0);
  C6Matrix M{};
  M[0][0] = 1.0;
  M[3][3] = 1.0;
  M[1][1] = inv_sqrt2;
  M[1][4] = -i * inv_sqrt2;
  M[2][2] = inv_sqrt2;
  M[2][5] = -i * inv_sqrt2;
  M[4][1] = -i * inv_sqrt2;
  M[4][4] = inv_sqrt2;
  M[5][2] = -i * inv_sqrt2;
  M[5][5] = inv_sqrt2;
  return M;
}

// exp(L_G) H = sum_j ad_G^j H / j! truncated at degree N; G homogeneous of
// degree k raises the grade by k - 2 per bracket, so (N-2)/(k-2) brackets
// suffice.
template <int NV, class T>
inline Series<NV, T> lie_transform(const Series<NV, T>& H, const Series<NV, T>& G,
                                   int N) {
  if (G.empty()) return H;
  const int k = G.min_degree();
  Series<NV, T> out = H;
  Series<NV, T> term = H;
  const int jmax = std::max(1, (N - 2) / std::max(1, k - 2));
  for (int j = 1; j <= jmax; ++j) {
    term = poisson(term, G, N) * T(1.0 / j);
    if (term.empty()) break;
    out += term;
  }
  return out;
}

struct CMReduction {
  CSeries6 H_complex;               // normalized complex Hamiltonian
  Series6 H_real;                   // realified normalized Hamiltonian
  Series4 CM;                       // restriction to (y, z, py, pz)
  std::vector<CSeries6> generators;  // generating function per degree 3..N
  std::vector<double> residuals;     // homological residual per degree 3..N
  double basis_residual = 0.0;       // quadratic defect after the real basis
  double quad_residual = 0.0;        // quadratic defect after complexification
  double imag_residual = 0.0;        // largest imaginary part dropped at the end
};

// Normalize the expanded Hamiltonian: apply the symplectic basis, complexify,
// remove all hyperbolic-mixing monomials, realify, restrict.
inline CMReduction reduce_to_center_manifold(const Series6& H_expanded,
                                             const LinearData& lin, int N) {
  // real symplectic basis
  std::array<std::array<double, 6>, 6> C = lin.C;
  Series6 H1 = subst_linear(H_expanded, C, N);

  CMReduction out;

  // quadratic part must now be lam1 x px + om1/2 (y^2+py^2) + om2/2 (z^2+pz^2)
  {
    Series6 q2 = H1.degree_part(2);
    auto expect = Series6();
    auto add = [&expect](std::initializer_list<int> idx, double c) {
      Expo<6> k{};
      for (int i : idx) k[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k[static_cast<std::size_t>(i)] + 1);
      expect.add_term(k, c);
    };
    add({0, 3}, lin.lam1);
    add({1, 1}, 0.5 * lin.om1);
    add({4, 4}, 0.5 * lin.om1);
    add({2, 2}, 0.5 * lin.om2);
    add({5, 5}, 0.5 * lin.om2);
    out.basis_residual = (q2 - expect).max_abs_coeff();
    if (out.basis_residual > 1e-8)
      throw NumericalError("quadratic part is not diagonal in the supplied basis");
  }

  CSeries6 Hc = subst_linear(to_complex(H1), complexification_matrix(), N);

  // complexified quadratic part: lam1 q1 p1 + i om1 q2 p2 + i om2 q3 p3
  {
    CSeries6 q2 = Hc.degree_part(2);
    CSeries6 expect;
    auto add = [&expect](int qi, int pi, std::complex<double> c) {
      Expo<6> k{};
      k[static_cast<std::size_t>(qi)] = 1;
      k[static_cast<std::size_t>(pi)] = 1;
      expect.add_term(k, c);
    };
    const std::complex<double> i(0.0, 1.0);
    add(0, 3, lin.lam1);
    add(1, 4, i * lin.om1);
    add(2, 5, i * lin.om2);
    out.quad_residual = (q2 - expect).max_abs_coeff();
    if (out.quad_residual > 1e-9)
      throw NumericalError("complexified quadratic part is not diagonal");
  }

  const std::complex<double> eta1(lin.lam1, 0.0);
  const std::complex<double> eta2(0.0, lin.om1);
  const std::complex<double> eta3(0.0, lin.om2);

  for (int deg = 3; deg <= N; ++deg) {
    CSeries6 Hk = Hc.degree_part(deg);
    CSeries6 G;
    for (const auto& t : Hk.terms()) {
      if (t.k[0] == t.k[3]) continue;  // center-manifold terms are kept
      const std::complex<double> div = (static_cast<double>(t.k[3]) - t.k[0]) * eta1 +
                                       (static_cast<double>(t.k[4]) - t.k[1]) * eta2 +
                                       (static_cast<double>(t.k[5]) - t.k[2]) * eta3;
      if (std::abs(div) < 0.5 * lin.lam1)
        throw NumericalError("small divisor in the center-manifold reduction");
      G.add_term(t.k, -t.c / div);
    }
    out.generators.push_back(G);
    if (!G.empty()) Hc = lie_transform(Hc, G, N);

    double resid = 0.0;
    const CSeries6 Hk_after = Hc.degree_part(deg);
    for (const auto& t : Hk_after.terms())
      if (t.k[0] != t.k[3]) resid = std::max(resid, std::abs(t.c));
    out.residuals.push_back(resid);
    if (resid > 1e-11)
      throw NumericalError("homological equation left a residual above 1e-11");
  }

  out.H_complex = Hc;
  CSeries6 Hr = subst_linear(Hc, realification_matrix(), N);
  out.H_real = real_part(Hr, &out.imag_residual);
  if (out.imag_residual > 1e-12)
    throw NumericalError("realified Hamiltonian kept an imaginary residue");

  for (const auto& t : out.H_real.terms()) {
    if (t.k[0] != 0 || t.k[3] != 0) continue;
    Expo<4> k{t.k[1], t.k[2], t.k[4], t.k[5]};
    out.CM.add_term(k, t.c);
  }
  return out;
}

}  // namespace halo
