#pragma once

// Compiled evaluation of the center-manifold Hamiltonian flow.
//
// The reduced Hamiltonian arrives as a sparse polynomial in (y, z, py, pz).
// For integration we pre-differentiate it symbolically and flatten every
// needed partial into a power-table evaluator, then expose the Hamiltonian
// vector field together with its variational extensions: a single tangent
// vector, a full 4x4 fundamental matrix, and the planar subsystem carrying
// the vertical 2x2 block used by the bifurcation index.

#include <array>
#include <cstdint>
#include <vector>

#include "halo/ode.hpp"
#include "halo/series.hpp"

namespace halo {

template <int NV>
class PolyEval {
 public:
  PolyEval() = default;

  explicit PolyEval(const Series<NV, double>& s) {
    maxdeg_ = 0;
    for (const auto& t : s.terms()) {
      ts_.push_back({t.k, t.c});
      maxdeg_ = std::max(maxdeg_, expo_degree(t.k));
    }
  }

  double operator()(const Vec<NV>& x) const {
    // powers[v][e] = x[v]^e
    std::array<std::array<double, 16>, NV> powers;
    for (int v = 0; v < NV; ++v) {
      powers[static_cast<std::size_t>(v)][0] = 1.0;
      for (int e = 1; e <= maxdeg_; ++e)
        powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)] =
            powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(e - 1)] * x[v];
    }
    double acc = 0.0;
    for (const auto& t : ts_) {
      double m = t.c;
      for (int v = 0; v < NV; ++v) {
        const std::uint8_t e = t.k[static_cast<std::size_t>(v)];
        if (e) m *= powers[static_cast<std::size_t>(v)][e];
      }
      acc += m;
    }
    return acc;
  }

  bool empty() const { return ts_.empty(); }

 private:
  struct Term {
    Expo<NV> k;
    double c;
  };
  std::vector<Term> ts_;
  int maxdeg_ = 0;
};

// variables: 0 = y, 1 = z, 2 = py, 3 = pz
class CMFlow {
 public:
  explicit CMFlow(const Series4& H) : H_(H) {
    Series4 d[4];
    for (int i = 0; i < 4; ++i) {
      d[i] = H.diff(i);
      grad_[static_cast<std::size_t>(i)] = PolyEval<4>(d[i]);
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        hess_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            PolyEval<4>(d[i].diff(j));
  }

  double energy(const Vec<4>& x) const { return H_(x); }

  Vec<4> gradient(const Vec<4>& x) const {
    return {grad_[0](x), grad_[1](x), grad_[2](x), grad_[3](x)};
  }

  std::array<std::array<double, 4>, 4> hessian(const Vec<4>& x) const {
    std::array<std::array<double, 4>, 4> M{};
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const double v = hess_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](x);
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      }
    return M;
  }

  // (ydot, zdot, pydot, pzdot) = (H_py, H_pz, -H_y, -H_z)
  Vec<4> field(const Vec<4>& x) const {
    return {grad_[2](x), grad_[3](x), -grad_[0](x), -grad_[1](x)};
  }

  // state (x, v): tangent v evolves by v' = J H''(x) v
  Vec<8> field_with_tangent(const Vec<8>& s) const {
    const Vec<4> x{s[0], s[1], s[2], s[3]};
    const Vec<4> f = field(x);
    const auto M = hessian(x);
    Vec<8> out;
    for (int i = 0; i < 4; ++i) out[i] = f[i];
    for (int i = 0; i < 2; ++i) {
      double a = 0.0, b = 0.0;
      for (int j = 0; j < 4; ++j) {
        a += M[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(j)] * s[4 + j];
        b += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s[4 + j];
      }
      out[4 + i] = a;       // d(delta q_i)/dt = row (p_i) of H'' times v
      out[4 + 2 + i] = -b;  // d(delta p_i)/dt = -row (q_i) of H'' times v
    }
    return out;
  }

  // state (x, Phi) with Phi a 4x4 fundamental matrix stored column-major
  Vec<20> field_with_matrix(const Vec<20>& s) const {
    const Vec<4> x{s[0], s[1], s[2], s[3]};
    const Vec<4> f = field(x);
    const auto M = hessian(x);
    Vec<20> out;
    for (int i = 0; i < 4; ++i) out[i] = f[i];
    for (int col = 0; col < 4; ++col) {
      const int base = 4 + 4 * col;
      for (int i = 0; i < 2; ++i) {
        double a = 0.0, b = 0.0;
        for (int j = 0; j < 4; ++j) {
          a += M[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(j)] * s[base + j];
          b += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s[base + j];
        }
        out[base + i] = a;
        out[base + 2 + i] = -b;
      }
    }
    return out;
  }

  // planar orbit (y, py) with the vertical variational block V (2x2,
  // column-major); the vertical parity of the Hamiltonian decouples V from
  // the in-plane tangents
  Vec<6> planar_field_with_vertical_block(const Vec<6>& s) const {
    const Vec<4> x{s[0], 0.0, s[1], 0.0};
    const auto M = hessian(x);
    Vec<6> out;
    out[0] = grad_[2](x);
    out[1] = -grad_[0](x);
    for (int col = 0; col < 2; ++col) {
      const double dz = s[2 + 2 * col];
      const double dpz = s[3 + 2 * col];
      out[2 + 2 * col] = M[3][1] * dz + M[3][3] * dpz;
      out[3 + 2 * col] = -(M[1][1] * dz + M[1][3] * dpz);
    }
    return out;
  }

  // restriction of the energy to the planar subspace
  double planar_energy(double y, double py) const { return H_({y, 0.0, py, 0.0}); }

 private:
  PolyEval<4> H_;
  std::array<PolyEval<4>, 4> grad_;
  std::array<std::array<PolyEval<4>, 4>, 4> hess_;
};

struct CMTrajectory {
  std::vector<double> t;     // uniform sample times when sample_dt > 0
  std::vector<Vec<4>> x;     // matching states
  Vec<4> final{};
  double t_final = 0.0;
  double energy_drift = 0.0;  // max |H - H(x0)| over step ends and samples
  bool escaped = false;
};

// Trajectory of the CM flow over [0, T] (T may be negative). Samples are
// taken from the dense interpolant every sample_dt when requested; an escape
// radius of 0 disables the escape check.
inline CMTrajectory integrate_cm(const CMFlow& flow, const Vec<4>& x0, double T,
                                 double tol = 1e-12, double sample_dt = 0.0,
                                 double escape_radius = 0.0) {
  if (tol < 1e-14 || tol > 1e-8)
    throw DomainError("integration tolerance must lie in [1e-14, 1e-8]");
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;
  auto rhs = [&flow](double, const Vec<4>& x) { return flow.field(x); };
  Dop853<4, decltype(rhs)> stepper(rhs, 0.0, x0, T, opt);

  CMTrajectory out;
  const double h0 = flow.energy(x0);
  const double r2 = escape_radius * escape_radius;
  double next_sample = 0.0;
  const double dir = (T >= 0.0) ? 1.0 : -1.0;
  if (sample_dt > 0.0) {
    out.t.push_back(0.0);
    out.x.push_back(x0);
    next_sample = dir * sample_dt;
  }
  while (!stepper.finished()) {
    stepper.step();
    if (sample_dt > 0.0 && dir * (stepper.t() - next_sample) >= 0.0) {
      const auto seg = stepper.dense();
      while (dir * (stepper.t() - next_sample) >= 0.0) {
        const Vec<4> xs = seg.eval(next_sample);
        out.t.push_back(next_sample);
        out.x.push_back(xs);
        out.energy_drift = std::max(out.energy_drift, std::abs(flow.energy(xs) - h0));
        next_sample += dir * sample_dt;
      }
    }
    const Vec<4>& y = stepper.y();
    out.energy_drift = std::max(out.energy_drift, std::abs(flow.energy(y) - h0));
    if (escape_radius > 0.0 &&
        y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3] > r2) {
      out.escaped = true;
      out.final = y;
      out.t_final = stepper.t();
      return out;
    }
  }
  out.final = stepper.y();
  out.t_final = stepper.t();
  return out;
}

}  // namespace halo
