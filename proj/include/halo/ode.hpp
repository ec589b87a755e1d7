#pragma once

// Explicit Runge-Kutta integrator of order 8(5,3) with a degree-7 dense
// interpolant and sign-change event location. The stepper follows Hairer's
// DOP853 scheme: twelve live stages, a blended order-5/order-3 error
// estimate, PI-free step control with safety 0.9 and factor bounds [0.2, 10],
// and three extra stages per accepted step when an interpolant is requested.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "halo/dop853_tableau.hpp"
#include "halo/equilibria.hpp"

namespace halo {

template <int N>
using Vec = std::array<double, N>;

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  double first_step = 0.0;  // 0 = choose automatically
  std::int64_t max_steps = 50'000'000;
};

template <int N>
struct DenseSegment {
  double t_old = 0.0;
  double t_new = 0.0;
  Vec<N> y_old{};
  std::array<Vec<N>, dop853::interpolator_power> F{};

  Vec<N> eval(double t) const {
    const double h = t_new - t_old;
    const double x = (t - t_old) / h;
    Vec<N> y{};
    for (int i = 0; i < dop853::interpolator_power; ++i) {
      const auto& f = F[static_cast<std::size_t>(dop853::interpolator_power - 1 - i)];
      for (int d = 0; d < N; ++d) y[d] += f[d];
      const double m = (i % 2 == 0) ? x : 1.0 - x;
      for (int d = 0; d < N; ++d) y[d] *= m;
    }
    for (int d = 0; d < N; ++d) y[d] += y_old[d];
    return y;
  }
};

template <int N, class F>
class Dop853 {
 public:
  Dop853(F rhs, double t0, const Vec<N>& y0, double t_bound, const OdeOptions& opt)
      : rhs_(rhs), opt_(opt), t_(t0), y_(y0), t_bound_(t_bound) {
    dir_ = (t_bound >= t0) ? 1.0 : -1.0;
    f_ = call(t_, y_);
    if (opt.first_step > 0.0)
      h_abs_ = std::min(opt.first_step, std::abs(t_bound - t0));
    else
      h_abs_ = initial_step();
  }

  double t() const { return t_; }
  const Vec<N>& y() const { return y_; }
  double t_old() const { return t_old_; }
  const Vec<N>& y_old() const { return y_old_; }
  bool finished() const { return t_ == t_bound_; }
  std::int64_t nfev() const { return nfev_; }
  std::int64_t nsteps() const { return nsteps_; }

  // advance one accepted step; returns false when t_bound was already reached
  bool step() {
    if (finished()) return false;
    const double t = t_;
    double min_step =
        10.0 * std::abs(std::nextafter(t, dir_ * std::numeric_limits<double>::infinity()) - t);
    double h_abs = std::clamp(h_abs_, min_step, opt_.max_step);

    bool rejected = false;
    for (;;) {
      if (h_abs < min_step) throw NumericalError("integration step size underflow");
      if (++nsteps_ > opt_.max_steps) throw NumericalError("too many integration steps");
      double h = h_abs * dir_;
      double t_new = t + h;
      if (dir_ * (t_new - t_bound_) > 0.0) t_new = t_bound_;
      h = t_new - t;
      h_abs = std::abs(h);

      // stages
      K_[0] = f_;
      for (int s = 1; s < dop853::n_stages; ++s) {
        Vec<N> ys = y_;
        for (int j = 0; j < s; ++j) {
          const double a = dop853::A[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
          if (a == 0.0) continue;
          for (int d = 0; d < N; ++d) ys[d] += h * a * K_[static_cast<std::size_t>(j)][d];
        }
        K_[static_cast<std::size_t>(s)] = call(t + dop853::C[static_cast<std::size_t>(s)] * h, ys);
      }
      Vec<N> y_new = y_;
      for (int j = 0; j < dop853::n_stages; ++j) {
        const double b = dop853::B[static_cast<std::size_t>(j)];
        if (b == 0.0) continue;
        for (int d = 0; d < N; ++d) y_new[d] += h * b * K_[static_cast<std::size_t>(j)][d];
      }
      Vec<N> f_new = call(t_new, y_new);
      K_[dop853::n_stages] = f_new;

      // blended 5th/3rd order error estimate in the RMS norm
      double e5sq = 0.0, e3sq = 0.0;
      for (int d = 0; d < N; ++d) {
        const double scale =
            opt_.atol + opt_.rtol * std::max(std::abs(y_[d]), std::abs(y_new[d]));
        double s5 = 0.0, s3 = 0.0;
        for (int j = 0; j <= dop853::n_stages; ++j) {
          s5 += dop853::E5[static_cast<std::size_t>(j)] * K_[static_cast<std::size_t>(j)][d];
          s3 += dop853::E3[static_cast<std::size_t>(j)] * K_[static_cast<std::size_t>(j)][d];
        }
        e5sq += (s5 / scale) * (s5 / scale);
        e3sq += (s3 / scale) * (s3 / scale);
      }
      double err_norm;
      if (e5sq == 0.0 && e3sq == 0.0)
        err_norm = 0.0;
      else
        err_norm = h_abs * e5sq / std::sqrt((e5sq + 0.01 * e3sq) * N);

      if (err_norm < 1.0) {
        double factor = (err_norm == 0.0)
                            ? max_factor
                            : std::min(max_factor, safety * std::pow(err_norm, error_exponent));
        if (rejected) factor = std::min(1.0, factor);
        t_old_ = t;
        y_old_ = y_;
        t_ = t_new;
        y_ = y_new;
        f_ = f_new;
        h_prev_ = h;
        h_abs_ = h_abs * factor;
        return true;
      }
      h_abs *= std::max(min_factor, safety * std::pow(err_norm, error_exponent));
      rejected = true;
    }
  }

  // degree-7 interpolant over [t_old, t]; costs three extra stages
  DenseSegment<N> dense() {
    const double h = h_prev_;
    for (int j = 0; j <= dop853::n_stages; ++j)
      Kx_[static_cast<std::size_t>(j)] = K_[static_cast<std::size_t>(j)];
    for (int s = dop853::n_stages + 1; s < dop853::n_stages_extended; ++s) {
      Vec<N> ys = y_old_;
      for (int j = 0; j < s; ++j) {
        const double a = dop853::A[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
        if (a == 0.0) continue;
        for (int d = 0; d < N; ++d) ys[d] += h * a * Kx_[static_cast<std::size_t>(j)][d];
      }
      Kx_[static_cast<std::size_t>(s)] =
          call(t_old_ + dop853::C[static_cast<std::size_t>(s)] * h, ys);
    }
    DenseSegment<N> seg;
    seg.t_old = t_old_;
    seg.t_new = t_;
    seg.y_old = y_old_;
    const Vec<N>& f_old = Kx_[0];
    for (int d = 0; d < N; ++d) {
      const double dy = y_[d] - y_old_[d];
      seg.F[0][d] = dy;
      seg.F[1][d] = h * f_old[d] - dy;
      seg.F[2][d] = 2.0 * dy - h * (f_[d] + f_old[d]);
    }
    for (int r = 0; r < 4; ++r) {
      auto& row = seg.F[static_cast<std::size_t>(3 + r)];
      row.fill(0.0);
      for (int j = 0; j < dop853::n_stages_extended; ++j) {
        const double dcoef = dop853::D[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        if (dcoef == 0.0) continue;
        for (int d = 0; d < N; ++d) row[d] += dcoef * Kx_[static_cast<std::size_t>(j)][d];
      }
      for (int d = 0; d < N; ++d) row[d] *= h;
    }
    return seg;
  }

 private:
  static constexpr double safety = 0.9;
  static constexpr double min_factor = 0.2;
  static constexpr double max_factor = 10.0;
  static constexpr double error_exponent = -1.0 / 8.0;  // estimator order 7

  Vec<N> call(double t, const Vec<N>& y) {
    ++nfev_;
    return rhs_(t, y);
  }

  double rms(const Vec<N>& v) const {
    double s = 0.0;
    for (int d = 0; d < N; ++d) s += v[d] * v[d];
    return std::sqrt(s / N);
  }

  double initial_step() {
    const double interval = std::abs(t_bound_ - t_);
    if (interval == 0.0) return 0.0;
    Vec<N> sy{}, sf{};
    for (int d = 0; d < N; ++d) {
      const double scale = opt_.atol + std::abs(y_[d]) * opt_.rtol;
      sy[d] = y_[d] / scale;
      sf[d] = f_[d] / scale;
    }
    const double d0 = rms(sy), d1 = rms(sf);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, interval);
    Vec<N> y1 = y_;
    for (int d = 0; d < N; ++d) y1[d] += h0 * dir_ * f_[d];
    Vec<N> f1 = call(t_ + h0 * dir_, y1);
    Vec<N> df{};
    for (int d = 0; d < N; ++d) {
      const double scale = opt_.atol + std::abs(y_[d]) * opt_.rtol;
      df[d] = (f1[d] - f_[d]) / scale;
    }
    const double d2 = rms(df) / h0;
    double h1;
    if (d1 <= 1e-15 && d2 <= 1e-15)
      h1 = std::max(1e-6, h0 * 1e-3);
    else
      h1 = std::pow(0.01 / std::max(d1, d2), 1.0 / 9.0);
    return std::min({100.0 * h0, h1, interval, opt_.max_step});
  }

  F rhs_;
  OdeOptions opt_;
  double t_;
  Vec<N> y_;
  double t_bound_;
  double dir_ = 1.0;
  double t_old_ = 0.0;
  Vec<N> y_old_{};
  Vec<N> f_{};
  double h_abs_ = 0.0;
  double h_prev_ = 0.0;
  std::array<Vec<N>, dop853::n_stages + 1> K_{};
  std::array<Vec<N>, dop853::n_stages_extended> Kx_{};
  std::int64_t nfev_ = 0;
  std::int64_t nsteps_ = 0;
};

// Event: a smooth scalar function whose sign changes are located on the dense
// interpolant. direction > 0 keeps rising crossings, < 0 falling, 0 both.
// Crossings at or before t_min are ignored (a trajectory started exactly on a
// section would otherwise fire at the first step).
template <int N>
struct Event {
  std::function<double(double, const Vec<N>&)> g;
  int direction = 0;
  bool terminal = false;
  double t_min = 0.0;
};

template <int N>
struct EventHit {
  int index = -1;
  double t = 0.0;
  Vec<N> y{};
};

template <int N>
struct OdeResult {
  double t = 0.0;
  Vec<N> y{};
  std::vector<EventHit<N>> events;
  bool terminated = false;  // stopped by a terminal event
  std::int64_t nfev = 0;
  std::int64_t nsteps = 0;
};

namespace detail {

// bisection on the dense interpolant; the event functions used here are
// coordinate extractions, so machine precision in t gives |g| well below any
// practical threshold
template <int N>
inline double locate_root(const DenseSegment<N>& seg,
                          const std::function<double(double, const Vec<N>&)>& g, double ta,
                          double tb) {
  double ga = g(ta, seg.eval(ta));
  for (int it = 0; it < 200; ++it) {
    const double tm = 0.5 * (ta + tb);
    if (tm == ta || tm == tb) break;
    const double gm = g(tm, seg.eval(tm));
    if ((ga <= 0.0) == (gm <= 0.0)) {
      ta = tm;
      ga = gm;
    } else {
      tb = tm;
    }
  }
  return tb;
}

}  // namespace detail

template <int N, class F>
inline OdeResult<N> integrate(F&& rhs, double t0, const Vec<N>& y0, double t1,
                              const OdeOptions& opt = {},
                              const std::vector<Event<N>>& events = {},
                              std::vector<DenseSegment<N>>* trace = nullptr) {
  Dop853<N, F> stepper(static_cast<F&&>(rhs), t0, y0, t1, opt);
  OdeResult<N> out;
  std::vector<double> gv(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) gv[i] = events[i].g(t0, y0);

  while (!stepper.finished()) {
    stepper.step();
    bool need_dense = trace != nullptr;
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const double gn = events[i].g(stepper.t(), stepper.y());
      const double go = gv[i];
      gv[i] = gn;
      const bool up = go <= 0.0 && gn >= 0.0;
      const bool down = go >= 0.0 && gn <= 0.0;
      const int dir = events[i].direction;
      if ((dir >= 0 && up) || (dir <= 0 && down)) {
        flagged.push_back(i);
        need_dense = true;
      }
    }
    if (!need_dense) continue;

    DenseSegment<N> seg = stepper.dense();
    if (trace) trace->push_back(seg);

    double t_stop = stepper.t();
    int stop_index = -1;
    std::vector<EventHit<N>> hits;
    for (std::size_t i : flagged) {
      const double te =
          detail::locate_root<N>(seg, events[i].g, stepper.t_old(), stepper.t());
      if (te <= events[i].t_min) continue;
      EventHit<N> hit;
      hit.index = static_cast<int>(i);
      hit.t = te;
      hit.y = seg.eval(te);
      hits.push_back(hit);
      if (events[i].terminal && (stop_index < 0 || te < t_stop)) {
        t_stop = te;
        stop_index = static_cast<int>(i);
      }
    }
    std::sort(hits.begin(), hits.end(),
              [](const EventHit<N>& a, const EventHit<N>& b) { return a.t < b.t; });
    for (auto& h : hits) {
      if (stop_index >= 0 && h.t > t_stop) break;
      out.events.push_back(h);
    }
    if (stop_index >= 0) {
      out.t = t_stop;
      out.y = seg.eval(t_stop);
      out.terminated = true;
      out.nfev = stepper.nfev();
      out.nsteps = stepper.nsteps();
      return out;
    }
  }
  out.t = stepper.t();
  out.y = stepper.y();
  out.nfev = stepper.nfev();
  out.nsteps = stepper.nsteps();
  return out;
}

}  // namespace halo
