#pragma once

// Sparse truncated multivariate polynomial algebra.
//
// A Series<NV, T> stores terms of a polynomial in NV variables with
// coefficients of type T (double or std::complex<double>), kept sorted in
// graded lexicographic order. All arithmetic that can raise the degree takes
// an explicit truncation degree, so truncation is a property of the operation
// rather than of the object.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace halo {

template <int NV>
using Expo = std::array<std::uint8_t, NV>;

template <std::size_t NV>
inline int expo_degree(const std::array<std::uint8_t, NV>& k) {
  int d = 0;
  for (std::size_t i = 0; i < NV; ++i) d += k[i];
  return d;
}

// Graded lexicographic order: total degree first, then component-wise.
template <int NV>
struct ExpoLess {
  bool operator()(const Expo<NV>& a, const Expo<NV>& b) const {
    const int da = expo_degree<NV>(a);
    const int db = expo_degree<NV>(b);
    if (da != db) return da < db;
    return a < b;
  }
};

inline double coeff_abs(double c) { return std::abs(c); }
inline double coeff_abs(const std::complex<double>& c) { return std::abs(c); }

template <int NV, class T = double>
class Series {
 public:
  struct Term {
    Expo<NV> k;
    T c;
  };

  // Coefficients at or below this magnitude are discarded after arithmetic.
  static constexpr double drop_tol = 1e-16;

  Series() = default;

  static Series zero() { return Series(); }

  static Series constant(T c) {
    Series s;
    if (coeff_abs(c) > drop_tol) s.terms_.push_back({Expo<NV>{}, c});
    return s;
  }

  static Series variable(int i, T c = T(1)) {
    Expo<NV> k{};
    k[static_cast<std::size_t>(i)] = 1;
    return monomial(k, c);
  }

  static Series monomial(const Expo<NV>& k, T c) {
    Series s;
    if (coeff_abs(c) > drop_tol) s.terms_.push_back({k, c});
    return s;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  T coeff(const Expo<NV>& k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Expo<NV>& key) {
                                 return ExpoLess<NV>{}(t.k, key);
                               });
    if (it != terms_.end() && it->k == k) return it->c;
    return T(0);
  }

  int max_degree() const {
    return terms_.empty() ? -1 : expo_degree<NV>(terms_.back().k);
  }

  int min_degree() const {
    return terms_.empty() ? -1 : expo_degree<NV>(terms_.front().k);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, coeff_abs(t.c));
    return m;
  }

  void add_term(const Expo<NV>& k, T c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Expo<NV>& key) {
                                 return ExpoLess<NV>{}(t.k, key);
                               });
    if (it != terms_.end() && it->k == k) {
      it->c += c;
      if (coeff_abs(it->c) <= drop_tol) terms_.erase(it);
    } else if (coeff_abs(c) > drop_tol) {
      terms_.insert(it, {k, c});
    }
  }

  Series& operator+=(const Series& o) {
    std::map<Expo<NV>, T, ExpoLess<NV>> acc;
    for (const Term& t : terms_) acc[t.k] = t.c;
    for (const Term& t : o.terms_) acc[t.k] += t.c;
    assign_from(acc);
    return *this;
  }

  Series& operator-=(const Series& o) {
    std::map<Expo<NV>, T, ExpoLess<NV>> acc;
    for (const Term& t : terms_) acc[t.k] = t.c;
    for (const Term& t : o.terms_) acc[t.k] -= t.c;
    assign_from(acc);
    return *this;
  }

  Series& operator*=(T s) {
    for (Term& t : terms_) t.c *= s;
    clean();
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, T s) { return a *= s; }
  friend Series operator*(T s, Series a) { return a *= s; }

  // Product truncated at total degree nmax.
  static Series mul(const Series& a, const Series& b, int nmax) {
    std::map<Expo<NV>, T, ExpoLess<NV>> acc;
    for (const Term& ta : a.terms_) {
      const int da = expo_degree<NV>(ta.k);
      if (da > nmax) continue;
      for (const Term& tb : b.terms_) {
        if (da + expo_degree<NV>(tb.k) > nmax) continue;
        Expo<NV> k;
        for (int i = 0; i < NV; ++i)
          k[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
              ta.k[static_cast<std::size_t>(i)] + tb.k[static_cast<std::size_t>(i)]);
        acc[k] += ta.c * tb.c;
      }
    }
    Series out;
    out.assign_from(acc);
    return out;
  }

  static Series pow(const Series& a, int m, int nmax) {
    Series out = constant(T(1));
    for (int i = 0; i < m; ++i) out = mul(out, a, nmax);
    return out;
  }

  Series diff(int var) const {
    Series out;
    for (const Term& t : terms_) {
      const auto v = static_cast<std::size_t>(var);
      if (t.k[v] == 0) continue;
      Expo<NV> k = t.k;
      const T c = t.c * T(static_cast<double>(k[v]));
      k[v] = static_cast<std::uint8_t>(k[v] - 1);
      out.terms_.push_back({k, c});
    }
    // differentiation preserves graded-lex order only within a degree; re-sort
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return ExpoLess<NV>{}(x.k, y.k); });
    return out;
  }

  Series degree_part(int d) const {
    Series out;
    for (const Term& t : terms_)
      if (expo_degree<NV>(t.k) == d) out.terms_.push_back(t);
    return out;
  }

  Series degree_range(int dmin, int dmax) const {
    Series out;
    for (const Term& t : terms_) {
      const int d = expo_degree<NV>(t.k);
      if (d >= dmin && d <= dmax) out.terms_.push_back(t);
    }
    return out;
  }

  Series truncated(int nmax) const { return degree_range(0, nmax); }

  void clean(double tol = drop_tol) {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [tol](const Term& t) { return coeff_abs(t.c) <= tol; }),
                 terms_.end());
  }

  T eval(const std::array<T, NV>& x) const {
    T acc = T(0);
    for (const Term& t : terms_) {
      T v = t.c;
      for (int i = 0; i < NV; ++i)
        for (int e = 0; e < t.k[static_cast<std::size_t>(i)]; ++e)
          v *= x[static_cast<std::size_t>(i)];
      acc += v;
    }
    return acc;
  }

 private:
  void assign_from(const std::map<Expo<NV>, T, ExpoLess<NV>>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (const auto& [k, c] : acc)
      if (coeff_abs(c) > drop_tol) terms_.push_back({k, c});
  }

  std::vector<Term> terms_;
};

using Series4 = Series<4, double>;
using Series6 = Series<6, double>;
using CSeries4 = Series<4, std::complex<double>>;
using CSeries6 = Series<6, std::complex<double>>;

template <int NV>
inline Series<NV, std::complex<double>> to_complex(const Series<NV, double>& s) {
  Series<NV, std::complex<double>> out;
  for (const auto& t : s.terms()) out.add_term(t.k, std::complex<double>(t.c, 0.0));
  return out;
}

// Extract the real part; the largest discarded imaginary magnitude is stored
// in *imag_residual when provided.
template <int NV>
inline Series<NV, double> real_part(const Series<NV, std::complex<double>>& s,
                                    double* imag_residual = nullptr) {
  Series<NV, double> out;
  double worst = 0.0;
  for (const auto& t : s.terms()) {
    worst = std::max(worst, std::abs(t.c.imag()));
    out.add_term(t.k, t.c.real());
  }
  if (imag_residual) *imag_residual = worst;
  return out;
}

// Poisson bracket {f, g} with canonical pairs (x_i, x_{i+NV/2}),
// i.e. the first NV/2 variables are coordinates, the last NV/2 momenta:
// {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i.
template <int NV, class T>
inline Series<NV, T> poisson(const Series<NV, T>& f, const Series<NV, T>& g, int nmax) {
  static_assert(NV % 2 == 0, "Poisson bracket needs an even variable count");
  constexpr int D = NV / 2;
  Series<NV, T> out;
  for (int i = 0; i < D; ++i) {
    out += Series<NV, T>::mul(f.diff(i), g.diff(i + D), nmax);
    out -= Series<NV, T>::mul(f.diff(i + D), g.diff(i), nmax);
  }
  return out;
}

// Linear change of variables: old variable i is replaced by
// sum_j M[i][j] * (new variable j). Powers of the substituted images are
// cached per variable.
template <int NV, class T, std::size_t MN>
inline Series<NV, T> subst_linear(const Series<NV, T>& f,
                                  const std::array<std::array<T, MN>, MN>& M,
                                  int nmax) {
  static_assert(MN == static_cast<std::size_t>(NV), "matrix size must match the variable count");
  std::array<Series<NV, T>, NV> image;
  for (int i = 0; i < NV; ++i) {
    Series<NV, T> row;
    for (int j = 0; j < NV; ++j) {
      if (coeff_abs(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > 0.0)
        row += Series<NV, T>::variable(j, M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    image[static_cast<std::size_t>(i)] = row;
  }

  std::array<std::vector<Series<NV, T>>, NV> powers;
  for (int i = 0; i < NV; ++i)
    powers[static_cast<std::size_t>(i)].push_back(Series<NV, T>::constant(T(1)));

  auto power_of = [&](int i, int e) -> const Series<NV, T>& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(Series<NV, T>::mul(cache.back(), image[static_cast<std::size_t>(i)], nmax));
    return cache[static_cast<std::size_t>(e)];
  };

  Series<NV, T> out;
  for (const auto& t : f.terms()) {
    if (expo_degree<NV>(t.k) > nmax) continue;
    Series<NV, T> prod = Series<NV, T>::constant(t.c);
    for (int i = 0; i < NV; ++i)
      if (t.k[static_cast<std::size_t>(i)] > 0)
        prod = Series<NV, T>::mul(prod, power_of(i, t.k[static_cast<std::size_t>(i)]), nmax);
    out += prod;
  }
  return out;
}

}  // namespace halo
