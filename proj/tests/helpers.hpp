#pragma once

#include <cmath>

#include "halo/params.hpp"

namespace testutil {

inline double rel_err(double computed, double truth) {
  const double denom = std::max(std::abs(truth), 1e-300);
  return std::abs(computed - truth) / denom;
}

inline constexpr double mu_em = 1.2154e-2;
inline constexpr double mu_sb = 3.040423e-6;
inline constexpr double mu_sv = 2.7e20 / (1.9891e30 + 2.7e20);

inline constexpr double A_em = 4.15559e-9;
inline constexpr double A_sb = 1.96782e-12;
inline constexpr double A_sv = 4.54776e-14;

}  // namespace testutil
