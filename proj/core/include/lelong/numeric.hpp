#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace lelong {

using Vec = std::vector<double>;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Dot product of a non-negative weight vector with log-moduli, using the
/// convention 0 * (-inf) = 0 and w * (-inf) = -inf for w > 0.
inline double dot_log(std::span<const double> weights, std::span<const double> logmod) {
  double s = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0.0) continue;
    if (logmod[j] == kNegInf) return kNegInf;
    s += weights[j] * logmod[j];
  }
  return s;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

/// log(sum exp(x_i)); -inf entries contribute nothing.
inline double log_sum_exp(std::span<const double> x) {
  double m = kNegInf;
  for (double v : x) m = std::max(m, v);
  if (m == kNegInf) return kNegInf;
  if (std::isinf(m)) return m;
  double s = 0.0;
  for (double v : x) s += std::exp(v - m);
  return m + std::log(s);
}

/// log(sum w_i exp(x_i)) for non-negative weights.
inline double log_sum_exp(std::span<const double> x, std::span<const double> w) {
  double m = kNegInf;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (w[i] > 0.0) m = std::max(m, x[i]);
  if (m == kNegInf) return kNegInf;
  if (std::isinf(m)) return m;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (w[i] > 0.0) s += w[i] * std::exp(x[i] - m);
  return m + std::log(s);
}

inline double log_plus(double logmod) { return logmod > 0.0 ? logmod : 0.0; }

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace lelong
