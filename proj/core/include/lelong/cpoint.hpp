#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lelong/numeric.hpp"

namespace lelong {

using Complex = std::complex<double>;

/// A point of C^n in per-coordinate polar form. logmod[j] = log|z_j| with
/// -inf meaning z_j = 0 exactly; arg[j] is kept in [0, 2*pi) and forced to 0
/// on zero coordinates.
class CPoint {
 public:
  CPoint() = default;
  CPoint(Vec logmod, Vec arg);
  /// Argument-free point (all args 0).
  explicit CPoint(Vec logmod);

  static CPoint ones(int n);
  static CPoint zeros(int n);
  static CPoint from_complex(std::span<const Complex> z);
  static CPoint from_moduli(std::span<const double> moduli);

  int dim() const noexcept { return static_cast<int>(logmod_.size()); }
  const Vec& logmod() const noexcept { return logmod_; }
  const Vec& arg() const noexcept { return arg_; }
  double logmod(int j) const { return logmod_[static_cast<std::size_t>(j)]; }
  double arg(int j) const { return arg_[static_cast<std::size_t>(j)]; }

  void set(int j, double logmod, double arg);

  bool is_zero(int j) const { return logmod_[static_cast<std::size_t>(j)] == kNegInf; }
  bool in_torus_complement() const;  // no zero coordinate
  std::vector<int> zero_coords() const;
  /// log of the sup norm; -inf at the origin.
  double log_sup_norm() const;

  Complex coord(int j) const;
  std::vector<Complex> to_complex() const;

 private:
  Vec logmod_;
  Vec arg_;
};

/// Coordinatewise product Zw: log-moduli add, arguments add mod 2*pi.
CPoint multiply(const CPoint& z, const CPoint& w);
/// Coordinatewise sum z + w, computed relative to the larger modulus.
CPoint add(const CPoint& z, const CPoint& w);
/// Euclidean distance in C^n.
double euclidean_distance(const CPoint& z, const CPoint& w);

}  // namespace lelong
