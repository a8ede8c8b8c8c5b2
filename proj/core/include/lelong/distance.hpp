#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lelong/cpoint.hpp"

namespace lelong {

/// Complex-homogeneous distance function mu on C^n with constants
/// r_mu |z| <= mu(z) <= s_mu |z|.
class DistanceFn {
 public:
  enum class Kind { Euclidean, WeightedSup, Custom };
  using Norm = std::function<double(std::span<const Complex>)>;

  static DistanceFn euclidean(int n);
  /// max_j w_j |z_j|, w_j > 0.
  static DistanceFn weighted_sup(Vec weights);
  /// |A z| for an invertible complex n x n matrix given row-major; r and s
  /// are the extreme singular values.
  static DistanceFn linear(int n, std::vector<Complex> matrix_row_major);
  /// Arbitrary user norm; r and s are estimated from `samples` seeded unit
  /// vectors (so they are only as good as the sampling).
  static DistanceFn custom(int n, Norm norm, int samples = 1000, std::uint64_t seed = 7);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return n_; }
  double r_mu() const noexcept { return r_; }
  double s_mu() const noexcept { return s_; }
  const Vec& weights() const noexcept { return weights_; }

  double operator()(std::span<const Complex> z) const;
  /// True when mu(z) depends only on (|z_1|, ..., |z_n|).
  bool modulus_only() const noexcept { return kind_ != Kind::Custom; }
  /// mu evaluated on a vector of moduli; only for modulus_only() kinds.
  double of_moduli(std::span<const double> d) const;

 private:
  DistanceFn() = default;
  Kind kind_ = Kind::Euclidean;
  int n_ = 0;
  double r_ = 1.0;
  double s_ = 1.0;
  Vec weights_;
  Norm norm_;
};

}  // namespace lelong
