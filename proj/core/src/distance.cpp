#include "lelong/distance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "lelong/error.hpp"

namespace lelong {

DistanceFn DistanceFn::euclidean(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "distance dimension must be positive");
  DistanceFn d;
  d.kind_ = Kind::Euclidean;
  d.n_ = n;
  return d;
}

DistanceFn DistanceFn::weighted_sup(Vec weights) {
  if (weights.empty()) throw Error(ErrorKind::BadParameters, "weighted_sup needs weights");
  double inv2 = 0.0, top = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorKind::BadParameters, "weights must be positive");
    inv2 += 1.0 / (w * w);
    top = std::max(top, w);
  }
  DistanceFn d;
  d.kind_ = Kind::WeightedSup;
  d.n_ = static_cast<int>(weights.size());
  // min of max_j w_j |z_j| over |z| = 1 is attained with w_j |z_j| all equal.
  d.r_ = 1.0 / std::sqrt(inv2);
  d.s_ = top;
  d.weights_ = std::move(weights);
  return d;
}

DistanceFn DistanceFn::linear(int n, std::vector<Complex> matrix_row_major) {
  if (n < 1 || matrix_row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error(ErrorKind::DimensionMismatch, "linear distance needs an n x n matrix");
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = matrix_row_major[static_cast<std::size_t>(i * n + j)];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  if (!(sv.minCoeff() > 0.0)) throw Error(ErrorKind::BadParameters, "linear distance matrix is singular");
  DistanceFn d;
  d.kind_ = Kind::Custom;
  d.n_ = n;
  d.r_ = sv.minCoeff();
  d.s_ = sv.maxCoeff();
  d.norm_ = [a](std::span<const Complex> z) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(z.size()));
    for (std::size_t j = 0; j < z.size(); ++j) v(static_cast<Eigen::Index>(j)) = z[j];
    return (a * v).norm();
  };
  return d;
}

DistanceFn DistanceFn::custom(int n, Norm norm, int samples, std::uint64_t seed) {
  if (n < 1 || samples < 1 || !norm) throw Error(ErrorKind::BadParameters, "custom distance parameters");
  DistanceFn d;
  d.kind_ = Kind::Custom;
  d.n_ = n;
  d.norm_ = std::move(norm);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int s = 0; s < samples; ++s) {
    double len = 0.0;
    for (auto& c : z) {
      c = {g(rng), g(rng)};
      len += std::norm(c);
    }
    len = std::sqrt(len);
    for (auto& c : z) c /= len;
    const double m = d.norm_(z);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  if (!(lo > 0.0)) throw Error(ErrorKind::BadParameters, "custom distance vanishes on a unit sample");
  d.r_ = lo;
  d.s_ = hi;
  return d;
}

double DistanceFn::operator()(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "distance argument length");
  switch (kind_) {
    case Kind::Euclidean: {
      double s = 0.0;
      for (const auto& c : z) s += std::norm(c);
      return std::sqrt(s);
    }
    case Kind::WeightedSup: {
      double m = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) m = std::max(m, weights_[j] * std::abs(z[j]));
      return m;
    }
    case Kind::Custom:
      return norm_(z);
  }
  return 0.0;
}

double DistanceFn::of_moduli(std::span<const double> d) const {
  if (static_cast<int>(d.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "distance argument length");
  if (kind_ == Kind::Euclidean) {
    double s = 0.0;
    for (double x : d) s += x * x;
    return std::sqrt(s);
  }
  if (kind_ == Kind::WeightedSup) {
    double m = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) m = std::max(m, weights_[j] * std::abs(d[j]));
    return m;
  }
  throw Error(ErrorKind::BadParameters, "custom distances are not modulus-only");
}

}  // namespace lelong
