#include "lelong/cpoint.hpp"

#include <algorithm>
#include <cmath>

#include "lelong/error.hpp"

namespace lelong {

CPoint::CPoint(Vec logmod, Vec arg) : logmod_(std::move(logmod)), arg_(std::move(arg)) {
  if (logmod_.size() != arg_.size()) throw Error(ErrorKind::DimensionMismatch, "logmod and arg lengths differ");
  for (std::size_t j = 0; j < logmod_.size(); ++j) {
    if (std::isnan(logmod_[j]) || logmod_[j] == std::numeric_limits<double>::infinity())
      throw Error(ErrorKind::BadParameters, "log-modulus must lie in [-inf, inf)");
    if (!std::isfinite(arg_[j])) throw Error(ErrorKind::BadParameters, "argument must be finite");
    arg_[j] = logmod_[j] == kNegInf ? 0.0 : wrap_angle(arg_[j]);
  }
}

CPoint::CPoint(Vec logmod) : CPoint(logmod, Vec(logmod.size(), 0.0)) {}

CPoint CPoint::ones(int n) { return CPoint(Vec(static_cast<std::size_t>(n), 0.0)); }

CPoint CPoint::zeros(int n) { return CPoint(Vec(static_cast<std::size_t>(n), kNegInf)); }

CPoint CPoint::from_complex(std::span<const Complex> z) {
  Vec lm(z.size()), ar(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double r = std::abs(z[j]);
    lm[j] = r == 0.0 ? kNegInf : std::log(r);
    ar[j] = r == 0.0 ? 0.0 : std::arg(z[j]);
  }
  return CPoint(std::move(lm), std::move(ar));
}

CPoint CPoint::from_moduli(std::span<const double> moduli) {
  Vec lm(moduli.size());
  for (std::size_t j = 0; j < moduli.size(); ++j) lm[j] = moduli[j] == 0.0 ? kNegInf : std::log(moduli[j]);
  return CPoint(std::move(lm));
}

void CPoint::set(int j, double logmod, double arg) {
  const auto k = static_cast<std::size_t>(j);
  logmod_[k] = logmod;
  arg_[k] = logmod == kNegInf ? 0.0 : wrap_angle(arg);
}

bool CPoint::in_torus_complement() const {
  return std::none_of(logmod_.begin(), logmod_.end(), [](double x) { return x == kNegInf; });
}

std::vector<int> CPoint::zero_coords() const {
  std::vector<int> out;
  for (int j = 0; j < dim(); ++j)
    if (is_zero(j)) out.push_back(j);
  return out;
}

double CPoint::log_sup_norm() const {
  double m = kNegInf;
  for (double x : logmod_) m = std::max(m, x);
  return m;
}

Complex CPoint::coord(int j) const {
  if (is_zero(j)) return {0.0, 0.0};
  return std::polar(std::exp(logmod(j)), arg(j));
}

std::vector<Complex> CPoint::to_complex() const {
  std::vector<Complex> out(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j) out[static_cast<std::size_t>(j)] = coord(j);
  return out;
}

CPoint multiply(const CPoint& z, const CPoint& w) {
  if (z.dim() != w.dim()) throw Error(ErrorKind::DimensionMismatch, "multiply: dimension mismatch");
  CPoint out = z;
  for (int j = 0; j < z.dim(); ++j) {
    if (z.is_zero(j) || w.is_zero(j))
      out.set(j, kNegInf, 0.0);
    else
      out.set(j, z.logmod(j) + w.logmod(j), z.arg(j) + w.arg(j));
  }
  return out;
}

CPoint add(const CPoint& z, const CPoint& w) {
  if (z.dim() != w.dim()) throw Error(ErrorKind::DimensionMismatch, "add: dimension mismatch");
  CPoint out = z;
  for (int j = 0; j < z.dim(); ++j) {
    if (w.is_zero(j)) continue;
    if (z.is_zero(j)) {
      out.set(j, w.logmod(j), w.arg(j));
      continue;
    }
    // z_j + w_j = z_j (1 + w_j / z_j) with |w_j / z_j| <= 1 after swapping.
    const bool z_big = z.logmod(j) >= w.logmod(j);
    const double big_lm = z_big ? z.logmod(j) : w.logmod(j);
    const double big_arg = z_big ? z.arg(j) : w.arg(j);
    const double small_lm = z_big ? w.logmod(j) : z.logmod(j);
    const double small_arg = z_big ? w.arg(j) : z.arg(j);
    const Complex ratio = std::polar(std::exp(small_lm - big_lm), small_arg - big_arg);
    const Complex factor = 1.0 + ratio;
    const double r = std::abs(factor);
    if (r == 0.0)
      out.set(j, kNegInf, 0.0);
    else
      out.set(j, big_lm + std::log(r), big_arg + std::arg(factor));
  }
  return out;
}

double euclidean_distance(const CPoint& z, const CPoint& w) {
  if (z.dim() != w.dim()) throw Error(ErrorKind::DimensionMismatch, "distance: dimension mismatch");
  double s = 0.0;
  for (int j = 0; j < z.dim(); ++j) s += std::norm(z.coord(j) - w.coord(j));
  return std::sqrt(s);
}

}  // namespace lelong
