#pragma once

#include <functional>
#include <vector>

namespace lelong {

/// One node of the per-variable disc rule: the point rho e^{i theta} of the
/// closed unit disc with its share of the kernel mass.
struct KernelNode {
  double rho;
  double theta;
  double weight;
};

/// Rotation-invariant bump kernel on the unit disc, chi(rho) = exp(-1/(1 - rho^2)),
/// discretized as a tensor rule: Gauss-Legendre in s = rho^2 (the area
/// variable, where radial averages of smooth integrands are smooth) times a
/// uniform angular rule. Node weights are normalized to sum to exactly 1.
class Kernel {
 public:
  explicit Kernel(int radial = 32, int angular = 32);

  int radial() const noexcept { return radial_; }
  int angular() const noexcept { return angular_; }
  const std::vector<KernelNode>& nodes() const noexcept { return nodes_; }

  /// Unnormalized profile.
  static double profile(double rho);
  /// The constant c with c * integral_disc chi = 1.
  double per_variable_mass() const noexcept { return mass_; }
  /// |raw quadrature mass * per_variable_mass - 1| for this order.
  double mass_defect() const noexcept { return defect_; }

  /// Weighted radial average sum_nodes weight * f(rho).
  double radial_moment(const std::function<double(double)>& f) const;

  Kernel doubled() const { return Kernel(2 * radial_, 2 * angular_); }
  Kernel halved() const { return Kernel(radial_ / 2 > 0 ? radial_ / 2 : 1, angular_ / 2 > 0 ? angular_ / 2 : 1); }

 private:
  int radial_;
  int angular_;
  double mass_ = 0.0;
  double defect_ = 0.0;
  std::vector<KernelNode> nodes_;
};

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace lelong
