#include "lelong/kernel.hpp"

#include <cmath>

#include "lelong/error.hpp"
#include "lelong/numeric.hpp"

namespace lelong {

void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  // P_n and P_n' at x by the three-term recurrence.
  auto legendre = [n](double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    p = n == 0 ? 1.0 : p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
  };
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(x, p, dp);
    const auto k = static_cast<std::size_t>(i);
    nodes[k] = 0.5 * (1.0 - x);
    weights[k] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

double Kernel::profile(double rho) {
  if (!(rho >= 0.0) || rho >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - rho * rho));
}

namespace {

// integral_0^1 chi(rho) rho drho = (1/2) integral_0^1 exp(-1/(1-s)) ds
double radial_mass(int order) {
  std::vector<double> s, w;
  gauss_legendre_unit(order, s, w);
  double m = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) m += w[i] * 0.5 * std::exp(-1.0 / (1.0 - s[i]));
  return m;
}

}  // namespace

Kernel::Kernel(int radial, int angular) : radial_(radial), angular_(angular) {
  if (radial < 1 || angular < 1) throw Error(ErrorKind::BadParameters, "kernel orders must be positive");
  std::vector<double> s, w;
  gauss_legendre_unit(radial, s, w);
  std::vector<double> raw(s.size());
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    raw[i] = w[i] * 0.5 * std::exp(-1.0 / (1.0 - s[i]));
    total += raw[i];
  }
  const double reference = radial_mass(256);
  mass_ = 1.0 / (kTwoPi * reference);
  defect_ = std::abs(total / reference - 1.0);
  nodes_.reserve(s.size() * static_cast<std::size_t>(angular));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double rho = std::sqrt(s[i]);
    for (int b = 0; b < angular; ++b)
      nodes_.push_back({rho, kTwoPi * b / angular, raw[i] / total / angular});
  }
}

double Kernel::radial_moment(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (const auto& node : nodes_) acc += node.weight * f(node.rho);
  return acc;
}

}  // namespace lelong
