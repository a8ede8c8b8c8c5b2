#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "lelong/cpoint.hpp"
#include "lelong/function.hpp"
#include "lelong/parallel.hpp"

namespace lelong::detail {

/// Final polar value of one coordinate at one quadrature node.
struct CoordNode {
  double lm;
  double arg;
  double weight;
};
using Table = std::vector<CoordNode>;

/// log|a + b| and arg(a + b) for a = e^{la + i aa}, b = e^{lb + i ab},
/// computed relative to the larger modulus.
inline std::pair<double, double> polar_sum(double la, double aa, double lb, double ab) {
  if (la == kNegInf) return {lb, ab};
  if (lb == kNegInf) return {la, aa};
  if (lb > la) {
    std::swap(la, lb);
    std::swap(aa, ab);
  }
  const Complex f = 1.0 + std::polar(std::exp(lb - la), ab - aa);
  const double r = std::abs(f);
  if (r == 0.0) return {kNegInf, 0.0};
  return {la + std::log(r), aa + std::arg(f)};
}

/// Calls visit(outer, value, weight) for every tensor node. All visits for a
/// given outer index (the node index of the first variable) happen on one
/// thread in a fixed order, so per-outer accumulators reduce deterministically.
template <class Visit>
void for_each_node(const EvaluableFunction& u, const std::vector<Table>& tables, Visit&& visit) {
  const std::size_t n = tables.size();
  parallel_for(tables[0].size(), [&](std::size_t outer) {
    CPoint pt = CPoint::zeros(static_cast<int>(n));
    std::vector<std::size_t> idx(n, 0);
    idx[0] = outer;
    for (;;) {
      double w = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        const CoordNode& c = tables[j][idx[j]];
        pt.set(static_cast<int>(j), c.lm, c.arg);
        w *= c.weight;
      }
      visit(outer, u.eval(pt), w);
      std::size_t j = 1;
      while (j < n && ++idx[j] == tables[j].size()) idx[j++] = 0;
      if (j >= n) break;
    }
  });
}

}  // namespace lelong::detail
