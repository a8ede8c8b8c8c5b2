#include <cmath>

#include "lelong/error.hpp"
#include "lelong/parallel.hpp"
#include "lelong/regularize.hpp"

namespace lelong {

int dini_index(const std::vector<Vec>& f_seq, std::span<const double> g, double tol) {
  if (f_seq.empty()) throw Error(ErrorKind::BadParameters, "dini_index needs at least one function");
  for (const auto& f : f_seq)
    if (f.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "dini_index grid sizes differ");
  for (std::size_t j = 1; j < f_seq.size(); ++j)
    for (std::size_t p = 0; p < g.size(); ++p)
      if (f_seq[j][p] > f_seq[j - 1][p] + tol)
        throw Error(ErrorKind::NotDecreasing, "member " + std::to_string(j + 1) + " exceeds its predecessor");
  auto below = [&](const Vec& f) {
    for (std::size_t p = 0; p < g.size(); ++p)
      if (!(f[p] < g[p])) return false;
    return true;
  };
  if (!below(f_seq.back())) throw Error(ErrorKind::NeverBelow, "the last member is not below g");
  int j0 = static_cast<int>(f_seq.size()) - 1;
  while (j0 > 0 && below(f_seq[static_cast<std::size_t>(j0 - 1)])) --j0;
  return j0;
}

int dini_index(const std::vector<FunctionPtr>& f_seq, const EvaluableFunction& g, std::span<const CPoint> grid,
               double tol) {
  std::vector<Vec> values(f_seq.size(), Vec(grid.size()));
  Vec gv(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) gv[p] = g.eval(grid[p]);
  for (std::size_t j = 0; j < f_seq.size(); ++j) {
    if (!f_seq[j]) throw Error(ErrorKind::BadParameters, "null function in sequence");
    parallel_for(grid.size(), [&](std::size_t p) { values[j][p] = f_seq[j]->eval(grid[p]); });
  }
  return dini_index(values, gv, tol);
}

}  // namespace lelong
