#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "lelong/numeric.hpp"

namespace lelong {

struct SearchConfig {
  int coarse_grid = 9;
  int refine_iters = 30;
  int multistart = 4;
  /// Replaces the derived localization radius when set.
  std::optional<double> radius_override;
};

void validate(const SearchConfig& cfg);

/// Axis-aligned search box with a distinguished point (the witness whose
/// value the result can never exceed).
struct SearchBox {
  Vec lo;
  Vec hi;
  Vec center;
};

struct SearchResult {
  Vec x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Derivative-free minimization of f over the box: coarse grid (seeded random
/// points above four dimensions), geometric ladders of points along every
/// axis through the center (so minimizers many orders of magnitude closer to
/// the center than the box width are still bracketed), then multistart
/// coordinatewise refinement with golden-section line searches.
/// NaN values count as +inf.
SearchResult minimize_box(const std::function<double(const Vec&)>& f, const SearchBox& box, const SearchConfig& cfg);

/// Golden-section minimization on [a, b]; returns the best abscissa seen.
double golden_section(const std::function<double(double)>& f, double a, double b, int max_iter = 200);

}  // namespace lelong
