#pragma once

#include <span>
#include <vector>

#include "lelong/numeric.hpp"

namespace lelong {

/// Residual bound below which a point counts as a convex combination.
inline constexpr double kMembershipTol = 1e-9;
/// A box projection must miss the hull by more than this to break lowerness.
inline constexpr double kLowerFailMargin = 1e-7;
inline constexpr int kMaxDim = 6;

/// Compact convex S in the non-negative orthant, 0 in S, held as the convex
/// hull of a generator list. The zero vector is always the first generator;
/// the remaining generators are kept as given (possibly redundant).
class Polytope {
 public:
  /// Adjoins the origin. Throws InvalidVertex for negative or non-finite
  /// coordinates, DimensionMismatch for wrong-length generators.
  Polytope(int n, std::vector<Vec> generators);

  int dim() const noexcept { return n_; }
  const std::vector<Vec>& vertices() const noexcept { return vertices_; }

 private:
  int n_;
  std::vector<Vec> vertices_;
};

Polytope make_polytope(int n, std::vector<Vec> generators);

/// ch{0, e_1, ..., e_n}
Polytope simplex(int n, double scale = 1.0);
/// [0, side]^n
Polytope unit_box(int n, double side = 1.0);
/// t * P for t >= 0.
Polytope scaled(const Polytope& p, double t);

/// max over generators of <x, xi>.
double support(const Polytope& p, std::span<const double> xi);
double sigma(const Polytope& p);

/// Least-squares residual of the best convex combination of the generators
/// reproducing x (0 iff x lies in the hull).
double membership_residual(const Polytope& p, std::span<const double> x);
bool contains(const Polytope& p, std::span<const double> x, double tol = kMembershipTol);
/// Every generator of inner lies in outer.
bool is_subset(const Polytope& inner, const Polytope& outer, double tol = kMembershipTol);

bool is_lower(const Polytope& p);
Polytope lower_hull(const Polytope& p);

/// Zero slice {x in P : x_j = 0 for j in zeroed} with the zeroed coordinates
/// dropped. Indices are 0-based; zeroed must be a non-empty proper subset.
Polytope face_restrict(const Polytope& p, std::span<const int> zeroed);

/// Approximate Euclidean projection of x onto the hull.
Vec nearest_hull_point(const Polytope& p, std::span<const double> x);

Polytope hull_union(const Polytope& p, const Polytope& q);

/// Irredundant generator set: exact duplicates are merged first, then v is
/// kept iff it is not in the hull of the other generators.
std::vector<Vec> extreme_points(const Polytope& p);

}  // namespace lelong
