#include "lelong/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lelong/error.hpp"
#include "nnls.hpp"

namespace lelong {

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw Error(ErrorKind::BadParameters, "dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                                              std::to_string(n));
}

double residual_against(const std::vector<const Vec*>& gens, std::span<const double> x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto m = static_cast<Eigen::Index>(gens.size());
  if (m == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd a(n + 1, m);
  Eigen::VectorXd b(n + 1);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) a(j, k) = (*gens[k])[j];
    a(n, k) = 1.0;
  }
  for (Eigen::Index j = 0; j < n; ++j) b[j] = x[j];
  b[n] = 1.0;
  return detail::nnls(a, b).residual;
}

std::vector<const Vec*> all_of_them(const Polytope& p) {
  std::vector<const Vec*> out;
  out.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) out.push_back(&v);
  return out;
}

}  // namespace

Polytope::Polytope(int n, std::vector<Vec> generators) : n_(n) {
  check_dim(n);
  vertices_.reserve(generators.size() + 1);
  vertices_.emplace_back(static_cast<std::size_t>(n), 0.0);
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != n)
      throw Error(ErrorKind::DimensionMismatch,
                  "generator has " + std::to_string(g.size()) + " coordinates, expected " + std::to_string(n));
    for (double c : g) {
      if (!std::isfinite(c) || c < 0.0)
        throw Error(ErrorKind::InvalidVertex, "generator coordinates must be finite and non-negative");
    }
    if (is_zero(g)) continue;
    vertices_.push_back(std::move(g));
  }
}

Polytope make_polytope(int n, std::vector<Vec> generators) { return Polytope(n, std::move(generators)); }

Polytope simplex(int n, double scale) {
  std::vector<Vec> g;
  for (int j = 0; j < n; ++j) {
    Vec e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(j)] = scale;
    g.push_back(std::move(e));
  }
  return Polytope(n, std::move(g));
}

Polytope unit_box(int n, double side) {
  std::vector<Vec> g;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Vec v(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) v[static_cast<std::size_t>(j)] = side;
    g.push_back(std::move(v));
  }
  return Polytope(n, std::move(g));
}

Polytope scaled(const Polytope& p, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::BadParameters, "scale factor must be finite and >= 0");
  std::vector<Vec> g;
  for (const auto& v : p.vertices()) {
    Vec w = v;
    for (double& c : w) c *= t;
    g.push_back(std::move(w));
  }
  return Polytope(p.dim(), std::move(g));
}

double support(const Polytope& p, std::span<const double> xi) {
  double best = 0.0;  // the origin is always a generator
  for (const auto& v : p.vertices()) best = std::max(best, dot(v, xi));
  return best;
}

double sigma(const Polytope& p) {
  Vec ones(static_cast<std::size_t>(p.dim()), 1.0);
  return support(p, ones);
}

double membership_residual(const Polytope& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.dim())
    throw Error(ErrorKind::DimensionMismatch, "point dimension does not match polytope");
  return residual_against(all_of_them(p), x);
}

bool contains(const Polytope& p, std::span<const double> x, double tol) { return membership_residual(p, x) <= tol; }

bool is_subset(const Polytope& inner, const Polytope& outer, double tol) {
  if (inner.dim() != outer.dim()) throw Error(ErrorKind::DimensionMismatch, "polytopes differ in dimension");
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Vec& v) { return contains(outer, v, tol); });
}

namespace {

Vec zero_coords(const Vec& v, unsigned mask) {
  Vec w = v;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (mask & (1u << j)) w[j] = 0.0;
  return w;
}

}  // namespace

bool is_lower(const Polytope& p) {
  const unsigned full = 1u << p.dim();
  for (const auto& v : p.vertices()) {
    for (unsigned mask = 1; mask < full; ++mask) {
      if (membership_residual(p, zero_coords(v, mask)) > kLowerFailMargin) return false;
    }
  }
  return true;
}

Polytope lower_hull(const Polytope& p) {
  const unsigned full = 1u << p.dim();
  std::vector<Vec> gens;
  for (const auto& v : p.vertices()) {
    for (unsigned mask = 0; mask < full; ++mask) {
      Vec w = zero_coords(v, mask);
      if (std::find(gens.begin(), gens.end(), w) == gens.end()) gens.push_back(std::move(w));
    }
  }
  return Polytope(p.dim(), std::move(gens));
}

Polytope face_restrict(const Polytope& p, std::span<const int> zeroed) {
  const int n = p.dim();
  std::vector<bool> drop(static_cast<std::size_t>(n), false);
  for (int j : zeroed) {
    if (j < 0 || j >= n) throw Error(ErrorKind::BadParameters, "face index out of range");
    drop[static_cast<std::size_t>(j)] = true;
  }
  const auto dropped = static_cast<int>(std::count(drop.begin(), drop.end(), true));
  if (dropped == 0 || dropped == n)
    throw Error(ErrorKind::BadParameters, "face restriction needs a non-empty proper index subset");

  // All generators are non-negative, so a convex combination has x_J = 0
  // only if every generator it uses has v_J = 0: the slice is a face.
  std::vector<Vec> gens;
  for (const auto& v : p.vertices()) {
    bool on_face = true;
    for (int j = 0; j < n; ++j)
      if (drop[static_cast<std::size_t>(j)] && v[static_cast<std::size_t>(j)] != 0.0) on_face = false;
    if (!on_face) continue;
    Vec w;
    for (int j = 0; j < n; ++j)
      if (!drop[static_cast<std::size_t>(j)]) w.push_back(v[static_cast<std::size_t>(j)]);
    gens.push_back(std::move(w));
  }
  return Polytope(n - dropped, std::move(gens));
}

Vec nearest_hull_point(const Polytope& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.dim()) throw Error(ErrorKind::DimensionMismatch, "nearest_hull_point length");
  // Heavily weighted sum-to-one row turns NNLS into the projection onto the hull.
  constexpr double kRowWeight = 1e4;
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto m = static_cast<Eigen::Index>(p.vertices().size());
  Eigen::MatrixXd a(n + 1, m);
  Eigen::VectorXd b(n + 1);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) a(j, k) = p.vertices()[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    a(n, k) = kRowWeight;
  }
  for (Eigen::Index j = 0; j < n; ++j) b[j] = x[static_cast<std::size_t>(j)];
  b[n] = kRowWeight;
  const auto sol = detail::nnls(a, b);
  const double total = sol.x.sum();
  Vec q(static_cast<std::size_t>(n), 0.0);
  if (!(total > 0.0)) return q;
  for (Eigen::Index k = 0; k < m; ++k)
    for (Eigen::Index j = 0; j < n; ++j)
      q[static_cast<std::size_t>(j)] += sol.x[k] / total * p.vertices()[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  return q;
}

Polytope hull_union(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "hull_union of polytopes with different dimension");
  std::vector<Vec> gens = p.vertices();
  gens.insert(gens.end(), q.vertices().begin(), q.vertices().end());
  return Polytope(p.dim(), std::move(gens));
}

std::vector<Vec> extreme_points(const Polytope& p) {
  std::vector<Vec> unique;
  for (const auto& v : p.vertices())
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);

  std::vector<Vec> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<const Vec*> others;
    for (std::size_t k = 0; k < unique.size(); ++k)
      if (k != i) others.push_back(&unique[k]);
    if (residual_against(others, unique[i]) > kMembershipTol) out.push_back(unique[i]);
  }
  return out;
}

}  // namespace lelong
