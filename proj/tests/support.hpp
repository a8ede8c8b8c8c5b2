#pragma once

// Seeded generators and small helpers shared by the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lelong/cpoint.hpp"
#include "lelong/polytope.hpp"

namespace tsupport {

inline std::string fixture(const std::string& name) { return std::string(LELONG_FIXTURE_DIR) + "/" + name; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

  lelong::Vec vec(int n, double a, double b) {
    lelong::Vec v(static_cast<std::size_t>(n));
    for (auto& x : v) x = uniform(a, b);
    return v;
  }

  // Generators in [0, 2]^n; coordinates are zero with probability 0.25, else
  // at least 0.05 so that descent limits settle at moderate t.
  lelong::Polytope polytope(int n, int gens) {
    std::vector<lelong::Vec> g;
    for (int k = 0; k < gens; ++k) {
      lelong::Vec v(static_cast<std::size_t>(n));
      for (auto& x : v) x = coin(0.25) ? 0.0 : uniform(0.05, 2.0);
      g.push_back(v);
    }
    return lelong::make_polytope(n, g);
  }

  lelong::CPoint point(int n, double lo, double hi) { return lelong::CPoint(vec(n, lo, hi), vec(n, -3.0, 3.0)); }

  // Some coordinates replaced by exact zeros (at least one stays non-zero).
  lelong::CPoint point_with_zeros(int n, double lo, double hi) {
    auto z = point(n, lo, hi);
    const int keep = integer(0, n - 1);
    for (int j = 0; j < n; ++j)
      if (j != keep && coin(0.5)) z.set(j, lelong::kNegInf, 0.0);
    return z;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double dot(const lelong::Vec& a, const lelong::Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// max over vertices, written out again here so tests do not lean on the
// library's own support routine.
inline double vertex_max(const std::vector<lelong::Vec>& verts, const lelong::Vec& xi) {
  double best = -INFINITY;
  for (const auto& v : verts) best = std::max(best, dot(v, xi));
  return best;
}

}  // namespace tsupport
