#include "lelong/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lelong/error.hpp"

namespace lelong {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLadderDepth = 52;
constexpr int kMaxGridDim = 4;
constexpr int kRandomPoints = 4096;

struct Counted {
  const std::function<double(const Vec&)>& f;
  std::size_t evals = 0;
  double operator()(const Vec& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? kInf : v;
  }
};

double clamp_to(double t, double lo, double hi) { return std::min(hi, std::max(lo, t)); }

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.coarse_grid < 1 || cfg.refine_iters < 0 || cfg.multistart < 1)
    throw Error(ErrorKind::BadParameters, "search counts must be positive");
  if (cfg.radius_override && !(*cfg.radius_override > 0.0))
    throw Error(ErrorKind::BadParameters, "radius_override must be positive");
}

double golden_section(const std::function<double(double)>& f, double a, double b, int max_iter) {
  if (a > b) std::swap(a, b);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  double best = fc <= fd ? c : d, fbest = std::min(fc, fd);
  for (int it = 0; it < max_iter; ++it) {
    if (b - a <= 1e-15 * (std::abs(a) + std::abs(b)) + 1e-300) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
      if (fc < fbest) fbest = fc, best = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
      if (fd < fbest) fbest = fd, best = d;
    }
  }
  return best;
}

SearchResult minimize_box(const std::function<double(const Vec&)>& f, const SearchBox& box, const SearchConfig& cfg) {
  validate(cfg);
  const std::size_t k = box.center.size();
  if (box.lo.size() != k || box.hi.size() != k) throw Error(ErrorKind::DimensionMismatch, "search box lengths");
  Counted eval{f};
  Vec span(k);
  for (std::size_t i = 0; i < k; ++i) span[i] = box.hi[i] - box.lo[i];

  std::vector<std::pair<double, Vec>> cands;
  auto add = [&](Vec x) {
    const double v = eval(x);
    cands.emplace_back(v, std::move(x));
  };
  add(box.center);

  if (k > 0 && static_cast<int>(k) <= kMaxGridDim && cfg.coarse_grid > 1) {
    std::vector<int> idx(k, 0);
    for (;;) {
      Vec x(k);
      for (std::size_t i = 0; i < k; ++i) x[i] = box.lo[i] + span[i] * idx[i] / (cfg.coarse_grid - 1);
      add(std::move(x));
      std::size_t i = 0;
      while (i < k && ++idx[i] == cfg.coarse_grid) idx[i++] = 0;
      if (i == k) break;
    }
  } else if (k > 0 && cfg.coarse_grid > 1) {
    std::mt19937_64 rng(0x5eedULL + k);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < kRandomPoints; ++s) {
      Vec x(k);
      for (std::size_t i = 0; i < k; ++i) x[i] = box.lo[i] + span[i] * unit(rng);
      add(std::move(x));
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (span[i] <= 0.0) continue;
    for (int s = 0; s <= kLadderDepth; ++s) {
      for (double sign : {1.0, -1.0}) {
        Vec x = box.center;
        x[i] = clamp_to(box.center[i] + sign * std::ldexp(span[i], -s), box.lo[i], box.hi[i]);
        if (x[i] != box.center[i]) add(std::move(x));
      }
    }
  }

  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<double, Vec>> starts;
  for (const auto& c : cands) {
    if (static_cast<int>(starts.size()) >= cfg.multistart) break;
    bool dup = false;
    for (const auto& s : starts) dup = dup || s.second == c.second;
    if (!dup) starts.push_back(c);
  }

  SearchResult best{starts.front().second, starts.front().first, 0};
  for (auto [fx, x] : starts) {
    for (int iter = 0; iter < cfg.refine_iters; ++iter) {
      const double f_before = fx;
      const Vec x_before = x;
      for (std::size_t i = 0; i < k; ++i) {
        if (span[i] <= 0.0) continue;
        const double xi = x[i];
        double best_t = xi, best_f = fx;
        Vec trial = x;
        for (int s = 0; s <= kLadderDepth; ++s) {
          for (double sign : {1.0, -1.0}) {
            const double t = clamp_to(xi + sign * std::ldexp(span[i], -s), box.lo[i], box.hi[i]);
            if (t == xi) continue;
            trial[i] = t;
            const double v = eval(trial);
            if (v < best_f) best_f = v, best_t = t;
          }
        }
        if (best_t == xi) continue;
        const double step = best_t - xi;
        const double a = clamp_to(xi + 0.5 * step, box.lo[i], box.hi[i]);
        const double b = clamp_to(xi + 2.0 * step, box.lo[i], box.hi[i]);
        auto line = [&](double t) {
          trial[i] = t;
          return eval(trial);
        };
        const double t = golden_section(line, a, b);
        const double ft = line(t);
        if (ft < best_f) best_f = ft, best_t = t;
        x[i] = best_t;
        fx = best_f;
      }
      // Extrapolate along the net move of this sweep.
      Vec d(k);
      bool moved = false;
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = x[i] - x_before[i];
        moved = moved || d[i] != 0.0;
      }
      if (moved && k > 1) {
        auto along = [&](double t) {
          Vec y(k);
          for (std::size_t i = 0; i < k; ++i) y[i] = clamp_to(x[i] + t * d[i], box.lo[i], box.hi[i]);
          return y;
        };
        double best_t = 0.0, best_f = fx;
        for (int j = -6; j <= 8; ++j) {
          const double t = std::ldexp(1.0, j);
          const double v = eval(along(t));
          if (v < best_f) best_f = v, best_t = t;
        }
        if (best_t != 0.0) {
          const double t = golden_section([&](double s) { return eval(along(s)); }, 0.5 * best_t, 2.0 * best_t);
          const double ft = eval(along(t));
          if (ft < best_f) best_f = ft, best_t = t;
          x = along(best_t);
          fx = best_f;
        }
      }
      if (!(fx < f_before)) break;
    }
    if (fx < best.value) {
      best.value = fx;
      best.x = x;
    }
  }
  best.evaluations = eval.evals;
  return best;
}

}  // namespace lelong
