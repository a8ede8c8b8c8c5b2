#include "lelong/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "lelong/distance.hpp"
#include "lelong/error.hpp"
#include "lelong/logsupport.hpp"
#include "lelong/parallel.hpp"
#include "lelong/regularize.hpp"

namespace lelong {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRowTol = 1e-9;

void check_radii(std::span<const double> radii, double min_radius) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i]) || !(radii[i] >= min_radius))
      throw Error(ErrorKind::BadParameters, "radii must be finite and >= " + format_number(min_radius));
    if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(ErrorKind::BadParameters, "radii must increase");
  }
}


bool last_three_diverge(const Report& r) {
  if (r.rows.size() < 3) return false;
  const std::size_t base = r.rows.size() - 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (!(r.number(base + i, "value") > kDivergenceThresholds[i])) return false;
  return true;
}

}  // namespace

CPoint LogRay::at(double radius) const {
  const double lr = std::log(radius);
  Vec lm(exponent.size()), ar(exponent.size(), 0.0);
  for (std::size_t j = 0; j < exponent.size(); ++j) {
    lm[j] = exponent[j] == kNegInf ? kNegInf : exponent[j] * lr;
    if (!arg.empty()) ar[j] = arg[j];
  }
  return CPoint(std::move(lm), std::move(ar));
}

std::vector<int> LogRay::zero_coords() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < exponent.size(); ++j)
    if (exponent[j] == kNegInf) out.push_back(static_cast<int>(j));
  return out;
}

double lipschitz_estimate(const EvaluableFunction& f, int pairs, double box_radius, std::uint64_t seed) {
  if (pairs < 1) throw Error(ErrorKind::BadParameters, "pairs must be >= 1");
  if (!(box_radius > 0.0)) throw Error(ErrorKind::BadParameters, "box radius must be positive");
  const auto n = static_cast<std::size_t>(f.dim());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-box_radius, box_radius);
  std::uniform_real_distribution<double> expo(-6.0, 0.0);
  std::normal_distribution<double> gauss;
  std::vector<std::pair<std::vector<Complex>, std::vector<Complex>>> samples(static_cast<std::size_t>(pairs));
  for (int i = 0; i < pairs; ++i) {
    auto& [z, w] = samples[static_cast<std::size_t>(i)];
    z.resize(n);
    w.resize(n);
    for (auto& c : z) c = {box(rng), box(rng)};
    if (i % 2 == 0) {
      for (auto& c : w) c = {box(rng), box(rng)};
    } else {
      std::vector<Complex> dir(n);
      double len = 0.0;
      for (auto& c : dir) {
        c = {gauss(rng), gauss(rng)};
        len += std::norm(c);
      }
      const double eps = std::pow(10.0, expo(rng)) / std::sqrt(len);
      for (std::size_t j = 0; j < n; ++j) w[j] = z[j] + eps * dir[j];
    }
  }
  Vec quotients(samples.size(), 0.0);
  parallel_for(samples.size(), [&](std::size_t i) {
    const auto& [z, w] = samples[i];
    double dist = 0.0;
    for (std::size_t j = 0; j < n; ++j) dist += std::norm(z[j] - w[j]);
    dist = std::sqrt(dist);
    if (dist == 0.0) return;
    const double fz = f.eval(CPoint::from_complex(z));
    const double fw = f.eval(CPoint::from_complex(w));
    if (!std::isfinite(fz) || !std::isfinite(fw)) return;
    quotients[i] = std::abs(fz - fw) / dist;
  });
  return *std::max_element(quotients.begin(), quotients.end());
}

Report modulus_profile(const Polytope& p, const CPoint& w, const LogRay& ray, std::span<const double> radii) {
  if (w.dim() != p.dim() || static_cast<int>(ray.exponent.size()) != p.dim() ||
      (!ray.arg.empty() && ray.arg.size() != ray.exponent.size()))
    throw Error(ErrorKind::DimensionMismatch, "modulus_profile dimensions");
  check_radii(radii, 0.0);
  const int n = p.dim();
  const bool lower = is_lower(p);
  const double wsup = w.log_sup_norm() == kNegInf ? 0.0 : std::exp(w.log_sup_norm());

  std::vector<int> support_w;
  for (int j = 0; j < n; ++j)
    if (!w.is_zero(j)) support_w.push_back(j);
  const bool split_form = !lower && !support_w.empty() && static_cast<int>(support_w.size()) < n &&
                          ray.zero_coords() == support_w;
  std::optional<Polytope> slice;
  if (split_form) slice = face_restrict(p, support_w);

  Report rep(kDiagnosticColumns);
  for (double radius : radii) {
    const CPoint z = ray.at(radius);
    const double value = hs(p, add(z, w)) - hs(p, z);
    double bound = kNaN;
    std::string verdict = "none";
    if (lower) {
      bound = sigma(p) * wsup;
      verdict = value <= bound + kRowTol ? "ok" : "violated";
    } else if (split_form) {
      Vec rest;
      for (int j = 0; j < n; ++j)
        if (w.is_zero(j)) rest.push_back(z.logmod(j));
      double best = kNegInf;
      for (const auto& s : p.vertices()) {
        Vec s_rest;
        double c = 0.0;
        for (int j = 0; j < n; ++j) {
          const auto k = static_cast<std::size_t>(j);
          if (w.is_zero(j))
            s_rest.push_back(s[k]);
          else if (s[k] > 0.0)
            c += s[k] * w.logmod(j);
        }
        best = std::max(best, std::max(0.0, dot(s_rest, rest)) + c);
      }
      bound = best - support(*slice, rest);
      verdict = value >= bound - kRowTol ? "ok" : "violated";
    }
    rep.add_row({radius, value, bound, value - bound, verdict});
  }
  rep.set_meta("verdict", last_three_diverge(rep) ? "diverging" : "bounded");
  rep.set_meta("bound_kind", lower ? "upper" : (split_form ? "lower" : "none"));
  return rep;
}

Witness nonuniform_witness(const Polytope& p, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(ErrorKind::BadParameters, "delta must be positive");
  if (is_lower(p)) throw Error(ErrorKind::IsLowerSet, "P is a lower set; H_P is uniformly continuous");
  const int n = p.dim();
  for (unsigned m = 1; m + 1 < (1u << n); ++m) {
    std::vector<int> zeroed;
    for (int i = n - 1; i >= 0; --i)
      if (m & (1u << i)) zeroed.push_back(n - 1 - i);
    std::sort(zeroed.begin(), zeroed.end());
    for (const auto& s : p.vertices()) {
      Vec proj = s;
      for (int j : zeroed) proj[static_cast<std::size_t>(j)] = 0.0;
      if (membership_residual(p, proj) <= kLowerFailMargin) continue;

      const Polytope slice = face_restrict(p, zeroed);
      Vec s_rest;
      for (int j = 0; j < n; ++j)
        if (std::find(zeroed.begin(), zeroed.end(), j) == zeroed.end()) s_rest.push_back(s[static_cast<std::size_t>(j)]);
      const std::size_t l = s_rest.size();
      // Separating direction: the best of a small lattice and the projection normal.
      std::vector<Vec> cands;
      const double levels[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
      std::vector<int> idx(l, 0);
      for (;;) {
        Vec xi(l);
        for (std::size_t k = 0; k < l; ++k) xi[k] = levels[idx[k]];
        cands.push_back(std::move(xi));
        std::size_t k = 0;
        while (k < l && ++idx[k] == 5) idx[k++] = 0;
        if (k == l) break;
      }
      {
        const Vec q = nearest_hull_point(slice, s_rest);
        Vec normal(l);
        double top = 0.0;
        for (std::size_t k = 0; k < l; ++k) {
          normal[k] = s_rest[k] - q[k];
          top = std::max(top, std::abs(normal[k]));
        }
        if (top > 0.0) {
          for (double& x : normal) x /= top;
          cands.push_back(std::move(normal));
        }
      }
      double best_gain = 0.0;
      Vec best_xi;
      for (const auto& xi : cands) {
        const double gain = dot(s_rest, xi) - support(slice, xi);
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best_xi = xi;
        }
      }
      if (best_xi.empty()) continue;

      Vec w_lm(static_cast<std::size_t>(n), kNegInf), ray_exp(static_cast<std::size_t>(n), kNegInf);
      std::size_t k = 0;
      for (int j = 0; j < n; ++j) {
        if (std::find(zeroed.begin(), zeroed.end(), j) != zeroed.end())
          w_lm[static_cast<std::size_t>(j)] = std::log(delta);
        else
          ray_exp[static_cast<std::size_t>(j)] = best_xi[k++];
      }
      Witness out{CPoint(w_lm), LogRay{ray_exp, {}}, zeroed, s, Report(kDiagnosticColumns)};
      Vec radii;
      for (int e = 1; e <= 300; e = e < 256 ? 2 * e : 300) {
        radii.push_back(std::pow(10.0, e));
        out.report = modulus_profile(p, out.offset, out.ray, radii);
        if (out.report.meta_value("verdict") == "diverging" || e == 300) break;
      }
      return out;
    }
  }
  throw Error(ErrorKind::BadParameters, "no witness split found");
}

Report example12_report(double a, double b, double delta, std::span<const double> radii, const SearchConfig& cfg) {
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorKind::BadParameters, "a must be positive");
  if (!(b > a * (a + 1.0))) throw Error(ErrorKind::BadParameters, "need b > a(a + 1)");
  if (!(delta > 0.0)) throw Error(ErrorKind::BadParameters, "delta must be positive");
  check_radii(radii, 1.0);
  const Polytope s = make_polytope(2, {{a, 0.0}, {0.0, a}, {b, a}});
  const HsFunction hs_s(s);
  const auto mu = DistanceFn::euclidean(2);
  const double r = b / (a + 1.0);
  Report rep(kDiagnosticColumns);
  Vec values(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const CPoint z(Vec{std::log(radii[i]), kNegInf});
    values[i] = inf_conv_a(hs_s, mu, delta, z, cfg) - hs(s, z);
  }
  bool growing = radii.size() >= 2;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double bound = (r - a) * std::log(radii[i]) - std::log(1.0 + 1.0 / delta);
    rep.add_row({radii[i], values[i], bound, values[i] - bound, values[i] >= bound - 1e-6 ? "ok" : "violated"});
    if (i > 0 && !(values[i] >= values[i - 1] + 0.1)) growing = false;
  }
  rep.set_meta("r", format_number(r));
  rep.set_meta("verdict", growing ? "diverging" : "bounded");
  return rep;
}

Report perera_example_report(std::span<const double> radii) {
  check_radii(radii, 1.0);
  const Polytope s = make_polytope(2, {{1.0, 1.0}, {1.0, 0.0}});
  Report rep(kDiagnosticColumns);
  for (double radius : radii) {
    const double lr = std::log(radius);
    const double value = hs(s, CPoint(Vec{-lr, lr}));
    // sup over S of x_2 log|z_2|
    double wrong = kNegInf;
    for (const auto& v : s.vertices()) wrong = std::max(wrong, v[1] * lr);
    const double gap = wrong - value;
    rep.add_row({radius, value, wrong, gap, gap > kRowTol ? "refuted" : "agree"});
  }
  return rep;
}

Report hs_nonmonotone_report(std::span<const Polytope> polytopes) {
  for (std::size_t j = 1; j < polytopes.size(); ++j) {
    if (polytopes[j].dim() != polytopes[j - 1].dim())
      throw Error(ErrorKind::DimensionMismatch, "polytope sequence dimensions differ");
    if (!is_subset(polytopes[j], polytopes[j - 1]))
      throw Error(ErrorKind::NotNested, "member " + std::to_string(j + 1) + " is not inside its predecessor");
  }
  Report rep(kDiagnosticColumns);
  bool flagged = false;
  double prev = kNaN;
  for (std::size_t j = 0; j < polytopes.size(); ++j) {
    const auto ext = extreme_points(polytopes[j]);
    const double value = hs_poly(ext, CPoint::ones(polytopes[j].dim()));
    const double bound = std::log(static_cast<double>(ext.size()));
    const double gap = j == 0 ? 0.0 : value - prev;
    const bool up = j > 0 && gap > 1e-12;
    flagged = flagged || up;
    rep.add_row({static_cast<double>(j + 1), value, bound, gap, up ? "increasing" : "non-increasing"});
    prev = value;
  }
  rep.set_meta("flagged", flagged ? "true" : "false");
  return rep;
}

namespace {

std::vector<Complex> stencil_points(const Stencil& st) {
  if (st.half_width < 0 || !(st.spacing >= 0.0)) throw Error(ErrorKind::BadParameters, "bad stencil");
  std::vector<Complex> out;
  for (int i = -st.half_width; i <= st.half_width; ++i)
    for (int j = -st.half_width; j <= st.half_width; ++j)
      out.push_back(st.origin + Complex{i * st.spacing, j * st.spacing});
  return out;
}

// u(base + zeta dir), refusing points near a coordinate hyperplane.
double on_line(const EvaluableFunction& u, const CPoint& base, const CPoint& dir, Complex zeta, double h) {
  const auto b = base.to_complex();
  const auto d = dir.to_complex();
  std::vector<Complex> z(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    z[j] = b[j] + zeta * d[j];
    if (std::abs(z[j]) < 10.0 * h)
      throw Error(ErrorKind::StencilHitsSingularity, "stencil point within 10h of a coordinate hyperplane");
  }
  const double v = u.eval(CPoint::from_complex(z));
  if (!std::isfinite(v)) throw Error(ErrorKind::StencilHitsSingularity, "function not finite on the stencil");
  return v;
}

template <class F>
double min_laplacian(const std::vector<Complex>& pts, double h, F&& g) {
  if (!(h > 0.0)) throw Error(ErrorKind::BadParameters, "h must be positive");
  Vec lap(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Complex c = pts[i];
    const double center = g(c);
    const double sum = g(c + h) + g(c - h) + g(c + Complex{0.0, h}) + g(c - Complex{0.0, h});
    lap[i] = (sum - 4.0 * center) / (h * h);
  });
  return *std::min_element(lap.begin(), lap.end());
}

}  // namespace

double log_sh_check(const EvaluableFunction& u, const CPoint& base, const CPoint& dir, const Stencil& stencil, double h) {
  if (base.dim() != u.dim() || dir.dim() != u.dim()) throw Error(ErrorKind::DimensionMismatch, "log_sh_check dims");
  return min_laplacian(stencil_points(stencil), h, [&](Complex zeta) { return on_line(u, base, dir, zeta, h); });
}

double exp_weighted_laplacian_min(const EvaluableFunction& u, const CPoint& base, const CPoint& dir,
                                  const Stencil& stencil, std::span<const Complex> taus, double h) {
  if (base.dim() != u.dim() || dir.dim() != u.dim()) throw Error(ErrorKind::DimensionMismatch, "stencil dims");
  if (taus.empty()) throw Error(ErrorKind::BadParameters, "need at least one tau");
  const auto pts = stencil_points(stencil);
  double best = std::numeric_limits<double>::infinity();
  for (const Complex tau : taus) {
    best = std::min(best, min_laplacian(pts, h, [&](Complex zeta) {
                      return std::exp(on_line(u, base, dir, zeta, h) + 2.0 * (tau * zeta).real());
                    }));
  }
  return best;
}

}  // namespace lelong
