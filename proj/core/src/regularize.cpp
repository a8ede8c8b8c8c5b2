#include "lelong/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lelong/error.hpp"
#include "lelong/logsupport.hpp"
#include "quadrature.hpp"

namespace lelong {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Log-modulus lower bound of the supremal-convolution search; the bound
// itself stands for w_j = 0.
constexpr double kLogFloor = -40.0;

void check_dims(const EvaluableFunction& u, const CPoint& z) {
  if (u.dim() != z.dim()) throw Error(ErrorKind::DimensionMismatch, "function and point dimensions differ");
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(ErrorKind::BadParameters, "delta must be positive");
}

void check_unit_delta(double delta) {
  check_delta(delta);
  if (!(delta < 1.0)) throw Error(ErrorKind::BadParameters, "delta must lie in (0, 1)");
}

void raise(OpStatus* s, bool OpStatus::*flag) {
  if (s) s->*flag = true;
}

// Per-variable tables for w_j = 1 + delta rho e^{i theta} multiplied into z_j.
std::vector<detail::Table> multiplicative_tables(const CPoint& z, double delta, const Kernel& k) {
  std::vector<detail::Table> tables(static_cast<std::size_t>(z.dim()));
  for (int j = 0; j < z.dim(); ++j) {
    auto& t = tables[static_cast<std::size_t>(j)];
    t.reserve(k.nodes().size());
    for (const auto& node : k.nodes()) {
      if (z.is_zero(j)) {
        t.push_back({kNegInf, 0.0, node.weight});
        continue;
      }
      const Complex w = 1.0 + std::polar(delta * node.rho, node.theta);
      t.push_back({z.logmod(j) + std::log(std::abs(w)), z.arg(j) + std::arg(w), node.weight});
    }
  }
  return tables;
}

// Per-variable tables for z_j - (delta / sqrt(n)) rho e^{i theta}.
std::vector<detail::Table> additive_tables(const CPoint& z, double delta, const Kernel& k) {
  const double radius = delta / std::sqrt(static_cast<double>(z.dim()));
  std::vector<detail::Table> tables(static_cast<std::size_t>(z.dim()));
  for (int j = 0; j < z.dim(); ++j) {
    auto& t = tables[static_cast<std::size_t>(j)];
    t.reserve(k.nodes().size());
    for (const auto& node : k.nodes()) {
      const auto [lm, ar] = detail::polar_sum(z.logmod(j), z.arg(j), std::log(radius * node.rho), node.theta + kPi);
      t.push_back({lm, ar, node.weight});
    }
  }
  return tables;
}

struct MeanAcc {
  double sum = 0.0;
  bool hit_neg_inf = false;
  bool clamped = false;
};

double kernel_mean(const EvaluableFunction& u, const std::vector<detail::Table>& tables, OpStatus* status) {
  std::vector<MeanAcc> acc(tables[0].size());
  detail::for_each_node(u, tables, [&](std::size_t outer, double v, double w) {
    if (w <= 0.0) return;
    auto& a = acc[outer];
    if (v == kNegInf) {
      a.hit_neg_inf = true;
      return;
    }
    if (v < kQuadratureFloor) {
      v = kQuadratureFloor;
      a.clamped = true;
    }
    a.sum += w * v;
  });
  double total = 0.0;
  bool neg_inf = false, clamped = false;
  for (const auto& a : acc) {
    total += a.sum;
    neg_inf = neg_inf || a.hit_neg_inf;
    clamped = clamped || a.clamped;
  }
  if (neg_inf || clamped) raise(status, &OpStatus::quadrature_underflow);
  return neg_inf ? kNegInf : total;
}

struct LseAcc {
  double top = kNegInf;
  double scaled = 0.0;  // sum w e^{v - top}
  void add(double v, double w) {
    if (v == kNegInf || w <= 0.0) return;
    if (v > top) {
      scaled = scaled * std::exp(top - v) + w;
      top = v;
    } else {
      scaled += w * std::exp(v - top);
    }
  }
};

double kernel_log_mean_exp(const EvaluableFunction& u, const std::vector<detail::Table>& tables) {
  std::vector<LseAcc> acc(tables[0].size());
  detail::for_each_node(u, tables, [&](std::size_t outer, double v, double w) { acc[outer].add(v, w); });
  LseAcc total;
  for (const auto& a : acc)
    if (a.top != kNegInf) total.add(a.top + std::log(a.scaled), 1.0);
  return total.top == kNegInf ? kNegInf : total.top + std::log(total.scaled);
}

}  // namespace

double inf_conv_a(const EvaluableFunction& u, const DistanceFn& mu, double delta, const CPoint& z,
                  const SearchConfig& cfg, OpStatus* status) {
  check_dims(u, z);
  check_delta(delta);
  validate(cfg);
  if (mu.dim() != z.dim()) throw Error(ErrorKind::DimensionMismatch, "distance and point dimensions differ");
  const int n = z.dim();
  const double uz = u.eval(z);
  double half;
  if (uz == kNegInf) {
    raise(status, &OpStatus::nonfinite_objective);
    half = delta / mu.r_mu();
  } else {
    half = std::min(delta * std::exp(-uz) / mu.r_mu(), 1e300);
  }
  if (cfg.radius_override) half = *cfg.radius_override;
  const double inv = 1.0 / delta;
  const auto nn = static_cast<std::size_t>(n);

  SearchBox box;
  std::function<double(const Vec&)> objective;
  if (u.multicircled() && mu.modulus_only()) {
    // d_j = |w_j| - |z_j| with arg w_j = arg z_j.
    box.lo.resize(nn);
    box.hi.assign(nn, half);
    box.center.assign(nn, 0.0);
    for (int j = 0; j < n; ++j)
      box.lo[static_cast<std::size_t>(j)] = z.is_zero(j) ? 0.0 : -std::min(half, std::exp(z.logmod(j)));
    objective = [&u, &mu, &z, inv, n](const Vec& d) {
      CPoint w = z;
      for (int j = 0; j < n; ++j) {
        const double dj = d[static_cast<std::size_t>(j)];
        if (z.is_zero(j)) {
          w.set(j, dj > 0.0 ? std::log(dj) : kNegInf, 0.0);
        } else {
          const double rel = dj * std::exp(-z.logmod(j));
          w.set(j, rel <= -1.0 ? kNegInf : z.logmod(j) + std::log1p(rel), z.arg(j));
        }
      }
      const double uw = u.eval(w);
      const double e = uw == kNegInf ? kInf : std::exp(-uw);
      return e + inv * mu.of_moduli(d);
    };
  } else {
    // (Re, Im) of w - z per coordinate.
    box.lo.assign(2 * nn, -half);
    box.hi.assign(2 * nn, half);
    box.center.assign(2 * nn, 0.0);
    objective = [&u, &mu, &z, inv, n](const Vec& d) {
      CPoint w = z;
      std::vector<Complex> diff(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        const Complex dj{d[2 * k], d[2 * k + 1]};
        diff[k] = dj;
        const double r = std::abs(dj);
        if (r == 0.0) continue;
        const auto [lm, ar] = detail::polar_sum(z.logmod(j), z.arg(j), std::log(r), std::arg(dj));
        w.set(j, lm, ar);
      }
      const double uw = u.eval(w);
      const double e = uw == kNegInf ? kInf : std::exp(-uw);
      return e + inv * mu(diff);
    };
  }
  const auto best = minimize_box(objective, box, cfg);
  if (uz != kNegInf && !(best.value < std::exp(-uz))) return uz;
  return -std::log(best.value);
}

double sup_conv_b(const EvaluableFunction& u, double delta, const CPoint& z, const SearchConfig& cfg,
                  std::optional<double> m1, std::optional<double> m2, OpStatus* status) {
  check_dims(u, z);
  check_delta(delta);
  validate(cfg);
  const auto g = u.growth();
  if (!g) throw Error(ErrorKind::BadParameters, "sup_conv_b needs a declared growth polytope");
  const double sig = sigma(g->polytope);
  if (sig > 0.0 && !(delta < 1.0 / sig)) throw Error(ErrorKind::DeltaTooLarge, "delta must be below 1/sigma_S");
  const int n = z.dim();
  const auto nn = static_cast<std::size_t>(n);
  const double uz = u.eval(z);
  const double top = m1 ? *m1 : hs(g->polytope, z);
  const double bottom = m2 ? *m2 : (uz == kNegInf ? kNegInf : uz - g->upper_const);
  double log_r;
  if (bottom == kNegInf || !std::isfinite(top)) {
    log_r = kMaxLogRadius;
    raise(status, &OpStatus::radius_capped);
  } else {
    log_r = std::max(0.0, (top - bottom) / (1.0 / delta - sig));
    if (log_r > kMaxLogRadius) {
      log_r = kMaxLogRadius;
      raise(status, &OpStatus::radius_capped);
    }
  }
  if (cfg.radius_override) log_r = std::log(*cfg.radius_override);
  const double inv = 1.0 / delta;
  const bool circled = u.multicircled();

  SearchBox box;
  box.lo.assign(nn, kLogFloor);
  box.hi.assign(nn, std::max(log_r, 0.0));
  box.center.assign(nn, 0.0);
  if (!circled) {
    box.lo.resize(2 * nn, -kPi);
    box.hi.resize(2 * nn, kPi);
    box.center.resize(2 * nn, 0.0);
  }
  auto objective = [&u, &z, inv, n, circled](const Vec& v) {
    CPoint zw = z;
    double dist = 0.0;  // ||w - 1||_inf
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      const double y = v[k];
      const double th = circled ? 0.0 : v[static_cast<std::size_t>(n) + k];
      if (y <= kLogFloor) {
        dist = std::max(dist, 1.0);
        zw.set(j, kNegInf, 0.0);
        continue;
      }
      const double em1 = std::expm1(y);
      const double s = std::sin(0.5 * th);
      const double re = em1 * std::cos(th) - 2.0 * s * s;
      const double im = std::exp(y) * std::sin(th);
      dist = std::max(dist, std::hypot(re, im));
      if (!z.is_zero(j)) zw.set(j, z.logmod(j) + y, z.arg(j) + th);
    }
    const double val = u.eval(zw);
    if (val == kNegInf) return kInf;
    return -(val - inv * std::log1p(dist));
  };
  const auto best = minimize_box(objective, box, cfg);
  const double found = -best.value;
  if (uz != kNegInf && !(found > uz)) return uz;
  return found;
}

double int_conv_c(const EvaluableFunction& u, double delta, const CPoint& z, const Kernel& k, OpStatus* status) {
  check_dims(u, z);
  check_unit_delta(delta);
  return kernel_mean(u, multiplicative_tables(z, delta, k), status);
}

double log_int_conv_d(const EvaluableFunction& u, double delta, const CPoint& z, const Kernel& k) {
  check_dims(u, z);
  check_unit_delta(delta);
  return kernel_log_mean_exp(u, multiplicative_tables(z, delta, k));
}

double std_smooth(const EvaluableFunction& u, double delta, const CPoint& z, const Kernel& k, OpStatus* status) {
  check_dims(u, z);
  check_delta(delta);
  return kernel_mean(u, additive_tables(z, delta, k), status);
}

double rd_growth_constant(const Polytope& p, double delta, const Kernel& k) {
  return log_int_conv_d(HsFunction(p), delta, CPoint::ones(p.dim()), k);
}

Op parse_op(std::string_view tag) {
  if (tag == "a") return Op::A;
  if (tag == "b") return Op::B;
  if (tag == "c") return Op::C;
  if (tag == "d") return Op::D;
  if (tag == "std") return Op::Std;
  throw Error(ErrorKind::Schema, "unknown operator tag '" + std::string(tag) + "'");
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::A: return "a";
    case Op::B: return "b";
    case Op::C: return "c";
    case Op::D: return "d";
    case Op::Std: return "std";
  }
  return "?";
}

double apply_operator(const EvaluableFunction& u, const OpConfig& cfg, const CPoint& z, OpStatus* status) {
  switch (cfg.op) {
    case Op::A:
      return inf_conv_a(u, cfg.mu ? *cfg.mu : DistanceFn::euclidean(u.dim()), cfg.delta, z, cfg.search, status);
    case Op::B:
      return sup_conv_b(u, cfg.delta, z, cfg.search, std::nullopt, std::nullopt, status);
    case Op::C:
      return int_conv_c(u, cfg.delta, z, cfg.kernel, status);
    case Op::D:
      return log_int_conv_d(u, cfg.delta, z, cfg.kernel);
    case Op::Std:
      return std_smooth(u, cfg.delta, z, cfg.kernel, status);
  }
  return kNegInf;
}

RegularizedFunction::RegularizedFunction(FunctionPtr u, OpConfig cfg) : u_(std::move(u)), cfg_(std::move(cfg)) {
  if (!u_) throw Error(ErrorKind::BadParameters, "null function");
  check_delta(cfg_.delta);
  validate(cfg_.search);
}

std::optional<Growth> RegularizedFunction::growth() const {
  auto g = u_->growth();
  if (!g) return std::nullopt;
  switch (cfg_.op) {
    case Op::B:
      return g;
    case Op::C:
      return Growth{g->polytope, g->upper_const + sigma(g->polytope) * cfg_.delta, std::nullopt};
    case Op::D:
      return Growth{g->polytope, g->upper_const + rd_growth_constant(g->polytope, cfg_.delta, cfg_.kernel),
                    std::nullopt};
    default:
      return std::nullopt;
  }
}

FunctionPtr regularized(FunctionPtr u, OpConfig cfg) {
  return std::make_shared<RegularizedFunction>(std::move(u), std::move(cfg));
}

Report monotone_check(const OpConfig& base, const EvaluableFunction& u, std::span<const double> deltas,
                      std::span<const CPoint> grid, double tol) {
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    check_delta(deltas[i]);
    if (i > 0 && !(deltas[i] < deltas[i - 1])) throw Error(ErrorKind::BadParameters, "deltas must strictly decrease");
  }
  for (const auto& z : grid) check_dims(u, z);
  const bool quadrature = base.op == Op::C || base.op == Op::D || base.op == Op::Std;
  const Kernel coarse = base.kernel.halved();

  Vec uvals(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) uvals[p] = u.eval(grid[p]);

  Report rep({"delta", "gap", "max_violation", "budget", "pass"});
  Vec prev;
  double prev_gap = kInf, prev_budget = 0.0;
  bool all_pass = true;
  for (double delta : deltas) {
    OpConfig cfg = base;
    cfg.delta = delta;
    OpConfig cfg_coarse = cfg;
    cfg_coarse.kernel = coarse;
    Vec vals(grid.size()), coarse_vals(grid.size(), 0.0);
    for (std::size_t p = 0; p < grid.size(); ++p) {
      vals[p] = apply_operator(u, cfg, grid[p]);
      if (quadrature) coarse_vals[p] = apply_operator(u, cfg_coarse, grid[p]);
    }
    double gap = 0.0, budget = 0.0, violation = 0.0;
    for (std::size_t p = 0; p < grid.size(); ++p) {
      if (uvals[p] != kNegInf && vals[p] != kNegInf) gap = std::max(gap, std::abs(vals[p] - uvals[p]));
      if (quadrature && std::isfinite(vals[p]) && std::isfinite(coarse_vals[p]))
        budget = std::max(budget, std::abs(vals[p] - coarse_vals[p]));
      if (!prev.empty() && std::isfinite(vals[p]) && std::isfinite(prev[p]))
        violation = std::max(violation, vals[p] - prev[p]);
    }
    const double slack = tol + budget + prev_budget;
    const bool ok = violation <= slack && (prev.empty() || gap <= prev_gap + slack);
    all_pass = all_pass && ok;
    rep.add_row({delta, gap, violation, budget, ok ? 1.0 : 0.0});
    prev = std::move(vals);
    prev_gap = gap;
    prev_budget = budget;
  }
  rep.set_meta("op", std::string(op_name(base.op)));
  rep.set_meta("pass", all_pass ? "true" : "false");
  return rep;
}

bool report_passes(const Report& r) { return r.meta_value("pass") == "true"; }

}  // namespace lelong
