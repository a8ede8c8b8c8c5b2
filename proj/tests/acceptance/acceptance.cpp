// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>

#include "io.hpp"
#include "lelong/diagnostics.hpp"
#include "lelong/error.hpp"
#include "lelong/logsupport.hpp"
#include "lelong/polytope.hpp"
#include "lelong/regularize.hpp"
#include "support.hpp"

using namespace lelong;
using tsupport::Gen;
using tsupport::fixture;
using tsupport::vertex_max;

namespace {

// Collects failed expectations and the worst observed margins for the summary line.
class Gate {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!notes_.empty()) os << "; " << notes_;
    for (const auto& f : failures_) os << "\n    failed: " << f;
    if (failed_ > static_cast<long>(failures_.size())) os << "\n    (" << failed_ - failures_.size() << " more)";
    return os.str();
  }

 private:
  long checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

Polytope ex12() { return make_polytope(2, {{1, 0}, {0, 1}, {3, 1}}); }

FunctionPtr tropical() { return lelonglab::load_function(fixture("tropical.json")); }
FunctionPtr polylog() { return lelonglab::load_function(fixture("polylog.json")); }
FunctionPtr hs_sigma() { return lelonglab::load_function(fixture("hs_simplex.json")); }

std::vector<CPoint> grid() { return lelonglab::load_grid(fixture("grid.json")); }

// ---------------------------------------------------------------------------

void support_suite(Gate& g) {
  const std::vector<Polytope> fixtures{simplex(2), unit_box(2), ex12(), lower_hull(ex12()), simplex(3),
                                       make_polytope(3, {{1, 0, 2}, {0, 1, 1}, {2, 2, 0}})};
  Gen gen(101);
  double worst = 0.0;
  for (const auto& p : fixtures) {
    const int n = p.dim();
    const auto other = gen.polytope(n, 3);
    const auto bigger = hull_union(p, other);
    for (int s = 0; s < 1000; ++s) {
      const auto xi = gen.vec(n, -5, 5), eta = gen.vec(n, -5, 5);
      const double t = gen.uniform(0, 10);
      Vec txi = xi, sum = xi;
      double dist = 0.0;
      for (std::size_t j = 0; j < xi.size(); ++j) {
        txi[j] *= t;
        sum[j] += eta[j];
        dist = std::max(dist, std::abs(xi[j] - eta[j]));
      }
      const double f = support(p, xi), fe = support(p, eta);
      const double hom = std::abs(support(p, txi) - t * f);
      const double sub = support(p, sum) - f - fe;
      const double mono = f - support(bigger, xi);
      const double lip = std::abs(f - fe) - sigma(p) * dist;
      worst = std::max({worst, hom, sub, mono, lip});
      g.expect(std::abs(f - vertex_max(p.vertices(), xi)) <= 1e-9, "support equals the vertex max");
      g.expect(hom <= 1e-9, "homogeneity");
      g.expect(sub <= 1e-9, "subadditivity");
      g.expect(mono <= 1e-9, "monotone in the set");
      g.expect(lip <= 1e-9, "sigma-Lipschitz");
    }
  }
  g.expect(sigma(ex12()) == 4.0, "sigma(Ex1.2) = 4");
  g.note("worst excess " + num(worst));
}

void lower_suite(Gate& g) {
  g.expect(is_lower(simplex(2)), "simplex is lower");
  g.expect(is_lower(unit_box(2)), "box is lower");
  g.expect(!is_lower(ex12()), "Ex1.2 is not lower");
  Gen gen(102);
  std::vector<Polytope> sets{simplex(2), unit_box(2), ex12(), simplex(3)};
  for (int i = 0; i < 20; ++i) sets.push_back(gen.polytope(gen.integer(2, 3), gen.integer(1, 4)));
  int lower_count = 0;
  for (const auto& p : sets) {
    const auto l = lower_hull(p);
    g.expect(is_subset(p, l), "lower_hull is extensive");
    const auto ll = lower_hull(l);
    g.expect(is_subset(l, ll) && is_subset(ll, l), "lower_hull is idempotent");
    int agree = 0;
    for (int s = 0; s < 1000; ++s) {
      const auto xi = gen.vec(p.dim(), -3, 3);
      Vec plus = xi;
      for (auto& x : plus) x = std::max(x, 0.0);
      if (std::abs(support(p, xi) - support(p, plus)) <= 1e-9) ++agree;
    }
    g.expect(is_lower(p) == (agree == 1000), "dual characterization matches is_lower");
    lower_count += is_lower(p);
  }
  g.note(std::to_string(sets.size()) + " sets, " + std::to_string(lower_count) + " lower");
}

void hs_suite(Gate& g) {
  Gen gen(103);
  for (const auto& p : {simplex(2), unit_box(2), lower_hull(ex12()), simplex(3)}) {
    for (int s = 0; s < 1000; ++s) {
      const auto z = gen.coin(0.3) ? gen.point_with_zeros(p.dim(), -4, 4) : gen.point(p.dim(), -4, 4);
      g.expect(std::abs(hs(p, z) - hs_lower_formula(p, z)) <= 1e-9, "hs = lower formula");
    }
  }
  double worst_sub = -INFINITY;
  for (int s = 0; s < 1000; ++s) {
    const int n = gen.integer(1, 3);
    const auto p = s < 250 ? (n == 2 ? ex12() : gen.polytope(n, 3)) : gen.polytope(n, gen.integer(1, 5));
    const auto z = gen.coin(0.3) ? gen.point_with_zeros(n, -4, 4) : gen.point(n, -4, 4);
    const auto w = gen.coin(0.3) ? gen.point_with_zeros(n, -4, 4) : gen.point(n, -4, 4);
    const double excess = hs(p, multiply(z, w)) - hs(p, z) - hs(p, w);
    worst_sub = std::max(worst_sub, excess);
    g.expect(excess <= 1e-9, "H(zw) <= H(z) + H(w)");
  }
  double worst_descent = 0.0;
  const std::vector<Polytope> planes{ex12(), simplex(2), unit_box(2), make_polytope(2, {{1, 1}}),
                                     make_polytope(3, {{1, 0, 2}, {0, 1, 1}, {2, 2, 0}})};
  for (const auto& p : planes) {
    for (int s = 0; s < 300; ++s) {
      const auto z = gen.point_with_zeros(p.dim(), -3, 3);
      if (z.in_torus_complement()) continue;
      const double d10 = hs_limit_descent(p, z, 10), d20 = hs_limit_descent(p, z, 20),
                   d40 = hs_limit_descent(p, z, 40);
      g.expect(d10 >= d20 && d20 >= d40, "descent values are non-increasing in t");
      worst_descent = std::max(worst_descent, std::abs(d40 - hs(p, z)));
      g.expect(std::abs(d40 - hs(p, z)) <= 1e-4, "hyperplane value matches the descent oracle");
    }
  }
  for (int s = 0; s < 1000; ++s) {
    const int n = gen.integer(1, 4);
    const auto p = gen.polytope(n, gen.integer(1, 6));
    const auto z = gen.point(n, -5, 5);
    g.expect(std::abs(vertex_envelope(p)->eval(z) - hs_interior(p, z)) <= 1e-12, "vertex envelope = hs_interior");
  }
  g.note("max H(zw)-H(z)-H(w) " + num(worst_sub) + ", max descent gap " + num(worst_descent));
}

void example12(Gate& g) {
  const double radii[] = {1e1, 1e2, 1e3, 1e4};
  const auto rep = example12_report(1, 3, 0.5, radii);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const double lz = std::log(radii[i]), v = rep.number(i, "value");
    g.expect(v >= 0.5 * lz - std::log(3.0), "R^a H_S - H_S above the lower bound at " + num(radii[i]));
    g.expect(std::abs(v - (0.5 * lz - std::log(2 / std::sqrt(0.5)))) <= 1e-3,
             "slice oracle at " + num(radii[i]) + ": " + num(v));
  }
  const double last = rep.number(3, "value");
  g.expect(last >= 3.507, "value at 1e4 >= 3.507");

  OpConfig cfg;
  cfg.op = Op::A;
  cfg.delta = 0.5;
  const auto ra = regularized(std::make_shared<HsFunction>(ex12()), cfg);
  const auto gc = growth_constants(*ra, ex12(), radii, 32, 104);
  g.expect(growth_diverges(gc), "growth_constants diverges for Ex1.2");

  // lower sets under delta < r_mu / sigma: the class constant is kept
  double worst = -INFINITY;
  const double wide[] = {1, 10, 100, 1e3, 1e4};
  for (const auto& u : {hs_sigma(), tropical()}) {
    const auto r = regularized(u, cfg);
    const auto c = growth_constants(*r, simplex(2), wide, 32, 105);
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
      worst = std::max(worst, c.number(i, "max") - u->growth()->upper_const);
      g.expect(c.number(i, "max") <= u->growth()->upper_const + 1e-6, "R^a keeps c_u on the simplex");
    }
  }
  g.note("value at 1e4 " + num(last) + ", lower-set excess " + num(worst));
}

void monotone_suite(Gate& g) {
  const auto pts = grid();
  const std::vector<std::pair<std::string, FunctionPtr>> fns{{"hs", hs_sigma()}, {"tropical", tropical()},
                                                             {"polylog", polylog()}};
  const double deltas[] = {0.4, 0.2, 0.1};
  for (const auto& [name, u] : fns) {
    for (Op op : {Op::A, Op::B, Op::C, Op::D, Op::Std}) {
      OpConfig cfg;
      cfg.op = op;
      const auto rep = monotone_check(cfg, *u, deltas, pts);
      g.expect(report_passes(rep), std::string(op_name(op)) + " on " + name + " is decreasing");
      for (std::size_t i = 1; i < rep.rows.size(); ++i)
        g.expect(rep.number(i, "gap") <= rep.number(i - 1, "gap") + 1e-6 + rep.number(i, "budget"),
                 std::string(op_name(op)) + " on " + name + ": gaps shrink");
    }
  }
  // tropical fixture at points where one piece dominates the whole perturbation
  const auto trop = std::dynamic_pointer_cast<const TropicalFunction>(tropical());
  const double delta = 0.25, spread = -std::log(1 - delta);
  Gen gen(106);
  int interior = 0;
  double worst = 0.0;
  while (interior < 20) {
    const auto z = gen.point(2, -3, 3);
    double top = -INFINITY, second = -INFINITY;
    for (const auto& pc : trop->pieces()) {
      const double v = tsupport::dot(pc.a, z.logmod()) + pc.c;
      second = std::max(second, std::min(top, v));
      top = std::max(top, v);
    }
    // a piece moves by at most |a|_1 * spread under the perturbation
    double reach = 0.0;
    for (const auto& pc : trop->pieces()) reach = std::max(reach, pc.a[0] + pc.a[1]);
    if (top - second <= 2 * reach * spread) continue;
    ++interior;
    const double rc = int_conv_c(*trop, delta, z);
    worst = std::max(worst, std::abs(rc - trop->eval(z)));
    g.expect(std::abs(rc - trop->eval(z)) <= 1e-8, "R^c reproduces the tropical fixture");
  }
  for (const auto& [name, u] : fns)
    for (const auto& z : pts)
      g.expect(log_int_conv_d(*u, delta, z) >= int_conv_c(*u, delta, z) - 1e-12, "R^d >= R^c on " + name);
  g.note("15 operator/fixture pairs, tropical reproduction error " + num(worst));
}

void growth_suite(Gate& g) {
  const double radii[] = {1, 10, 100, 1e3, 1e4};
  double worst_b = -INFINITY, worst_c = -INFINITY;
  for (const auto& u : {hs_sigma(), tropical(), polylog()}) {
    const auto gr = *u->growth();
    const double sig = sigma(gr.polytope);
    OpConfig b;
    b.op = Op::B;
    b.delta = 0.5 / sig;
    const auto rb = growth_constants(*regularized(u, b), gr.polytope, radii, 24, 107);
    for (std::size_t i = 0; i < rb.rows.size(); ++i) {
      worst_b = std::max(worst_b, rb.number(i, "max") - gr.upper_const);
      g.expect(rb.number(i, "max") <= gr.upper_const + 1e-6, "R^b keeps c_u at radius " + num(radii[i]));
    }
    OpConfig c;
    c.op = Op::C;
    c.delta = 0.25;
    c.kernel = Kernel(16, 16);
    const auto rc = growth_constants(*regularized(u, c), gr.polytope, radii, 24, 108);
    for (std::size_t i = 0; i < rc.rows.size(); ++i) {
      worst_c = std::max(worst_c, rc.number(i, "max") - gr.upper_const - sig * c.delta);
      g.expect(rc.number(i, "max") <= gr.upper_const + sig * c.delta + 1e-6,
               "R^c stays under c_u + sigma delta at radius " + num(radii[i]));
    }
  }
  g.note("R^b excess " + num(worst_b) + ", R^c excess " + num(worst_c));
}

void continuity_suite(Gate& g) {
  const double lip = lipschitz_estimate(HsFunction(simplex(2)), 10000, 10, 109);
  g.expect(lip <= 1 + 1e-6, "Lipschitz estimate of H_Sigma");
  const double delta = 0.5;
  const auto wit = nonuniform_witness(ex12(), delta);
  g.expect(wit.report.meta_value("verdict") == "diverging", "witness diverges");
  double margin = INFINITY;
  for (std::size_t i = 0; i < wit.report.rows.size(); ++i) {
    const double z1 = wit.ray.at(wit.report.number(i, "radius")).logmod(0);
    const double m = wit.report.number(i, "value") - (2 * z1 + std::log(delta));
    margin = std::min(margin, m);
    g.expect(m >= -1e-6, "witness difference exceeds 2 log|z1| + log delta");
  }
  const double radii[] = {2, 4, 8};
  const auto per = perera_example_report(radii);
  for (std::size_t i = 0; i < 3; ++i) {
    g.expect(std::abs(per.number(i, "value")) <= 1e-9, "Perera value is 0");
    g.expect(std::abs(per.number(i, "gap") - std::log(radii[i])) <= 1e-9, "Perera gap is log|z2|");
  }
  g.note("Lipschitz " + num(lip) + ", witness margin " + num(margin) + " over " +
         std::to_string(wit.report.rows.size()) + " radii");
}

void hs_extreme_suite(Gate& g) {
  std::vector<Polytope> seq;
  for (const char* f : {"polygon3.json", "polygon4.json", "polygon6.json", "polygon10.json"})
    seq.push_back(lelonglab::load_polytope(fixture(f)));
  const int counts[] = {3, 4, 6, 10};
  const auto rep = hs_nonmonotone_report(seq);
  for (std::size_t i = 0; i < 4; ++i) {
    g.expect(static_cast<int>(extreme_points(seq[i]).size()) == counts[i], "extreme point count");
    g.expect(std::abs(rep.number(i, "value") - std::log(counts[i])) <= 1e-12, "h = log #ext");
  }
  g.expect(rep.meta_value("flagged") == "true", "nested sequence flagged");
}

void dini_suite(Gate& g) {
  const auto j = lelonglab::read_json(fixture("dini_xj.json"));
  std::vector<Vec> f;
  for (const auto& row : j.at("f")) f.push_back(lelonglab::parse_vector(row));
  const Vec gv = lelonglab::parse_vector(j.at("g"));
  // the fixture file against a sequence built here
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t p = 0; p < gv.size(); ++p)
      g.expect(std::abs(f[k][p] - (p / 100.0) / static_cast<double>(k + 1)) <= 1e-12, "fixture is x/j");
  const int j0 = dini_index(f, gv);
  g.expect(j0 == 10, "x/j against 0.1 gives 10");

  const auto u = polylog();
  std::vector<FunctionPtr> seq;
  for (int k = 0; k < 10; ++k) {
    OpConfig cfg;
    cfg.op = Op::B;
    cfg.delta = 0.5 / std::pow(2.0, k);
    seq.push_back(regularized(u, cfg));
  }
  const double eps = 0.25;
  const LambdaFunction q(2, [&](const CPoint& z) { return u->eval(z) + eps; });
  auto pts = grid();
  // next to the zero z1 = -(0.1 + 0.05i) / (z2 + 0.5) of z1 z2 + 0.5 z1 + 0.1 + 0.05i, z2 = 0.3
  pts.push_back(CPoint::from_complex(std::vector<Complex>{Complex{-0.125, -0.0625} * 1.001, {0.3, 0.0}}));
  int idx = -1;
  try {
    idx = dini_index(seq, q, pts);
  } catch (const Error& e) {
    g.expect(false, std::string("R^b dini: ") + e.what());
  }
  g.expect(idx >= 0 && idx < static_cast<int>(seq.size()), "R^b fixture gives a finite index");
  g.note("j0 = " + std::to_string(j0) + ", R^b index " + std::to_string(idx));
}

void log_sh_suite(Gate& g) {
  const double h = 1e-3, tol = fd_tolerance(h);
  OpConfig cfg;
  cfg.op = Op::D;
  cfg.delta = 0.25;
  // a positive combination of exp(u(z w_k)) at any order, so a small kernel tests the same claim
  cfg.kernel = Kernel(16, 16);
  const std::vector<std::pair<CPoint, CPoint>> stencils{
      {CPoint::from_complex(std::vector<Complex>{{1.2, 0.3}, {0.8, -0.6}}),
       CPoint::from_complex(std::vector<Complex>{{0.7, 0.2}, {-0.3, 0.5}})},
      {CPoint::from_complex(std::vector<Complex>{{-2, 1}, {0.5, 0.5}}), CPoint::ones(2)},
      {CPoint::from_complex(std::vector<Complex>{{0.6, 0.0}, {3, -2}}),
       CPoint::from_complex(std::vector<Complex>{{0.0, 1.0}, {0.0, 0.0}})}};
  double worst = INFINITY;
  for (const auto& u : {hs_sigma(), tropical(), polylog()}) {
    const auto rd = regularized(u, cfg);
    for (const auto& [base, dir] : stencils) {
      Stencil st;
      st.spacing = 0.05;
      const double m = log_sh_check(*rd, base, dir, st, h);
      worst = std::min(worst, m);
      g.expect(m >= -tol, "R^d Laplacian >= -tol_fd");
    }
  }
  const LambdaFunction neg(1, [](const CPoint& z) { return -std::exp(2 * z.logmod(0)); });
  const double c = log_sh_check(neg, CPoint::from_complex(std::vector<Complex>{{1.5, 0.5}}), CPoint::ones(1), {}, h);
  g.expect(std::abs(c + 4) <= 1e-3, "control reports -4");
  g.note("min R^d Laplacian " + num(worst) + ", control " + num(c));
}

void quadrature_gate(Gate& g) {
  // smooth fixtures: tropical pieces at dominant points, polylog away from its zeros, H off the kinks
  std::vector<std::tuple<std::string, FunctionPtr, std::vector<CPoint>, std::vector<double>>> cases{
      {"hs", hs_sigma(), {CPoint({1.0, -1.5}, {0.3, 2.0})}, {0.25}},
      {"tropical", tropical(), {CPoint({0.8, 0.1}, {1.0, -0.5})}, {0.25}},
      {"polylog", polylog(), {CPoint({0.8, 0.1}, {1.0, -0.5})}, {0.25}}};
  const auto seg = make_polytope(1, {{1}});
  const std::vector<CPoint> line{CPoint({-1.2}, {0.4}), CPoint({0.7}, {2.5}), CPoint({2.0}, {5.0})};
  cases.emplace_back("hs n=1", hs_function(seg), line, std::vector<double>{0.1, 0.25, 0.5});
  cases.emplace_back("polylog n=1",
                     std::make_shared<PolyLogFunction>(seg, std::vector<Monomial>{{{0}, 1.0}, {{1}, Complex{0.3, 1}}}),
                     line, std::vector<double>{0.1, 0.25, 0.5});
  const Kernel k, k2 = k.doubled();
  double worst = 0.0;
  int values = 0;
  for (const auto& [name, u, pts, deltas] : cases) {
    for (const auto& z : pts) {
      for (double delta : deltas) {
        const double dc = std::abs(int_conv_c(*u, delta, z, k) - int_conv_c(*u, delta, z, k2));
        const double dd = std::abs(log_int_conv_d(*u, delta, z, k) - log_int_conv_d(*u, delta, z, k2));
        const double ds = std::abs(std_smooth(*u, delta, z, k) - std_smooth(*u, delta, z, k2));
        worst = std::max({worst, dc, dd, ds});
        values += 3;
        g.expect(dc < 1e-8, "R^c stable under doubling on " + name + ": " + num(dc));
        g.expect(dd < 1e-8, "R^d stable under doubling on " + name + ": " + num(dd));
        g.expect(ds < 1e-8, "std stable under doubling on " + name + ": " + num(ds));
      }
    }
  }
  g.note(std::to_string(values) + " values, largest change " + num(worst));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Gate&)>>> criteria{
      {"support-function suite", support_suite},
      {"lower-set suite", lower_suite},
      {"H_S suite", hs_suite},
      {"non-lower example under the infimal convolution", example12},
      {"monotone convergence of a, b, c, d, std", monotone_suite},
      {"growth preservation of b and c", growth_suite},
      {"continuity suite", continuity_suite},
      {"h_S counts extreme points", hs_extreme_suite},
      {"Dini index", dini_suite},
      {"log-subharmonicity of R^d", log_sh_suite},
      {"quadrature convergence", quadrature_gate},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Gate gate;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(gate);
    } catch (const std::exception& e) {
      gate.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%s, %.1fs)\n", gate.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                gate.summary().c_str(), secs);
    std::fflush(stdout);
    failed += !gate.ok();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
