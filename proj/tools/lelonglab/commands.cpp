#include "commands.hpp"

#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "io.hpp"
#include "lelong/diagnostics.hpp"
#include "lelong/error.hpp"
#include "lelong/logsupport.hpp"
#include "lelong/parallel.hpp"
#include "lelong/regularize.hpp"

namespace lelonglab {

namespace {

using lelong::Error;
using lelong::ErrorKind;
using lelong::format_number;

struct PolytopeArgs {
  std::string file, check = "lower", point, xi;
};

struct HsArgs {
  std::string file, logmod, arg, method = "auto";
  double t = 40.0;
};

struct RegArgs {
  std::string op = "a", fn, grid, config, check = "none", deltas, out, format = "csv";
  double delta = 0.5, tol = 1e-6;
};

struct OutArgs {
  std::string out, format = "csv";
};

struct Ex12Args {
  double a = 1.0, b = 3.0, delta = 0.5;
  std::string radii = "1e1,1e2,1e3,1e4";
};

struct WitnessArgs {
  std::string file;
  double delta = 0.1;
};

struct LipschitzArgs {
  std::string fn;
  int pairs = 10000;
  double box = 10.0;
  double bound = std::nan("");
};

struct DiniArgs {
  std::string values, fn, grid, config, deltas = "0.4,0.2,0.1,0.05";
  double eps = 0.05, tol = 1e-12;
};

void add_output(CLI::App* app, OutArgs& o) {
  app->add_option("--out", o.out, "output path (default stdout)");
  app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

lelong::CPoint point_from_lists(const std::string& logmod, const std::string& arg) {
  auto lm = parse_list(logmod);
  if (arg.empty()) return lelong::CPoint(std::move(lm));
  auto ar = parse_list(arg);
  if (ar.size() != lm.size()) throw Error(ErrorKind::DimensionMismatch, "--arg and --logmod lengths differ");
  return lelong::CPoint(std::move(lm), std::move(ar));
}

int cmd_polytope(const PolytopeArgs& a, std::ostream& out) {
  const auto p = load_polytope(a.file);
  if (a.check == "lower") {
    out << (lelong::is_lower(p) ? "true" : "false") << '\n';
  } else if (a.check == "sigma") {
    out << format_number(lelong::sigma(p)) << '\n';
  } else if (a.check == "extreme") {
    for (const auto& v : lelong::extreme_points(p)) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << format_number(v[i]);
      out << '\n';
    }
  } else if (a.check == "contains") {
    if (a.point.empty()) throw Error(ErrorKind::BadParameters, "--check contains needs --point");
    const auto x = parse_list(a.point);
    if (static_cast<int>(x.size()) != p.dim()) throw Error(ErrorKind::DimensionMismatch, "--point dimension");
    out << (lelong::contains(p, x) ? "true" : "false") << '\n';
  } else {  // support
    if (a.xi.empty()) throw Error(ErrorKind::BadParameters, "--check support needs --xi");
    const auto xi = parse_list(a.xi);
    if (static_cast<int>(xi.size()) != p.dim()) throw Error(ErrorKind::DimensionMismatch, "--xi dimension");
    out << format_number(lelong::support(p, xi)) << '\n';
  }
  return kExitOk;
}

int cmd_hs(const HsArgs& a, std::ostream& out) {
  const auto p = load_polytope(a.file);
  const auto z = point_from_lists(a.logmod, a.arg);
  if (z.dim() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "point and polytope dimensions differ");
  double v = 0.0;
  if (a.method == "auto")
    v = lelong::hs(p, z);
  else if (a.method == "interior")
    v = lelong::hs_interior(p, z);
  else if (a.method == "lower")
    v = lelong::hs_lower_formula(p, z);
  else
    v = lelong::hs_limit_descent(p, z, a.t);
  out << format_number(v) << '\n';
  return kExitOk;
}

lelong::OpConfig op_config_for(const std::string& config_path, int n) {
  if (config_path.empty()) return {};
  return parse_op_config(read_json(config_path), n);
}

int cmd_reg(const RegArgs& a, CLI::App* sub, std::ostream& out) {
  const auto u = load_function(a.fn);
  const auto grid = load_grid(a.grid);
  for (const auto& z : grid)
    if (z.dim() != u->dim()) throw Error(ErrorKind::DimensionMismatch, "grid point dimension differs from fn");
  auto cfg = op_config_for(a.config, u->dim());
  // explicit flags override the config file
  if (a.config.empty() || sub->count("--op")) cfg.op = lelong::parse_op(a.op);
  if (a.config.empty() || sub->count("--delta")) cfg.delta = a.delta;
  const auto fmt = parse_format(a.format);

  if (a.check == "monotone") {
    const auto deltas = a.deltas.empty() ? lelong::Vec{cfg.delta, cfg.delta / 2, cfg.delta / 4} : parse_list(a.deltas);
    const auto r = lelong::monotone_check(cfg, *u, deltas, grid, a.tol);
    write_report(r, a.out, fmt, out);
    return lelong::report_passes(r) ? kExitOk : kExitCheckFailed;
  }

  lelong::Report r({"point", "value", "u"});
  lelong::Vec values(grid.size()), base(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = lelong::apply_operator(*u, cfg, grid[i]);
    base[i] = u->eval(grid[i]);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) r.add_row({static_cast<double>(i), values[i], base[i]});
  r.set_meta("op", std::string(lelong::op_name(cfg.op)));
  r.set_meta("delta", format_number(cfg.delta));
  write_report(r, a.out, fmt, out);
  return kExitOk;
}

bool any_verdict(const lelong::Report& r, const std::string& v) {
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    if (r.text(i, "verdict") == v) return true;
  return false;
}

int cmd_ex12(const Ex12Args& a, const OutArgs& o, std::ostream& out) {
  const auto radii = parse_list(a.radii);
  const auto r = lelong::example12_report(a.a, a.b, a.delta, radii);
  write_report(r, o.out, parse_format(o.format), out);
  return any_verdict(r, "violated") ? kExitCheckFailed : kExitOk;
}

int cmd_perera(const std::string& radii, const OutArgs& o, std::ostream& out) {
  const auto r = lelong::perera_example_report(parse_list(radii));
  write_report(r, o.out, parse_format(o.format), out);
  return any_verdict(r, "refuted") ? kExitOk : kExitCheckFailed;
}

int cmd_hsmono(const std::vector<std::string>& files, const OutArgs& o, std::ostream& out) {
  std::vector<lelong::Polytope> ps;
  for (const auto& f : files) ps.push_back(load_polytope(f));
  const auto r = lelong::hs_nonmonotone_report(ps);
  write_report(r, o.out, parse_format(o.format), out);
  return kExitOk;
}

int cmd_witness(const WitnessArgs& a, const OutArgs& o, std::ostream& out) {
  const auto w = lelong::nonuniform_witness(load_polytope(a.file), a.delta);
  write_report(w.report, o.out, parse_format(o.format), out);
  return w.report.meta_value("verdict") == "diverging" ? kExitOk : kExitCheckFailed;
}

int cmd_lipschitz(const LipschitzArgs& a, std::uint64_t seed, const OutArgs& o, std::ostream& out) {
  const auto f = load_function(a.fn);
  const double est = lelong::lipschitz_estimate(*f, a.pairs, a.box, seed);
  double bound = a.bound;
  if (std::isnan(bound)) {
    const auto g = f->growth();
    if (g && lelong::is_lower(g->polytope)) bound = lelong::sigma(g->polytope);
  }
  lelong::Report r(lelong::kDiagnosticColumns);
  std::string verdict = "none";
  if (!std::isnan(bound)) verdict = est <= bound + 1e-6 ? "ok" : "violated";
  r.add_row({a.box, est, bound, bound - est, verdict});
  r.set_meta("verdict", verdict);
  write_report(r, o.out, parse_format(o.format), out);
  return verdict == "violated" ? kExitCheckFailed : kExitOk;
}

int cmd_dini(const DiniArgs& a, std::ostream& out) {
  int j0 = 0;
  if (!a.values.empty()) {
    const auto j = read_json(a.values);
    std::vector<lelong::Vec> fs;
    for (const auto& row : j.at("f")) fs.push_back(parse_vector(row));
    const auto g = parse_vector(j.at("g"));
    const double tol = j.contains("tol") ? parse_number(j.at("tol")) : 0.0;
    j0 = lelong::dini_index(fs, g, tol);
  } else {
    if (a.fn.empty() || a.grid.empty())
      throw Error(ErrorKind::BadParameters, "dini needs --values or both --fn and --grid");
    const auto u = load_function(a.fn);
    const auto grid = load_grid(a.grid);
    auto cfg = op_config_for(a.config, u->dim());
    if (a.config.empty()) cfg.op = lelong::Op::B;
    std::vector<lelong::FunctionPtr> fs;
    for (double d : parse_list(a.deltas)) {
      auto c = cfg;
      c.delta = d;
      fs.push_back(lelong::regularized(u, c));
    }
    const double eps = a.eps;
    const lelong::LambdaFunction g(u->dim(), [u, eps](const lelong::CPoint& z) { return u->eval(z) + eps; });
    j0 = lelong::dini_index(fs, g, grid, a.tol);
  }
  out << j0 << '\n';
  return kExitOk;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotDecreasing:
    case ErrorKind::NeverBelow:
    case ErrorKind::GlueMismatch:
      return kExitCheckFailed;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic supporting functions, regularization operators and diagnostics", "lelonglab"};
  app.require_subcommand(1);
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "seed for sampled diagnostics")->capture_default_str();

  PolytopeArgs pa;
  auto* polytope = app.add_subcommand("polytope", "inspect a polytope fixture");
  polytope->add_option("--file", pa.file, "polytope JSON")->required()->check(CLI::ExistingFile);
  polytope->add_option("--check", pa.check, "lower, sigma, extreme, contains or support")
      ->check(CLI::IsMember({"lower", "sigma", "extreme", "contains", "support"}))
      ->capture_default_str();
  polytope->add_option("--point", pa.point, "comma-separated point for --check contains");
  polytope->add_option("--xi", pa.xi, "comma-separated direction for --check support");

  HsArgs ha;
  auto* hs = app.add_subcommand("hs", "evaluate H_S at a point");
  hs->add_option("--file", ha.file, "polytope JSON")->required()->check(CLI::ExistingFile);
  hs->add_option("--logmod", ha.logmod, "comma-separated log-moduli (-inf for zero)")->required();
  hs->add_option("--arg", ha.arg, "comma-separated arguments");
  hs->add_option("--method", ha.method, "auto, interior, lower or descent")
      ->check(CLI::IsMember({"auto", "interior", "lower", "descent"}))
      ->capture_default_str();
  hs->add_option("--t", ha.t, "descent parameter for --method descent")->capture_default_str();

  RegArgs ra;
  auto* reg = app.add_subcommand("reg", "apply a regularization operator on a grid");
  reg->add_option("--op", ra.op, "a, b, c, d or std")
      ->check(CLI::IsMember({"a", "b", "c", "d", "std"}))
      ->capture_default_str();
  reg->add_option("--delta", ra.delta, "operator parameter")->capture_default_str();
  reg->add_option("--fn", ra.fn, "function JSON")->required()->check(CLI::ExistingFile);
  reg->add_option("--grid", ra.grid, "grid JSON")->required()->check(CLI::ExistingFile);
  reg->add_option("--config", ra.config, "operator config JSON (mu, kernel, search)")->check(CLI::ExistingFile);
  reg->add_option("--check", ra.check, "none or monotone")
      ->check(CLI::IsMember({"none", "monotone"}))
      ->capture_default_str();
  reg->add_option("--deltas", ra.deltas, "decreasing deltas for --check monotone");
  reg->add_option("--tol", ra.tol, "monotonicity tolerance")->capture_default_str();
  reg->add_option("--out", ra.out, "output path (default stdout)");
  reg->add_option("--format", ra.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* report = app.add_subcommand("report", "reproduce a diagnostics report");
  report->require_subcommand(1);

  Ex12Args ea;
  OutArgs eo;
  auto* ex12 = report->add_subcommand("ex12", "infimal convolution on the two-dimensional non-lower example");
  ex12->add_option("--a", ea.a, "polytope parameter a")->capture_default_str();
  ex12->add_option("--b", ea.b, "polytope parameter b > a(a+1)")->capture_default_str();
  ex12->add_option("--delta", ea.delta, "operator parameter")->capture_default_str();
  ex12->add_option("--radii", ea.radii, "comma-separated |zeta| values")->capture_default_str();
  add_output(ex12, eo);

  std::string perera_radii = "2,4,8";
  OutArgs po;
  auto* perera = report->add_subcommand("perera", "counterexample to the Log+ formula on a non-lower set");
  perera->add_option("--radii", perera_radii, "comma-separated R >= 1")->capture_default_str();
  add_output(perera, po);

  std::vector<std::string> mono_files;
  OutArgs mo;
  auto* hsmono = report->add_subcommand("hsmono", "h_S at 1 along nested polytopes");
  hsmono->add_option("--files", mono_files, "nested polytope JSONs, outermost first")
      ->required()
      ->delimiter(',')
      ->check(CLI::ExistingFile);
  add_output(hsmono, mo);

  WitnessArgs wa;
  OutArgs wo;
  auto* witness = report->add_subcommand("witness", "non-uniform continuity witness for a non-lower set");
  witness->add_option("--file", wa.file, "polytope JSON")->required()->check(CLI::ExistingFile);
  witness->add_option("--delta", wa.delta, "offset size")->capture_default_str();
  add_output(witness, wo);

  LipschitzArgs la;
  OutArgs lo;
  auto* lipschitz = report->add_subcommand("lipschitz", "sampled Lipschitz constant");
  lipschitz->add_option("--fn", la.fn, "function JSON")->required()->check(CLI::ExistingFile);
  lipschitz->add_option("--pairs", la.pairs, "sample pairs")->capture_default_str()->check(CLI::PositiveNumber);
  lipschitz->add_option("--box", la.box, "half-width of the sampling box")->capture_default_str();
  lipschitz->add_option("--bound", la.bound, "bound to check (default sigma for lower growth sets)");
  add_output(lipschitz, lo);

  DiniArgs da;
  auto* dini = app.add_subcommand("dini", "first index past which a decreasing sequence stays below g");
  dini->add_option("--values", da.values, "JSON {f: [[...]...], g: [...], tol}")->check(CLI::ExistingFile);
  dini->add_option("--fn", da.fn, "function JSON; f_j = R_{delta_j} u, g = u + eps")->check(CLI::ExistingFile);
  dini->add_option("--grid", da.grid, "grid JSON")->check(CLI::ExistingFile);
  dini->add_option("--config", da.config, "operator config JSON (default op b)")->check(CLI::ExistingFile);
  dini->add_option("--deltas", da.deltas, "decreasing deltas")->capture_default_str();
  dini->add_option("--eps", da.eps, "margin of g above u")->capture_default_str();
  dini->add_option("--tol", da.tol, "monotonicity tolerance")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (polytope->parsed()) return cmd_polytope(pa, out);
    if (hs->parsed()) return cmd_hs(ha, out);
    if (reg->parsed()) return cmd_reg(ra, reg, out);
    if (ex12->parsed()) return cmd_ex12(ea, eo, out);
    if (perera->parsed()) return cmd_perera(perera_radii, po, out);
    if (hsmono->parsed()) return cmd_hsmono(mono_files, mo, out);
    if (witness->parsed()) return cmd_witness(wa, wo, out);
    if (lipschitz->parsed()) return cmd_lipschitz(la, seed, lo, out);
    if (dini->parsed()) return cmd_dini(da, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lelonglab
