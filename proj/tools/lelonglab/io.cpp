#include "io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lelong/error.hpp"
#include "lelong/logsupport.hpp"

namespace lelonglab {

using lelong::Error;
using lelong::ErrorKind;

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

int parse_int(const json& j, const char* what) {
  const double v = parse_number(j);
  if (!std::isfinite(v) || v != std::floor(v)) schema(std::string(what) + " must be an integer");
  return static_cast<int>(v);
}

}  // namespace

double parse_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return lelong::kNegInf;
    if (s == "inf") return std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) schema("not a number: '" + s + "'");
    return v;
  }
  schema("expected a number or a decimal string");
}

lelong::Vec parse_vector(const json& j) {
  if (!j.is_array()) schema("expected an array of numbers");
  lelong::Vec out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(parse_number(x));
  return out;
}

lelong::Polytope parse_polytope(const json& j) {
  const int n = parse_int(field(j, "n"), "n");
  const auto& verts = field(j, "vertices");
  if (!verts.is_array()) schema("vertices must be an array");
  std::vector<lelong::Vec> gens;
  for (const auto& v : verts) gens.push_back(parse_vector(v));
  return lelong::make_polytope(n, std::move(gens));
}

lelong::CPoint parse_cpoint(const json& j) {
  auto lm = parse_vector(field(j, "logmod"));
  lelong::Vec ar = j.contains("arg") ? parse_vector(j.at("arg")) : lelong::Vec(lm.size(), 0.0);
  return lelong::CPoint(std::move(lm), std::move(ar));
}

std::vector<lelong::CPoint> parse_grid(const json& j) {
  const json& pts = j.is_array() ? j : field(j, "points");
  if (!pts.is_array()) schema("grid points must be an array");
  std::vector<lelong::CPoint> out;
  for (const auto& p : pts) out.push_back(parse_cpoint(p));
  return out;
}

lelong::FunctionPtr parse_function(const json& j, const std::filesystem::path& base_dir) {
  const auto kind = field(j, "kind").get<std::string>();
  auto polytope = [&]() {
    const auto& pj = field(j, "polytope");
    if (pj.is_string()) return load_polytope(base_dir / pj.get<std::string>());
    return parse_polytope(pj);
  };
  if (kind == "hs") return lelong::hs_function(polytope());
  if (kind == "tropical") {
    std::vector<lelong::TropicalPiece> pieces;
    for (const auto& pj : field(j, "pieces"))
      pieces.push_back({parse_vector(field(pj, "a")), pj.contains("c") ? parse_number(pj.at("c")) : 0.0});
    return std::make_shared<lelong::TropicalFunction>(polytope(), std::move(pieces));
  }
  if (kind == "polylog") {
    std::vector<lelong::Monomial> monos;
    for (const auto& mj : field(j, "monomials")) {
      std::vector<int> alpha;
      for (const auto& e : field(mj, "exponent")) alpha.push_back(parse_int(e, "exponent"));
      lelong::Complex c{1.0, 0.0};
      if (mj.contains("coeff")) {
        const auto& cj = mj.at("coeff");
        if (cj.is_array()) {
          if (cj.size() != 2) schema("complex coefficient must be [re, im]");
          c = {parse_number(cj[0]), parse_number(cj[1])};
        } else {
          c = {parse_number(cj), 0.0};
        }
      }
      monos.push_back({std::move(alpha), c});
    }
    const int m = j.contains("m") ? parse_int(j.at("m"), "m") : 1;
    return std::make_shared<lelong::PolyLogFunction>(polytope(), std::move(monos), m);
  }
  if (kind == "constant") {
    const double c = parse_number(field(j, "c"));
    if (j.contains("polytope")) {
      auto p = polytope();
      const int n = p.dim();
      return lelong::constant_function(n, c, std::move(p));
    }
    return lelong::constant_function(parse_int(field(j, "n"), "n"), c);
  }
  schema("unknown function kind '" + kind + "'");
}

lelong::DistanceFn parse_distance(const json& j, int n) {
  const auto kind = j.contains("kind") ? j.at("kind").get<std::string>() : std::string("euclidean");
  if (kind == "euclidean") return lelong::DistanceFn::euclidean(n);
  if (kind == "weighted_sup") {
    auto w = parse_vector(field(j, "weights"));
    if (static_cast<int>(w.size()) != n) schema("weights length must match the dimension");
    return lelong::DistanceFn::weighted_sup(std::move(w));
  }
  if (kind == "linear") {
    const auto& rows = field(j, "matrix");
    std::vector<lelong::Complex> a;
    for (const auto& row : rows)
      for (const auto& x : row) {
        if (x.is_array() && x.size() == 2)
          a.emplace_back(parse_number(x[0]), parse_number(x[1]));
        else
          a.emplace_back(parse_number(x), 0.0);
      }
    return lelong::DistanceFn::linear(n, std::move(a));
  }
  schema("unknown distance kind '" + kind + "'");
}

lelong::Kernel parse_kernel(const json& j) {
  const int radial = j.contains("radial") ? parse_int(j.at("radial"), "radial") : 32;
  const int angular = j.contains("angular") ? parse_int(j.at("angular"), "angular") : 32;
  return lelong::Kernel(radial, angular);
}

lelong::SearchConfig parse_search(const json& j) {
  lelong::SearchConfig c;
  if (j.contains("coarse_grid")) c.coarse_grid = parse_int(j.at("coarse_grid"), "coarse_grid");
  if (j.contains("refine_iters")) c.refine_iters = parse_int(j.at("refine_iters"), "refine_iters");
  if (j.contains("multistart")) c.multistart = parse_int(j.at("multistart"), "multistart");
  if (j.contains("radius_override")) c.radius_override = parse_number(j.at("radius_override"));
  lelong::validate(c);
  return c;
}

lelong::OpConfig parse_op_config(const json& j, int n) {
  lelong::OpConfig cfg;
  if (j.contains("op")) cfg.op = lelong::parse_op(j.at("op").get<std::string>());
  if (j.contains("delta")) cfg.delta = parse_number(j.at("delta"));
  if (j.contains("mu")) cfg.mu = parse_distance(j.at("mu"), n);
  if (j.contains("kernel")) cfg.kernel = parse_kernel(j.at("kernel"));
  if (j.contains("search")) cfg.search = parse_search(j.at("search"));
  return cfg;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    schema("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

lelong::Polytope load_polytope(const std::filesystem::path& path) { return parse_polytope(read_json(path)); }

lelong::FunctionPtr load_function(const std::filesystem::path& path) {
  return parse_function(read_json(path), path.parent_path());
}

std::vector<lelong::CPoint> load_grid(const std::filesystem::path& path) { return parse_grid(read_json(path)); }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  schema("unknown format '" + s + "'");
}

namespace {

json number_json(double x) {
  if (std::isfinite(x)) return x;
  return lelong::format_number(x);
}

}  // namespace

json report_to_json(const lelong::Report& r) {
  json out;
  out["columns"] = r.columns;
  out["rows"] = json::array();
  for (const auto& row : r.rows) {
    json jr = json::array();
    for (const auto& c : row) {
      if (const auto* d = std::get_if<double>(&c))
        jr.push_back(number_json(*d));
      else
        jr.push_back(std::get<std::string>(c));
    }
    out["rows"].push_back(std::move(jr));
  }
  out["meta"] = json::object();
  for (const auto& [k, v] : r.meta) out["meta"][k] = v;
  return out;
}

lelong::Report report_from_json(const json& j) {
  lelong::Report r(field(j, "columns").get<std::vector<std::string>>());
  for (const auto& row : field(j, "rows")) {
    std::vector<lelong::Cell> cells;
    for (const auto& c : row) {
      if (c.is_number()) {
        cells.emplace_back(c.get<double>());
      } else {
        const auto s = c.get<std::string>();
        if (s == "inf" || s == "-inf" || s == "nan")
          cells.emplace_back(s == "nan" ? std::nan("") : parse_number(c));
        else
          cells.emplace_back(s);
      }
    }
    r.add_row(std::move(cells));
  }
  if (j.contains("meta"))
    for (const auto& [k, v] : j.at("meta").items()) r.set_meta(k, v.get<std::string>());
  return r;
}

void write_report(const lelong::Report& r, std::ostream& out, Format fmt) {
  if (fmt == Format::Csv) {
    lelong::write_csv(r, out);
  } else {
    out << report_to_json(r).dump(2) << '\n';
  }
}

void write_report(const lelong::Report& r, const std::string& path, Format fmt, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    write_report(r, fallback, fmt);
    return;
  }
  std::ofstream out(path);
  if (!out) schema("cannot write '" + path + "'");
  write_report(r, out, fmt);
}

lelong::Vec parse_list(const std::string& s) {
  lelong::Vec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) schema("empty item in number list '" + s + "'");
    out.push_back(parse_number(json(item)));
  }
  if (out.empty()) schema("empty number list '" + s + "'");
  return out;
}

}  // namespace lelonglab
