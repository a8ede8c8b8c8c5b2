#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lelong/cpoint.hpp"
#include "lelong/function.hpp"
#include "lelong/polytope.hpp"
#include "lelong/regularize.hpp"
#include "lelong/report.hpp"

namespace lelonglab {

using nlohmann::json;

/// Number from a JSON number or a decimal string ("-inf" and "inf" allowed).
double parse_number(const json& j);
lelong::Vec parse_vector(const json& j);

lelong::Polytope parse_polytope(const json& j);
lelong::CPoint parse_cpoint(const json& j);
/// Either {"points": [...]} or a bare array of points.
std::vector<lelong::CPoint> parse_grid(const json& j);
/// kinds: hs, tropical, polylog, constant. "polytope" may be an object or a
/// path relative to base_dir.
lelong::FunctionPtr parse_function(const json& j, const std::filesystem::path& base_dir = {});
lelong::DistanceFn parse_distance(const json& j, int n);
lelong::Kernel parse_kernel(const json& j);
lelong::SearchConfig parse_search(const json& j);
/// {"op", "delta", "mu", "kernel", "search"}; every field optional.
lelong::OpConfig parse_op_config(const json& j, int n);

json read_json(const std::filesystem::path& path);
lelong::Polytope load_polytope(const std::filesystem::path& path);
lelong::FunctionPtr load_function(const std::filesystem::path& path);
std::vector<lelong::CPoint> load_grid(const std::filesystem::path& path);

enum class Format { Csv, Json };
Format parse_format(const std::string& s);

json report_to_json(const lelong::Report& r);
lelong::Report report_from_json(const json& j);
void write_report(const lelong::Report& r, std::ostream& out, Format fmt);
/// "-" or empty writes to `fallback`.
void write_report(const lelong::Report& r, const std::string& path, Format fmt, std::ostream& fallback);

/// Comma-separated list of numbers.
lelong::Vec parse_list(const std::string& s);

}  // namespace lelonglab
