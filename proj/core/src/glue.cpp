#include <cmath>

#include "lelong/error.hpp"
#include "lelong/logsupport.hpp"
#include "lelong/regularize.hpp"

namespace lelong {

GluedFunction::GluedFunction(FunctionPtr u, Polytope p, double c, double t, double radius, double delta, Kernel k)
    : u_(std::move(u)), p_(std::move(p)), c_(c), t_(t), radius_(radius), delta_(delta), k_(std::move(k)) {
  if (!u_) throw Error(ErrorKind::BadParameters, "null function");
  if (u_->dim() != p_.dim()) throw Error(ErrorKind::DimensionMismatch, "glue: function and polytope dimensions");
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorKind::BadParameters, "glue: t must lie in (0, 1)");
  if (!(delta > 0.0) || !(radius > 0.0)) throw Error(ErrorKind::BadParameters, "glue: delta and R must be positive");
  tu_ = scale_function(u_, t_);
}

double GluedFunction::smooth_branch(const CPoint& z) const { return std_smooth(*tu_, delta_, z, k_); }

double GluedFunction::eval(const CPoint& z) const {
  const double outer = hs(p_, z) - c_;
  if (!(z.log_sup_norm() < std::log(radius_))) return outer;
  return std::max(outer, smooth_branch(z));
}

std::optional<Growth> GluedFunction::growth() const { return std::nullopt; }

double glue_min_radius(double c, double t, double c_u, double a) {
  return std::max(1.0, std::exp((c + t * c_u) / ((1.0 - t) * a)));
}

namespace {

// Points with sup norm exactly R: the distinguished boundary on a 4-point
// argument grid per coordinate, then one coordinate at R with the others at
// 0, 1 or sqrt(R).
std::vector<CPoint> boundary_samples(int n, double radius) {
  const double lr = std::log(radius);
  std::vector<CPoint> out;
  const int per = 4;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    Vec ar(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) ar[static_cast<std::size_t>(j)] = kTwoPi * idx[static_cast<std::size_t>(j)] / per + 0.1;
    out.emplace_back(Vec(static_cast<std::size_t>(n), lr), ar);
    int j = 0;
    while (j < n && ++idx[static_cast<std::size_t>(j)] == per) idx[static_cast<std::size_t>(j++)] = 0;
    if (j == n) break;
  }
  const double levels[] = {kNegInf, 0.0, 0.5 * lr};
  for (int lead = 0; lead < n; ++lead) {
    for (double level : levels) {
      Vec lm(static_cast<std::size_t>(n), level);
      lm[static_cast<std::size_t>(lead)] = lr;
      out.emplace_back(lm);
    }
  }
  return out;
}

}  // namespace

FunctionPtr glue(FunctionPtr u, const Polytope& p, double c, double t, double radius, double delta, double a,
                 const Kernel& k) {
  if (!u) throw Error(ErrorKind::BadParameters, "null function");
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorKind::BadParameters, "glue: t must lie in (0, 1)");
  if (!(a > 0.0)) throw Error(ErrorKind::BadParameters, "glue: a must be positive");
  if (!is_subset(simplex(p.dim(), a), p)) throw Error(ErrorKind::BadParameters, "glue: a * Sigma is not inside P");
  const auto g = u->growth();
  if (!g) throw Error(ErrorKind::BadParameters, "glue: u needs a declared upper constant");
  const double r0 = glue_min_radius(c, t, g->upper_const, a);
  if (!(radius > r0)) throw Error(ErrorKind::BadParameters, "glue: R must exceed R0");
  auto glued = std::make_shared<GluedFunction>(std::move(u), p, c, t, radius, delta, k);
  for (const auto& z : boundary_samples(p.dim(), radius)) {
    if (glued->smooth_branch(z) >= hs(p, z) - c)
      throw Error(ErrorKind::GlueMismatch, "smooth branch reaches H_S - C on the boundary of the polydisc");
  }
  return glued;
}

}  // namespace lelong
