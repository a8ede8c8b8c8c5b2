#include "lelong/function.hpp"

#include "lelong/error.hpp"

namespace lelong {

ConstantFunction::ConstantFunction(int n, double c, std::optional<Polytope> p) : n_(n), c_(c), p_(std::move(p)) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "dimension must be positive");
  if (p_ && p_->dim() != n) throw Error(ErrorKind::DimensionMismatch, "constant: polytope dimension");
}

std::optional<Growth> ConstantFunction::growth() const {
  if (!p_) return std::nullopt;
  Growth g{*p_, c_, std::nullopt};
  if (sigma(*p_) == 0.0) g.lower_const = c_;
  return g;
}

LambdaFunction::LambdaFunction(int n, Fn fn, std::optional<Growth> growth, bool multicircled)
    : n_(n), fn_(std::move(fn)), growth_(std::move(growth)), circled_(multicircled) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "dimension must be positive");
}

ScaledFunction::ScaledFunction(FunctionPtr u, double t) : u_(std::move(u)), t_(t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::BadParameters, "scale factor must be positive");
}

double ScaledFunction::eval(const CPoint& z) const {
  const double v = u_->eval(z);
  return v == kNegInf ? kNegInf : t_ * v;
}

std::optional<Growth> ScaledFunction::growth() const {
  auto g = u_->growth();
  if (!g) return std::nullopt;
  Growth out{scaled(g->polytope, t_), t_ * g->upper_const, std::nullopt};
  if (g->lower_const) out.lower_const = t_ * *g->lower_const;
  return out;
}

FunctionPtr constant_function(int n, double c, std::optional<Polytope> p) {
  return std::make_shared<ConstantFunction>(n, c, std::move(p));
}

FunctionPtr scale_function(FunctionPtr u, double t) { return std::make_shared<ScaledFunction>(std::move(u), t); }

}  // namespace lelong
