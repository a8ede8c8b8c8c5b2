#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lelong/cpoint.hpp"
#include "lelong/distance.hpp"
#include "lelong/function.hpp"
#include "lelong/kernel.hpp"
#include "lelong/report.hpp"
#include "lelong/search.hpp"

namespace lelong {

/// Side-channel flags raised by the operators. They never change the
/// returned value's meaning, only annotate it.
struct OpStatus {
  bool nonfinite_objective = false;  // u(z) = -inf in the infimal convolution
  bool quadrature_underflow = false;  // a node hit -inf or the -1e6 floor
  bool radius_capped = false;  // the supremal-convolution radius hit its cap
};

inline constexpr double kQuadratureFloor = -1e6;
/// Cap on log r in the supremal convolution.
inline constexpr double kMaxLogRadius = 700.0;

/// -log inf_w { e^{-u(w)} + mu(z - w) / delta }, searched over the ball
/// mu(z - w) <= delta e^{-u(z)} (outside it the objective exceeds the value at
/// w = z). For multicircled u and a modulus-only mu the search runs over the
/// moduli of w with arguments aligned to z; otherwise over all of C^n.
double inf_conv_a(const EvaluableFunction& u, const DistanceFn& mu, double delta, const CPoint& z,
                  const SearchConfig& cfg = {}, OpStatus* status = nullptr);

/// sup_w u(Zw) - log(||w - 1||_inf + 1) / delta over ||w||_inf <= r with
/// r = max{1, exp((m1 - m2) / (1/delta - sigma))}. Defaults: m1 = H_S(z),
/// m2 = u(z) - c_u from the declared growth (required). DeltaTooLarge when
/// delta >= 1/sigma.
double sup_conv_b(const EvaluableFunction& u, double delta, const CPoint& z, const SearchConfig& cfg = {},
                  std::optional<double> m1 = std::nullopt, std::optional<double> m2 = std::nullopt,
                  OpStatus* status = nullptr);

/// Kernel average of u(Zw) over w_j = 1 + delta rho_j e^{i theta_j}.
/// -inf at a node of positive weight makes the result -inf (flagged); finite
/// node values below kQuadratureFloor are clamped (flagged).
double int_conv_c(const EvaluableFunction& u, double delta, const CPoint& z, const Kernel& k = Kernel(),
                  OpStatus* status = nullptr);

/// log of the kernel average of exp(u(Zw)); -inf nodes contribute 0.
double log_int_conv_d(const EvaluableFunction& u, double delta, const CPoint& z, const Kernel& k = Kernel());

/// Additive convolution u * chi_delta(z) with the per-variable product kernel
/// of radius delta / sqrt(n), so the support lies in the 2n-ball of radius delta.
double std_smooth(const EvaluableFunction& u, double delta, const CPoint& z, const Kernel& k = Kernel(),
                  OpStatus* status = nullptr);

/// log of the kernel average of exp(H_P(w)) around 1_n: the extra growth
/// constant of the exponential convolution.
double rd_growth_constant(const Polytope& p, double delta, const Kernel& k = Kernel());

enum class Op { A, B, C, D, Std };
Op parse_op(std::string_view tag);
std::string_view op_name(Op op);

struct OpConfig {
  Op op = Op::A;
  double delta = 0.5;
  std::optional<DistanceFn> mu;  // euclidean when unset
  Kernel kernel{};
  SearchConfig search{};
};

double apply_operator(const EvaluableFunction& u, const OpConfig& cfg, const CPoint& z, OpStatus* status = nullptr);

/// u regularized by a fixed operator, usable wherever a function is expected.
class RegularizedFunction final : public EvaluableFunction {
 public:
  RegularizedFunction(FunctionPtr u, OpConfig cfg);
  int dim() const override { return u_->dim(); }
  double eval(const CPoint& z) const override { return apply_operator(*u_, cfg_, z); }
  /// Propagated bound when the operator has one: b keeps c_u, c adds
  /// sigma * delta, d adds rd_growth_constant; a and std declare none.
  std::optional<Growth> growth() const override;
  bool multicircled() const override { return u_->multicircled(); }

 private:
  FunctionPtr u_;
  OpConfig cfg_;
};

FunctionPtr regularized(FunctionPtr u, OpConfig cfg);

/// max{H_P - C, (t u) * chi_delta} on the open polydisc of radius R and
/// H_P - C outside.
class GluedFunction final : public EvaluableFunction {
 public:
  GluedFunction(FunctionPtr u, Polytope p, double c, double t, double radius, double delta, Kernel k);
  int dim() const override { return p_.dim(); }
  double eval(const CPoint& z) const override;
  /// The smooth branch alone, (t u) * chi_delta.
  double smooth_branch(const CPoint& z) const;
  std::optional<Growth> growth() const override;
  bool multicircled() const override { return u_->multicircled(); }
  double radius() const noexcept { return radius_; }

 private:
  FunctionPtr u_;
  FunctionPtr tu_;
  Polytope p_;
  double c_, t_, radius_, delta_;
  Kernel k_;
};

/// R0 = max{1, exp((C + t c_u) / ((1 - t) a))}.
double glue_min_radius(double c, double t, double c_u, double a);

/// Builds the glued function after checking 0 < t < 1, a Sigma inside P, and
/// R > R0 (BadParameters otherwise); then samples the boundary of the
/// polydisc of radius R and raises GlueMismatch if the smooth branch reaches
/// H_P - C there.
FunctionPtr glue(FunctionPtr u, const Polytope& p, double c, double t, double radius, double delta, double a,
                 const Kernel& k = Kernel());

/// Smallest j0 (1-based indexing of f_seq) such that f_j < g at every grid
/// point for every j > j0; 0 when all members already are. NotDecreasing if
/// some f_{j+1} > f_j + tol, NeverBelow if the last member is not below g.
int dini_index(const std::vector<Vec>& f_seq, std::span<const double> g, double tol = 0.0);
int dini_index(const std::vector<FunctionPtr>& f_seq, const EvaluableFunction& g, std::span<const CPoint> grid,
               double tol = 1e-12);

/// Runs op at every delta (strictly decreasing) on every grid point.
/// Columns: delta, gap (max |R u - u|), max_violation (max increase over the
/// previous delta), budget (allowed numerical slack), pass (1 or 0).
/// The budget for the quadrature operators is the largest change between
/// the configured kernel and its halved orders. Meta "pass" is "true" iff
/// no violation exceeds tol + budget and the gap never grows beyond the
/// same slack.
Report monotone_check(const OpConfig& base, const EvaluableFunction& u, std::span<const double> deltas,
                      std::span<const CPoint> grid, double tol = 1e-6);

bool report_passes(const Report& r);

}  // namespace lelong
