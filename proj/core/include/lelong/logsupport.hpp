#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lelong/cpoint.hpp"
#include "lelong/function.hpp"
#include "lelong/polytope.hpp"
#include "lelong/report.hpp"

namespace lelong {

/// support(P, logmod(z)); throws ZeroCoordinate if some z_j = 0.
double hs_interior(const Polytope& p, const CPoint& z);

/// H_S on all of C^n. On {z_j = 0, j in J} this is H_T at the remaining
/// coordinates, T the zero slice of P; at the origin it is 0.
double hs(const Polytope& p, const CPoint& z);

/// support(P, logmod(z)^+); only valid for lower P (NotLowerSet otherwise).
double hs_lower_formula(const Polytope& p, const CPoint& z);

/// support(P, xi) with every -inf log-modulus replaced by -t. Non-increasing
/// in t and tends to hs(P, z).
double hs_limit_descent(const Polytope& p, const CPoint& z, double t);

/// log sum_j |z|^{v_j}, evaluated by log-sum-exp.
double hs_poly(std::span<const Vec> vertices, const CPoint& z);

class HsFunction final : public EvaluableFunction {
 public:
  explicit HsFunction(Polytope p) : p_(std::move(p)) {}
  int dim() const override { return p_.dim(); }
  double eval(const CPoint& z) const override { return hs(p_, z); }
  std::optional<Growth> growth() const override { return Growth{p_, 0.0, 0.0}; }
  bool multicircled() const override { return true; }
  const Polytope& polytope() const noexcept { return p_; }

 private:
  Polytope p_;
};

struct TropicalPiece {
  Vec a;
  double c = 0.0;
};

/// max_k <a_k, log|z|> + c_k with 0 * (-inf) = 0. Every a_k must lie in P
/// (NotInClass otherwise), which gives u <= H_P + max_k c_k.
class TropicalFunction final : public EvaluableFunction {
 public:
  TropicalFunction(Polytope p, std::vector<TropicalPiece> pieces);
  int dim() const override { return p_.dim(); }
  double eval(const CPoint& z) const override;
  std::optional<Growth> growth() const override;
  bool multicircled() const override { return true; }
  const std::vector<TropicalPiece>& pieces() const noexcept { return pieces_; }

 private:
  Polytope p_;
  std::vector<TropicalPiece> pieces_;
  std::optional<double> lower_;
};

struct Monomial {
  std::vector<int> exponent;
  Complex coeff;
};

/// (1/m) log|sum_k coeff_k z^{alpha_k}|. Each alpha_k / m must lie in P
/// (NotInClass otherwise); then u <= H_P + log(sum |coeff_k|) / m.
class PolyLogFunction final : public EvaluableFunction {
 public:
  PolyLogFunction(Polytope p, std::vector<Monomial> monomials, int m = 1);
  int dim() const override { return p_.dim(); }
  double eval(const CPoint& z) const override;
  std::optional<Growth> growth() const override;
  bool multicircled() const override;
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  int scale() const noexcept { return m_; }

 private:
  Polytope p_;
  std::vector<Monomial> monomials_;
  int m_;
};

double tropical_eval(const TropicalFunction& f, const CPoint& z);
double polylog_eval(const PolyLogFunction& f, const CPoint& z);

FunctionPtr hs_function(Polytope p);
/// Pieces (v, 0) for every generator v of P; its envelope is H_P off the
/// coordinate hyperplanes.
FunctionPtr vertex_envelope(const Polytope& p);

/// For each radius R: max and min of u - H_P over seeded samples with
/// sup-norm exactly R (axis rays, points with zero coordinates, random
/// moduli) together with interior samples of smaller norm.
/// Columns: radius, max, min.
Report growth_constants(const EvaluableFunction& u, const Polytope& p, std::span<const double> radii,
                        int samples_per_radius, std::uint64_t seed);

/// True when the max column grows by at least min_step between every pair of
/// consecutive rows.
bool growth_diverges(const Report& growth, double min_step = 0.1);

}  // namespace lelong
