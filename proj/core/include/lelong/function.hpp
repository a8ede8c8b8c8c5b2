#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "lelong/cpoint.hpp"
#include "lelong/polytope.hpp"

namespace lelong {

/// Declared growth u <= H_S + upper_const, and H_S + lower_const <= u when
/// lower_const is set.
struct Growth {
  Polytope polytope;
  double upper_const = 0.0;
  std::optional<double> lower_const;
};

class EvaluableFunction {
 public:
  virtual ~EvaluableFunction() = default;

  virtual int dim() const = 0;
  /// Value in R or -inf.
  virtual double eval(const CPoint& z) const = 0;
  virtual std::optional<Growth> growth() const { return std::nullopt; }
  /// Depends only on (|z_1|, ..., |z_n|).
  virtual bool multicircled() const { return false; }

  double operator()(const CPoint& z) const { return eval(z); }
};

using FunctionPtr = std::shared_ptr<const EvaluableFunction>;

class ConstantFunction final : public EvaluableFunction {
 public:
  /// With a polytope P the growth is c <= H_P + c; the lower constant is only
  /// declared when P = {0}.
  ConstantFunction(int n, double c, std::optional<Polytope> p = std::nullopt);
  int dim() const override { return n_; }
  double eval(const CPoint&) const override { return c_; }
  std::optional<Growth> growth() const override;
  bool multicircled() const override { return true; }

 private:
  int n_;
  double c_;
  std::optional<Polytope> p_;
};

/// Wraps an arbitrary callable; growth and circling are whatever the caller
/// declares.
class LambdaFunction final : public EvaluableFunction {
 public:
  using Fn = std::function<double(const CPoint&)>;
  LambdaFunction(int n, Fn fn, std::optional<Growth> growth = std::nullopt, bool multicircled = false);
  int dim() const override { return n_; }
  double eval(const CPoint& z) const override { return fn_(z); }
  std::optional<Growth> growth() const override { return growth_; }
  bool multicircled() const override { return circled_; }

 private:
  int n_;
  Fn fn_;
  std::optional<Growth> growth_;
  bool circled_;
};

/// t * u for t > 0. Growth scales to (tS, t c_u, t c).
class ScaledFunction final : public EvaluableFunction {
 public:
  ScaledFunction(FunctionPtr u, double t);
  int dim() const override { return u_->dim(); }
  double eval(const CPoint& z) const override;
  std::optional<Growth> growth() const override;
  bool multicircled() const override { return u_->multicircled(); }

 private:
  FunctionPtr u_;
  double t_;
};

FunctionPtr constant_function(int n, double c, std::optional<Polytope> p = std::nullopt);
FunctionPtr scale_function(FunctionPtr u, double t);

}  // namespace lelong
