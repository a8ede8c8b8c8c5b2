#include "lelong/logsupport.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lelong/error.hpp"
#include "lelong/parallel.hpp"

namespace lelong {

namespace {

void check_point(const Polytope& p, const CPoint& z) {
  if (p.dim() != z.dim()) throw Error(ErrorKind::DimensionMismatch, "polytope and point dimensions differ");
}

}  // namespace

double hs_interior(const Polytope& p, const CPoint& z) {
  check_point(p, z);
  if (!z.in_torus_complement()) throw Error(ErrorKind::ZeroCoordinate, "hs_interior needs all z_j != 0");
  return support(p, z.logmod());
}

double hs(const Polytope& p, const CPoint& z) {
  check_point(p, z);
  const auto zeros = z.zero_coords();
  if (zeros.empty()) return support(p, z.logmod());
  if (static_cast<int>(zeros.size()) == z.dim()) return 0.0;
  const Polytope t = face_restrict(p, zeros);
  Vec rest;
  rest.reserve(static_cast<std::size_t>(t.dim()));
  for (int j = 0; j < z.dim(); ++j)
    if (!z.is_zero(j)) rest.push_back(z.logmod(j));
  return support(t, rest);
}

double hs_lower_formula(const Polytope& p, const CPoint& z) {
  check_point(p, z);
  if (!is_lower(p)) throw Error(ErrorKind::NotLowerSet, "hs_lower_formula needs a lower set");
  Vec xi(z.logmod());
  for (double& x : xi) x = log_plus(x);
  return support(p, xi);
}

double hs_limit_descent(const Polytope& p, const CPoint& z, double t) {
  check_point(p, z);
  Vec xi(z.logmod());
  for (double& x : xi)
    if (x == kNegInf) x = -t;
  return support(p, xi);
}

double hs_poly(std::span<const Vec> vertices, const CPoint& z) {
  Vec terms;
  terms.reserve(vertices.size());
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != z.dim()) throw Error(ErrorKind::DimensionMismatch, "hs_poly vertex length");
    terms.push_back(dot_log(v, z.logmod()));
  }
  return log_sum_exp(terms);
}

TropicalFunction::TropicalFunction(Polytope p, std::vector<TropicalPiece> pieces)
    : p_(std::move(p)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorKind::BadParameters, "tropical function needs at least one piece");
  for (const auto& piece : pieces_) {
    if (static_cast<int>(piece.a.size()) != p_.dim())
      throw Error(ErrorKind::DimensionMismatch, "tropical piece length");
    if (!std::isfinite(piece.c)) throw Error(ErrorKind::BadParameters, "tropical constant must be finite");
    for (double x : piece.a)
      if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::NotInClass, "tropical slope outside the orthant");
    if (!contains(p_, piece.a)) throw Error(ErrorKind::NotInClass, "tropical slope not in the polytope");
  }
  // u >= max over extreme-point pieces >= H_P + min of their constants, when
  // every extreme point carries a piece.
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& e : extreme_points(p_)) {
    double best = kNegInf;
    for (const auto& piece : pieces_)
      if (piece.a == e) best = std::max(best, piece.c);
    if (best == kNegInf) return;
    lo = std::min(lo, best);
  }
  lower_ = lo;
}

double TropicalFunction::eval(const CPoint& z) const { return tropical_eval(*this, z); }

std::optional<Growth> TropicalFunction::growth() const {
  double hi = kNegInf;
  for (const auto& piece : pieces_) hi = std::max(hi, piece.c);
  return Growth{p_, hi, lower_};
}

double tropical_eval(const TropicalFunction& f, const CPoint& z) {
  if (f.dim() != z.dim()) throw Error(ErrorKind::DimensionMismatch, "tropical_eval dimension");
  double best = kNegInf;
  for (const auto& piece : f.pieces()) {
    const double v = dot_log(piece.a, z.logmod());
    if (v != kNegInf) best = std::max(best, v + piece.c);
  }
  return best;
}

PolyLogFunction::PolyLogFunction(Polytope p, std::vector<Monomial> monomials, int m)
    : p_(std::move(p)), monomials_(std::move(monomials)), m_(m) {
  if (m_ < 1) throw Error(ErrorKind::BadParameters, "polylog scale must be a positive integer");
  if (monomials_.empty()) throw Error(ErrorKind::BadParameters, "polylog needs at least one monomial");
  for (const auto& mono : monomials_) {
    if (static_cast<int>(mono.exponent.size()) != p_.dim())
      throw Error(ErrorKind::DimensionMismatch, "monomial exponent length");
    if (!std::isfinite(mono.coeff.real()) || !std::isfinite(mono.coeff.imag()))
      throw Error(ErrorKind::BadParameters, "monomial coefficient must be finite");
    Vec point(mono.exponent.size());
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (mono.exponent[j] < 0) throw Error(ErrorKind::NotInClass, "negative exponent");
      point[j] = static_cast<double>(mono.exponent[j]) / m_;
    }
    if (!contains(p_, point)) throw Error(ErrorKind::NotInClass, "exponent / m not in the polytope");
  }
}

double PolyLogFunction::eval(const CPoint& z) const { return polylog_eval(*this, z); }

std::optional<Growth> PolyLogFunction::growth() const {
  double total = 0.0;
  for (const auto& mono : monomials_) total += std::abs(mono.coeff);
  if (total == 0.0) return Growth{p_, kNegInf, std::nullopt};
  return Growth{p_, std::log(total) / m_, std::nullopt};
}

bool PolyLogFunction::multicircled() const {
  int live = 0;
  for (const auto& mono : monomials_)
    if (mono.coeff != Complex{0.0, 0.0}) ++live;
  return live <= 1;
}

double polylog_eval(const PolyLogFunction& f, const CPoint& z) {
  if (f.dim() != z.dim()) throw Error(ErrorKind::DimensionMismatch, "polylog_eval dimension");
  const auto& monos = f.monomials();
  Vec logmag(monos.size(), kNegInf);
  Vec phase(monos.size(), 0.0);
  double top = kNegInf;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const double c = std::abs(monos[k].coeff);
    if (c == 0.0) continue;
    Vec alpha(monos[k].exponent.begin(), monos[k].exponent.end());
    const double lm = dot_log(alpha, z.logmod());
    if (lm == kNegInf) continue;
    logmag[k] = std::log(c) + lm;
    phase[k] = std::arg(monos[k].coeff) + dot(alpha, z.arg());
    top = std::max(top, logmag[k]);
  }
  if (top == kNegInf) return kNegInf;
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < monos.size(); ++k)
    if (logmag[k] != kNegInf) sum += std::polar(std::exp(logmag[k] - top), phase[k]);
  const double r = std::abs(sum);
  if (r == 0.0) return kNegInf;
  return (top + std::log(r)) / f.scale();
}

FunctionPtr hs_function(Polytope p) { return std::make_shared<HsFunction>(std::move(p)); }

FunctionPtr vertex_envelope(const Polytope& p) {
  std::vector<TropicalPiece> pieces;
  for (const auto& v : p.vertices()) pieces.push_back({v, 0.0});
  return std::make_shared<TropicalFunction>(p, std::move(pieces));
}

namespace {

std::vector<CPoint> shell_samples(int n, double radius, int count, std::mt19937_64& rng) {
  const double top = std::log(radius);
  std::vector<CPoint> out;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double floor_lm = -8.0;
  // Deterministic rays: e_j R, e_j R with the rest on the unit torus, and R 1_n.
  for (int j = 0; j < n; ++j) {
    Vec lm(static_cast<std::size_t>(n), kNegInf);
    lm[static_cast<std::size_t>(j)] = top;
    out.emplace_back(lm);
    Vec lm1(static_cast<std::size_t>(n), 0.0);
    lm1[static_cast<std::size_t>(j)] = top;
    out.emplace_back(lm1);
  }
  out.emplace_back(Vec(static_cast<std::size_t>(n), top));
  for (int s = 0; s < count; ++s) {
    const int lead = static_cast<int>(unit(rng) * n) % n;
    Vec lm(static_cast<std::size_t>(n)), ar(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      ar[k] = kTwoPi * unit(rng);
      if (j == lead) {
        lm[k] = top;
      } else if (unit(rng) < 0.15) {
        lm[k] = kNegInf;
      } else {
        lm[k] = floor_lm + (top - floor_lm) * unit(rng);
      }
    }
    out.emplace_back(std::move(lm), std::move(ar));
  }
  for (int s = 0; s < std::max(1, count / 4); ++s) {
    Vec lm(static_cast<std::size_t>(n)), ar(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < lm.size(); ++k) {
      lm[k] = floor_lm + (top - floor_lm) * unit(rng);
      ar[k] = kTwoPi * unit(rng);
    }
    out.emplace_back(std::move(lm), std::move(ar));
  }
  return out;
}

}  // namespace

Report growth_constants(const EvaluableFunction& u, const Polytope& p, std::span<const double> radii,
                        int samples_per_radius, std::uint64_t seed) {
  if (u.dim() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "growth_constants dimension");
  if (samples_per_radius < 0) throw Error(ErrorKind::BadParameters, "samples_per_radius must be >= 0");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 1.0) || !std::isfinite(radii[i]))
      throw Error(ErrorKind::BadParameters, "radii must be finite and >= 1");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(ErrorKind::BadParameters, "radii must increase");
  }
  std::mt19937_64 rng(seed);
  Report rep({"radius", "max", "min"});
  for (double radius : radii) {
    const auto pts = shell_samples(p.dim(), radius, samples_per_radius, rng);
    Vec diff(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      const double v = u.eval(pts[i]);
      diff[i] = v == kNegInf ? kNegInf : v - hs(p, pts[i]);
    });
    double hi = kNegInf, lo = std::numeric_limits<double>::infinity();
    for (double d : diff) {
      hi = std::max(hi, d);
      lo = std::min(lo, d);
    }
    rep.add_row({radius, hi, lo});
  }
  return rep;
}

bool growth_diverges(const Report& growth, double min_step) {
  if (growth.rows.size() < 2) return false;
  for (std::size_t i = 1; i < growth.rows.size(); ++i)
    if (!(growth.number(i, "max") >= growth.number(i - 1, "max") + min_step)) return false;
  return true;
}

}  // namespace lelong
