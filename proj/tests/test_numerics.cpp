#include <doctest.h>

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lelong/distance.hpp"
#include "lelong/error.hpp"
#include "lelong/kernel.hpp"
#include "lelong/parallel.hpp"
#include "lelong/search.hpp"
#include "support.hpp"

using namespace lelong;
using tsupport::Gen;

namespace {

// composite Simpson on [a, b]
double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double bump_rho(double rho) { return rho < 1.0 ? std::exp(-1.0 / (1.0 - rho * rho)) * rho : 0.0; }

std::vector<Complex> random_unit(Gen& g, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  double norm = 0.0;
  for (auto& c : z) {
    c = {g.uniform(-1, 1), g.uniform(-1, 1)};
    norm += std::norm(c);
  }
  for (auto& c : z) c /= std::sqrt(norm);
  return z;
}

}  // namespace

TEST_CASE("distance constants on the built-in kinds") {
  const auto e = DistanceFn::euclidean(3);
  CHECK(e.r_mu() == 1.0);
  CHECK(e.s_mu() == 1.0);
  const auto w = DistanceFn::weighted_sup({1.0, 2.0});
  CHECK(w.r_mu() == doctest::Approx(1.0 / std::sqrt(1.25)));
  CHECK(w.s_mu() == 2.0);
  const auto lin = DistanceFn::linear(2, {2.0, 0.0, 0.0, 0.5});
  CHECK(lin.r_mu() == doctest::Approx(0.5));
  CHECK(lin.s_mu() == doctest::Approx(2.0));
  CHECK_THROWS_AS(DistanceFn::weighted_sup({1.0, 0.0}), Error);
  CHECK_THROWS_AS(DistanceFn::linear(2, {1.0, 1.0, 1.0, 1.0}), Error);
  const auto l1 = DistanceFn::custom(2, [](std::span<const Complex> z) { return std::abs(z[0]) + std::abs(z[1]); });
  CHECK(l1.r_mu() >= 1.0 - 1e-12);
  CHECK(l1.s_mu() <= std::sqrt(2.0) + 1e-12);
  CHECK(l1.s_mu() >= std::sqrt(2.0) - 1e-2);
  CHECK_FALSE(l1.modulus_only());
}

TEST_CASE("distance homogeneity and equivalence constants hold on samples") {
  Gen g(41);
  const std::vector<DistanceFn> mus{DistanceFn::euclidean(2), DistanceFn::weighted_sup({0.5, 3.0}),
                                    DistanceFn::linear(2, {Complex{1, 1}, 2.0, 0.0, Complex{0, -1}})};
  for (const auto& mu : mus) {
    for (int s = 0; s < 1000; ++s) {
      const auto z = random_unit(g, 2);
      const double m = mu(z);
      CHECK(m >= mu.r_mu() - 1e-12);
      CHECK(m <= mu.s_mu() + 1e-12);
      const Complex t{g.uniform(-3, 3), g.uniform(-3, 3)};
      std::vector<Complex> tz{t * z[0], t * z[1]};
      CHECK(mu(tz) == doctest::Approx(std::abs(t) * m).epsilon(1e-12));
      if (mu.modulus_only()) {
        const double mods[] = {std::abs(z[0]), std::abs(z[1])};
        CHECK(mu.of_moduli(mods) == doctest::Approx(m).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("Gauss-Legendre on [0,1] is exact to degree 2n-1") {
  for (int n : {1, 4, 16, 32}) {
    std::vector<double> x, w;
    gauss_legendre_unit(n, x, w);
    for (int d = 0; d < 2 * n; ++d) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], d);
      CHECK(s == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("kernel normalization and moments against an independent integral") {
  const double mass = simpson(bump_rho, 0.0, 1.0, 200000);
  CHECK(mass == doctest::Approx(0.07424775338796102).epsilon(1e-12));
  const Kernel k;
  CHECK(k.radial() == 32);
  CHECK(k.mass_defect() < 1e-10);
  CHECK(k.per_variable_mass() == doctest::Approx(1.0 / (kTwoPi * mass)).epsilon(1e-10));
  double total = 0.0;
  for (const auto& node : k.nodes()) total += node.weight;
  CHECK(std::abs(total - 1.0) < 1e-13);  // 1024 rounded additions
  const double m2 = simpson([](double r) { return r * r * bump_rho(r); }, 0.0, 1.0, 200000) / mass;
  CHECK(k.radial_moment([](double r) { return r * r; }) == doctest::Approx(m2).epsilon(1e-10));
  // log rho is singular at the centre: only high orders get close
  const double lm = simpson([](double r) { return r > 0 ? std::log(r) * bump_rho(r) : 0.0; }, 0.0, 1.0, 2000000) / mass;
  CHECK(Kernel(256, 8).radial_moment([](double r) { return std::log(r); }) == doctest::Approx(lm).epsilon(5e-5));
  // the angular rule integrates low harmonics exactly
  double c3 = 0.0;
  for (const auto& node : k.nodes()) c3 += node.weight * std::cos(3 * node.theta);
  CHECK(std::abs(c3) < 1e-15);
  CHECK_THROWS_AS(Kernel(0, 4), Error);
  CHECK(k.doubled().radial() == 64);
  CHECK(k.halved().angular() == 16);
}

TEST_CASE("kernel mass defect shrinks with order") {
  CHECK(Kernel(8, 4).mass_defect() > Kernel(16, 4).mass_defect());
  CHECK(Kernel(64, 4).mass_defect() < 1e-12);
}

TEST_CASE("golden section") {
  const double x = golden_section([](double t) { return (t - 0.3) * (t - 0.3); }, -2, 5);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-7));
  const double y = golden_section([](double t) { return std::abs(t + 1.25); }, 3, -4);
  CHECK(y == doctest::Approx(-1.25).epsilon(1e-7));
}

TEST_CASE("minimize_box on smooth and nonsmooth objectives") {
  SearchConfig cfg;
  SearchBox box{{-2, -2}, {2, 2}, {0, 0}};
  auto r = minimize_box([](const Vec& v) { return std::pow(1 - v[0], 2) + 10 * std::pow(v[1] - v[0] * v[0], 2); }, box,
                        cfg);
  CHECK(r.value < 1e-6);
  r = minimize_box([](const Vec& v) { return std::abs(v[0] - 0.7) + 2 * std::abs(v[1] + 1.3); }, box, cfg);
  CHECK(r.value < 1e-8);
  CHECK(r.x[0] == doctest::Approx(0.7).epsilon(1e-6));
  // a minimizer nine orders of magnitude below the box width
  SearchBox wide{{-1}, {1}, {0.5}};
  r = minimize_box([](const Vec& v) { return std::abs(v[0] - 1e-9) + 1.0; }, wide, cfg);
  CHECK(r.value - 1.0 < 1e-12);
  // the center is a candidate, so the result never exceeds it
  Gen g(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec c = g.vec(3, -1, 1);
    SearchBox b{{-1, -1, -1}, {1, 1, 1}, c};
    auto f = [&](const Vec& v) { return std::sin(7 * v[0]) * std::cos(5 * v[1]) + v[2] * v[2]; };
    CHECK(minimize_box(f, b, cfg).value <= f(c));
  }
  SearchConfig bad;
  bad.multistart = 0;
  CHECK_THROWS_AS(validate(bad), Error);
  bad = {};
  bad.radius_override = -1.0;
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("minimize_box works above four dimensions") {
  SearchConfig cfg;
  SearchBox box{Vec(6, -1.0), Vec(6, 1.0), Vec(6, 0.9)};
  const auto r = minimize_box(
      [](const Vec& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += std::abs(v[i] - 0.1 * static_cast<double>(i));
        return s;
      },
      box, cfg);
  CHECK(r.value < 1e-6);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  CHECK(thread_count() >= 1);
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("seven");
                  }),
                  std::runtime_error);
  parallel_for(0, [](std::size_t) { FAIL("no work expected"); });
}
