#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "isospec/rng.hpp"
#include "isospec/symbol.hpp"
#include "isospec/weyl_terms.hpp"

using namespace isospec;

namespace {
constexpr double kTwoPi = 6.283185307179586477;

PhasePoint pp2(double x1, double x2, double k1, double k2) {
  PhasePoint p;
  p.x = Eigen::Vector2d(x1, x2);
  p.xi = Eigen::Vector2d(k1, k2);
  return p;
}
}  // namespace

TEST_CASE("term evaluation: p2, radial, hopf") {
  Symbol p2 = Symbol::oscillator(2);
  CHECK(p2.value(pp2(1, 0, 1, 0)) == doctest::Approx(1.0));
  CHECK(p2.principal_is_oscillator);

  // radial_power with coeff 2, degree 1, at |w| = sqrt(2) (p2 = 1) gives 2
  HomogeneousTerm r = radial_power(2.0, 1);
  CHECK(r.value(pp2(1, 0, 1, 0)) == doctest::Approx(2.0));

  HomogeneousTerm h = hopf_pullback(Eigen::Vector2d(0.3, 0.7));
  CHECK(h.value(pp2(1, 0, 0, 0)) == doctest::Approx(0.21213203435596426).epsilon(1e-12));
}

TEST_CASE("homogeneity under scaling 2, 10, 100") {
  SplitMix64 rng(101);
  std::vector<HomogeneousTerm> terms;
  terms.push_back(hopf_pullback(Eigen::Vector2d(0.3, 0.7)));
  terms.push_back(radial_power(1.3, 1));
  terms.push_back(radial_power(-0.4, 2));
  terms.push_back(radial_power(2.2, 0));
  {
    HomogeneousTerm lin;
    lin.degree = 1;
    lin.kind = TermKind::LinearForm;
    lin.b = Eigen::VectorXd(4);
    lin.b << 0.1, -0.7, 0.3, 0.9;
    terms.push_back(lin);
  }
  {
    HomogeneousTerm quad;
    quad.degree = 2;
    quad.kind = TermKind::QuadraticForm;
    Eigen::MatrixXd Q(4, 4);
    Q.setRandom();
    quad.Q = 0.5 * (Q + Q.transpose());
    terms.push_back(quad);
  }
  for (const auto& t : terms) {
    t.validate(2);
    for (int rep = 0; rep < 5; ++rep) {
      PhasePoint p{rng.unit_vector(2), rng.unit_vector(2)};
      double base = t.value(p);
      for (double lam : {2.0, 10.0, 100.0}) {
        PhasePoint q{lam * p.x, lam * p.xi};
        double scaled = t.value(q);
        double expect = std::pow(lam, t.degree) * base;
        CHECK(std::abs(scaled - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
      }
    }
  }
}

TEST_CASE("term gradient matches finite differences") {
  SplitMix64 rng(55);
  std::vector<HomogeneousTerm> terms = {hopf_pullback(Eigen::Vector2d(0.4, -0.2)),
                                        radial_power(0.8, 1), radial_power(1.1, 2)};
  for (const auto& t : terms) {
    for (int rep = 0; rep < 5; ++rep) {
      Eigen::VectorXd w = 2.0 * rng.unit_vector(4);
      Eigen::VectorXd g = t.gradient(PhasePoint::unpack(w));
      for (int i = 0; i < 4; ++i) {
        Eigen::VectorXd wp = w, wm = w;
        wp[i] += 1e-6;
        wm[i] -= 1e-6;
        double fd = (t.value(PhasePoint::unpack(wp)) - t.value(PhasePoint::unpack(wm))) / 2e-6;
        CHECK(g[i] == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("symbol validation rejects bad terms") {
  HomogeneousTerm bad;
  bad.degree = 2;
  bad.kind = TermKind::QuadraticForm;
  bad.Q = Eigen::MatrixXd::Zero(4, 4);
  bad.Q(0, 1) = 1.0;  // asymmetric
  CHECK_THROWS_AS(bad.validate(2), PreconditionError);

  HomogeneousTerm wrongdeg = radial_power(1.0, 1);
  wrongdeg.kind = TermKind::QuadraticForm;
  CHECK_THROWS_AS(wrongdeg.validate(2), PreconditionError);
}

TEST_CASE("symbol JSON round-trip is bit-exact") {
  Symbol s = Symbol::oscillator_plus(2, hopf_pullback(Eigen::Vector2d(0.3, 0.7)));
  s.terms.push_back(radial_power(0.1234567890123456789, 1));
  nlohmann::json j = s.to_json();
  std::string text = j.dump();
  Symbol back = Symbol::from_json(nlohmann::json::parse(text));
  REQUIRE(back.terms.size() == s.terms.size());
  CHECK(back.d == s.d);
  CHECK(back.principal_is_oscillator == s.principal_is_oscillator);
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    CHECK(back.terms[i].degree == s.terms[i].degree);
    CHECK(back.terms[i].kind == s.terms[i].kind);
    if (s.terms[i].kind == TermKind::QuadraticForm ||
        s.terms[i].kind == TermKind::QuadraticOverRoot) {
      CHECK((back.terms[i].Q - s.terms[i].Q).cwiseAbs().maxCoeff() == 0.0);
    } else if (s.terms[i].kind == TermKind::LinearForm) {
      CHECK((back.terms[i].b - s.terms[i].b).cwiseAbs().maxCoeff() == 0.0);
    } else {
      CHECK(back.terms[i].coeff == s.terms[i].coeff);
    }
  }
}

TEST_CASE("weyl_volume: pure oscillator is lambda^d / d!") {
  Symbol s1 = Symbol::oscillator(1);
  for (double lam : {1.0, 4.0, 25.0}) {
    auto v = weyl_volume_radial(s1, lam);
    CHECK(v.value == doctest::Approx(lam).epsilon(1e-10));
  }
  Symbol s2 = Symbol::oscillator(2);
  for (double lam : {1.0, 9.0, 64.0}) {
    auto v = weyl_volume_radial(s2, lam);
    CHECK(v.value == doctest::Approx(0.5 * lam * lam).epsilon(1e-10));
  }
}

TEST_CASE("weyl_volume: d=1 radial perturbation agrees with the quadratic formula") {
  // boundary solves r^2/2 + c r / sqrt(2) = lambda on every direction
  double c = 0.6, lam = 30.0;
  Symbol s = Symbol::oscillator_plus(1, radial_power(c, 1));
  auto v = weyl_volume_radial(s, lam);
  double csq = c / std::sqrt(2.0);
  double r = -csq + std::sqrt(csq * csq + 2.0 * lam);
  double expect = kTwoPi * r * r / 2.0 / kTwoPi;  // (2pi)^{-1} * area of the disk
  CHECK(v.value == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("weyl_volume: monotone in lambda") {
  Symbol s = Symbol::oscillator_plus(2, hopf_pullback(Eigen::Vector2d(0.3, 0.7)));
  double prev = 0.0;
  for (double lam : {10.0, 20.0, 40.0, 80.0}) {
    auto v = weyl_volume_radial(s, lam);
    CHECK(v.value > prev);
    prev = v.value;
  }
}

TEST_CASE("weyl_volume: radial quadrature and Monte Carlo agree within 3 stderr") {
  Symbol s = Symbol::oscillator_plus(2, hopf_pullback(Eigen::Vector2d(0.3, 0.7)));
  double lam = 100.0;
  auto vr = weyl_volume_radial(s, lam);
  MonteCarloSpec mc;
  mc.n = 2'000'000;
  mc.seed = 12345;
  auto vm = weyl_volume_montecarlo(s, lam, mc);
  CHECK(std::abs(vr.value - vm.value) <= 3.0 * vm.error);
}

TEST_CASE("weyl_volume: Monte Carlo is deterministic given the seed") {
  Symbol s = Symbol::oscillator_plus(2, hopf_pullback(Eigen::Vector2d(0.3, 0.7)));
  MonteCarloSpec mc;
  mc.n = 200'000;
  mc.seed = 777;
  auto a = weyl_volume_montecarlo(s, 50.0, mc);
  auto b = weyl_volume_montecarlo(s, 50.0, mc);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
}

TEST_CASE("weyl_volume rejects an oversized degree-1 part") {
  Symbol s = Symbol::oscillator_plus(1, radial_power(0.9, 1));
  // lambda must exceed C^2 where |p1| <= C sqrt(p2); C = 0.9 here, so
  // lambda = 0.5 fails
  CHECK_THROWS_AS(weyl_volume_radial(s, 0.5), PreconditionError);
}

TEST_CASE("surface_integral_p1: zero, radial closed form, hopf symmetry") {
  Symbol none = Symbol::oscillator(2);
  CHECK(surface_integral_p1(none) == doctest::Approx(0.0));

  // p1 = c sqrt(p2): value is c for d = 1 and d = 2
  for (int d : {1, 2}) {
    Symbol s = Symbol::oscillator_plus(d, radial_power(0.8, 1));
    CHECK(surface_integral_p1(s) == doctest::Approx(0.8).epsilon(1e-10));
  }

  // hopf: depends only on sum c_j; equals (c1 + c2)/2 at d = 2
  Symbol h1 = Symbol::oscillator_plus(2, hopf_pullback(Eigen::Vector2d(0.3, 0.7)));
  Symbol h2 = Symbol::oscillator_plus(2, hopf_pullback(Eigen::Vector2d(0.7, 0.3)));
  double v1 = surface_integral_p1(h1);
  double v2 = surface_integral_p1(h2);
  CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
  CHECK(v1 == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("surface_integral_p0 vanishes without a degree-0 part") {
  Symbol s = Symbol::oscillator(2);
  CHECK(surface_integral_p0(s, 100.0) == 0.0);
}
