#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "su2.hpp"

using namespace hsikit;

namespace {

struct RawQ {
  double w = 0, x = 0, y = 0, z = 0;
};

RawQ raw_mul(const RawQ& a, const RawQ& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// independent oracle: quaternion exponential by its power series
RawQ series_exp(double a1, double a2, double a3) {
  RawQ term{1, 0, 0, 0};
  RawQ sum = term;
  RawQ p{0, a1, a2, a3};
  for (int n = 1; n < 40; ++n) {
    term = raw_mul(term, p);
    double inv = 1.0 / n;
    term.w *= inv;
    term.x *= inv;
    term.y *= inv;
    term.z *= inv;
    sum.w += term.w;
    sum.x += term.x;
    sum.y += term.y;
    sum.z += term.z;
  }
  return sum;
}

std::mt19937_64 rng(12345);

SU2Element random_element() {
  std::normal_distribution<double> g;
  return SU2Element(g(rng), g(rng), g(rng), g(rng));
}

Su2Vector random_vector(double max_euclid) {
  std::uniform_real_distribution<double> u(-1, 1);
  Su2Vector v(u(rng), u(rng), u(rng));
  double s = std::uniform_real_distribution<double>(0, max_euclid)(rng) /
             std::max(v.euclid(), 1e-9);
  return v.scaled(s);
}

}  // namespace

TEST_CASE("exp matches the power series oracle") {
  for (int i = 0; i < 200; ++i) {
    Su2Vector v = random_vector(3.0);
    RawQ o = series_exp(v[0], v[1], v[2]);
    SU2Element e = exp_su2(v);
    CHECK(e.distance(SU2Element(o.w, o.x, o.y, o.z)) < 1e-12);
  }
}

TEST_CASE("exp near zero is stable") {
  SU2Element e = exp_su2(Su2Vector(1e-12, 0, 0));
  CHECK(e.distance(SU2Element::identity()) < 1e-11);
  CHECK(std::isfinite(e.w()));
}

TEST_CASE("exp reaches -I exactly at norm pi*sqrt(2) times odd") {
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= 5; k += 2) {
    Su2Vector v = Su2Vector(0.6, -0.8, 0).scaled(k * pi);
    CHECK(v.norm() == doctest::Approx(k * pi * std::sqrt(2.0)));
    CHECK(exp_su2(v).distance(SU2Element::minus_identity()) < 1e-9);
  }
  Su2Vector v = Su2Vector(1, 0, 0).scaled(2 * pi);
  CHECK(exp_su2(v).distance(SU2Element::identity()) < 1e-9);
}

TEST_CASE("log is the principal branch and round-trips") {
  const double pi = std::acos(-1.0);
  for (int i = 0; i < 200; ++i) {
    Su2Vector v = random_vector(pi - 1e-3);
    Su2Vector w = log_su2(exp_su2(v));
    CHECK(w.norm() < pi * std::sqrt(2.0));
    for (int c = 0; c < 3; ++c) CHECK(w[c] == doctest::Approx(v[c]).epsilon(1e-9));
  }
  for (int i = 0; i < 200; ++i) {
    SU2Element g = random_element();
    if (g.trace() <= -2 + 1e-6) continue;
    CHECK(exp_su2(log_su2(g)).distance(g) < 1e-10);
  }
}

TEST_CASE("log rejects -I") {
  CHECK_THROWS_AS(log_su2(SU2Element::minus_identity()), DomainError);
  CHECK_THROWS_AS(log_su2(SU2Element(-1 + 1e-10, 1e-6, 0, 0)), DomainError);
}

TEST_CASE("one-parameter subgroup property") {
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 100; ++i) {
    Su2Vector v = random_vector(1.0);
    double s = u(rng), t = u(rng);
    SU2Element lhs = exp_su2(v.scaled(s + t));
    SU2Element rhs = exp_su2(v.scaled(s)) * exp_su2(v.scaled(t));
    CHECK(lhs.distance(rhs) < 1e-11);
  }
}

TEST_CASE("products stay on the unit sphere") {
  SU2Element p = random_element();
  SU2Element q = random_element();
  for (int i = 0; i < 100000; ++i) p = p * q;
  double n = std::sqrt(p.w() * p.w() + p.x() * p.x() + p.y() * p.y() + p.z() * p.z());
  CHECK(std::abs(n - 1.0) < 1e-12);
}

TEST_CASE("pow agrees with repeated multiplication") {
  for (int i = 0; i < 50; ++i) {
    SU2Element g = random_element();
    SU2Element acc = SU2Element::identity();
    for (long long n = 0; n <= 12; ++n) {
      CHECK(g.pow(n).distance(acc) < 1e-11);
      CHECK(g.pow(-n).distance(acc.inverse()) < 1e-11);
      acc = acc * g;
    }
  }
}

TEST_CASE("orbit signature is conjugation invariant and separates orbits") {
  for (int i = 0; i < 100; ++i) {
    SU2Element g = random_element();
    SU2Element h = random_element();
    CHECK(orbit_signature(g.conjugated_by(h)) ==
          doctest::Approx(orbit_signature(g)).epsilon(1e-12));
  }
  CHECK(orbit_signature(SU2Element::identity()) == doctest::Approx(2.0));
  CHECK(orbit_signature(SU2Element::minus_identity()) == doctest::Approx(-2.0));
  CHECK(orbit_signature(SU2Element(0, 1, 0, 0)) == doctest::Approx(0.0));
}
