#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "fieldtheory.hpp"

using namespace hsikit;

namespace {

HolonomyTuple axis_tuple(double a1, double b1) {
  // commuting pair about the z axis: always flat with theta = 0
  HolonomyTuple t;
  t.pairs.emplace_back(SU2Element(std::cos(a1), 0, 0, std::sin(a1)),
                       SU2Element(std::cos(b1), 0, 0, std::sin(b1)));
  return t;
}

std::pair<long long, std::map<int, int>> orbit_histogram(const CobordismChain& c) {
  std::vector<RepOrbit> orbits = solve_numeric(generalized_intersections(c));
  std::map<int, int> kinds;
  for (const RepOrbit& o : orbits) kinds[static_cast<int>(o.kind)]++;
  return {static_cast<long long>(orbits.size()), kinds};
}

}  // namespace

TEST_CASE("flat tuples and membership per piece kind") {
  HolonomyTuple x = axis_tuple(0.4, 1.1);
  CHECK(x.flat());
  CHECK(x.in_chart());

  SUBCASE("sign flip") {
    auto e = CorrespondenceExpr::sign_flip(1, {-1, 1});
    HolonomyTuple y = x;
    y.pairs[0].first = -y.pairs[0].first;
    CHECK(member(e, x, y));
    CHECK_FALSE(member(e, x, x));
  }
  SUBCASE("boundary rotation is trivial on the zero slice") {
    auto e = CorrespondenceExpr::boundary_rotation(1, 0.25);
    CHECK(member(e, x, x));
  }
  SUBCASE("dehn twist") {
    auto e = CorrespondenceExpr::dehn_twist(1);
    HolonomyTuple y = x;
    y.pairs[0].first = x.pairs[0].first * x.pairs[0].second;
    CHECK(member(e, x, y));
    CHECK_FALSE(member(e, y, x));
  }
  SUBCASE("path conjugation") {
    auto e = CorrespondenceExpr::path_conjugation(1, Word::generator(0));
    HolonomyTuple y = x;
    y.pairs[0].second = x.pairs[0].second.conjugated_by(x.pairs[0].first);
    CHECK(member(e, x, y));
  }
  SUBCASE("two handle kills a central curve") {
    auto e = CorrespondenceExpr::two_handle(1, 0, false, 1);
    HolonomyTuple xc = axis_tuple(0.4, 0.0);  // B = I
    HolonomyTuple y;                          // genus 0
    CHECK(member(e, xc, y));
    CHECK_FALSE(member(e, x, y));  // B far from I
  }
  SUBCASE("one handle pins the new beta holonomy") {
    auto e = CorrespondenceExpr::one_handle(1, -1);
    HolonomyTuple y = x;
    y.pairs.emplace_back(SU2Element(0, 1, 0, 0), SU2Element::minus_identity());
    CHECK(member(e, x, y));
    y.pairs.back().second = SU2Element::identity();
    CHECK_FALSE(member(e, x, y));
  }
  SUBCASE("genus mismatch throws") {
    auto e = CorrespondenceExpr::trivial_cylinder(2);
    CHECK_THROWS_AS(member(e, x, x), GenusMismatch);
  }
}

TEST_CASE("lens chain normal form reproduces the representation problem") {
  for (long long p = 1; p <= 7; ++p)
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int c0 = 0; c0 <= 1; ++c0)
        for (int c1 = 0; c1 <= 1; ++c1) {
          TwistedRepProblem from_chain =
              generalized_intersections(lens_chain(p, q, c0, c1));
          TwistedRepProblem direct = lens_problem(p, q, c0, c1);
          CHECK(from_chain.presentation.n_generators == 2);
          REQUIRE(from_chain.twisted_relators.size() == direct.twisted_relators.size());
          for (size_t i = 0; i < direct.twisted_relators.size(); ++i) {
            CHECK(from_chain.twisted_relators[i].first ==
                  direct.twisted_relators[i].first);
            CHECK(from_chain.twisted_relators[i].second ==
                  direct.twisted_relators[i].second);
          }
        }
    }
}

TEST_CASE("lens chain numerics match the exact enumeration") {
  for (long long p = 1; p <= 7; ++p) {
    long long q = (p > 2) ? p - 1 : 1;
    LensVariety exact = enumerate_lens(p, q);
    auto [count, kinds] = orbit_histogram(lens_chain(p, q));
    CHECK(count == static_cast<long long>(exact.components.size()));
    long long points = 0;
    for (const LensComponent& c : exact.components)
      if (c.is_point) ++points;
    CHECK(kinds[static_cast<int>(RepKind::Central)] == points);
  }
}

TEST_CASE("s2xs1 chain by class") {
  TwistedRepProblem p0 = generalized_intersections(s2xs1_chain(0));
  CHECK(p0.presentation.n_generators == 2);
  CHECK_FALSE(p0.contradictory());
  TwistedRepProblem p1 = generalized_intersections(s2xs1_chain(1));
  CHECK(p1.contradictory());
}

TEST_CASE("open chains are rejected") {
  CobordismChain open;
  open.pieces.push_back(CorrespondenceExpr::trivial_cylinder(1));
  CHECK_THROWS_AS(generalized_intersections(open), OpenChain);
  CHECK_THROWS_AS(generalized_intersections(CobordismChain{}), OpenChain);
}

TEST_CASE("composition agrees symbolically for every functional pair") {
  std::vector<CorrespondenceExpr> functional = {
      CorrespondenceExpr::sign_flip(1, {-1, 1}),
      CorrespondenceExpr::boundary_rotation(1, 0.25),
      CorrespondenceExpr::dehn_twist(1),
      CorrespondenceExpr::path_change(1),
      CorrespondenceExpr::path_conjugation(1, Word::generator(1)),
  };
  for (const auto& a : functional)
    for (const auto& b : functional) {
      CobordismChain ca, cb;
      ca.pieces = {a};
      cb.pieces = {b};
      ComposeReport rep = compose_check(ca, cb, 200);
      CHECK(rep.symbolic_equal);
      CHECK(rep.disagreements == 0);
      CHECK(rep.samples_checked == 200);
    }
}

TEST_CASE("composition agrees across a handle boundary") {
  CobordismChain cap, cocap;
  cap.pieces = {CorrespondenceExpr::one_handle(0, 1)};
  cocap.pieces = {CorrespondenceExpr::two_handle(1, 0, false, 1)};
  ComposeReport rep = compose_check(cap, cocap);
  CHECK(rep.ok());
  CHECK(rep.samples_checked == 1000);

  CobordismChain front, back;
  auto lens = lens_chain(5, 2);
  front.pieces.assign(lens.pieces.begin(), lens.pieces.begin() + 3);
  back.pieces.assign(lens.pieces.begin() + 3, lens.pieces.end());
  CHECK(compose_check(front, back).ok());
}

TEST_CASE("cerf moves preserve generalized intersections") {
  for (long long p : {3LL, 5LL}) {
    CobordismChain base = lens_chain(p, 1);
    auto baseline = orbit_histogram(base);

    SUBCASE("trivial cylinder insertion and removal") {
      CobordismChain ins =
          apply_cerf_move(base, CerfMove{CerfMoveKind::TrivialCylinderInsertion, 1});
      CHECK(ins.pieces.size() == base.pieces.size() + 1);
      CHECK(orbit_histogram(ins) == baseline);
      CobordismChain rem = apply_cerf_move(
          base, CerfMove{CerfMoveKind::TrivialCylinderInsertion, 1, true});
      CHECK(rem.pieces.size() == base.pieces.size() - 1);
      CHECK(orbit_histogram(rem) == baseline);
    }
    SUBCASE("birth-death pair") {
      CobordismChain born =
          apply_cerf_move(base, CerfMove{CerfMoveKind::BirthDeath, 1});
      CHECK(born.pieces.size() == base.pieces.size() + 2);
      CHECK(orbit_histogram(born).first == baseline.first);
      CHECK(orbit_histogram(born).second == baseline.second);
      CobordismChain killed =
          apply_cerf_move(born, CerfMove{CerfMoveKind::BirthDeath, 1, true});
      CHECK(normalize(killed) == normalize(base));
    }
    SUBCASE("diffeomorphism split and merge") {
      CobordismChain split =
          apply_cerf_move(base, CerfMove{CerfMoveKind::DiffeoEquivalence, 3});
      CHECK(split.pieces.size() == base.pieces.size() + 1);
      CHECK(normalize(split) == normalize(base));
      CHECK(orbit_histogram(split) == baseline);
      CobordismChain merged =
          apply_cerf_move(split, CerfMove{CerfMoveKind::DiffeoEquivalence, 3, true});
      CHECK(normalize(merged) == normalize(base));
    }
    SUBCASE("critical point switch") {
      CobordismChain swapped =
          apply_cerf_move(base, CerfMove{CerfMoveKind::CriticalPointSwitch, 1});
      CHECK(orbit_histogram(swapped) == baseline);
      // a sign piece moves past the final handle
      CobordismChain padded =
          apply_cerf_move(base, CerfMove{CerfMoveKind::TrivialCylinderInsertion, 4});
      CobordismChain past = apply_cerf_move(
          padded, CerfMove{CerfMoveKind::CriticalPointSwitch, 4});
      CHECK(past.pieces[4].kind == PieceKind::TwoHandle);
      CHECK(orbit_histogram(past) == baseline);
    }
    SUBCASE("class slide") {
      CobordismChain slid = apply_cerf_move(
          base, CerfMove{CerfMoveKind::ClassSlide, 1, false, {-1, -1}});
      CHECK(slid.pieces[1].signs == std::vector<int>{-1, -1});
      CHECK(slid.pieces[2].signs == std::vector<int>{-1, -1});
      CHECK(normalize(slid) == normalize(base));
      CHECK(orbit_histogram(slid) == baseline);
    }
  }
}

TEST_CASE("inapplicable moves are rejected") {
  CobordismChain base = lens_chain(3, 1);
  CHECK_THROWS_AS(apply_cerf_move(
                      base, CerfMove{CerfMoveKind::TrivialCylinderInsertion, 0, true}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_cerf_move(base, CerfMove{CerfMoveKind::BirthDeath, 0, true}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_cerf_move(base, CerfMove{CerfMoveKind::DiffeoEquivalence, 1}),
                  MoveNotApplicable);
  CHECK_THROWS_AS(
      apply_cerf_move(base, CerfMove{CerfMoveKind::ClassSlide, 0, false, {1, 1}}),
      MoveNotApplicable);
  CHECK_THROWS_AS(
      apply_cerf_move(base, CerfMove{CerfMoveKind::CriticalPointSwitch, 0}),
      MoveNotApplicable);
}
