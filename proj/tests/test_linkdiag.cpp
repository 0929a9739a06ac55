#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "linkdiag.hpp"

using namespace hsikit;

namespace {

std::mt19937_64 rng(4242);

int max_arc(const PDDiagram& d) {
  int m = -1;
  for (const auto& c : d.crossings)
    for (int a : c) m = std::max(m, a);
  return m;
}

// splice one occurrence of arc a in d1 to one occurrence of arc b in d2
PDDiagram connected_sum(const PDDiagram& d1, const PDDiagram& d2, int a, int b) {
  PDDiagram out = d1;
  int off = max_arc(d1) + 1;
  for (const auto& c : d2.crossings)
    out.crossings.push_back({c[0] + off, c[1] + off, c[2] + off, c[3] + off});
  out.free_loops += d2.free_loops;
  bool first = true;
  for (size_t i = 0; i < d1.crossings.size(); ++i)
    for (int& x : out.crossings[i]) {
      if (first && x == a) {
        x = b + off;
        first = false;
      }
    }
  first = true;
  for (size_t i = d1.crossings.size(); i < out.crossings.size(); ++i)
    for (int& x : out.crossings[i]) {
      if (first && x == b + off) {
        x = a;
        first = false;
      }
    }
  return out;
}

}  // namespace

TEST_CASE("builders validate and have the right component counts") {
  for (const PDDiagram& d : {PDDiagram::unknot(), PDDiagram::trefoil(),
                             PDDiagram::figure_eight(), PDDiagram::hopf()}) {
    CHECK_NOTHROW(d.validate());
    CHECK(d.connected());
  }
  CHECK(PDDiagram::unknot().n_components() == 1);
  CHECK(PDDiagram::trefoil().n_components() == 1);
  CHECK(PDDiagram::figure_eight().n_components() == 1);
  CHECK(PDDiagram::hopf().n_components() == 2);
}

TEST_CASE("frozen determinants") {
  CHECK(determinant(PDDiagram::unknot()) == 1);
  CHECK(determinant(PDDiagram::trefoil()) == 3);
  CHECK(determinant(PDDiagram::figure_eight()) == 5);
  CHECK(determinant(PDDiagram::hopf()) == 2);
}

TEST_CASE("determinant is multiplicative under connected sum") {
  PDDiagram granny = connected_sum(PDDiagram::trefoil(), PDDiagram::trefoil(), 1, 1);
  CHECK_NOTHROW(granny.validate());
  CHECK(granny.connected());
  CHECK(determinant(granny) == 9);
  PDDiagram mixed = connected_sum(PDDiagram::trefoil(), PDDiagram::figure_eight(), 2, 3);
  CHECK_NOTHROW(mixed.validate());
  CHECK(determinant(mixed) == 15);
}

TEST_CASE("split diagrams have no Goeritz determinant") {
  PDDiagram split = PDDiagram::trefoil();
  split.free_loops = 1;
  CHECK_FALSE(split.connected());
  CHECK_THROWS_AS(determinant(split), DisconnectedDiagram);
  CHECK(determinant_or_zero(split) == 0);
}

TEST_CASE("resolutions of the trefoil satisfy det additivity") {
  PDDiagram d = PDDiagram::trefoil();
  for (size_t i = 0; i < d.n_crossings(); ++i) {
    PDDiagram r0 = resolve_crossing(d, i, 0);
    PDDiagram r1 = resolve_crossing(d, i, 1);
    CHECK_NOTHROW(r0.validate());
    CHECK_NOTHROW(r1.validate());
    long long d0 = determinant_or_zero(r0);
    long long d1 = determinant_or_zero(r1);
    CHECK(d0 + d1 == 3);
  }
}

TEST_CASE("simplify reduces kinked unknots to a circle") {
  PDDiagram d = PDDiagram::unknot();
  for (int variant = 0; variant < 4; ++variant) {
    PDDiagram k = add_kink(d, 0, variant);
    CHECK_NOTHROW(k.validate());
    CHECK(determinant(k) == 1);
    PDDiagram s = simplify(k);
    CHECK(s.n_crossings() == 0);
    CHECK(s.free_loops == 1);
  }
}

TEST_CASE("randomized Reidemeister moves preserve the determinant") {
  std::uniform_int_distribution<int> coin(0, 1), variant(0, 3);
  for (const PDDiagram& base :
       {PDDiagram::trefoil(), PDDiagram::figure_eight(), PDDiagram::hopf()}) {
    long long det0 = determinant(base);
    for (int trial = 0; trial < 50; ++trial) {
      PDDiagram d = base;
      int moves = 1 + trial % 4;
      for (int mv = 0; mv < moves; ++mv) {
        std::set<int> labels;
        for (const auto& c : d.crossings) labels.insert(c.begin(), c.end());
        std::vector<int> arcs(labels.begin(), labels.end());
        std::uniform_int_distribution<size_t> pick(0, arcs.size() - 1);
        if (coin(rng)) {
          d = add_kink(d, arcs[pick(rng)], variant(rng));
        } else {
          // random arc pairs may not share a face; retry a few times
          for (int att = 0; att < 10; ++att) {
            size_t ix = pick(rng), iy = pick(rng);
            if (ix == iy) iy = (iy + 1) % arcs.size();
            try {
              d = add_ripple(d, arcs[ix], arcs[iy]);
              break;
            } catch (const std::invalid_argument&) {
            }
          }
        }
        CHECK_NOTHROW(d.validate());
        CHECK(determinant(d) == det0);
      }
      PDDiagram s = simplify(d);
      CHECK(determinant(s) == det0);
      CHECK(s.n_crossings() <= d.n_crossings());
    }
  }
}

TEST_CASE("canonical code is a relabeling invariant") {
  PDDiagram t = PDDiagram::trefoil();
  PDDiagram t2 = t;
  for (auto& c : t2.crossings)
    for (int& x : c) x = (x + 2) % 6 + ((x + 2) % 6 == 0 ? 6 : 0);
  std::string c1 = canonical_code(t);
  CHECK(!c1.empty());
  CHECK(canonical_code(t2) == c1);
  CHECK(canonical_code(PDDiagram::figure_eight()) != c1);
}

TEST_CASE("quasi-alternating certificates for the standard examples") {
  for (auto [d, det] :
       {std::pair<PDDiagram, long long>{PDDiagram::unknot(), 1},
        {PDDiagram::trefoil(), 3},
        {PDDiagram::figure_eight(), 5},
        {PDDiagram::hopf(), 2}}) {
    auto cert = certify_quasi_alternating(d);
    REQUIRE(cert.has_value());
    CHECK(cert->det == det);
    CHECK(cert->verify());
    CHECK(cert->node_count() >= 1);
  }
}

TEST_CASE("certificate verification catches tampering") {
  auto cert = certify_quasi_alternating(PDDiagram::trefoil());
  REQUIRE(cert.has_value());
  QACertificate bad = *cert;
  bad.det += 1;
  CHECK_FALSE(bad.verify());
}
