#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradedab.hpp"

using namespace hsikit;

namespace {

std::mt19937_64 rng(2024);

GradedAbelianGroup random_group() {
  std::uniform_int_distribution<int> nfac(0, 5), deg(0, 7), kind(0, 3);
  std::uniform_int_distribution<long long> ord(2, 12);
  GradedAbelianGroup g;
  int n = nfac(rng);
  for (int i = 0; i < n; ++i)
    g.add_factor(deg(rng), kind(rng) == 0 ? 0 : ord(rng));
  return g;
}

}  // namespace

TEST_CASE("constructors and canonical form") {
  GradedAbelianGroup z = GradedAbelianGroup::zero();
  CHECK(z.is_zero());
  CHECK(z.euler_abs() == 0);

  GradedAbelianGroup f = GradedAbelianGroup::free(3, 2);
  CHECK(f.total_rank() == 3);
  CHECK(f.is_free());
  CHECK(f.factors(2).size() == 3);
  CHECK(f.factors(10) == f.factors(2));

  GradedAbelianGroup c = GradedAbelianGroup::cyclic(4, 1);
  CHECK(c.total_rank() == 0);
  CHECK_FALSE(c.is_free());
  CHECK(c.euler_abs() == 0);

  GradedAbelianGroup t = GradedAbelianGroup::cyclic(1, 0);
  CHECK(t.is_zero());  // order-1 factors vanish
}

TEST_CASE("shift wraps mod 8 and preserves content") {
  GradedAbelianGroup g = GradedAbelianGroup::free(1, 7).direct_sum(
      GradedAbelianGroup::cyclic(3, 0));
  GradedAbelianGroup s = g.shifted(1);
  CHECK(s.factors(0).size() == 1);
  CHECK(s.factors(1) == std::vector<long long>{3});
  CHECK(g.shifted(8) == g);
  CHECK(g.shifted(3).shifted(-3) == g);
}

TEST_CASE("tensor unit and annihilation cases") {
  GradedAbelianGroup z1 = GradedAbelianGroup::free(1, 0);
  GradedAbelianGroup g = random_group();
  CHECK(tensor(z1, g) == g);
  CHECK(tensor(g, z1) == g);
  CHECK(tensor(GradedAbelianGroup::cyclic(2, 0), GradedAbelianGroup::cyclic(3, 0))
            .is_zero());
  GradedAbelianGroup m =
      tensor(GradedAbelianGroup::cyclic(4, 2), GradedAbelianGroup::cyclic(6, 3));
  CHECK(m.factors(5) == std::vector<long long>{2});
}

TEST_CASE("tor vanishes against free groups") {
  for (int i = 0; i < 50; ++i) {
    GradedAbelianGroup g = random_group();
    CHECK(tor(GradedAbelianGroup::free(2, 3), g).is_zero());
    CHECK(tor(g, GradedAbelianGroup::free(1, 0)).is_zero());
  }
  GradedAbelianGroup t =
      tor(GradedAbelianGroup::cyclic(4, 1), GradedAbelianGroup::cyclic(6, 2));
  CHECK(t.factors(3) == std::vector<long long>{2});
}

TEST_CASE("kunneth on a pair of cyclic groups") {
  // (Z/2 in degree 0) x (Z/2 in degree 0): tensor Z/2 at 0, Tor Z/2 at -1
  GradedAbelianGroup a = GradedAbelianGroup::cyclic(2, 0);
  GradedAbelianGroup k = kunneth(a, a);
  CHECK(k.factors(0) == std::vector<long long>{2});
  CHECK(k.factors(7) == std::vector<long long>{2});
}

TEST_CASE("random property suite") {
  for (int i = 0; i < 200; ++i) {
    GradedAbelianGroup a = random_group(), b = random_group(), c = random_group();
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tor(a, b) == tor(b, a));
    CHECK(kunneth(a, b) == kunneth(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a.direct_sum(b), c) == tensor(a, c).direct_sum(tensor(b, c)));
    CHECK(kunneth(a, b).total_rank() >= a.total_rank() * b.total_rank());
    // free parts only come from free (x) free, so ranks multiply
    CHECK(tensor(a, b).total_rank() == a.total_rank() * b.total_rank());
  }
}

TEST_CASE("euler characteristic is multiplicative under kunneth") {
  for (int i = 0; i < 200; ++i) {
    GradedAbelianGroup a = random_group(), b = random_group();
    CHECK(kunneth(a, b).euler_abs() == a.euler_abs() * b.euler_abs());
  }
}

TEST_CASE("coarse even-concentrated groups") {
  GradedAbelianGroup e = GradedAbelianGroup::even_concentrated_free(5);
  CHECK_FALSE(e.degrees_exact());
  CHECK(e.total_rank() == 5);
  CHECK(e.euler_abs() == 5);
  GradedAbelianGroup k = kunneth(e, GradedAbelianGroup::even_concentrated_free(3));
  CHECK_FALSE(k.degrees_exact());
  CHECK(k.total_rank() == 15);
  CHECK(k.euler_abs() == 15);
  CHECK(kunneth(e, GradedAbelianGroup::free(1, 0)).total_rank() == 5);
}
