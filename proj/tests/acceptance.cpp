// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and budgets are pinned here.

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fieldtheory.hpp"
#include "hsicalc.hpp"
#include "linkdiag.hpp"
#include "manifold.hpp"
#include "repvar.hpp"
#include "snf.hpp"

using namespace hsikit;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass) {
  std::printf("criterion %2d [%s] %s\n", number, pass ? "PASS" : "FAIL",
              name.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

ManifoldDesc lens(long long p, long long q) {
  ManifoldDesc d;
  d.shape = LensDesc{p, q};
  return d;
}

bool criterion_lens_ranks() {
  auto t0 = std::chrono::steady_clock::now();
  for (long long p = 1; p <= 25; ++p)
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      HSIResult r = hsi(lens(p, q));
      if (!r.exact || r.rank != p || !r.group.is_free()) return false;
      if (!r.minimal_certified || !r.certificate || !r.certificate->verify())
        return false;
      for (int d = 1; d < 8; d += 2)  // even concentrated
        if (!r.group.factors(d).empty() && r.group.degrees_exact()) return false;
    }
  return seconds_since(t0) < 1.0;
}

bool criterion_s2xs1() {
  ManifoldDesc d;
  d.shape = S2xS1Desc{};
  HSIResult r0 = hsi(d);
  GradedAbelianGroup expected =
      GradedAbelianGroup::free(1, 0).direct_sum(GradedAbelianGroup::free(1, 3));
  if (!r0.exact || !(r0.group == expected)) return false;
  d.class_c = {1};
  HSIResult r1 = hsi(d);
  return r1.exact && r1.group.is_zero();
}

bool criterion_euler_law() {
  std::mt19937_64 rng(41);
  std::vector<ManifoldDesc> descs;
  for (long long p = 1; p <= 18; ++p) descs.push_back(lens(p, 1));
  for (long long q : {2LL, 3LL}) descs.push_back(lens(7, q));
  ManifoldDesc s;
  s.shape = S2xS1Desc{};
  descs.push_back(s);
  s.class_c = {1};
  descs.push_back(s);
  for (long long a3 : {5LL, 7LL, 11LL}) {
    ManifoldDesc b;
    b.shape = BrieskornDesc{2, 3, a3};
    descs.push_back(b);
  }
  for (int trial = 0; trial < 5; ++trial) {
    PlumbingDesc p;
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int v = 0; v < n; ++v) {
      p.weights.push_back(0);
      if (v > 0)
        p.edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    for (int v = 0; v < n; ++v)
      p.weights[static_cast<size_t>(v)] =
          p.degree(v) + std::uniform_int_distribution<long long>(1, 3)(rng);
    ManifoldDesc d;
    d.shape = p;
    descs.push_back(d);
  }
  ConnectedSumDesc cs;
  cs.summands = {lens(2, 1), lens(5, 3)};
  ManifoldDesc d;
  d.shape = cs;
  descs.push_back(d);
  d.shape = TorusKnotSurgeryDesc{2, 3, 7};
  descs.push_back(d);
  if (descs.size() < 30) return false;
  for (const ManifoldDesc& m : descs)
    if (!euler_check(m).agree) return false;
  return true;
}

GradedAbelianGroup random_group(std::mt19937_64& rng) {
  GradedAbelianGroup g;
  int n = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < n; ++i)
    g.add_factor(std::uniform_int_distribution<int>(0, 7)(rng),
                 std::uniform_int_distribution<long long>(0, 6)(rng));
  return g;
}

bool criterion_kunneth() {
  ConnectedSumDesc cs;
  cs.summands = {lens(2, 1), lens(3, 1)};
  ManifoldDesc d;
  d.shape = cs;
  HSIResult r = hsi(d);
  if (!r.exact || r.rank != 6 || !r.group.is_free()) return false;

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    GradedAbelianGroup a = random_group(rng), b = random_group(rng),
                       c = random_group(rng);
    if (!(kunneth(a, b) == kunneth(b, a))) return false;
    if (!(kunneth(kunneth(a, b), c) == kunneth(a, kunneth(b, c)))) return false;
    if (kunneth(a, b).euler_abs() != a.euler_abs() * b.euler_abs()) return false;
    if (a.is_free() && b.is_free() &&
        kunneth(a, b).total_rank() != a.total_rank() * b.total_rank())
      return false;
  }
  return true;
}

bool histograms_match(const std::vector<RepOrbit>& orbits, long long n_components,
                      long long n_points) {
  if (static_cast<long long>(orbits.size()) != n_components) return false;
  long long points = 0;
  for (const RepOrbit& o : orbits)
    if (o.kind == RepKind::Central) ++points;
  return points == n_points;
}

bool criterion_rep_counts() {
  auto t0 = std::chrono::steady_clock::now();
  BrieskornVariety poincare = enumerate_brieskorn(2, 3, 5);
  if (poincare.irreducible_count() != 2 || casson_brieskorn(2, 3, 5) != 1)
    return false;

  for (long long p = 1; p <= 7; ++p)
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      LensVariety exact = enumerate_lens(p, q);
      long long points = 0;
      for (const LensComponent& c : exact.components)
        if (c.is_point) ++points;
      std::vector<RepOrbit> orbits = solve_numeric(lens_problem(p, q), 500, 1e-10);
      if (!histograms_match(orbits, static_cast<long long>(exact.components.size()),
                            points))
        return false;
    }

  for (auto [a1, a2, a3] : std::vector<std::array<long long, 3>>{
           {2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {2, 5, 7}}) {
    BrieskornVariety exact = enumerate_brieskorn(a1, a2, a3);
    std::vector<RepOrbit> orbits =
        solve_numeric(brieskorn_problem(a1, a2, a3), 500, 1e-10);
    long long points = 0;
    for (const RepOrbit& o : exact.orbits)
      if (o.kind == RepKind::Central) ++points;
    if (!histograms_match(orbits, static_cast<long long>(exact.orbits.size()),
                          points))
      return false;
  }
  return seconds_since(t0) < 30.0;
}

bool criterion_brieskorn_bounds() {
  BrieskornBounds b = brieskorn_bounds(2, 3, 5);
  return b.bound_q == 5 && b.bound_z == 5 && b.bound_z2 == 9 && b.conditional &&
         b.bound_q >= 1 && b.bound_z >= 1 && b.bound_z2 >= 1;
}

bool criterion_plumbing() {
  auto t0 = std::chrono::steady_clock::now();
  PlumbingDesc chain;
  chain.weights = {2, 2, 2};
  chain.edges = {{0, 1}, {1, 2}};
  ManifoldDesc d;
  d.shape = chain;
  auto cert = certify_minimal(d);
  BigMatrix m = chain.intersection_matrix();
  if (!cert || cert->rank != 4 || !cert->verify()) return false;
  if (BigInt(static_cast<long>(cert->rank)) != abs(big_det(m))) return false;

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    PlumbingDesc p;
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int v = 0; v < n; ++v) {
      p.weights.push_back(0);
      if (v > 0)
        p.edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    bool strict = false;
    for (int v = 0; v < n; ++v) {
      long long e = std::uniform_int_distribution<long long>(0, 2)(rng);
      if (e > 0) strict = true;
      p.weights[static_cast<size_t>(v)] = p.degree(v) + e;
    }
    if (!strict) p.weights[0] += 1;
    ManifoldDesc base;
    base.shape = p;
    auto before = certify_minimal(base);
    if (!before || !before->verify()) return false;
    PlumbingDesc blown = p;
    int at = std::uniform_int_distribution<int>(0, n - 1)(rng);
    blown.weights[static_cast<size_t>(at)] += 1;
    blown.weights.push_back(1);
    blown.edges.emplace_back(at, blown.n_vertices() - 1);
    ManifoldDesc bd;
    bd.shape = blown;
    auto after = certify_minimal(bd);
    if (!after || after->rank != before->rank || !after->verify()) return false;
  }
  return seconds_since(t0) < 5.0;
}

bool criterion_qa() {
  for (const PDDiagram& d : {PDDiagram::unknot(), PDDiagram::hopf(),
                             PDDiagram::trefoil(), PDDiagram::figure_eight()}) {
    auto cert = certify_quasi_alternating(d);
    if (!cert || !cert->verify()) return false;  // verify recomputes each node
  }
  auto tref = qa_cover_minimality(PDDiagram::trefoil());
  auto fig8 = qa_cover_minimality(PDDiagram::figure_eight());
  return tref && tref->rank == determinant(PDDiagram::trefoil()) && fig8 &&
         fig8->rank == determinant(PDDiagram::figure_eight());
}

bool criterion_snf() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    size_t rows = static_cast<size_t>(dim(rng)), cols = static_cast<size_t>(dim(rng));
    BigMatrix m(rows, std::vector<BigInt>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    SmithResult s = smith_normal_form(m);
    if (!(big_mul(big_mul(s.u, m), s.v) == s.d)) return false;
    BigInt prev = 0;
    for (size_t i = 0; i < std::min(rows, cols); ++i) {
      const BigInt& di = s.d[i][i];
      if (di < 0) return false;
      if (i > 0 && prev != 0 && di % prev != 0) return false;
      if (i > 0 && prev == 0 && di != 0) return false;
      prev = di;
    }
    if (rows == cols) {
      BigInt dm = abs(big_det(m)), dd = 1;
      for (size_t i = 0; i < rows; ++i) dd *= s.d[i][i];
      if (dm != abs(dd)) return false;
    }
  }
  return true;
}

bool criterion_field_theory() {
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
      ComposeReport rep = compose_check(ca, cb, 1000, 17);
      if (!rep.symbolic_equal || rep.disagreements != 0) return false;
    }

  for (long long p : {3LL, 5LL}) {
    CobordismChain base = lens_chain(p, 1);
    auto hist = [](const CobordismChain& c) {
      std::vector<RepOrbit> orbits = solve_numeric(generalized_intersections(c));
      std::map<int, int> kinds;
      for (const RepOrbit& o : orbits) kinds[static_cast<int>(o.kind)]++;
      return std::pair<size_t, std::map<int, int>>(orbits.size(), kinds);
    };
    auto baseline = hist(base);
    std::vector<CerfMove> moves = {
        {CerfMoveKind::TrivialCylinderInsertion, 1, false, {}},
        {CerfMoveKind::BirthDeath, 1, false, {}},
        {CerfMoveKind::DiffeoEquivalence, 3, false, {}},
        {CerfMoveKind::CriticalPointSwitch, 1, false, {}},
        {CerfMoveKind::ClassSlide, 1, false, {-1, -1}},
    };
    for (const CerfMove& m : moves)
      if (hist(apply_cerf_move(base, m)) != baseline) return false;
  }

  for (long long p = 1; p <= 7; ++p) {
    long long q = (p > 2) ? p - 1 : 1;
    LensVariety exact = enumerate_lens(p, q);
    std::vector<RepOrbit> orbits =
        solve_numeric(generalized_intersections(lens_chain(p, q)));
    if (orbits.size() != exact.components.size()) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "lens ranks p <= 25, even concentrated, minimal, < 1 s",
         criterion_lens_ranks());
  report(2, "s2xs1 groups by class", criterion_s2xs1());
  report(3, "euler characteristic law over 30+ descriptions",
         criterion_euler_law());
  report(4, "kunneth rank 6 and 200-group property suite", criterion_kunneth());
  report(5, "casson and representation counts, numeric vs exact, < 30 s",
         criterion_rep_counts());
  report(6, "conditional brieskorn bounds (5, 5, 9)",
         criterion_brieskorn_bounds());
  report(7, "plumbing certification and blow-up invariance, < 5 s",
         criterion_plumbing());
  report(8, "quasi-alternating certificates and double cover minimality",
         criterion_qa());
  report(9, "smith normal form property suite, 1000 matrices", criterion_snf());
  report(10, "field theory coherence and cerf invariance",
         criterion_field_theory());
  return g_failures == 0 ? 0 : 1;
}
