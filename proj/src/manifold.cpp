#include "manifold.hpp"

#include <numeric>

namespace hsikit {

int PlumbingDesc::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

bool PlumbingDesc::is_forest() const {
  int n = n_vertices();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // cycle
    parent[static_cast<size_t>(ra)] = rb;
  }
  return true;
}

BigMatrix PlumbingDesc::intersection_matrix() const {
  size_t n = weights.size();
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = BigInt(static_cast<long>(weights[i]));
  for (auto [a, b] : edges) {
    m[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    m[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
  }
  return m;
}

std::string ManifoldDesc::kind() const {
  struct V {
    std::string operator()(const LensDesc&) { return "lens"; }
    std::string operator()(const BrieskornDesc&) { return "brieskorn"; }
    std::string operator()(const PlumbingDesc&) { return "plumbing"; }
    std::string operator()(const TorusKnotSurgeryDesc&) { return "surgery_torus_knot"; }
    std::string operator()(const ConnectedSumDesc&) { return "connected_sum"; }
    std::string operator()(const S2xS1Desc&) { return "s2xs1"; }
  };
  return std::visit(V{}, shape);
}

void ManifoldDesc::validate() const {
  if (const auto* l = std::get_if<LensDesc>(&shape)) {
    if (l->p < 1) throw InvalidParams("lens: p must be >= 1");
    if (std::gcd(l->p, l->q) != 1) throw InvalidParams("lens: gcd(p,q) must be 1");
  } else if (const auto* b = std::get_if<BrieskornDesc>(&shape)) {
    if (b->a1 < 2 || b->a2 < 2 || b->a3 < 2)
      throw InvalidParams("brieskorn: multiplicities must be >= 2");
    if (std::gcd(b->a1, b->a2) != 1 || std::gcd(b->a1, b->a3) != 1 ||
        std::gcd(b->a2, b->a3) != 1)
      throw InvalidParams("brieskorn: multiplicities must be pairwise coprime");
  } else if (const auto* p = std::get_if<PlumbingDesc>(&shape)) {
    if (!p->is_forest()) throw InvalidParams("plumbing: graph must be a forest");
  } else if (const auto* t = std::get_if<TorusKnotSurgeryDesc>(&shape)) {
    if (std::abs(t->r) < 2 || std::abs(t->s) < 2 || std::gcd(t->r, t->s) != 1)
      throw InvalidParams("surgery_torus_knot: need coprime |r|,|s| >= 2");
  } else if (const auto* c = std::get_if<ConnectedSumDesc>(&shape)) {
    if (c->summands.empty()) throw InvalidParams("connected_sum: empty summand list");
    for (const auto& s : c->summands) s.validate();
  }
}

namespace {

// ax + by = gcd(a,b)
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

SeifertData brieskorn_seifert_data(long long a1, long long a2, long long a3) {
  long long m1 = a2 * a3, m2 = a1 * a3, m3 = a1 * a2;
  long long x, y;
  long long g12 = ext_gcd(m1, m2, x, y);
  long long z, w;
  long long g = ext_gcd(g12, m3, z, w);
  if (g != 1) throw InvalidParams("brieskorn: multiplicities not pairwise coprime");
  long long b1 = z * x, b2 = z * y, b3 = w;
  // reduce b_i into [0, a_i); each shift of b_i by a_i shifts b0 by 1
  auto norm = [](long long& b, long long a) {
    long long r = b % a;
    if (r < 0) r += a;
    b = r;
  };
  norm(b1, a1);
  norm(b2, a2);
  norm(b3, a3);
  long long b0 = (b1 * m1 + b2 * m2 + b3 * m3 - 1) / (a1 * a2 * a3);
  return {b0, b1, b2, b3};
}

namespace {

Word commutator(int g, int h) {
  return Word::generator(g) * Word::generator(h) * Word::generator(g, -1) *
         Word::generator(h, -1);
}

Presentation pi1_impl(const ManifoldDesc& desc) {
  if (const auto* l = std::get_if<LensDesc>(&desc.shape)) {
    Presentation p;
    p.n_generators = 1;
    p.relators = {Word::power(0, l->p)};
    p.marked_words["mu"] = Word::generator(0);
    return p;
  }
  if (std::holds_alternative<S2xS1Desc>(desc.shape)) {
    Presentation p;
    p.n_generators = 1;
    p.marked_words["mu"] = Word::generator(0);
    return p;
  }
  if (const auto* b = std::get_if<BrieskornDesc>(&desc.shape)) {
    SeifertData sd = brieskorn_seifert_data(b->a1, b->a2, b->a3);
    Presentation p;
    p.n_generators = 4;  // x1, x2, x3, h
    const int h = 3;
    long long as[3] = {b->a1, b->a2, b->a3};
    long long bs[3] = {sd.b1, sd.b2, sd.b3};
    for (int i = 0; i < 3; ++i) p.relators.push_back(commutator(i, h));
    for (int i = 0; i < 3; ++i)
      p.relators.push_back(Word::power(i, as[i]) * Word::power(h, bs[i]));
    p.relators.push_back(Word::generator(0) * Word::generator(1) *
                         Word::generator(2) * Word::power(h, sd.b0));
    p.marked_words["h"] = Word::generator(h);
    return p;
  }
  if (const auto* pl = std::get_if<PlumbingDesc>(&desc.shape)) {
    Presentation p;
    p.n_generators = pl->n_vertices();
    for (auto [a, bb] : pl->edges) p.relators.push_back(commutator(a, bb));
    for (int v = 0; v < pl->n_vertices(); ++v) {
      Word r = Word::power(v, pl->weights[static_cast<size_t>(v)]);
      for (auto [a, bb] : pl->edges) {
        if (a == v) r = r * Word::generator(bb);
        if (bb == v) r = r * Word::generator(a);
      }
      p.relators.push_back(r);
      p.marked_words["mu" + std::to_string(v)] = Word::generator(v);
    }
    return p;
  }
  if (const auto* t = std::get_if<TorusKnotSurgeryDesc>(&desc.shape)) {
    long long a, bb;
    ext_gcd(t->s, t->r, a, bb);  // a*s + b*r = 1
    Presentation p;
    p.n_generators = 2;  // x, y
    Word mu = Word::power(0, a) * Word::power(1, bb);
    Word lam = Word::power(0, t->r) * mu.pow(-t->r * t->s);
    p.relators.push_back(Word::power(0, t->r) * Word::power(1, -t->s));
    p.relators.push_back(mu.pow(t->framing) * lam);
    p.marked_words["mu"] = mu;
    p.marked_words["lambda"] = lam;
    return p;
  }
  const auto& cs = std::get<ConnectedSumDesc>(desc.shape);
  Presentation acc = pi1_impl(cs.summands.front());
  for (size_t i = 1; i < cs.summands.size(); ++i)
    acc = Presentation::free_product(acc, pi1_impl(cs.summands[i]));
  return acc;
}

}  // namespace

Presentation pi1(const ManifoldDesc& desc) {
  desc.validate();
  Presentation p = pi1_impl(desc);
  p.validate();
  return p;
}

H1Result h1(const ManifoldDesc& desc) {
  Presentation p = pi1(desc);
  auto rel = p.relation_matrix();
  BigMatrix m;
  for (const auto& row : rel) {
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (long long e : row) r.emplace_back(static_cast<long>(e));
    m.push_back(std::move(r));
  }
  CokernelForm ck = cokernel(m, static_cast<size_t>(p.n_generators));
  return H1Result{ck.torsion, ck.betti};
}

BigInt H1Result::order() const {
  if (betti > 0) return 0;
  BigInt p = 1;
  for (const BigInt& t : torsion) p *= t;
  return p;
}

BigInt h1_order(const ManifoldDesc& desc) { return h1(desc).order(); }

}  // namespace hsikit
