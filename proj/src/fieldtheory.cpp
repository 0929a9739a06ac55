#include "fieldtheory.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hsikit {

SU2Element HolonomyTuple::commutator_product() const {
  SU2Element p = SU2Element::identity();
  for (const auto& [a, b] : pairs)
    p = p * a * b * a.inverse() * b.inverse();
  return p;
}

bool HolonomyTuple::flat(double tol) const {
  return exp_su2(theta).distance(commutator_product()) < tol;
}

CorrespondenceExpr CorrespondenceExpr::sign_flip(int genus, std::vector<int> signs) {
  CorrespondenceExpr e;
  e.kind = PieceKind::SignFlip;
  e.genus_in = e.genus_out = genus;
  e.signs = std::move(signs);
  e.validate();
  return e;
}

CorrespondenceExpr CorrespondenceExpr::trivial_cylinder(int genus) {
  return sign_flip(genus, std::vector<int>(static_cast<size_t>(2 * genus), 1));
}

CorrespondenceExpr CorrespondenceExpr::boundary_rotation(int genus, double angle) {
  CorrespondenceExpr e;
  e.kind = PieceKind::BoundaryRotation;
  e.genus_in = e.genus_out = genus;
  e.angle = angle;
  return e;
}

CorrespondenceExpr CorrespondenceExpr::word_substitution(int genus,
                                                         std::vector<Word> images) {
  CorrespondenceExpr e;
  e.kind = PieceKind::WordSubstitution;
  e.genus_in = e.genus_out = genus;
  e.images = std::move(images);
  e.validate();
  return e;
}

CorrespondenceExpr CorrespondenceExpr::dehn_twist(int genus) {
  std::vector<Word> im;
  im.push_back(Word::generator(0) * Word::generator(1));  // A1 -> A1 B1
  im.push_back(Word::generator(1));
  for (int i = 2; i < 2 * genus; ++i) im.push_back(Word::generator(i));
  return word_substitution(genus, std::move(im));
}

CorrespondenceExpr CorrespondenceExpr::path_change(int genus) {
  std::vector<Word> im;
  im.push_back(Word::generator(0));
  im.push_back(Word::generator(1).conjugated_by(Word::generator(0)));
  for (int i = 2; i < 2 * genus; ++i) im.push_back(Word::generator(i));
  return word_substitution(genus, std::move(im));
}

CorrespondenceExpr CorrespondenceExpr::path_conjugation(int genus, Word path) {
  CorrespondenceExpr e;
  e.kind = PieceKind::PathConjugation;
  e.genus_in = e.genus_out = genus;
  e.path = std::move(path);
  e.validate();
  return e;
}

CorrespondenceExpr CorrespondenceExpr::two_handle(int genus, int pair,
                                                  bool alpha_curve, int eps) {
  CorrespondenceExpr e;
  e.kind = PieceKind::TwoHandle;
  e.genus_in = genus;
  e.genus_out = genus - 1;
  e.pair_index = pair;
  e.alpha_curve = alpha_curve;
  e.eps = eps;
  e.validate();
  return e;
}

CorrespondenceExpr CorrespondenceExpr::one_handle(int genus, int eps) {
  CorrespondenceExpr e;
  e.kind = PieceKind::OneHandle;
  e.genus_in = genus;
  e.genus_out = genus + 1;
  e.eps = eps;
  e.validate();
  return e;
}

void CorrespondenceExpr::validate() const {
  if (genus_in < 0 || genus_out < 0)
    throw UnsupportedCobordism("negative genus");
  switch (kind) {
    case PieceKind::SignFlip:
      if (genus_in != genus_out ||
          signs.size() != static_cast<size_t>(2 * genus_in))
        throw UnsupportedCobordism("sign flip needs one sign per coordinate");
      for (int s : signs)
        if (s != 1 && s != -1) throw UnsupportedCobordism("signs must be +-1");
      break;
    case PieceKind::BoundaryRotation:
      if (genus_in != genus_out) throw UnsupportedCobordism("rotation preserves genus");
      break;
    case PieceKind::WordSubstitution: {
      if (genus_in != genus_out ||
          images.size() != static_cast<size_t>(2 * genus_in))
        throw UnsupportedCobordism("substitution needs one word per coordinate");
      for (const Word& w : images)
        if (w.max_generator() >= 2 * genus_in)
          throw UnsupportedCobordism("substitution word uses unknown coordinate");
      break;
    }
    case PieceKind::PathConjugation:
      if (genus_in != genus_out || path.max_generator() >= 2 * genus_in)
        throw UnsupportedCobordism("bad conjugation path");
      break;
    case PieceKind::TwoHandle:
      if (genus_out != genus_in - 1 || pair_index < 0 || pair_index >= genus_in ||
          (eps != 1 && eps != -1))
        throw UnsupportedCobordism("bad two-handle datum");
      break;
    case PieceKind::OneHandle:
      if (genus_out != genus_in + 1 || (eps != 1 && eps != -1))
        throw UnsupportedCobordism("bad one-handle datum");
      break;
  }
}

void CobordismChain::validate() const {
  for (const CorrespondenceExpr& p : pieces) p.validate();
  for (size_t i = 0; i + 1 < pieces.size(); ++i)
    if (pieces[i].genus_out != pieces[i + 1].genus_in)
      throw GenusMismatch("adjacent pieces have mismatched genus");
}

namespace {

std::vector<SU2Element> flatten(const HolonomyTuple& t) {
  std::vector<SU2Element> v;
  for (const auto& [a, b] : t.pairs) {
    v.push_back(a);
    v.push_back(b);
  }
  return v;
}

SU2Element eval_word_su2(const Word& w, const std::vector<SU2Element>& env) {
  SU2Element p = SU2Element::identity();
  for (const Letter& l : w.letters()) {
    const SU2Element& g = env.at(static_cast<size_t>(l.gen));
    p = p * (l.exp == 1 ? g : g.inverse());
  }
  return p;
}

SU2Element with_sign(const SU2Element& g, int sign) { return sign == 1 ? g : -g; }

bool close(const SU2Element& a, const SU2Element& b, double tol) {
  return a.distance(b) < tol;
}

}  // namespace

bool member(const CorrespondenceExpr& expr, const HolonomyTuple& x,
            const HolonomyTuple& y, double tol) {
  expr.validate();
  if (x.genus() != expr.genus_in || y.genus() != expr.genus_out)
    throw GenusMismatch("tuple genus does not match the correspondence");
  Su2Vector dt(x.theta[0] - y.theta[0], x.theta[1] - y.theta[1],
               x.theta[2] - y.theta[2]);
  if (dt.euclid() > tol) return false;
  std::vector<SU2Element> xs = flatten(x), ys = flatten(y);
  switch (expr.kind) {
    case PieceKind::SignFlip: {
      for (size_t i = 0; i < xs.size(); ++i)
        if (!close(ys[i], with_sign(xs[i], expr.signs[i]), tol)) return false;
      return true;
    }
    case PieceKind::BoundaryRotation: {
      for (size_t i = 0; i < xs.size(); ++i)
        if (!close(ys[i], xs[i], tol)) return false;
      return true;
    }
    case PieceKind::WordSubstitution: {
      for (size_t i = 0; i < xs.size(); ++i)
        if (!close(ys[i], eval_word_su2(expr.images[i], xs), tol)) return false;
      return true;
    }
    case PieceKind::PathConjugation: {
      SU2Element p = eval_word_su2(expr.path, xs);
      for (size_t i = 0; i < xs.size(); ++i)
        if (!close(ys[i], xs[i].conjugated_by(p), tol)) return false;
      return true;
    }
    case PieceKind::TwoHandle: {
      size_t idx = static_cast<size_t>(2 * expr.pair_index + (expr.alpha_curve ? 0 : 1));
      SU2Element target = expr.eps == 1 ? SU2Element::identity()
                                        : SU2Element::minus_identity();
      if (!close(xs[idx], target, tol)) return false;
      size_t yi = 0;
      for (int p = 0; p < expr.genus_in; ++p) {
        if (p == expr.pair_index) continue;
        if (!close(ys[yi], xs[static_cast<size_t>(2 * p)], tol) ||
            !close(ys[yi + 1], xs[static_cast<size_t>(2 * p + 1)], tol))
          return false;
        yi += 2;
      }
      return true;
    }
    case PieceKind::OneHandle: {
      for (size_t i = 0; i < xs.size(); ++i)
        if (!close(ys[i], xs[i], tol)) return false;
      SU2Element target = expr.eps == 1 ? SU2Element::identity()
                                        : SU2Element::minus_identity();
      return close(ys[ys.size() - 1], target, tol);  // new B pinned, new A free
    }
  }
  return false;
}

namespace {

SignedWord eval_signed(const Word& w, const std::vector<SignedWord>& env) {
  SignedWord out;
  std::vector<Word> images;
  images.reserve(env.size());
  for (const SignedWord& s : env) images.push_back(s.word);
  for (const Letter& l : w.letters()) out.sign *= env.at(static_cast<size_t>(l.gen)).sign;
  out.word = w.substituted(images);
  return out;
}

}  // namespace

ChainNormalForm normalize(const CobordismChain& chain) {
  chain.validate();
  ChainNormalForm nf;
  nf.genus_in = chain.genus_in();
  nf.genus_out = nf.genus_in;
  for (int i = 0; i < 2 * nf.genus_in; ++i)
    nf.coords.push_back(SignedWord{1, Word::generator(i)});
  for (const CorrespondenceExpr& p : chain.pieces) {
    switch (p.kind) {
      case PieceKind::SignFlip:
        for (size_t i = 0; i < nf.coords.size(); ++i) nf.coords[i].sign *= p.signs[i];
        break;
      case PieceKind::BoundaryRotation:
        break;
      case PieceKind::WordSubstitution: {
        std::vector<SignedWord> next;
        for (const Word& w : p.images) next.push_back(eval_signed(w, nf.coords));
        nf.coords = std::move(next);
        break;
      }
      case PieceKind::PathConjugation: {
        SignedWord c = eval_signed(p.path, nf.coords);
        for (SignedWord& s : nf.coords)
          s.word = c.word.inverse() * s.word * c.word;
        break;
      }
      case PieceKind::TwoHandle: {
        size_t idx = static_cast<size_t>(2 * p.pair_index + (p.alpha_curve ? 0 : 1));
        nf.constraints.emplace_back(nf.coords[idx], p.eps);
        nf.coords.erase(nf.coords.begin() + 2 * p.pair_index,
                        nf.coords.begin() + 2 * p.pair_index + 2);
        break;
      }
      case PieceKind::OneHandle: {
        int a = nf.n_symbols(), b = a + 1;
        nf.n_fibers += 2;
        nf.coords.push_back(SignedWord{1, Word::generator(a)});
        nf.coords.push_back(SignedWord{1, Word::generator(b)});
        nf.constraints.emplace_back(SignedWord{1, Word::generator(b)}, p.eps);
        break;
      }
    }
    nf.genus_out = p.genus_out;
  }
  return nf;
}

ChainNormalForm compose(const ChainNormalForm& first, const ChainNormalForm& second) {
  if (first.genus_out != second.genus_in)
    throw GenusMismatch("normal forms do not compose");
  ChainNormalForm out;
  out.genus_in = first.genus_in;
  out.genus_out = second.genus_out;
  out.n_fibers = first.n_fibers + second.n_fibers;
  out.constraints = first.constraints;
  // environment mapping second's symbols into first's symbol alphabet
  std::vector<SignedWord> env = first.coords;
  for (int k = 0; k < second.n_fibers; ++k)
    env.push_back(SignedWord{1, Word::generator(first.n_symbols() + k)});
  for (const auto& [sw, eps] : second.constraints) {
    SignedWord e = eval_signed(sw.word, env);
    e.sign *= sw.sign;
    out.constraints.emplace_back(e, eps);
  }
  for (const SignedWord& sw : second.coords) {
    SignedWord e = eval_signed(sw.word, env);
    e.sign *= sw.sign;
    out.coords.push_back(e);
  }
  return out;
}

namespace {

SU2Element haar(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return SU2Element(g(rng), g(rng), g(rng), g(rng));
}

// flat genus-g tuple: each pair rotates about a common random axis
HolonomyTuple random_flat_tuple(int genus, std::mt19937_64& rng) {
  HolonomyTuple t;
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0, 2 * std::acos(-1.0));
  for (int i = 0; i < genus; ++i) {
    double nx = g(rng), ny = g(rng), nz = g(rng);
    double nn = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (nn < 1e-9) nn = 1;
    nx /= nn;
    ny /= nn;
    nz /= nn;
    double s = std::sin(u(rng) / 2), c = std::cos(u(rng) / 2);
    double s2 = std::sin(u(rng) / 2), c2 = std::cos(u(rng) / 2);
    t.pairs.emplace_back(SU2Element(c, s * nx, s * ny, s * nz),
                         SU2Element(c2, s2 * nx, s2 * ny, s2 * nz));
  }
  return t;
}

// fiber values: pinned by single-symbol constraints where possible, Haar
// random otherwise
std::vector<SU2Element> fiber_values(const ChainNormalForm& nf,
                                     std::mt19937_64& rng) {
  std::vector<SU2Element> f(static_cast<size_t>(nf.n_fibers),
                            SU2Element::identity());
  std::vector<bool> pinned(static_cast<size_t>(nf.n_fibers), false);
  for (const auto& [sw, eps] : nf.constraints) {
    if (sw.word.size() != 1) continue;
    const Letter& l = sw.word.letters()[0];
    if (l.gen < 2 * nf.genus_in) continue;
    size_t k = static_cast<size_t>(l.gen - 2 * nf.genus_in);
    int target = eps * sw.sign;
    f[k] = target == 1 ? SU2Element::identity() : SU2Element::minus_identity();
    pinned[k] = true;
  }
  for (size_t k = 0; k < f.size(); ++k)
    if (!pinned[k]) f[k] = haar(rng);
  return f;
}

bool constraints_hold(const ChainNormalForm& nf, const std::vector<SU2Element>& env,
                      double tol) {
  for (const auto& [sw, eps] : nf.constraints) {
    SU2Element v = with_sign(eval_word_su2(sw.word, env), sw.sign);
    SU2Element target = eps == 1 ? SU2Element::identity()
                                 : SU2Element::minus_identity();
    if (!close(v, target, tol)) return false;
  }
  return true;
}

}  // namespace

ComposeReport compose_check(const CobordismChain& first, const CobordismChain& second,
                            int samples, std::uint64_t seed) {
  if (first.genus_out() != second.genus_in())
    throw GenusMismatch("chains do not compose");
  CobordismChain fused;
  fused.pieces = first.pieces;
  fused.pieces.insert(fused.pieces.end(), second.pieces.begin(), second.pieces.end());
  ChainNormalForm direct = normalize(fused);
  ChainNormalForm paired = compose(normalize(first), normalize(second));

  ComposeReport rep;
  rep.symbolic_equal = direct == paired;

  const double tol = 1e-8;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    HolonomyTuple x = random_flat_tuple(direct.genus_in, rng);
    std::vector<SU2Element> env = flatten(x);
    std::vector<SU2Element> fibers = fiber_values(direct, rng);
    env.insert(env.end(), fibers.begin(), fibers.end());
    bool sat1 = constraints_hold(direct, env, tol);
    bool sat2 = constraints_hold(paired, env, tol);
    bool out_equal = true;
    for (size_t i = 0; i < direct.coords.size() && i < paired.coords.size(); ++i) {
      SU2Element v1 = with_sign(eval_word_su2(direct.coords[i].word, env),
                                direct.coords[i].sign);
      SU2Element v2 = with_sign(eval_word_su2(paired.coords[i].word, env),
                                paired.coords[i].sign);
      if (!close(v1, v2, tol)) out_equal = false;
    }
    ++rep.samples_checked;
    if (sat1 != sat2 || (sat1 && !out_equal)) ++rep.disagreements;
  }
  if (rep.samples_checked == 0) throw SamplingFailure("no samples evaluated");
  return rep;
}

namespace {

bool is_identity_piece(const CorrespondenceExpr& p) {
  switch (p.kind) {
    case PieceKind::SignFlip:
      return std::all_of(p.signs.begin(), p.signs.end(), [](int s) { return s == 1; });
    case PieceKind::BoundaryRotation:
      return true;
    case PieceKind::WordSubstitution: {
      for (size_t i = 0; i < p.images.size(); ++i)
        if (!(p.images[i] == Word::generator(static_cast<int>(i)))) return false;
      return true;
    }
    case PieceKind::PathConjugation:
      return p.path.empty();
    default:
      return false;
  }
}

int boundary_genus(const CobordismChain& chain, size_t position) {
  if (position == 0) return chain.genus_in();
  if (position > chain.pieces.size())
    throw MoveNotApplicable("position beyond the end of the chain");
  return chain.pieces[position - 1].genus_out;
}

ChainNormalForm segment_nf(const std::vector<CorrespondenceExpr>& pieces) {
  CobordismChain c;
  c.pieces = pieces;
  return normalize(c);
}

// substitution inverse images for the standard dehn twist
std::vector<Word> dehn_twist_inverse(int genus) {
  std::vector<Word> im;
  im.push_back(Word::generator(0) * Word::generator(1, -1));
  im.push_back(Word::generator(1));
  for (int i = 2; i < 2 * genus; ++i) im.push_back(Word::generator(i));
  return im;
}

}  // namespace

CobordismChain apply_cerf_move(const CobordismChain& chain, const CerfMove& move) {
  chain.validate();
  CobordismChain out = chain;
  auto& ps = out.pieces;
  switch (move.kind) {
    case CerfMoveKind::TrivialCylinderInsertion: {
      if (move.remove) {
        if (move.position >= ps.size() || !is_identity_piece(ps[move.position]))
          throw MoveNotApplicable("piece is not a trivial cylinder");
        ps.erase(ps.begin() + static_cast<long>(move.position));
      } else {
        int g = boundary_genus(chain, move.position);
        ps.insert(ps.begin() + static_cast<long>(move.position),
                  CorrespondenceExpr::trivial_cylinder(g));
      }
      break;
    }
    case CerfMoveKind::BirthDeath: {
      if (move.remove) {
        if (move.position + 1 >= ps.size() ||
            ps[move.position].kind != PieceKind::OneHandle ||
            ps[move.position + 1].kind != PieceKind::TwoHandle ||
            !ps[move.position + 1].alpha_curve ||
            ps[move.position + 1].pair_index != ps[move.position].genus_in ||
            ps[move.position].eps != 1 || ps[move.position + 1].eps != 1)
          throw MoveNotApplicable("not a cancelling birth-death pair");
        ps.erase(ps.begin() + static_cast<long>(move.position),
                 ps.begin() + static_cast<long>(move.position) + 2);
      } else {
        int g = boundary_genus(chain, move.position);
        ps.insert(ps.begin() + static_cast<long>(move.position),
                  {CorrespondenceExpr::one_handle(g, 1),
                   CorrespondenceExpr::two_handle(g + 1, g, true, 1)});
      }
      break;
    }
    case CerfMoveKind::DiffeoEquivalence: {
      if (move.remove) {
        if (move.position + 1 >= ps.size() ||
            ps[move.position].kind != PieceKind::WordSubstitution ||
            ps[move.position + 1].kind != PieceKind::WordSubstitution)
          throw MoveNotApplicable("can only merge adjacent substitutions");
        const auto& a = ps[move.position];
        const auto& b = ps[move.position + 1];
        std::vector<Word> merged;
        for (const Word& w : b.images) merged.push_back(w.substituted(a.images));
        CorrespondenceExpr m =
            CorrespondenceExpr::word_substitution(a.genus_in, std::move(merged));
        ps[move.position] = std::move(m);
        ps.erase(ps.begin() + static_cast<long>(move.position) + 1);
      } else {
        if (move.position >= ps.size() ||
            ps[move.position].kind != PieceKind::WordSubstitution)
          throw MoveNotApplicable("can only split a substitution piece");
        CorrespondenceExpr orig = ps[move.position];
        int g = orig.genus_in;
        std::vector<Word> tinv = dehn_twist_inverse(g);
        std::vector<Word> rest;
        for (const Word& w : orig.images) rest.push_back(w.substituted(tinv));
        // twist first, then the adjusted substitution; composition is orig
        ps[move.position] = CorrespondenceExpr::dehn_twist(g);
        ps.insert(ps.begin() + static_cast<long>(move.position) + 1,
                  CorrespondenceExpr::word_substitution(g, std::move(rest)));
      }
      break;
    }
    case CerfMoveKind::CriticalPointSwitch: {
      if (move.position + 1 >= ps.size())
        throw MoveNotApplicable("switch needs two adjacent pieces");
      CorrespondenceExpr a = ps[move.position];
      CorrespondenceExpr b = ps[move.position + 1];
      if (a.kind == PieceKind::SignFlip && b.kind == PieceKind::TwoHandle) {
        // flip commutes past the handle: the killed coordinate's sign moves
        // into the handle's central target
        size_t idx = static_cast<size_t>(2 * b.pair_index + (b.alpha_curve ? 0 : 1));
        CorrespondenceExpr nb = b;
        nb.eps *= a.signs[idx];
        std::vector<int> ns = a.signs;
        ns.erase(ns.begin() + 2 * b.pair_index, ns.begin() + 2 * b.pair_index + 2);
        CorrespondenceExpr na = CorrespondenceExpr::sign_flip(b.genus_out, ns);
        ps[move.position] = std::move(nb);
        ps[move.position + 1] = std::move(na);
      } else if (a.genus_in == a.genus_out && b.genus_in == b.genus_out) {
        std::vector<CorrespondenceExpr> before = {a, b}, after = {b, a};
        if (!(segment_nf(before) == segment_nf(after)))
          throw MoveNotApplicable("pieces do not commute");
        std::swap(ps[move.position], ps[move.position + 1]);
      } else {
        throw MoveNotApplicable("unsupported switch configuration");
      }
      break;
    }
    case CerfMoveKind::ClassSlide: {
      if (move.position + 1 >= ps.size() ||
          ps[move.position].kind != PieceKind::SignFlip ||
          ps[move.position + 1].kind != PieceKind::SignFlip)
        throw MoveNotApplicable("class slide needs adjacent sign pieces");
      CorrespondenceExpr& a = ps[move.position];
      CorrespondenceExpr& b = ps[move.position + 1];
      if (move.slide.size() != a.signs.size())
        throw MoveNotApplicable("slide vector has the wrong length");
      for (size_t i = 0; i < a.signs.size(); ++i) {
        if (move.slide[i] != 1 && move.slide[i] != -1)
          throw MoveNotApplicable("slide entries must be +-1");
        int total = a.signs[i] * b.signs[i];
        a.signs[i] = move.slide[i];
        b.signs[i] = total * move.slide[i];
      }
      break;
    }
  }
  out.validate();
  return out;
}

TwistedRepProblem generalized_intersections(const CobordismChain& chain) {
  chain.validate();
  if (chain.pieces.empty() || chain.genus_in() != 0 || chain.genus_out() != 0)
    throw OpenChain("chain must start and end at genus-0 caps");
  ChainNormalForm nf = normalize(chain);
  TwistedRepProblem prob;
  prob.presentation.n_generators = nf.n_fibers;
  for (const auto& [sw, eps] : nf.constraints)
    prob.twisted_relators.emplace_back(sw.word, eps * sw.sign);
  return prob;
}

CobordismChain lens_chain(long long p, long long q, int c0, int c1) {
  CobordismChain chain;
  chain.pieces.push_back(CorrespondenceExpr::one_handle(0, (c0 % 2) ? -1 : 1));
  chain.pieces.push_back(CorrespondenceExpr::trivial_cylinder(1));
  chain.pieces.push_back(CorrespondenceExpr::trivial_cylinder(1));
  std::vector<Word> glue;
  glue.push_back(Word::generator(0));
  glue.push_back(Word::power(0, p) * Word::power(1, -q));
  chain.pieces.push_back(CorrespondenceExpr::word_substitution(1, std::move(glue)));
  chain.pieces.push_back(
      CorrespondenceExpr::two_handle(1, 0, false, (c1 % 2) ? -1 : 1));
  chain.validate();
  return chain;
}

CobordismChain s2xs1_chain(int c) {
  CobordismChain chain;
  chain.pieces.push_back(CorrespondenceExpr::one_handle(0, 1));
  chain.pieces.push_back(
      CorrespondenceExpr::sign_flip(1, {1, (c % 2) ? -1 : 1}));
  chain.pieces.push_back(CorrespondenceExpr::two_handle(1, 0, false, 1));
  chain.validate();
  return chain;
}

}  // namespace hsikit
