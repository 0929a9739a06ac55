#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "repvar.hpp"
#include "su2.hpp"
#include "words.hpp"

namespace hsikit {

struct UnsupportedCobordism : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenusMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MoveNotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SamplingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OpenChain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point of the extended moduli space of a genus-g surface: boundary value
/// theta and holonomies (A_i, B_i).  Flat means exp(theta) = prod [A_i,B_i];
/// the ambient chart requires the product to stay away from -I.
struct HolonomyTuple {
  Su2Vector theta;
  std::vector<std::pair<SU2Element, SU2Element>> pairs;

  int genus() const { return static_cast<int>(pairs.size()); }
  SU2Element commutator_product() const;
  bool flat(double tol = 1e-9) const;
  bool in_chart() const { return commutator_product().trace() > -2 + 1e-9; }
};

/// Holonomy-level relation of one elementary vertical cobordism.
/// Coordinate symbols: 2i is A_{i+1}, 2i+1 is B_{i+1}.
enum class PieceKind {
  SignFlip,          // coordinate-wise central sign change (Z/2 class data)
  BoundaryRotation,  // reparameterization; trivial on the theta = 0 slice
  WordSubstitution,  // surface diffeomorphism on holonomy words
  PathConjugation,   // base-path change: global conjugation by a word
  TwoHandle,         // kills one curve (= +-I) and drops the pair
  OneHandle          // births a pair with the beta holonomy pinned to +-I
};

struct CorrespondenceExpr {
  PieceKind kind = PieceKind::SignFlip;
  int genus_in = 0, genus_out = 0;
  std::vector<int> signs;     // SignFlip: 2g entries of +-1
  double angle = 0;           // BoundaryRotation
  std::vector<Word> images;   // WordSubstitution: 2g words in coordinate symbols
  Word path;                  // PathConjugation
  int pair_index = 0;         // TwoHandle
  bool alpha_curve = false;   // TwoHandle: kill A (true) or B (false)
  int eps = 1;                // TwoHandle / OneHandle central target

  static CorrespondenceExpr sign_flip(int genus, std::vector<int> signs);
  static CorrespondenceExpr trivial_cylinder(int genus);
  static CorrespondenceExpr boundary_rotation(int genus, double angle);
  static CorrespondenceExpr word_substitution(int genus, std::vector<Word> images);
  static CorrespondenceExpr dehn_twist(int genus);      // (A1,B1) -> (A1 B1, B1)
  static CorrespondenceExpr path_change(int genus);     // B1 -> A1^-1 B1 A1
  static CorrespondenceExpr path_conjugation(int genus, Word path);
  static CorrespondenceExpr two_handle(int genus, int pair, bool alpha_curve, int eps);
  static CorrespondenceExpr one_handle(int genus, int eps);

  void validate() const;
};

/// Membership of (x, y) in the relation, within tol.
bool member(const CorrespondenceExpr& expr, const HolonomyTuple& x,
            const HolonomyTuple& y, double tol = 1e-8);

struct CobordismChain {
  std::vector<CorrespondenceExpr> pieces;
  int genus_in() const { return pieces.empty() ? 0 : pieces.front().genus_in; }
  int genus_out() const { return pieces.empty() ? 0 : pieces.back().genus_out; }
  void validate() const;  // adjacent genera match
};

/// Word with a central sign: sign * (product of coordinate symbols).
struct SignedWord {
  int sign = 1;
  Word word;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// Symbolic normal form of a chain.  Symbols 0..2*genus_in-1 are the source
/// coordinates; fiber symbols introduced by OneHandle pieces follow.
struct ChainNormalForm {
  int genus_in = 0, genus_out = 0;
  int n_fibers = 0;
  std::vector<std::pair<SignedWord, int>> constraints;  // expr = eps * I
  std::vector<SignedWord> coords;                       // 2*genus_out outputs

  int n_symbols() const { return 2 * genus_in + n_fibers; }
  friend bool operator==(const ChainNormalForm&, const ChainNormalForm&) = default;
};

ChainNormalForm normalize(const CobordismChain& chain);
ChainNormalForm compose(const ChainNormalForm& first, const ChainNormalForm& second);

struct ComposeReport {
  bool symbolic_equal = false;
  int samples_checked = 0;
  int disagreements = 0;
  bool ok() const { return symbolic_equal && disagreements == 0; }
};

/// Normal form of the concatenation vs composition of normal forms, plus a
/// sampled membership comparison on flat tuples.
ComposeReport compose_check(const CobordismChain& first, const CobordismChain& second,
                            int samples = 1000, std::uint64_t seed = 17);

enum class CerfMoveKind {
  DiffeoEquivalence,        // split/merge functional pieces
  TrivialCylinderInsertion, // insert/remove an identity cylinder
  BirthDeath,               // insert/remove a cancelling OneHandle-TwoHandle pair
  CriticalPointSwitch,      // swap adjacent independent pieces
  ClassSlide                // move sign data across adjacent SignFlips
};

struct CerfMove {
  CerfMoveKind kind = CerfMoveKind::TrivialCylinderInsertion;
  size_t position = 0;
  bool remove = false;
  std::vector<int> slide;  // ClassSlide: new sign vector for the first piece
};

CobordismChain apply_cerf_move(const CobordismChain& chain, const CerfMove& move);

/// Equations cut out by a closed chain (genus-0 caps at both ends) on the
/// theta = 0 slice; generators are the OneHandle fibers.
TwistedRepProblem generalized_intersections(const CobordismChain& chain);

/// Heegaard chains.  The two SignFlip slots carry the Z/2 class data so that
/// every Cerf move has a site to act on.
CobordismChain lens_chain(long long p, long long q, int c0 = 0, int c1 = 0);
CobordismChain s2xs1_chain(int c = 0);

}  // namespace hsikit
