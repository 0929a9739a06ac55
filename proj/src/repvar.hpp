#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "su2.hpp"
#include "words.hpp"

namespace hsikit {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// System of SU(2) equations rho(word) = +-I over the generators of a
/// finitely presented group; the presentation's relators carry target +I,
/// twisted relators (rho(mu) = -I and friends) carry their own sign.
struct TwistedRepProblem {
  Presentation presentation;
  std::vector<std::pair<Word, int>> twisted_relators;  // sign: +1 -> I, -1 -> -I

  std::vector<std::pair<Word, int>> all_constraints() const;
  /// Exact emptiness certificate: two constraints with identical freely
  /// reduced words (or inverse words) but opposite signs.
  bool contradictory() const;
};

enum class RepKind { Central, Abelian, Irreducible };
enum class OrbitType { Point, Sphere, SO3 };

struct RepOrbit {
  std::vector<SU2Element> representative;  // one per generator
  RepKind kind = RepKind::Central;
  OrbitType orbit_type = OrbitType::Point;
  double residual = 0;
  std::vector<double> signature;  // traces over the word battery
};

/// Conjugation-invariant trace battery: generators plus all length-2
/// products g_i g_j with i <= j.
std::vector<Word> signature_battery(int n_generators);
std::vector<double> signature_of(const std::vector<SU2Element>& rep, int n_generators);
RepKind classify(const std::vector<SU2Element>& rep, double tol = 1e-6);
OrbitType orbit_type_of(RepKind kind);

double residual_of(const TwistedRepProblem& prob, const std::vector<SU2Element>& rep);

/// Levenberg-Marquardt on the product of unit-quaternion spheres, restarted
/// from Haar-random points; converged solutions are clustered into
/// conjugation orbits by their signature vectors (collision radius 1e-6).
/// Throws NoConvergence when no restart reaches tol; an empty variety is
/// only ever asserted by the exact enumerators.
std::vector<RepOrbit> solve_numeric(const TwistedRepProblem& prob, int restarts = 500,
                                    double tol = 1e-10, std::uint64_t seed = 17);

/// One clean-intersection component of the lens-space equation system
/// {B = eps*I, A^p B^-q = eps'*I}.
struct LensComponent {
  bool is_point = true;    // point (central) or a 2-sphere of abelian reps
  double trace_a = 2.0;    // 2 cos(phi)
  int b_sign = 1;          // B = b_sign * I
  std::vector<SU2Element> representative;
};

struct LensVariety {
  std::vector<LensComponent> components;
  long long perturbed_count = 0;  // points + 2 per sphere; equals p
};

LensVariety enumerate_lens(long long p, long long q, int c0 = 0, int c1 = 0);
TwistedRepProblem lens_problem(long long p, long long q, int c0 = 0, int c1 = 0);

struct BrieskornVariety {
  std::vector<std::array<long long, 3>> rotation_numbers;
  std::vector<RepOrbit> orbits;  // one central (trivial) + one per triple
  long long irreducible_count() const {
    return static_cast<long long>(rotation_numbers.size());
  }
};

BrieskornVariety enumerate_brieskorn(long long a1, long long a2, long long a3);
TwistedRepProblem brieskorn_problem(long long a1, long long a2, long long a3);

/// lambda = irreducible count / 2 (representations pair up; odd counts
/// indicate an enumerator bug and raise InternalError).
long long casson_brieskorn(long long a1, long long a2, long long a3);

}  // namespace hsikit
