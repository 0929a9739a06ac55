#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedab.hpp"
#include "linkdiag.hpp"
#include "manifold.hpp"

namespace hsikit {

struct InconsistentInputs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Rank interval for a Floer group; hi = -1 means no upper bound is known.
/// The gap is walked in steps of 2 (exactness kills generators in pairs).
struct RankBounds {
  long long lo = 0;
  long long hi = -1;
  bool conditional = false;
};

/// From the surgery exact triangle: chi_alpha <= rank_alpha <= rank_beta +
/// rank_gamma, rank_alpha matching the parity of the upper bound.
RankBounds triad_rank_bounds(long long rank_beta, long long rank_gamma,
                             long long chi_alpha);

/// Surgery triad record.  Admissibility: one |H1| equals the sum of the other
/// two (0-for-infinite convention), up to reordering.
struct Triad {
  ManifoldDesc alpha, beta, gamma;
  bool admissible() const;
};

/// Induction certificate that a manifold's Floer group is free of total rank
/// |H1|.  Each triad is one induction step; verify() recomputes every |H1|.
struct MinimalityCertificate {
  ManifoldDesc desc;
  long long rank = 1;
  std::string method;
  std::vector<Triad> triads;
  bool verify() const;
};

std::optional<MinimalityCertificate> certify_minimal(const ManifoldDesc& desc);

/// Minimality of the double branched cover of a quasi-alternating diagram:
/// rank equals the diagram determinant.
struct QACoverReport {
  QACertificate certificate;
  long long rank = 1;
};
std::optional<QACoverReport> qa_cover_minimality(const PDDiagram& d);

/// (4L+1, 4L+1, 8L+1) upper bounds over Q, Z, Z/2 with L the half-count of
/// irreducible orbits; conditional on the conjectural spectral sequence.
struct BrieskornBounds {
  long long lambda = 0;
  long long bound_q = 0, bound_z = 0, bound_z2 = 0;
  bool conditional = true;
};
BrieskornBounds brieskorn_bounds(long long a1, long long a2, long long a3);

struct HSIResult {
  bool exact = false;
  GradedAbelianGroup group;  // meaningful when exact
  long long rank = -1;       // total free rank when exact
  bool minimal_certified = false;
  std::optional<MinimalityCertificate> certificate;
  RankBounds bounds;  // exact results collapse to lo == hi == rank
  std::string method;
};

HSIResult hsi(const ManifoldDesc& desc);

/// Both sides of the Euler-characteristic law: |chi| of the computed group
/// and |H1| (0-for-infinite).
struct EulerCheck {
  long long chi_abs = 0;
  BigInt h1_or_zero = 0;
  bool agree = false;
};
EulerCheck euler_check(const ManifoldDesc& desc);

}  // namespace hsikit
