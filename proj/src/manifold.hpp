#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "snf.hpp"
#include "words.hpp"

namespace hsikit {

struct UnsupportedDescription : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LensDesc {
  long long p = 1, q = 0;
};
struct BrieskornDesc {
  long long a1 = 2, a2 = 3, a3 = 5;
};
/// Weighted forest of trees; Y is the boundary of the associated plumbing
/// of disk bundles over spheres.
struct PlumbingDesc {
  std::vector<long long> weights;               // one per vertex
  std::vector<std::pair<int, int>> edges;       // must form a forest
  int n_vertices() const { return static_cast<int>(weights.size()); }
  int degree(int v) const;
  bool is_forest() const;
  BigMatrix intersection_matrix() const;
};
struct TorusKnotSurgeryDesc {
  long long r = 2, s = 3;  // torus knot parameters, coprime, |r|,|s| >= 2
  long long framing = 0;   // integer surgery coefficient n
};
struct S2xS1Desc {};
struct ManifoldDesc;
struct ConnectedSumDesc {
  std::vector<ManifoldDesc> summands;
};

struct ManifoldDesc {
  std::variant<LensDesc, BrieskornDesc, PlumbingDesc, TorusKnotSurgeryDesc,
               ConnectedSumDesc, S2xS1Desc>
      shape;
  /// c in H_1(Y; Z/2), as bits over the declared meridian basis.
  std::vector<int> class_c;

  void validate() const;
  std::string kind() const;
};

/// Seifert data (b0, b1, b2, b3) for Brieskorn(a1,a2,a3) normalized so that
/// b1*a2*a3 + b2*a1*a3 + b3*a1*a2 - b0*a1*a2*a3 = 1.
struct SeifertData {
  long long b0, b1, b2, b3;
};
SeifertData brieskorn_seifert_data(long long a1, long long a2, long long a3);

/// Presentation of pi_1 with marked meridian words for the surgery and
/// plumbing curves in the description.
Presentation pi1(const ManifoldDesc& desc);

struct H1Result {
  std::vector<BigInt> torsion;  // invariant factors >= 2
  int betti = 0;
  BigInt order() const;  // 0-for-infinite
};

H1Result h1(const ManifoldDesc& desc);
BigInt h1_order(const ManifoldDesc& desc);

}  // namespace hsikit
