#pragma once

#include <gmpxx.h>

#include <vector>

namespace hsikit {

using BigInt = mpz_class;
using BigMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  BigMatrix d;  // diagonal, d1 | d2 | ..., entries >= 0
  BigMatrix u;  // unimodular, u * m * v = d
  BigMatrix v;
};

BigMatrix big_identity(size_t n);
BigMatrix big_mul(const BigMatrix& a, const BigMatrix& b);
BigInt big_det(BigMatrix m);  // Bareiss fraction-free elimination

/// Smith normal form with smallest-absolute-value pivoting.
SmithResult smith_normal_form(const BigMatrix& m);

/// Invariant factors > 1 and the rank deficit (free rank of the cokernel).
/// Rows of m are relations, columns are generators.
struct CokernelForm {
  std::vector<BigInt> torsion;  // invariant factors >= 2
  int betti = 0;                // number of Z summands
  /// |cokernel|: product of torsion if betti == 0, else 0 (0-for-infinite).
  BigInt order() const;
};

CokernelForm cokernel(const BigMatrix& relations, size_t n_generators);

}  // namespace hsikit
