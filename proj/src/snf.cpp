#include "snf.hpp"

#include <stdexcept>

namespace hsikit {

BigMatrix big_identity(size_t n) {
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigMatrix big_mul(const BigMatrix& a, const BigMatrix& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  BigMatrix c(n, std::vector<BigInt>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

BigInt big_det(BigMatrix m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (m[0].size() != n) throw std::invalid_argument("determinant needs a square matrix");
  BigInt sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

struct Worker {
  BigMatrix a, u, v;
  size_t rows, cols;

  explicit Worker(const BigMatrix& m) : a(m) {
    rows = a.size();
    cols = rows ? a[0].size() : 0;
    u = big_identity(rows);
    v = big_identity(cols);
  }

  void swap_rows(size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  void add_row(size_t dst, size_t src, const BigInt& c) {
    for (size_t j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
    for (size_t j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
  }
  void add_col(size_t dst, size_t src, const BigInt& c) {
    for (size_t i = 0; i < rows; ++i) a[i][dst] += c * a[i][src];
    for (size_t i = 0; i < cols; ++i) v[i][dst] += c * v[i][src];
  }
  void negate_row(size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  // Smallest nonzero |entry| in the trailing block, or nullopt.
  bool find_pivot(size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    BigInt best;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        BigInt mag = abs(a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    size_t t = 0;
    while (t < rows && t < cols) {
      size_t pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;  // a smaller pivot appeared; redo this corner
      // pivot must divide the rest of the block for the divisibility chain
      bool divides_all = true;
      for (size_t i = t + 1; i < rows && divides_all; ++i)
        for (size_t j = t + 1; j < cols && divides_all; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, 1);
            divides_all = false;
          }
      if (!divides_all) continue;
      if (a[t][t] < 0) negate_row(t);
      ++t;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const BigMatrix& m) {
  Worker w(m);
  w.run();
  return SmithResult{w.a, w.u, w.v};
}

BigInt CokernelForm::order() const {
  if (betti > 0) return 0;
  BigInt p = 1;
  for (const BigInt& t : torsion) p *= t;
  return p;
}

CokernelForm cokernel(const BigMatrix& relations, size_t n_generators) {
  BigMatrix m = relations;
  for (auto& row : m)
    if (row.size() != n_generators)
      throw std::invalid_argument("relation row length mismatch");
  if (m.empty()) m.push_back(std::vector<BigInt>(n_generators, 0));
  SmithResult s = smith_normal_form(m);
  CokernelForm out;
  size_t rank = 0;
  size_t n = std::min(s.d.size(), n_generators);
  for (size_t i = 0; i < n; ++i) {
    if (s.d[i][i] == 0) continue;
    ++rank;
    if (s.d[i][i] >= 2) out.torsion.push_back(s.d[i][i]);
  }
  out.betti = static_cast<int>(n_generators - rank);
  return out;
}

}  // namespace hsikit
