#include "gradedab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hsikit {

namespace {
int wrap8(int d) {
  int r = d % 8;
  return r < 0 ? r + 8 : r;
}
}  // namespace

GradedAbelianGroup GradedAbelianGroup::free(long long rank, int degree) {
  GradedAbelianGroup g;
  for (long long i = 0; i < rank; ++i) g.add_factor(degree, 0);
  return g;
}

GradedAbelianGroup GradedAbelianGroup::cyclic(long long order, int degree) {
  GradedAbelianGroup g;
  g.add_factor(degree, order);
  return g;
}

GradedAbelianGroup GradedAbelianGroup::even_concentrated_free(long long rank) {
  GradedAbelianGroup g = free(rank, 0);
  g.degrees_exact_ = false;
  return g;
}

void GradedAbelianGroup::add_factor(int degree, long long order) {
  if (order == 1) return;  // trivial factor
  if (order < 0 || order == 1)
    throw std::invalid_argument("factor order must be 0 (Z) or >= 2");
  int d = wrap8(degree);
  factors_[static_cast<size_t>(d)].push_back(order);
  canonicalize(d);
}

void GradedAbelianGroup::canonicalize(int degree) {
  auto& v = factors_[static_cast<size_t>(degree)];
  // 0 (= Z) sorts last; finite orders ascending
  std::sort(v.begin(), v.end(), [](long long a, long long b) {
    if ((a == 0) != (b == 0)) return b == 0;
    return a < b;
  });
}

const std::vector<long long>& GradedAbelianGroup::factors(int degree) const {
  return factors_[static_cast<size_t>(wrap8(degree))];
}

bool GradedAbelianGroup::is_zero() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const auto& v) { return v.empty(); });
}

bool GradedAbelianGroup::is_free() const {
  for (const auto& v : factors_)
    for (long long o : v)
      if (o != 0) return false;
  return true;
}

long long GradedAbelianGroup::total_rank() const {
  long long r = 0;
  for (const auto& v : factors_)
    r += std::count(v.begin(), v.end(), 0LL);
  return r;
}

GradedAbelianGroup GradedAbelianGroup::shifted(int delta) const {
  GradedAbelianGroup g;
  g.degrees_exact_ = degrees_exact_;
  for (int d = 0; d < 8; ++d)
    for (long long o : factors_[static_cast<size_t>(d)]) g.add_factor(d + delta, o);
  return g;
}

GradedAbelianGroup GradedAbelianGroup::direct_sum(const GradedAbelianGroup& other) const {
  GradedAbelianGroup g = *this;
  g.degrees_exact_ = degrees_exact_ && other.degrees_exact_;
  for (int d = 0; d < 8; ++d)
    for (long long o : other.factors_[static_cast<size_t>(d)]) g.add_factor(d, o);
  return g;
}

long long GradedAbelianGroup::euler_abs() const {
  long long chi = 0;
  for (int d = 0; d < 8; ++d) {
    long long rank = static_cast<long long>(
        std::count(factors_[static_cast<size_t>(d)].begin(),
                   factors_[static_cast<size_t>(d)].end(), 0LL));
    chi += (d % 2 == 0) ? rank : -rank;
  }
  return std::llabs(chi);
}

bool operator==(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  return a.factors_ == b.factors_;
}

namespace {

// Z x Z = Z, Z x Z/n = Z/n, Z/m x Z/n = Z/gcd
long long tensor_factor(long long a, long long b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return std::gcd(a, b);
}

// Tor(Z, .) = 0, Tor(Z/m, Z/n) = Z/gcd
long long tor_factor(long long a, long long b) {
  if (a == 0 || b == 0) return 1;
  return std::gcd(a, b);
}

template <typename F>
GradedAbelianGroup convolve(const GradedAbelianGroup& h, const GradedAbelianGroup& hp,
                            F&& combine) {
  GradedAbelianGroup out;
  if (!h.degrees_exact() || !hp.degrees_exact())
    out = GradedAbelianGroup::even_concentrated_free(0);  // mark coarse
  for (int d = 0; d < 8; ++d)
    for (long long a : h.factors(d))
      for (int e = 0; e < 8; ++e)
        for (long long b : hp.factors(e)) {
          long long o = combine(a, b);
          if (o != 1) out.add_factor(d + e, o);
        }
  return out;
}

}  // namespace

GradedAbelianGroup tensor(const GradedAbelianGroup& h, const GradedAbelianGroup& hp) {
  return convolve(h, hp, tensor_factor);
}

GradedAbelianGroup tor(const GradedAbelianGroup& h, const GradedAbelianGroup& hp) {
  return convolve(h, hp, tor_factor);
}

GradedAbelianGroup kunneth(const GradedAbelianGroup& h, const GradedAbelianGroup& hp) {
  return tensor(h, hp).direct_sum(tor(h, hp).shifted(-1));
}

}  // namespace hsikit
