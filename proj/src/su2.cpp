#include "su2.hpp"

namespace hsikit {

SU2Element SU2Element::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  SU2Element acc = identity();
  SU2Element base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

SU2Element exp_su2(const Su2Vector& v) {
  double t = v.euclid();
  double w = std::cos(t);
  double s;
  if (t < 1e-8) {
    // sin(t)/t Taylor head, stable at 0
    s = 1.0 - t * t / 6.0;
  } else {
    s = std::sin(t) / t;
  }
  return SU2Element(w, s * v[0], s * v[1], s * v[2]);
}

Su2Vector log_su2(const SU2Element& g) {
  if (g.trace() <= -2.0 + 1e-8)
    throw DomainError("log_su2: -I is outside the principal branch");
  double vn = std::sqrt(g.x() * g.x() + g.y() * g.y() + g.z() * g.z());
  double t = std::atan2(vn, g.w());  // in [0, pi)
  double s;
  if (vn < 1e-8) {
    s = 1.0 + t * t / 6.0;  // t/sin(t) near 0, with t ~ vn
  } else {
    s = t / vn;
  }
  return {s * g.x(), s * g.y(), s * g.z()};
}

}  // namespace hsikit
