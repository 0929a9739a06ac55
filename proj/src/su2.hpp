#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hsikit {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Unit quaternion representing an element of SU(2).
///
/// The correspondence is q = w + xi + yj + zk  <->  the 2x2 unitary matrix
/// with trace 2w.  Products renormalize so the unit-norm invariant holds to
/// 1e-12 regardless of chain length.
class SU2Element {
public:
  SU2Element() : w_(1), x_(0), y_(0), z_(0) {}
  SU2Element(double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {
    normalize();
  }

  static SU2Element identity() { return SU2Element(); }
  static SU2Element minus_identity() { return SU2Element(-1, 0, 0, 0); }

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  /// trace of the 2x2 matrix, in [-2, 2].
  double trace() const { return 2.0 * w_; }

  SU2Element inverse() const {
    SU2Element r;
    r.w_ = w_;
    r.x_ = -x_;
    r.y_ = -y_;
    r.z_ = -z_;
    return r;
  }

  SU2Element operator-() const {
    SU2Element r;
    r.w_ = -w_;
    r.x_ = -x_;
    r.y_ = -y_;
    r.z_ = -z_;
    return r;
  }

  friend SU2Element operator*(const SU2Element& a, const SU2Element& b) {
    SU2Element r;
    r.w_ = a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_;
    r.x_ = a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_;
    r.y_ = a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_;
    r.z_ = a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_;
    r.normalize();
    return r;
  }

  SU2Element conjugated_by(const SU2Element& g) const {
    return g.inverse() * (*this) * g;
  }

  SU2Element pow(long long n) const;

  double distance(const SU2Element& other) const {
    double dw = w_ - other.w_, dx = x_ - other.x_, dy = y_ - other.y_,
           dz = z_ - other.z_;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
  }

private:
  void normalize() {
    double n = std::sqrt(w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_);
    if (n <= 0) throw DomainError("zero quaternion is not in SU(2)");
    w_ /= n;
    x_ /= n;
    y_ /= n;
    z_ /= n;
  }

  double w_, x_, y_, z_;
};

/// Element of the Lie algebra su(2), stored as the real 3-vector a with
/// associated matrix i(a . sigma).  The norm carries the inner product
/// <u,v> = -Tr(uv), so norm(v) = sqrt(2)*|a| and exp hits -I exactly at
/// norm pi*sqrt(2).
class Su2Vector {
public:
  Su2Vector() : a_{0, 0, 0} {}
  Su2Vector(double a1, double a2, double a3) : a_{a1, a2, a3} {}

  double operator[](int i) const { return a_[static_cast<size_t>(i)]; }

  double euclid() const {
    return std::sqrt(a_[0] * a_[0] + a_[1] * a_[1] + a_[2] * a_[2]);
  }

  /// norm in the -Tr(ab) inner product: sqrt(2) * |a|.
  double norm() const { return std::sqrt(2.0) * euclid(); }

  Su2Vector scaled(double s) const { return {s * a_[0], s * a_[1], s * a_[2]}; }

private:
  std::array<double, 3> a_;
};

SU2Element exp_su2(const Su2Vector& v);

/// Principal branch; rejects g = -I (trace <= -2 + 1e-8).
Su2Vector log_su2(const SU2Element& g);

/// Conjugacy invariant: trace.  Two elements of SU(2) are conjugate iff
/// their signatures agree.
inline double orbit_signature(const SU2Element& g) { return g.trace(); }

}  // namespace hsikit
