#ifndef BLSCES_CURVE_H_
#define BLSCES_CURVE_H_

#include <optional>

#include "blsces/error.h"
#include "blsces/u256.h"

namespace blsces {

// Point on y^2 = x^3 + b in Jacobian coordinates (x = X/Z^2, y = Y/Z^3).
// Curve supplies `using Field` and `static Field b()`.
template <class Curve>
class JacobianPoint {
 public:
  using F = typename Curve::Field;

  struct Affine {
    F x, y;
    bool infinity = true;
  };

  JacobianPoint() : x_(F::one()), y_(F::one()), z_(F::zero()) {}

  static JacobianPoint identity() { return JacobianPoint(); }

  // Rejects coordinates that do not satisfy the curve equation.
  static JacobianPoint from_affine(const F& x, const F& y) {
    JacobianPoint p = from_affine_unchecked(x, y);
    if (!p.on_curve()) throw Error(ErrorCode::kOffCurve, "point not on curve");
    return p;
  }
  static JacobianPoint from_affine_unchecked(const F& x, const F& y) {
    JacobianPoint p;
    p.x_ = x;
    p.y_ = y;
    p.z_ = F::one();
    return p;
  }

  bool is_identity() const { return z_.is_zero(); }

  bool on_curve() const {
    if (is_identity()) return true;
    F z2 = z_.square();
    F z6 = z2.square() * z2;
    return y_.square() == x_.square() * x_ + Curve::b() * z6;
  }

  Affine to_affine() const {
    if (is_identity()) return Affine{F::zero(), F::zero(), true};
    F zi = z_.inverse();
    F zi2 = zi.square();
    return Affine{x_ * zi2, y_ * zi2 * zi, false};
  }

  JacobianPoint operator-() const {
    JacobianPoint r = *this;
    r.y_ = -y_;
    return r;
  }

  JacobianPoint dbl() const {
    if (is_identity() || y_.is_zero()) return identity();
    F a = x_.square();
    F b = y_.square();
    F c = b.square();
    F d = ((x_ + b).square() - a - c).dbl();
    F e = a.dbl() + a;
    F f = e.square();
    JacobianPoint r;
    r.x_ = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    r.y_ = e * (d - r.x_) - c8;
    r.z_ = (y_ * z_).dbl();
    return r;
  }

  JacobianPoint operator+(const JacobianPoint& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    F z1z1 = z_.square();
    F z2z2 = o.z_.square();
    F u1 = x_ * z2z2;
    F u2 = o.x_ * z1z1;
    F s1 = y_ * o.z_ * z2z2;
    F s2 = o.y_ * z_ * z1z1;
    F h = u2 - u1;
    F rr = (s2 - s1).dbl();
    if (h.is_zero()) {
      if (rr.is_zero()) return dbl();
      return identity();
    }
    F i = h.dbl().square();
    F j = h * i;
    F v = u1 * i;
    JacobianPoint r;
    r.x_ = rr.square() - j - v.dbl();
    r.y_ = rr * (v - r.x_) - (s1 * j).dbl();
    r.z_ = ((z_ + o.z_).square() - z1z1 - z2z2) * h;
    return r;
  }
  JacobianPoint operator-(const JacobianPoint& o) const { return *this + (-o); }
  JacobianPoint& operator+=(const JacobianPoint& o) { return *this = *this + o; }

  // Variable-time double-and-add.
  JacobianPoint mul(const U256& k) const {
    JacobianPoint acc;
    for (size_t i = k.bit_length(); i-- > 0;) {
      acc = acc.dbl();
      if (k.bit(i)) acc += *this;
    }
    return acc;
  }

  friend bool operator==(const JacobianPoint& a, const JacobianPoint& b) {
    if (a.is_identity() || b.is_identity()) {
      return a.is_identity() && b.is_identity();
    }
    F z1z1 = a.z_.square();
    F z2z2 = b.z_.square();
    if (!(a.x_ * z2z2 == b.x_ * z1z1)) return false;
    return a.y_ * z2z2 * b.z_ == b.y_ * z1z1 * a.z_;
  }

 private:
  F x_, y_, z_;
};

}  // namespace blsces

#endif  // BLSCES_CURVE_H_
