#ifndef BLSCES_TOWER_H_
#define BLSCES_TOWER_H_

#include "blsces/field.h"

// Extension tower for BN-254:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = 9 + u
//   Fp12 = Fp6[w] / (w^2 - v)
// so that w^6 = xi.
namespace blsces {

struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fp2&, const Fp2&) = default;

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }
  Fp2 operator*(const Fp2& o) const {
    Fp t0 = c0 * o.c0;
    Fp t1 = c1 * o.c1;
    return {t0 - t1, (c0 + c1) * (o.c0 + o.c1) - t0 - t1};
  }
  Fp2 operator*(const Fp& s) const { return {c0 * s, c1 * s}; }
  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

  Fp2 square() const {
    Fp a = c0 * c1;
    return {(c0 + c1) * (c0 - c1), a + a};
  }
  Fp2 dbl() const { return *this + *this; }
  Fp2 conjugate() const { return {c0, -c1}; }
  Fp2 inverse() const {
    Fp t = (c0.square() + c1.square()).inverse();
    return {c0 * t, -(c1 * t)};
  }
  // Multiplication by xi = 9 + u.
  Fp2 mul_by_xi() const {
    Fp a9 = c0.dbl().dbl().dbl() + c0;
    Fp b9 = c1.dbl().dbl().dbl() + c1;
    return {a9 - c1, c0 + b9};
  }
  Fp2 pow(const U256& e) const {
    Fp2 acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
};

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Fp6&, const Fp6&) = default;

  Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }
  Fp6 operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0, t1 = c1 * o.c1, t2 = c2 * o.c2;
    return {((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_by_xi() + t0,
            (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_by_xi(),
            (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1};
  }
  Fp6 operator*(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }
  Fp6& operator*=(const Fp6& o) { return *this = *this * o; }

  Fp6 square() const { return *this * *this; }
  // Multiplication by v.
  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }
  Fp6 inverse() const {
    Fp2 a = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 b = c2.square().mul_by_xi() - c0 * c1;
    Fp2 c = c1.square() - c0 * c2;
    Fp2 f = c0 * a + (c2 * b + c1 * c).mul_by_xi();
    Fp2 fi = f.inverse();
    return {a * fi, b * fi, c * fi};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 zero() { return {}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool is_one() const { return *this == one(); }
  friend bool operator==(const Fp12&, const Fp12&) = default;

  Fp12 operator*(const Fp12& o) const {
    Fp6 t0 = c0 * o.c0, t1 = c1 * o.c1;
    return {t0 + t1.mul_by_v(), (c0 + c1) * (o.c0 + o.c1) - t0 - t1};
  }
  Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

  Fp12 square() const {
    Fp6 t = c0 * c1;
    Fp6 a = (c0 + c1) * (c0 + c1.mul_by_v()) - t - t.mul_by_v();
    return {a, t + t};
  }
  // Raising to p^6 negates the w coefficient.
  Fp12 conjugate() const { return {c0, -c1}; }
  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }
  Fp12 pow(const U256& e) const {
    Fp12 acc = one();
    for (size_t i = e.bit_length(); i-- > 0;) {
      acc = acc.square();
      if (e.bit(i)) acc *= *this;
    }
    return acc;
  }
  Fp12 frobenius() const;  // x -> x^p

  // Coefficients on the basis 1, w, ..., w^5.
  std::array<Fp2, 6> coefficients() const {
    return {c0.c0, c1.c0, c0.c1, c1.c1, c0.c2, c1.c2};
  }
  static Fp12 from_coefficients(const std::array<Fp2, 6>& a) {
    return {{a[0], a[2], a[4]}, {a[1], a[3], a[5]}};
  }
};

}  // namespace blsces

#endif  // BLSCES_TOWER_H_
