#pragma once

// Value-level quaternion algebra with the two operator orderings kept
// distinct: acting to the right (the ordinary Hamilton product ab) and acting
// to the left (cross terms negated; equals ba for value operands). The
// symmetric and antisymmetric combinations are written in closed form so the
// parts that cancel between the two orderings are never formed at all.

#include <cmath>

namespace qmx {

enum class ProductSide { RightAction, LeftAction };

struct Quaternion {
  double w = 0.0;  // scalar (time) part
  double x = 0.0;  // i part
  double y = 0.0;  // j part
  double z = 0.0;  // k part

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

// a acting to the right on b: the standard Hamilton product ab.
constexpr Quaternion hamilton_right(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
          a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x};
}

// a acting to the left on b: cross terms negated relative to the right
// action. For value quaternions this equals hamilton_right(b, a).
constexpr Quaternion hamilton_left(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w - a.y * b.z + a.z * b.y,
          a.w * b.y + a.y * b.w - a.z * b.x + a.x * b.z,
          a.w * b.z + a.z * b.w - a.x * b.y + a.y * b.x};
}

// (1/2)(a->b + b<-a). The cross terms cancel identically, leaving the scalar
// product part and the aligned vector parts.
constexpr Quaternion sym_product(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w,
          a.w * b.y + a.y * b.w,
          a.w * b.z + a.z * b.w};
}

// (1/2)(a->b - b<-a). The scalar and aligned parts cancel identically; what
// remains is the vector cross product, so the result is always pure-vector.
constexpr Quaternion antisym_product(const Quaternion& a, const Quaternion& b) {
  return {0.0,
          a.y * b.z - a.z * b.y,
          a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm(const Quaternion& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

// Plain 3-vector: the vector part of a quaternion on its own, used for
// point-valued physics quantities (currents, gradients, curls).
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

constexpr Quaternion as_quaternion(double scalar, const Vec3& v) {
  return {scalar, v.x, v.y, v.z};
}

constexpr Vec3 vector_part(const Quaternion& q) { return {q.x, q.y, q.z}; }

}  // namespace qmx
