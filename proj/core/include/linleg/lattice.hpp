#pragma once

#include <array>
#include <cstdint>

namespace linleg {

using Vec3 = std::array<std::int64_t, 3>;
using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// Non-negative gcd of |a| and |b|; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// True iff v != 0 and gcd(|v1|, |v2|, |v3|) = 1.
bool is_primitive(const Vec3& v);

/// Primitive integer vector in H_1(T^3; Z) naming a linear knot type.
class Direction {
 public:
  /// Throws DomainError("not primitive") unless `v` is primitive.
  static Direction from(const Vec3& v);
  static Direction from(std::int64_t c1, std::int64_t c2, std::int64_t c3) {
    return from(Vec3{c1, c2, c3});
  }

  std::int64_t c1() const { return v_[0]; }
  std::int64_t c2() const { return v_[1]; }
  std::int64_t c3() const { return v_[2]; }
  const Vec3& vec() const { return v_; }

  /// Horizontal knot types (c3 = 0) reduce to the vertical type (1,0,0).
  bool is_horizontal() const { return v_[2] == 0; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  explicit Direction(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// 3x3 integer matrix of determinant exactly 1.
class UnimodularMatrix3 {
 public:
  using Entries = std::array<std::array<std::int64_t, 3>, 3>;

  /// Throws DomainError unless det(entries) == 1.
  static UnimodularMatrix3 from(const Entries& entries);
  static UnimodularMatrix3 identity();

  const Entries& entries() const { return a_; }
  std::int64_t operator()(int row, int col) const { return a_[row][col]; }
  Vec3 apply(const Vec3& v) const;

  friend bool operator==(const UnimodularMatrix3&, const UnimodularMatrix3&) = default;

 private:
  explicit UnimodularMatrix3(const Entries& a) : a_(a) {}
  Entries a_;
};

std::int64_t determinant(const Matrix2& m);
std::int64_t determinant(const UnimodularMatrix3::Entries& a);

/// Returns M with det M = 1 and M (a, b)^T = (1, 0)^T.
///
/// The second row is forced to be (-b, a). The first row is a Bezout pair
/// (x, y) determined up to adding multiples of (-b, a); the representative
/// minimizing (|x|, |y|) lexicographically is returned, ties toward x >= 0.
/// Throws DomainError("not primitive") when gcd(|a|, |b|) != 1.
Matrix2 extend_to_sl2(std::int64_t a, std::int64_t b);

/// Block matrix (M (+) 1) sending a horizontal direction (c1, c2, 0) to
/// (1, 0, 0). Throws DomainError("not a horizontal knot type") if c3 != 0.
UnimodularMatrix3 normalize_horizontal_knot_type(const Direction& d);

enum class KnotKind { Vertical, NonVertical };

struct KnotTypeKind {
  KnotKind kind;
  std::int64_t abs_c3;  // 0 for Vertical

  bool vertical() const { return kind == KnotKind::Vertical; }
  friend bool operator==(const KnotTypeKind&, const KnotTypeKind&) = default;
};

KnotTypeKind knot_type_kind(const Direction& d);

}  // namespace linleg
