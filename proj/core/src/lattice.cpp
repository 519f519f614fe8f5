#include "linleg/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <tuple>

#include "linleg/error.hpp"

namespace linleg {

namespace {

// Returns (g, x, y) with a*x + b*y = g = gcd(|a|, |b|) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a,
                                                                  std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

bool better_row(std::int64_t x, std::int64_t y, std::int64_t bx, std::int64_t by) {
  const auto ax = std::abs(x), abx = std::abs(bx);
  if (ax != abx) return ax < abx;
  const auto ay = std::abs(y), aby = std::abs(by);
  if (ay != aby) return ay < aby;
  return x >= 0 && bx < 0;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool is_primitive(const Vec3& v) { return gcd(gcd(v[0], v[1]), v[2]) == 1; }

Direction Direction::from(const Vec3& v) {
  if (!is_primitive(v)) throw DomainError("not primitive");
  return Direction(v);
}

std::int64_t determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

std::int64_t determinant(const UnimodularMatrix3::Entries& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

UnimodularMatrix3 UnimodularMatrix3::from(const Entries& entries) {
  if (determinant(entries) != 1) throw DomainError("determinant is not 1");
  return UnimodularMatrix3(entries);
}

UnimodularMatrix3 UnimodularMatrix3::identity() {
  return UnimodularMatrix3(Entries{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

Vec3 UnimodularMatrix3::apply(const Vec3& v) const {
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    out[i] = a_[i][0] * v[0] + a_[i][1] * v[1] + a_[i][2] * v[2];
  return out;
}

Matrix2 extend_to_sl2(std::int64_t a, std::int64_t b) {
  auto [g, x, y] = extended_gcd(a, b);
  if (g != 1) throw DomainError("not primitive");

  // All Bezout rows are (x, y) + k(-b, a).
  if (b != 0) {
    // |x - k b| is minimized near k = x / b.
    const std::int64_t k0 = x / b;
    std::int64_t bx = x, by = y;
    bool have = false;
    for (std::int64_t k = k0 - 1; k <= k0 + 1; ++k) {
      const std::int64_t cx = x - k * b, cy = y + k * a;
      if (!have || better_row(cx, cy, bx, by)) {
        bx = cx;
        by = cy;
        have = true;
      }
    }
    x = bx;
    y = by;
  } else {
    // a = +-1: x = a is forced, y + k a can be made 0.
    y = 0;
  }
  return Matrix2{{{x, y}, {-b, a}}};
}

UnimodularMatrix3 normalize_horizontal_knot_type(const Direction& d) {
  if (!d.is_horizontal()) throw DomainError("not a horizontal knot type");
  const Matrix2 m = extend_to_sl2(d.c1(), d.c2());
  return UnimodularMatrix3::from(
      {{{m[0][0], m[0][1], 0}, {m[1][0], m[1][1], 0}, {0, 0, 1}}});
}

KnotTypeKind knot_type_kind(const Direction& d) {
  if (d.is_horizontal()) return {KnotKind::Vertical, 0};
  return {KnotKind::NonVertical, std::abs(d.c3())};
}

}  // namespace linleg
