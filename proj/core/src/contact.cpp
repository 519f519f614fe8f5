#include "linleg/contact.hpp"

#include <cstdlib>

#include "linleg/error.hpp"

namespace linleg {

ContactStructure ContactStructure::make(std::int64_t n) {
  if (n < 1) throw DomainError("contact structure index n must be >= 1");
  return ContactStructure(n);
}

std::int64_t tb_max(const ContactStructure& cs, const Direction& d) {
  return -cs.n() * std::abs(d.c3());
}

Slope Slope::make(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    if (num == 0) throw DomainError("0/0 is not an extended rational");
    return Slope{1, 0};
  }
  const std::int64_t g = gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Slope{num, den};
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  return std::to_string(num) + "/" + std::to_string(den);
}

bool extends_to_basis(const Vec3& b, const Vec3& c) {
  const std::int64_t m12 = b[0] * c[1] - b[1] * c[0];
  const std::int64_t m13 = b[0] * c[2] - b[2] * c[0];
  const std::int64_t m23 = b[1] * c[2] - b[2] * c[1];
  return gcd(gcd(m12, m13), m23) == 1;
}

TorusSpan TorusSpan::make(const Vec3& b, const Vec3& c) {
  if (b[2] == 0 && c[2] == 0)
    throw DomainError("horizontal torus: profile formula inapplicable");
  if (!extends_to_basis(b, c)) throw DomainError("span does not extend to a basis of Z^3");
  return TorusSpan(b, c);
}

DividingSetProfile dividing_profile(const ContactStructure& cs, const TorusSpan& span) {
  const std::int64_t b3 = span.b()[2];
  const std::int64_t c3 = span.c()[2];
  return DividingSetProfile{Slope::make(-b3, c3), 2 * cs.n() * gcd(b3, c3)};
}

void HorizontalDividingStructure::check(std::int64_t index) const {
  if (index < 0 || index >= size()) throw DomainError("dividing curve index out of range");
}

std::int64_t HorizontalDividingStructure::wrap(std::int64_t index) const {
  const std::int64_t m = size();
  return ((index % m) + m) % m;
}

Sign HorizontalDividingStructure::region_sign(std::int64_t region) const {
  check(region);
  return region % 2 == 0 ? Sign::Plus : Sign::Minus;
}

std::pair<std::int64_t, std::int64_t> HorizontalDividingStructure::regions_bounded_by(
    std::int64_t component) const {
  check(component);
  return {wrap(component - 1), component};
}

std::pair<std::int64_t, std::int64_t> HorizontalDividingStructure::components_bounding(
    std::int64_t region) const {
  check(region);
  return {region, wrap(region + 1)};
}

std::int64_t HorizontalDividingStructure::region_of_sign(std::int64_t component, Sign s) const {
  const auto [left, right] = regions_bounded_by(component);
  return region_sign(left) == s ? left : right;
}

std::optional<std::int64_t> HorizontalDividingStructure::shared_region(std::int64_t i,
                                                                       std::int64_t j,
                                                                       Sign s) const {
  check(i);
  check(j);
  if (i == j) return std::nullopt;
  const std::int64_t ri = region_of_sign(i, s);
  if (ri == region_of_sign(j, s)) return ri;
  return std::nullopt;
}

HorizontalDividingStructure horizontal_structure(const ContactStructure& cs) {
  return HorizontalDividingStructure(cs);
}

}  // namespace linleg
