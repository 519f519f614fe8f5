#include "linleg/classes.hpp"

#include <cstdlib>

#include "linleg/error.hpp"

namespace linleg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_odd(std::int64_t x) { return x % 2 != 0; }

// Horizontal knot types are carried to (1,0,0) by a block SL(3,Z) matrix;
// the classification there is the vertical one.
bool vertical_kind(const Direction& d) {
  if (!d.is_horizontal()) return false;
  const auto a = normalize_horizontal_knot_type(d);
  if (a.apply(d.vec()) != Vec3{1, 0, 0}) throw DomainError("normalization failed");
  return true;
}

}  // namespace

std::int64_t tb_of(const LegendrianClass& c) {
  return std::visit(overloaded{[](const NonVertical& v) { return v.tb; },
                               [](const VerticalMax&) { return std::int64_t{0}; },
                               [](const VerticalPure& v) { return -v.k; },
                               [](const VerticalMixed& v) { return v.tb; }},
                    c);
}

std::int64_t rotation_of(const LegendrianClass& c) {
  return std::visit(overloaded{[](const NonVertical& v) { return v.r; },
                               [](const VerticalMax&) { return std::int64_t{0}; },
                               [](const VerticalPure& v) { return v.sign == Sign::Plus ? v.k : -v.k; },
                               [](const VerticalMixed& v) { return v.r; }},
                    c);
}

void validate(const ContactStructure& cs, const LegendrianClass& c) {
  const HorizontalDividingStructure hs(cs);
  std::visit(
      overloaded{
          [](const NonVertical& v) {
            if (v.T > 0 || v.tb > v.T || std::abs(v.r) > v.T - v.tb || is_odd(v.T - v.tb - v.r))
              throw DomainError("invalid non-vertical class");
          },
          [&](const VerticalMax& v) {
            if (v.component < 0 || v.component >= hs.size())
              throw DomainError("dividing curve index out of range");
          },
          [&](const VerticalPure& v) {
            if (v.k < 1) throw DomainError("pure class needs k >= 1");
            if (v.region < 0 || v.region >= hs.size())
              throw DomainError("region index out of range");
            if (hs.region_sign(v.region) != opposite(v.sign))
              throw DomainError("pure class region must have the opposite sign");
          },
          [](const VerticalMixed& v) {
            if (v.tb >= 0 || std::abs(v.r) >= std::abs(v.tb) || is_odd(v.tb - v.r))
              throw DomainError("invalid mixed class");
          }},
      c);
}

void validate(const Presentation& pres) {
  if (pres.p < 0 || pres.m < 0) throw DomainError("stabilization counts must be non-negative");
  if (vertical_kind(pres.direction)) {
    if (!pres.base) throw DomainError("vertical presentation needs a base dividing curve");
    if (*pres.base < 0 || *pres.base >= pres.cs.components())
      throw DomainError("dividing curve index out of range");
  } else if (pres.base) {
    throw DomainError("non-vertical presentation takes no base");
  }
}

LegendrianClass canonicalize(const Presentation& pres) {
  validate(pres);
  if (!vertical_kind(pres.direction)) {
    const std::int64_t T = tb_max(pres.cs, pres.direction);
    return NonVertical{T, T - pres.p - pres.m, pres.p - pres.m};
  }
  const HorizontalDividingStructure hs(pres.cs);
  const std::int64_t base = *pres.base;
  if (pres.p == 0 && pres.m == 0) return VerticalMax{base};
  if (pres.m == 0) return VerticalPure{Sign::Plus, hs.region_of_sign(base, Sign::Minus), pres.p};
  if (pres.p == 0) return VerticalPure{Sign::Minus, hs.region_of_sign(base, Sign::Plus), pres.m};
  return VerticalMixed{-pres.p - pres.m, pres.p - pres.m};
}

bool is_isotopic(const Presentation& a, const Presentation& b) {
  if (!(a.cs == b.cs) || !(a.direction == b.direction))
    throw DomainError("not smoothly isotopic");
  return canonicalize(a) == canonicalize(b);
}

bool is_realizable(const ContactStructure& cs, const Direction& d, std::int64_t tb,
                   std::int64_t r) {
  const std::int64_t T = tb_max(cs, d);
  return tb <= T && std::abs(r) <= T - tb && !is_odd(T - tb - r);
}

std::int64_t count_classes(const ContactStructure& cs, const Direction& d, std::int64_t tb,
                           std::int64_t r) {
  if (!is_realizable(cs, d, tb, r)) return 0;
  if (!vertical_kind(d)) return 1;
  if (tb == 0) return cs.components();
  if (std::abs(r) == std::abs(tb)) return cs.n();
  return 1;
}

std::vector<RangeRow> enumerate_range(const ContactStructure& cs, const Direction& d,
                                      std::int64_t tb_min) {
  const std::int64_t T = tb_max(cs, d);
  if (tb_min > T) throw DomainError("tb_min exceeds the maximal Thurston-Bennequin invariant");
  std::vector<RangeRow> rows;
  for (std::int64_t tb = T; tb >= tb_min; --tb) {
    const std::int64_t span = T - tb;
    for (std::int64_t r = -span; r <= span; r += 2) {
      if (const auto count = count_classes(cs, d, tb, r); count > 0) rows.push_back({tb, r, count});
    }
  }
  return rows;
}

}  // namespace linleg
