#include "linleg/stable.hpp"

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

std::int64_t step(Sign s) { return s == Sign::Plus ? 1 : -1; }

bool valid_mixed(std::int64_t tb, std::int64_t r) {
  return tb < 0 && std::abs(r) < std::abs(tb) && (tb - r) % 2 == 0;
}

Presentation with_extra(Presentation pres, std::int64_t p, std::int64_t m) {
  pres.p += p;
  pres.m += m;
  return pres;
}

}  // namespace

LegendrianClass stabilize(const ContactStructure& cs, const LegendrianClass& c, Sign s) {
  validate(cs, c);
  const HorizontalDividingStructure hs(cs);
  return std::visit(
      overloaded{
          [&](const NonVertical& v) -> LegendrianClass {
            return NonVertical{v.T, v.tb - 1, v.r + step(s)};
          },
          [&](const VerticalMax& v) -> LegendrianClass {
            return VerticalPure{s, hs.region_of_sign(v.component, opposite(s)), 1};
          },
          [&](const VerticalPure& v) -> LegendrianClass {
            if (v.sign == s) return VerticalPure{v.sign, v.region, v.k + 1};
            return VerticalMixed{-v.k - 1, step(v.sign) * (v.k - 1)};
          },
          [&](const VerticalMixed& v) -> LegendrianClass {
            // |r| < |tb| implies |r +- 1| < |tb - 1|.
            return VerticalMixed{v.tb - 1, v.r + step(s)};
          }},
      c);
}

std::vector<Parent> destabilize_parents(const ContactStructure& cs, const LegendrianClass& c) {
  validate(cs, c);
  const HorizontalDividingStructure hs(cs);
  std::vector<Parent> out;
  std::visit(
      overloaded{
          [&](const NonVertical& v) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
              const NonVertical parent{v.T, v.tb + 1, v.r - step(s)};
              if (parent.tb <= parent.T && std::abs(parent.r) <= parent.T - parent.tb)
                out.push_back({parent, s});
            }
          },
          [](const VerticalMax&) {},
          [&](const VerticalPure& v) {
            if (v.k > 1) {
              out.push_back({VerticalPure{v.sign, v.region, v.k - 1}, v.sign});
              return;
            }
            const auto [lo, hi] = hs.components_bounding(v.region);
            out.push_back({VerticalMax{lo}, v.sign});
            if (hi != lo) out.push_back({VerticalMax{hi}, v.sign});
          },
          [&](const VerticalMixed& v) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
              const std::int64_t tb = v.tb + 1, r = v.r - step(s);
              if (valid_mixed(tb, r)) out.push_back({VerticalMixed{tb, r}, s});
            }
            // Pure{sign, P, k} stabilized with the other sign lands at
            // (-k-1, sign (k-1)): one parent per region of the right sign.
            const std::int64_t k = -v.tb - 1;
            if (k < 1) return;
            for (Sign pure : {Sign::Plus, Sign::Minus}) {
              if (v.r != step(pure) * (k - 1)) continue;
              for (std::int64_t region = 0; region < hs.size(); ++region) {
                if (hs.region_sign(region) == opposite(pure))
                  out.push_back({VerticalPure{pure, region, k}, opposite(pure)});
              }
            }
          }},
      c);
  return out;
}

bool becomes_isotopic_after(const StableQuery& q) {
  if (q.extra_p < 0 || q.extra_m < 0)
    throw DomainError("stabilization counts must be non-negative");
  return is_isotopic(with_extra(q.first, q.extra_p, q.extra_m),
                     with_extra(q.second, q.extra_p, q.extra_m));
}

std::optional<Extra> minimal_mixed_merge(const Presentation& a, const Presentation& b,
                                         MergeSearch mode) {
  if (!(a.cs == b.cs) || !(a.direction == b.direction)) throw DomainError("not smoothly isotopic");
  const LegendrianClass ca = canonicalize(a), cb = canonicalize(b);
  if (tb_of(ca) != tb_of(cb) || rotation_of(ca) != rotation_of(cb)) return std::nullopt;
  // One stabilization of each sign always suffices, and a merge that fails
  // with one same-sign stabilization fails for every power of it.
  for (std::int64_t total = 0; total <= 2; ++total) {
    for (std::int64_t p = 0; p <= total; ++p) {
      const std::int64_t m = total - p;
      if (mode == MergeSearch::SameSignOnly && p != 0 && m != 0) continue;
      if (becomes_isotopic_after({a, b, p, m})) return Extra{p, m};
    }
  }
  return std::nullopt;
}

NegativeStableClassKey negative_stable_key(const ContactStructure& cs, const LegendrianClass& c) {
  validate(cs, c);
  const HorizontalDividingStructure hs(cs);
  const std::int64_t sl = tb_of(c) - rotation_of(c);
  // At sl = 0 the orbits are VerticalMax{gamma} -> VerticalPure{-, P, k}
  // with P the positive region at gamma; positive regions are the even ones.
  const std::int64_t index = std::visit(
      overloaded{[](const NonVertical&) -> std::int64_t { return 0; },
                 [&](const VerticalMax& v) { return hs.region_of_sign(v.component, Sign::Plus) / 2; },
                 [](const VerticalPure& v) -> std::int64_t {
                   return v.sign == Sign::Minus ? v.region / 2 : 0;
                 },
                 [](const VerticalMixed&) -> std::int64_t { return 0; }},
      c);
  return {sl, index};
}

std::int64_t negative_stable_class_count(const ContactStructure& cs, const Direction& d,
                                         std::int64_t sl) {
  const std::int64_t T = tb_max(cs, d);
  if (!d.is_horizontal()) return (sl <= T && (T - sl) % 2 == 0) ? 1 : 0;
  if (sl == 0) return cs.n();
  if (sl < 0 && sl % 2 == 0) return 1;
  return 0;
}

bool is_transversally_simple(const ContactStructure& cs, const Direction& d) {
  // Only the sl = 0 level of a horizontal knot type can carry several orbits.
  return negative_stable_class_count(cs, d, tb_max(cs, d)) < 2;
}

}  // namespace linleg
