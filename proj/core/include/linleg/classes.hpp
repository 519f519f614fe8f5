#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "linleg/contact.hpp"
#include "linleg/lattice.hpp"

namespace linleg {

/// A curve written as S+^p S-^m applied to a tb-maximizing base curve. The
/// base is the index of a dividing curve of the horizontal torus for
/// vertical knot types and absent otherwise.
struct Presentation {
  ContactStructure cs;
  Direction direction;
  std::optional<std::int64_t> base;
  std::int64_t p = 0;
  std::int64_t m = 0;
};

/// Knot types with c3 != 0: classes are determined by (tb, r).
struct NonVertical {
  std::int64_t T = 0;  // tb_max
  std::int64_t tb = 0;
  std::int64_t r = 0;
  friend bool operator==(const NonVertical&, const NonVertical&) = default;
};

/// tb = 0 vertical curve sitting on dividing curve gamma_component.
struct VerticalMax {
  std::int64_t component = 0;
  friend bool operator==(const VerticalMax&, const VerticalMax&) = default;
};

/// k stabilizations of one sign. `region` is the region of the opposite
/// sign shared by all base curves that merge into this class.
struct VerticalPure {
  Sign sign = Sign::Plus;
  std::int64_t region = 0;
  std::int64_t k = 1;
  friend bool operator==(const VerticalPure&, const VerticalPure&) = default;
};

/// Stabilizations of both signs: |r| < |tb|, base forgotten.
struct VerticalMixed {
  std::int64_t tb = -2;
  std::int64_t r = 0;
  friend bool operator==(const VerticalMixed&, const VerticalMixed&) = default;
};

using LegendrianClass = std::variant<NonVertical, VerticalMax, VerticalPure, VerticalMixed>;

std::int64_t tb_of(const LegendrianClass& c);
std::int64_t rotation_of(const LegendrianClass& c);

/// Throws DomainError when `c` violates its variant invariants for `cs`.
void validate(const ContactStructure& cs, const LegendrianClass& c);

/// Throws DomainError for a malformed presentation.
void validate(const Presentation& pres);

LegendrianClass canonicalize(const Presentation& pres);

/// Throws DomainError("not smoothly isotopic") when the presentations live
/// in different knot types or contact structures.
bool is_isotopic(const Presentation& a, const Presentation& b);

bool is_realizable(const ContactStructure& cs, const Direction& d, std::int64_t tb,
                   std::int64_t r);

/// Number of Legendrian isotopy classes with invariants (tb, r).
std::int64_t count_classes(const ContactStructure& cs, const Direction& d, std::int64_t tb,
                           std::int64_t r);

struct RangeRow {
  std::int64_t tb = 0;
  std::int64_t r = 0;
  std::int64_t count = 0;
  friend bool operator==(const RangeRow&, const RangeRow&) = default;
};

/// All realizable (tb, r, count) with tb in [tb_min, tb_max], sorted by
/// (-tb, r). Throws DomainError when tb_min > tb_max.
std::vector<RangeRow> enumerate_range(const ContactStructure& cs, const Direction& d,
                                      std::int64_t tb_min);

}  // namespace linleg
