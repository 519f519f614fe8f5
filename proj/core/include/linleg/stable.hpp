#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linleg/classes.hpp"

namespace linleg {

LegendrianClass stabilize(const ContactStructure& cs, const LegendrianClass& c, Sign s);

struct Parent {
  LegendrianClass cls;
  Sign sign;
  friend bool operator==(const Parent&, const Parent&) = default;
};

/// Every (c', s) with stabilize(c', s) == c, in a deterministic order.
std::vector<Parent> destabilize_parents(const ContactStructure& cs, const LegendrianClass& c);

/// Apply the same extra stabilizations to both curves and compare.
struct StableQuery {
  Presentation first;
  Presentation second;
  std::int64_t extra_p = 0;
  std::int64_t extra_m = 0;
};

bool becomes_isotopic_after(const StableQuery& q);

enum class MergeSearch { Mixed, SameSignOnly };

struct Extra {
  std::int64_t p = 0;
  std::int64_t m = 0;
  friend bool operator==(const Extra&, const Extra&) = default;
};

/// Smallest extra (p, m) in lexicographic (p + m, p) order after which the
/// two curves become isotopic. Curves with different (tb, r) never merge.
/// SameSignOnly restricts the search to (k, 0) and (0, k).
std::optional<Extra> minimal_mixed_merge(const Presentation& a, const Presentation& b,
                                         MergeSearch mode = MergeSearch::Mixed);

/// Label of the orbit of a class under negative stabilization.
struct NegativeStableClassKey {
  std::int64_t sl = 0;     // tb - r
  std::int64_t index = 0;  // label within the sl level
  friend bool operator==(const NegativeStableClassKey&, const NegativeStableClassKey&) = default;
};

NegativeStableClassKey negative_stable_key(const ContactStructure& cs, const LegendrianClass& c);

/// Number of classes with tb - r = sl modulo c ~ stabilize(c, -).
std::int64_t negative_stable_class_count(const ContactStructure& cs, const Direction& d,
                                         std::int64_t sl);

/// False iff some sl level carries two or more negative-stable classes.
bool is_transversally_simple(const ContactStructure& cs, const Direction& d);

}  // namespace linleg
