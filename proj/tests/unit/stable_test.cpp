#include "linleg/stable.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "brute.hpp"
#include "linleg/error.hpp"
#include "linleg/oracle.hpp"

using namespace linleg;
using linleg::testing::reachable_classes;

namespace {

ContactStructure xi(std::int64_t n) { return ContactStructure::make(n); }
const Direction kVertical = Direction::from(1, 0, 0);

Presentation vert(std::int64_t n, std::int64_t base, std::int64_t p = 0, std::int64_t m = 0) {
  return {xi(n), kVertical, base, p, m};
}

bool contains(const std::vector<Parent>& parents, const Parent& p) {
  return std::find(parents.begin(), parents.end(), p) != parents.end();
}

}  // namespace

TEST(Stabilize, Examples) {
  EXPECT_EQ(stabilize(xi(2), VerticalMax{1}, Sign::Plus),
            LegendrianClass(VerticalPure{Sign::Plus, 1, 1}));
  EXPECT_EQ(stabilize(xi(2), VerticalPure{Sign::Plus, 1, 1}, Sign::Minus),
            LegendrianClass(VerticalMixed{-2, 0}));
  EXPECT_EQ(stabilize(xi(1), NonVertical{-1, -1, 0}, Sign::Minus),
            LegendrianClass(NonVertical{-1, -2, -1}));
  EXPECT_EQ(stabilize(xi(2), VerticalMax{0}, Sign::Minus),
            LegendrianClass(VerticalPure{Sign::Minus, 0, 1}));
  EXPECT_EQ(stabilize(xi(2), VerticalPure{Sign::Minus, 2, 3}, Sign::Plus),
            LegendrianClass(VerticalMixed{-4, -2}));
}

TEST(Stabilize, RejectsInvalidClass) {
  EXPECT_THROW(stabilize(xi(2), VerticalMax{4}, Sign::Plus), DomainError);
  EXPECT_THROW(stabilize(xi(2), VerticalPure{Sign::Plus, 0, 1}, Sign::Plus), DomainError);
  EXPECT_THROW(stabilize(xi(1), VerticalMixed{-2, 2}, Sign::Plus), DomainError);
}

TEST(Stabilize, ShiftsInvariantsOnEveryVariant) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const auto& d : linleg::testing::sample_directions()) {
      for (const auto& c : reachable_classes(xi(n), d, 6)) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          const auto next = stabilize(xi(n), c, s);
          EXPECT_EQ(tb_of(next), tb_of(c) - 1);
          EXPECT_EQ(rotation_of(next), rotation_of(c) + (s == Sign::Plus ? 1 : -1));
          EXPECT_NO_THROW(validate(xi(n), next));
        }
      }
    }
  }
}

TEST(Stabilize, AgreesWithCanonicalizeOfLongerWord) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const auto& pres : linleg::testing::all_presentations(xi(n), kVertical, 5)) {
      Presentation plus = pres, minus = pres;
      ++plus.p;
      ++minus.m;
      EXPECT_EQ(stabilize(xi(n), canonicalize(pres), Sign::Plus), canonicalize(plus));
      EXPECT_EQ(stabilize(xi(n), canonicalize(pres), Sign::Minus), canonicalize(minus));
    }
  }
}

TEST(Stabilize, CommutesExhaustively) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const auto& d : linleg::testing::sample_directions()) {
      for (const auto& c : reachable_classes(xi(n), d, 8)) {
        EXPECT_EQ(stabilize(xi(n), stabilize(xi(n), c, Sign::Plus), Sign::Minus),
                  stabilize(xi(n), stabilize(xi(n), c, Sign::Minus), Sign::Plus));
      }
    }
  }
}

TEST(Stabilize, MaximalClassesTwoToOneOntoPurePlus) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto hs = horizontal_structure(xi(n));
    std::map<std::int64_t, std::vector<std::int64_t>> fibers;
    for (std::int64_t i = 0; i < hs.size(); ++i) {
      const auto c = stabilize(xi(n), VerticalMax{i}, Sign::Plus);
      ASSERT_TRUE(std::holds_alternative<VerticalPure>(c));
      fibers[std::get<VerticalPure>(c).region].push_back(i);
    }
    EXPECT_EQ(static_cast<std::int64_t>(fibers.size()), n);
    for (const auto& [region, comps] : fibers) {
      ASSERT_EQ(comps.size(), 2u);
      EXPECT_EQ(hs.region_sign(region), Sign::Minus);
      EXPECT_TRUE(hs.shared_region(comps[0], comps[1], Sign::Minus).has_value());
    }
  }
}

TEST(DestabilizeParents, Examples) {
  EXPECT_TRUE(destabilize_parents(xi(1), VerticalMax{0}).empty());

  const auto mixed = destabilize_parents(xi(1), VerticalMixed{-2, 0});
  EXPECT_EQ(mixed.size(), 2u);
  EXPECT_TRUE(contains(mixed, {VerticalPure{Sign::Plus, 1, 1}, Sign::Minus}));
  EXPECT_TRUE(contains(mixed, {VerticalPure{Sign::Minus, 0, 1}, Sign::Plus}));

  const auto nv = destabilize_parents(xi(1), NonVertical{-1, -3, 0});
  EXPECT_EQ(nv.size(), 2u);
  EXPECT_TRUE(contains(nv, {NonVertical{-1, -2, -1}, Sign::Plus}));
  EXPECT_TRUE(contains(nv, {NonVertical{-1, -2, 1}, Sign::Minus}));

  // Maximal non-vertical class has no parents.
  EXPECT_TRUE(destabilize_parents(xi(1), NonVertical{-1, -1, 0}).empty());
}

// Inverse image computed by stabilizing every class one level up.
TEST(DestabilizeParents, ExactFiber) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const auto& d : linleg::testing::sample_directions()) {
      const auto classes = reachable_classes(xi(n), d, 6);
      for (const auto& c : classes) {
        const auto parents = destabilize_parents(xi(n), c);
        for (const auto& parent : parents) EXPECT_EQ(stabilize(xi(n), parent.cls, parent.sign), c);
        std::size_t fiber = 0;
        for (const auto& candidate : classes) {
          if (tb_of(candidate) != tb_of(c) + 1) continue;
          for (Sign s : {Sign::Plus, Sign::Minus}) {
            if (stabilize(xi(n), candidate, s) == c) {
              ++fiber;
              EXPECT_TRUE(contains(parents, {candidate, s}));
            }
          }
        }
        EXPECT_EQ(fiber, parents.size());
      }
    }
  }
}

TEST(BecomesIsotopicAfter, Examples) {
  EXPECT_TRUE(becomes_isotopic_after({vert(1, 0), vert(1, 1), 1, 1}));
  EXPECT_FALSE(becomes_isotopic_after({vert(2, 0), vert(2, 1), 10, 0}));
  EXPECT_TRUE(becomes_isotopic_after({vert(3, 4, 2, 1), vert(3, 4, 2, 1), 0, 0}));
  EXPECT_THROW(becomes_isotopic_after({vert(1, 0), vert(2, 0), 1, 1}), DomainError);
  EXPECT_THROW(becomes_isotopic_after({vert(1, 0), vert(1, 1), -1, 0}), DomainError);
}

TEST(MinimalMixedMerge, Examples) {
  // For n = 1 the two dividing curves share both regions, so one negative
  // stabilization already merges them; one of each sign also works.
  EXPECT_EQ(minimal_mixed_merge(vert(1, 0), vert(1, 1)), (Extra{0, 1}));
  EXPECT_TRUE(becomes_isotopic_after({vert(1, 0), vert(1, 1), 1, 1}));
  EXPECT_EQ(minimal_mixed_merge(vert(2, 1), vert(2, 2)), (Extra{1, 0}));
  EXPECT_EQ(minimal_mixed_merge(vert(2, 3, 1, 2), vert(2, 3, 1, 2)), (Extra{0, 0}));
  // gamma_0 and gamma_2 share no region when n = 2.
  EXPECT_EQ(minimal_mixed_merge(vert(2, 0), vert(2, 2)), (Extra{1, 1}));
  EXPECT_EQ(minimal_mixed_merge(vert(2, 0), vert(2, 2), MergeSearch::SameSignOnly), std::nullopt);
}

TEST(MinimalMixedMerge, DifferentInvariantsNeverMerge) {
  EXPECT_EQ(minimal_mixed_merge(vert(2, 0, 1, 0), vert(2, 0, 0, 1)), std::nullopt);
  EXPECT_THROW(minimal_mixed_merge(vert(2, 0), vert(1, 0)), DomainError);
}

TEST(MinimalMixedMerge, AlwaysWithinTwoForVerticalPairs) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t i = 0; i < 2 * n; ++i) {
      for (std::int64_t j = 0; j < 2 * n; ++j) {
        const auto e = minimal_mixed_merge(vert(n, i), vert(n, j));
        ASSERT_TRUE(e.has_value());
        EXPECT_LE(e->p + e->m, 2);
      }
    }
  }
}

TEST(NegativeStable, Examples) {
  EXPECT_EQ(negative_stable_class_count(xi(2), kVertical, 0), 2);
  EXPECT_EQ(negative_stable_class_count(xi(1), kVertical, 0), 1);
  EXPECT_EQ(negative_stable_class_count(xi(1), Direction::from(0, 1, 1), -1), 1);
  EXPECT_EQ(negative_stable_class_count(xi(1), Direction::from(0, 1, 1), -2), 0);
  EXPECT_EQ(negative_stable_class_count(xi(1), Direction::from(0, 1, 1), 1), 0);
  EXPECT_EQ(negative_stable_class_count(xi(3), kVertical, -4), 1);
  EXPECT_EQ(negative_stable_class_count(xi(3), kVertical, -3), 0);
  EXPECT_EQ(negative_stable_class_count(xi(3), kVertical, 2), 0);
}

TEST(NegativeStable, ExamplesConfirmedByOracle) {
  oracle::QuotientOptions opts;
  opts.merge_negative_stabilization = true;
  EXPECT_EQ(oracle::build_quotient(xi(2), kVertical, 3, opts).count_self_linking(0), 2);
  EXPECT_EQ(oracle::build_quotient(xi(1), kVertical, 3, opts).count_self_linking(0), 1);
  EXPECT_EQ(oracle::build_quotient(xi(1), Direction::from(0, 1, 1), 3, opts).count_self_linking(-1), 1);
}

TEST(NegativeStable, KeyIsConstantOnNegativeOrbitsAndCountsMatch) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const auto& d : linleg::testing::sample_directions()) {
      const auto classes = reachable_classes(xi(n), d, 6);
      std::map<std::int64_t, std::set<std::int64_t>> keys;
      for (const auto& c : classes) {
        const auto key = negative_stable_key(xi(n), c);
        EXPECT_EQ(key, negative_stable_key(xi(n), stabilize(xi(n), c, Sign::Minus)));
        keys[key.sl].insert(key.index);
        if (d.is_horizontal()) EXPECT_EQ(key.sl % 2, 0);
        else EXPECT_EQ((key.sl - tb_max(xi(n), d)) % 2, 0);
      }
      for (const auto& [sl, indices] : keys)
        EXPECT_EQ(static_cast<std::int64_t>(indices.size()), negative_stable_class_count(xi(n), d, sl));
    }
  }
}

TEST(TransversalSimplicity, Examples) {
  EXPECT_FALSE(is_transversally_simple(xi(2), kVertical));
  EXPECT_TRUE(is_transversally_simple(xi(1), kVertical));
  EXPECT_TRUE(is_transversally_simple(xi(3), Direction::from(0, 1, 1)));
  EXPECT_FALSE(is_transversally_simple(xi(3), Direction::from(2, 7, 0)));
}
