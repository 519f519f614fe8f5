#include "linleg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include <boost/pending/disjoint_sets.hpp>

#include "linleg/classes.hpp"
#include "linleg/error.hpp"

namespace linleg::oracle {

namespace {

constexpr std::int64_t kMaxDepth = 40;

// Bit t of a word is its t-th letter; 1 = S+.
bool letter_is_plus(std::uint64_t bits, std::int64_t t) { return (bits >> t) & 1U; }

std::size_t count_distinct(std::vector<std::size_t>& ids) {
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

}  // namespace

std::size_t Quotient::node(std::int64_t base, std::int64_t length, std::uint64_t bits) const {
  return static_cast<std::size_t>(base) * per_base_ + ((std::size_t{1} << length) - 1) +
         static_cast<std::size_t>(bits);
}

std::size_t Quotient::class_count() const {
  std::vector<std::size_t> ids = root_;
  return count_distinct(ids);
}

std::int64_t Quotient::count(std::int64_t tb, std::int64_t r) const {
  const std::int64_t length = tb_max_ - tb;
  if (length > depth_) throw DomainError("insufficient depth");
  if (length < 0 || std::abs(r) > length || (length + r) % 2 != 0) return 0;
  const int plus = static_cast<int>((length + r) / 2);
  std::vector<std::size_t> ids;
  for (std::int64_t base = 0; base < bases_; ++base) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
      if (std::popcount(bits) == plus) ids.push_back(root_[node(base, length, bits)]);
    }
  }
  return static_cast<std::int64_t>(count_distinct(ids));
}

std::int64_t Quotient::count_self_linking(std::int64_t sl) const {
  if (!negative_stable_) throw DomainError("quotient was built without negative stabilization");
  // sl = tb - r = tb_max - 2 * (number of S+ letters).
  const std::int64_t twice_plus = tb_max_ - sl;
  if (twice_plus < 0 || twice_plus % 2 != 0) return 0;
  const std::int64_t plus = twice_plus / 2;
  if (plus + 1 > depth_) throw DomainError("insufficient depth");
  std::vector<std::size_t> ids;
  for (std::int64_t base = 0; base < bases_; ++base) {
    for (std::int64_t length = plus; length <= depth_; ++length) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
        if (std::popcount(bits) == plus) ids.push_back(root_[node(base, length, bits)]);
      }
    }
  }
  return static_cast<std::int64_t>(count_distinct(ids));
}

std::size_t Quotient::class_of(std::int64_t base, std::span<const Sign> word) const {
  const auto length = static_cast<std::int64_t>(word.size());
  if (base < 0 || base >= bases_) throw DomainError("base index out of range");
  if (length > depth_) throw DomainError("insufficient depth");
  std::uint64_t bits = 0;
  for (std::int64_t t = 0; t < length; ++t)
    if (word[t] == Sign::Plus) bits |= std::uint64_t{1} << t;
  return root_[node(base, length, bits)];
}

Quotient build_quotient(const ContactStructure& cs, const Direction& d, std::int64_t depth,
                        const QuotientOptions& options) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  Quotient q;
  q.depth_ = depth;
  q.tb_max_ = tb_max(cs, d);
  q.vertical_ = d.is_horizontal();
  q.bases_ = q.vertical_ ? cs.components() : 1;
  q.negative_stable_ = options.merge_negative_stabilization;

  if (depth > kMaxDepth) throw DomainError("depth exceeds resource bound");
  q.per_base_ = (std::size_t{2} << depth) - 1;
  const std::size_t total = q.per_base_ * static_cast<std::size_t>(q.bases_);
  if (total > options.max_nodes) throw DomainError("depth exceeds resource bound");

  boost::disjoint_sets_with_storage<> sets(total);
  const HorizontalDividingStructure hs(cs);

  for (std::int64_t base = 0; base < q.bases_; ++base) {
    for (std::int64_t length = 0; length <= depth; ++length) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
        const std::size_t here = q.node(base, length, bits);
        // (a) swap letters t, t+1 when they differ.
        for (std::int64_t t = 0; t + 1 < length; ++t) {
          if (letter_is_plus(bits, t) != letter_is_plus(bits, t + 1)) {
            const std::uint64_t swapped = bits ^ (std::uint64_t{3} << t);
            sets.union_set(here, q.node(base, length, swapped));
          }
        }
        // (b) words starting with S+ (S-) over bases sharing a negative
        // (positive) region.
        if (q.vertical_ && length > 0) {
          const Sign first = letter_is_plus(bits, 0) ? Sign::Plus : Sign::Minus;
          for (std::int64_t other = base + 1; other < q.bases_; ++other) {
            if (hs.shared_region(base, other, opposite(first)))
              sets.union_set(here, q.node(other, length, bits));
          }
        }
        if (options.merge_negative_stabilization && length < depth)
          sets.union_set(here, q.node(base, length + 1, bits));
      }
    }
  }

  q.root_.resize(total);
  for (std::size_t i = 0; i < total; ++i) q.root_[i] = sets.find_set(i);
  return q;
}

std::int64_t quotient_count(const Quotient& q, std::int64_t tb, std::int64_t r) {
  return q.count(tb, r);
}

VerificationReport verify_against_closed_form(const ContactStructure& cs, const Direction& d,
                                              std::int64_t depth) {
  const Quotient q = build_quotient(cs, d, depth);
  VerificationReport report;
  report.depth = depth;
  report.classes = q.class_count();
  for (std::int64_t tb = q.tb_max(); tb >= q.tb_max() - depth; --tb) {
    for (std::int64_t r = -(depth + 1); r <= depth + 1; ++r) {
      const VerificationRow row{tb, r, q.count(tb, r), count_classes(cs, d, tb, r)};
      report.rows.push_back(row);
      if (row.oracle != row.closed_form) report.mismatches.push_back(row);
    }
  }
  return report;
}

}  // namespace linleg::oracle
