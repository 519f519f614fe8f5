#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linleg/contact.hpp"
#include "linleg/lattice.hpp"

namespace linleg::oracle {

/// Brute-force model of Legendrian classes: explicit stabilization words
/// over every tb-maximizing base curve, glued together only by the local
/// merge rules
///   (a) adjacent letters of a word commute, and
///   (b) for vertical knot types, S+ (S-) of two base curves on dividing
///       curves sharing a negative (positive) region agree, and so does
///       every further stabilization of them.
/// Distinct bases with empty words are never identified. The closed-form
/// classification is not consulted, so agreement with it is a genuine check.

struct QuotientOptions {
  std::size_t max_nodes = 1'000'000;
  /// Also identify every word w with w followed by S-.
  bool merge_negative_stabilization = false;
};

class Quotient {
 public:
  std::int64_t depth() const { return depth_; }
  std::int64_t tb_max() const { return tb_max_; }
  std::int64_t bases() const { return bases_; }
  bool vertical() const { return vertical_; }
  bool negative_stable() const { return negative_stable_; }
  std::size_t node_count() const { return root_.size(); }

  /// Number of equivalence classes over all explored nodes.
  std::size_t class_count() const;

  /// Classes at (tb, r). Throws DomainError("insufficient depth") when tb
  /// lies below the explored depth.
  std::int64_t count(std::int64_t tb, std::int64_t r) const;

  /// Negative-stable classes at sl = tb - r (requires merge_negative_stabilization).
  /// Throws DomainError("insufficient depth") unless the depth saturates sl.
  std::int64_t count_self_linking(std::int64_t sl) const;

  /// Representative id of the class of `word` (first letter applied first)
  /// over base curve `base`.
  std::size_t class_of(std::int64_t base, std::span<const Sign> word) const;

 private:
  friend Quotient build_quotient(const ContactStructure&, const Direction&, std::int64_t,
                                 const QuotientOptions&);
  Quotient() = default;

  std::size_t node(std::int64_t base, std::int64_t length, std::uint64_t bits) const;

  std::int64_t depth_ = 0;
  std::int64_t tb_max_ = 0;
  std::int64_t bases_ = 1;
  bool vertical_ = false;
  bool negative_stable_ = false;
  std::size_t per_base_ = 1;
  std::vector<std::size_t> root_;
};

/// Throws DomainError when the node count exceeds options.max_nodes.
Quotient build_quotient(const ContactStructure& cs, const Direction& d, std::int64_t depth,
                        const QuotientOptions& options = {});

std::int64_t quotient_count(const Quotient& q, std::int64_t tb, std::int64_t r);

struct VerificationRow {
  std::int64_t tb = 0;
  std::int64_t r = 0;
  std::int64_t oracle = 0;
  std::int64_t closed_form = 0;
  friend bool operator==(const VerificationRow&, const VerificationRow&) = default;
};

struct VerificationReport {
  std::int64_t depth = 0;
  std::size_t classes = 0;
  std::vector<VerificationRow> rows;
  std::vector<VerificationRow> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares oracle counts with count_classes for tb in [tb_max - depth,
/// tb_max] and |r| <= depth + 1.
VerificationReport verify_against_closed_form(const ContactStructure& cs, const Direction& d,
                                              std::int64_t depth);

}  // namespace linleg::oracle
