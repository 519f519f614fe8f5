#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "linleg/lattice.hpp"

namespace linleg {

enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// The tight contact structure xi_n on T^3, n >= 1.
class ContactStructure {
 public:
  /// Throws DomainError for n < 1.
  static ContactStructure make(std::int64_t n);

  std::int64_t n() const { return n_; }
  /// Number of dividing curves on the horizontal torus.
  std::int64_t components() const { return 2 * n_; }

  friend bool operator==(const ContactStructure&, const ContactStructure&) = default;

 private:
  explicit ContactStructure(std::int64_t n) : n_(n) {}
  std::int64_t n_;
};

/// Maximal Thurston-Bennequin invariant of the knot type: -n |c3|.
std::int64_t tb_max(const ContactStructure& cs, const Direction& d);

/// Extended rational in lowest terms with den >= 0; infinity is (1, 0).
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Slope make(std::int64_t num, std::int64_t den);
  bool is_infinite() const { return den == 0; }
  /// "inf" or "p/q".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
};

/// Two lattice vectors spanning a linear torus in T^3.
class TorusSpan {
 public:
  /// Throws DomainError when (b3, c3) = (0, 0) or when (b, c) does not extend
  /// to an integer basis of Z^3.
  static TorusSpan make(const Vec3& b, const Vec3& c);

  const Vec3& b() const { return b_; }
  const Vec3& c() const { return c_; }

 private:
  TorusSpan(const Vec3& b, const Vec3& c) : b_(b), c_(c) {}
  Vec3 b_, c_;
};

/// (b, c) extends to a basis of Z^3 iff the 2x2 minors of (b|c) are coprime.
bool extends_to_basis(const Vec3& b, const Vec3& c);

struct DividingSetProfile {
  Slope slope;
  std::int64_t count = 0;  // #Gamma_T

  friend bool operator==(const DividingSetProfile&, const DividingSetProfile&) = default;
};

/// Slope -b3/c3 and #Gamma = 2n gcd(b3, c3) of the convex torus spanned by `span`.
DividingSetProfile dividing_profile(const ContactStructure& cs, const TorusSpan& span);

/// The 2n parallel dividing curves gamma_0..gamma_{2n-1} of the horizontal
/// torus, cyclically ordered. Region R_i lies between gamma_i and
/// gamma_{i+1} (mod 2n) and is positive iff i is even.
class HorizontalDividingStructure {
 public:
  explicit HorizontalDividingStructure(const ContactStructure& cs) : n_(cs.n()) {}

  std::int64_t n() const { return n_; }
  std::int64_t size() const { return 2 * n_; }

  Sign region_sign(std::int64_t region) const;
  /// The two regions (R_{i-1}, R_i) adjacent to gamma_i.
  std::pair<std::int64_t, std::int64_t> regions_bounded_by(std::int64_t component) const;
  /// The two components (gamma_i, gamma_{i+1}) bounding R_i.
  std::pair<std::int64_t, std::int64_t> components_bounding(std::int64_t region) const;
  /// The unique region of sign `s` adjacent to gamma_i.
  std::int64_t region_of_sign(std::int64_t component, Sign s) const;

  /// Region of sign `s` bounded by both gamma_i and gamma_j, if any. Never
  /// defined for i == j. Throws DomainError for out-of-range indices.
  std::optional<std::int64_t> shared_region(std::int64_t i, std::int64_t j, Sign s) const;

 private:
  void check(std::int64_t index) const;
  std::int64_t wrap(std::int64_t index) const;
  std::int64_t n_;
};

HorizontalDividingStructure horizontal_structure(const ContactStructure& cs);

}  // namespace linleg
