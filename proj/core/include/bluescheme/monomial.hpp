#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bluescheme {

using GenIndex = std::uint32_t;

/// A monomial over an indexed generator set, or the absorbing zero element.
///
/// The unit is the empty product. Exponents are stored sparsely, sorted by
/// generator index, and are always >= 1; the zero element carries no factors.
/// Values are immutable in spirit: every operation returns a fresh monomial.
class Monomial {
 public:
  using Factors = std::vector<std::pair<GenIndex, std::uint32_t>>;

  Monomial() = default;  // the unit 1

  static Monomial one() { return Monomial(); }

  static Monomial zero() {
    Monomial m;
    m.zero_ = true;
    return m;
  }

  static Monomial var(GenIndex g, std::uint32_t exp = 1);

  /// Builds a monomial from arbitrary factor pairs: sorts, merges duplicate
  /// indices, and drops zero exponents.
  static Monomial from_factors(Factors factors);

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && factors_.empty(); }

  const Factors& factors() const { return factors_; }

  std::uint32_t exponent(GenIndex g) const;

  /// Sum of all exponents (the unweighted total degree). Zero for the unit;
  /// callers must not rely on the value for the zero element.
  std::uint64_t total_degree() const;

  /// Largest generator index carrying a nonzero exponent, if any.
  std::optional<GenIndex> max_generator() const;

  bool divides(const Monomial& m) const;

  /// Exact division: returns *this / d, or nullopt when d does not divide.
  /// Zero divided by anything is zero; nothing but zero is divisible by zero.
  std::optional<Monomial> divided_by(const Monomial& d) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& b);

  bool operator==(const Monomial&) const = default;

  /// Total order: zero first, then lexicographic on dense exponent vectors
  /// (a monomial involving an earlier generator with a higher power compares
  /// greater). Used for canonical forms and stable printing.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  Factors factors_;
  bool zero_ = false;
};

}  // namespace bluescheme
