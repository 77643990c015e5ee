#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "bluescheme/monomial.hpp"

namespace bluescheme {

/// A finite multiset of nonzero monomials with natural multiplicities.
/// The zero element of the ambient semiring is the empty sum; zero monomials
/// are silently dropped on insertion. Terms are kept sorted ascending, so
/// multiset equality is plain equality.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(std::vector<Monomial> terms);
  FormalSum(std::initializer_list<Monomial> terms);

  static FormalSum of(const Monomial& m);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  FormalSum& add_term(const Monomial& m);

  friend FormalSum operator+(const FormalSum& a, const FormalSum& b);
  friend FormalSum operator*(const Monomial& m, const FormalSum& s);

  /// Multiset containment.
  bool contains_submultiset(const FormalSum& sub) const;

  /// Multiset difference; nullopt when sub is not contained.
  std::optional<FormalSum> minus(const FormalSum& sub) const;

  bool operator==(const FormalSum&) const = default;
  std::strong_ordering operator<=>(const FormalSum& other) const;

 private:
  std::vector<Monomial> terms_;  // sorted ascending, no zero terms
};

/// An unordered pair of formal sums identified by the congruence.
/// Canonical orientation: the side with fewer terms (ties broken by the
/// sum order) is stored first, so symmetry is structural.
class Relation {
 public:
  Relation(FormalSum a, FormalSum b);

  const FormalSum& first() const { return first_; }
  const FormalSum& second() const { return second_; }

  bool operator==(const Relation&) const = default;

 private:
  FormalSum first_;
  FormalSum second_;
};

}  // namespace bluescheme
