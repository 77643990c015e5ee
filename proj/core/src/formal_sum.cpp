#include "bluescheme/formal_sum.hpp"

#include <algorithm>

namespace bluescheme {

FormalSum::FormalSum(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const Monomial& m) { return m.is_zero(); });
  std::sort(terms_.begin(), terms_.end());
}

FormalSum::FormalSum(std::initializer_list<Monomial> terms)
    : FormalSum(std::vector<Monomial>(terms)) {}

FormalSum FormalSum::of(const Monomial& m) {
  FormalSum s;
  s.add_term(m);
  return s;
}

FormalSum& FormalSum::add_term(const Monomial& m) {
  if (m.is_zero()) return *this;
  terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), m), m);
  return *this;
}

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
  FormalSum r;
  r.terms_.resize(a.terms_.size() + b.terms_.size());
  std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
             b.terms_.end(), r.terms_.begin());
  return r;
}

FormalSum operator*(const Monomial& m, const FormalSum& s) {
  if (m.is_zero()) return FormalSum();
  FormalSum r;
  r.terms_.reserve(s.terms_.size());
  for (const Monomial& t : s.terms_) r.terms_.push_back(m * t);
  std::sort(r.terms_.begin(), r.terms_.end());
  return r;
}

bool FormalSum::contains_submultiset(const FormalSum& sub) const {
  return minus(sub).has_value();
}

std::optional<FormalSum> FormalSum::minus(const FormalSum& sub) const {
  FormalSum rest;
  rest.terms_.reserve(terms_.size());
  auto it = sub.terms_.begin();
  for (const Monomial& t : terms_) {
    if (it != sub.terms_.end() && t == *it) {
      ++it;
    } else {
      rest.terms_.push_back(t);
    }
  }
  if (it != sub.terms_.end()) return std::nullopt;
  return rest;
}

std::strong_ordering FormalSum::operator<=>(const FormalSum& other) const {
  return std::lexicographical_compare_three_way(
      terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end());
}

Relation::Relation(FormalSum a, FormalSum b) {
  const bool a_first =
      a.term_count() != b.term_count() ? a.term_count() < b.term_count()
                                       : a <= b;
  if (a_first) {
    first_ = std::move(a);
    second_ = std::move(b);
  } else {
    first_ = std::move(b);
    second_ = std::move(a);
  }
}

}  // namespace bluescheme
