#include "bluescheme/monomial.hpp"

#include <algorithm>
#include <limits>

namespace bluescheme {

Monomial Monomial::var(GenIndex g, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(g, exp);
  return m;
}

Monomial Monomial::from_factors(Factors factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [idx, exp] : factors) {
    if (exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == idx) {
      m.factors_.back().second += exp;
    } else {
      m.factors_.emplace_back(idx, exp);
    }
  }
  return m;
}

std::uint32_t Monomial::exponent(GenIndex g) const {
  for (const auto& [idx, exp] : factors_) {
    if (idx == g) return exp;
    if (idx > g) break;
  }
  return 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t sum = 0;
  for (const auto& [idx, exp] : factors_) sum += exp;
  return sum;
}

std::optional<GenIndex> Monomial::max_generator() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.back().first;
}

bool Monomial::divides(const Monomial& m) const {
  if (m.zero_) return true;  // everything divides zero
  if (zero_) return false;
  auto it = m.factors_.begin();
  for (const auto& [idx, exp] : factors_) {
    while (it != m.factors_.end() && it->first < idx) ++it;
    if (it == m.factors_.end() || it->first != idx || it->second < exp) {
      return false;
    }
  }
  return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& d) const {
  if (zero_) return Monomial::zero();
  if (d.zero_) return std::nullopt;
  if (!d.divides(*this)) return std::nullopt;
  Monomial q;
  auto it = d.factors_.begin();
  for (const auto& [idx, exp] : factors_) {
    std::uint32_t sub = 0;
    while (it != d.factors_.end() && it->first < idx) ++it;
    if (it != d.factors_.end() && it->first == idx) sub = it->second;
    if (exp > sub) q.factors_.emplace_back(idx, exp - sub);
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.zero_ || b.zero_) return Monomial::zero();
  Monomial p;
  p.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() ||
        (ia != a.factors_.end() && ia->first < ib->first)) {
      p.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      p.factors_.push_back(*ib++);
    } else {
      p.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return p;
}

Monomial& Monomial::operator*=(const Monomial& b) {
  *this = *this * b;
  return *this;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (zero_ != other.zero_) {
    return zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (zero_) return std::strong_ordering::equal;
  auto ia = factors_.begin();
  auto ib = other.factors_.begin();
  while (ia != factors_.end() || ib != other.factors_.end()) {
    GenIndex ga = ia != factors_.end() ? ia->first
                                       : std::numeric_limits<GenIndex>::max();
    GenIndex gb = ib != other.factors_.end()
                      ? ib->first
                      : std::numeric_limits<GenIndex>::max();
    if (ga == gb) {
      if (ia->second != ib->second) return ia->second <=> ib->second;
      ++ia;
      ++ib;
    } else if (ga < gb) {
      // this has a positive exponent where other has zero
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace bluescheme
