#include "doctest.h"

#include "bluescheme/formal_sum.hpp"
#include "bluescheme/monomial.hpp"

using namespace bluescheme;

TEST_CASE("monomial multiplication is exponent-wise with absorbing zero") {
  const Monomial x1 = Monomial::var(0);
  const Monomial x2 = Monomial::var(1);

  const Monomial p = x1 * x2;
  CHECK(p.exponent(0) == 1);
  CHECK(p.exponent(1) == 1);

  CHECK((Monomial::zero() * x1).is_zero());
  CHECK((x1 * Monomial::zero()).is_zero());

  const Monomial cube = Monomial::var(0, 2) * x1;
  CHECK(cube == Monomial::var(0, 3));

  CHECK(x1 * x2 == x2 * x1);
  CHECK((x1 * x2) * x2 == x1 * (x2 * x2));
  CHECK(Monomial::one() * x1 == x1);
}

TEST_CASE("division and divisibility") {
  const Monomial x0 = Monomial::var(0);
  const Monomial x1 = Monomial::var(1);
  const Monomial m = x0 * x0 * x1;

  CHECK(x0.divides(m));
  CHECK(!x1.divides(x0));
  CHECK(m.divided_by(x0) == x0 * x1);
  CHECK(m.divided_by(x1 * x1) == std::nullopt);
  CHECK(Monomial::one().divides(m));
  CHECK(x0.divides(Monomial::zero()));
  CHECK(Monomial::zero().divided_by(x0) == Monomial::zero());
  CHECK(x0.divided_by(Monomial::zero()) == std::nullopt);
}

TEST_CASE("formal sums are multisets without zero terms") {
  const Monomial x0 = Monomial::var(0);
  const Monomial x1 = Monomial::var(1);

  FormalSum s{x0, x1, x0};
  CHECK(s.term_count() == 3);
  s.add_term(Monomial::zero());
  CHECK(s.term_count() == 3);

  const FormalSum t{x0, x0, x1};
  CHECK(s == t);

  CHECK(FormalSum{}.is_zero());
  CHECK((Monomial::zero() * s).is_zero());

  CHECK(s.contains_submultiset(FormalSum{x0, x0}));
  CHECK(!s.contains_submultiset(FormalSum{x1, x1}));
  CHECK(*s.minus(FormalSum{x0, x1}) == FormalSum{x0});
}

TEST_CASE("relations are unordered pairs") {
  const Monomial x0 = Monomial::var(0);
  const Monomial x1 = Monomial::var(1);
  const FormalSum a{x0 * x1};
  const FormalSum b{x0, x1};
  CHECK(Relation(a, b) == Relation(b, a));
  CHECK(Relation(a, b).first() == a);  // fewer terms first
}
