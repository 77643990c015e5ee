#include "doctest.h"

#include "support/test_support.hpp"

// The randomized suites live in the support header so the acceptance binary
// can run the same 1000-case batches.

TEST_CASE("congruence engine soundness over random presentations") {
  CHECK(bluescheme::testing::congruence_soundness_suite(1000, 20260811) == 0);
}

TEST_CASE("additive closure is extensive, monotone, idempotent") {
  CHECK(bluescheme::testing::additive_closure_suite(1000, 917) == 0);
}

TEST_CASE("specialization order satisfies the poset axioms") {
  CHECK(bluescheme::testing::poset_axioms_suite(1000, 4242) == 0);
}

TEST_CASE("rank is antitone along containment") {
  CHECK(bluescheme::testing::rank_antitone_suite(1000, 35) == 0);
}
