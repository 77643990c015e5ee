#include "bluescheme/congruence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

namespace bluescheme {
namespace {

constexpr std::size_t kClosureSafetyLimit = 100000;

// One elementary rewrite: pick a relation and an orientation (A -> B), a
// monomial multiplier m with m*A contained in s as a multiset, and replace
// that occurrence by m*B. Multiplier candidates are the exact quotients of
// terms of s by terms of A, which makes the neighbor set finite.
void append_neighbors(const BlueprintPresentation& pres, const FormalSum& s,
                      std::set<FormalSum>& out) {
  for (const Relation& rel : pres.relations()) {
    const FormalSum* sides[2] = {&rel.first(), &rel.second()};
    for (int dir = 0; dir < 2; ++dir) {
      const FormalSum& from = *sides[dir];
      const FormalSum& to = *sides[1 - dir];
      if (from.is_zero()) {
        // Inserting out of nothing: admit only the unit multiplier, so the
        // branching stays finite. Under-approximating keeps kProved sound.
        out.insert(s + to);
        continue;
      }
      std::set<Monomial> multipliers;
      for (const Monomial& t : s.terms()) {
        for (const Monomial& l : from.terms()) {
          if (auto m = t.divided_by(l); m && !m->is_zero()) {
            multipliers.insert(*m);
          }
        }
      }
      for (const Monomial& m : multipliers) {
        if (auto rest = s.minus(m * from)) {
          out.insert(*rest + (m * to));
        }
      }
    }
  }
}

// Breadth-first ball of the rewrite graph around `start`, up to `depth`.
std::set<FormalSum> rewrite_ball(const BlueprintPresentation& pres,
                                 const FormalSum& start, std::uint32_t depth) {
  std::set<FormalSum> visited{start};
  std::set<FormalSum> frontier{start};
  for (std::uint32_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::set<FormalSum> next;
    for (const FormalSum& s : frontier) {
      append_neighbors(pres, s, next);
    }
    frontier.clear();
    for (const FormalSum& s : next) {
      if (visited.insert(s).second) frontier.insert(s);
    }
  }
  return visited;
}

// True when some sum reachable from `start` within `depth` steps satisfies
// `goal`.
bool reaches(const BlueprintPresentation& pres, const FormalSum& start,
             std::uint32_t depth,
             const std::function<bool(const FormalSum&)>& goal) {
  if (goal(start)) return true;
  std::set<FormalSum> visited{start};
  std::set<FormalSum> frontier{start};
  for (std::uint32_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::set<FormalSum> next;
    for (const FormalSum& s : frontier) {
      append_neighbors(pres, s, next);
    }
    frontier.clear();
    for (const FormalSum& s : next) {
      if (!visited.insert(s).second) continue;
      if (goal(s)) return true;
      frontier.insert(s);
    }
  }
  return false;
}

bool all_relation_sides_nonzero(const BlueprintPresentation& pres) {
  for (const Relation& rel : pres.relations()) {
    if (rel.first().is_zero() || rel.second().is_zero()) return false;
  }
  return true;
}

std::map<std::uint64_t, FormalSum> degree_components(
    const BlueprintPresentation& pres, const FormalSum& s) {
  std::map<std::uint64_t, FormalSum> parts;
  for (const Monomial& t : s.terms()) {
    parts[*degree_of(pres, t)].add_term(t);
  }
  return parts;
}

// Sound refutations from the grading: components in degrees below every
// relation degree are rigid under rewriting, and a rewrite never flips a
// degree component between empty and nonempty as long as no relation has a
// zero side.
Decision grading_obstruction(const BlueprintPresentation& pres,
                             const FormalSum& lhs, const FormalSum& rhs) {
  if (!pres.is_graded()) return Decision::kUnknown;
  if (!validate_grading(pres).empty()) return Decision::kUnknown;

  std::uint64_t min_rel_degree = ~0ull;
  for (const Relation& rel : pres.relations()) {
    for (const FormalSum* side : {&rel.first(), &rel.second()}) {
      if (!side->is_zero()) {
        min_rel_degree =
            std::min(min_rel_degree, *degree_of(pres, side->terms().front()));
      }
    }
  }
  const bool supports_rigid = all_relation_sides_nonzero(pres);

  auto left = degree_components(pres, lhs);
  auto right = degree_components(pres, rhs);
  std::set<std::uint64_t> degrees;
  for (const auto& [d, part] : left) degrees.insert(d);
  for (const auto& [d, part] : right) degrees.insert(d);
  for (std::uint64_t d : degrees) {
    const auto li = left.find(d);
    const auto ri = right.find(d);
    const FormalSum empty;
    const FormalSum& l = li == left.end() ? empty : li->second;
    const FormalSum& r = ri == right.end() ? empty : ri->second;
    if (d < min_rel_degree && !(l == r)) return Decision::kRefuted;
    if (supports_rigid && l.is_zero() != r.is_zero()) {
      return Decision::kRefuted;
    }
  }
  return Decision::kUnknown;
}

}  // namespace

Decision relation_holds(const BlueprintPresentation& pres,
                        const FormalSum& lhs, const FormalSum& rhs,
                        std::uint32_t budget) {
  if (lhs == rhs) return Decision::kProved;
  if (pres.relations().empty()) return Decision::kRefuted;
  if (grading_obstruction(pres, lhs, rhs) == Decision::kRefuted) {
    return Decision::kRefuted;
  }
  if (budget == 0) return Decision::kUnknown;

  // Bidirectional search: a chain of length <= budget exists iff the depth
  // ceil(budget/2) ball around lhs intersects the floor(budget/2) ball
  // around rhs.
  const std::uint32_t left_depth = (budget + 1) / 2;
  const std::uint32_t right_depth = budget / 2;
  const auto left_ball = rewrite_ball(pres, lhs, left_depth);
  if (reaches(pres, rhs, right_depth, [&](const FormalSum& s) {
        return left_ball.contains(s);
      })) {
    return Decision::kProved;
  }
  return Decision::kUnknown;
}

std::vector<Monomial> monomials_up_to_degree(const BlueprintPresentation& pres,
                                             std::uint64_t bound) {
  std::set<Monomial> pool{Monomial::one()};
  std::set<Monomial> frontier{Monomial::one()};
  for (std::uint64_t d = 0; d < bound; ++d) {
    std::set<Monomial> next;
    for (const Monomial& m : frontier) {
      for (GenIndex g = 0; g < pres.generator_count(); ++g) {
        Monomial grown = m * Monomial::var(g);
        if (pool.insert(grown).second) next.insert(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return {pool.begin(), pool.end()};
}

namespace {

// Shared fixpoint loop for both closure variants. `member` tests the current
// set, `record` adds a newly forced monomial and must make `member` true for
// it. Candidates b are monomial multiples of singleton relation sides; a
// candidate is forced once some sum reachable from {b} lies entirely in the
// current set.
void force_to_fixpoint(
    const BlueprintPresentation& pres, std::uint32_t budget,
    const std::function<bool(const Monomial&)>& member,
    const std::function<std::vector<Monomial>()>& multiplier_pool,
    const std::function<void(const Monomial&)>& record) {
  if (pres.relations().empty()) return;
  std::size_t safety = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Monomial> multipliers = multiplier_pool();
    for (const Relation& rel : pres.relations()) {
      const FormalSum* sides[2] = {&rel.first(), &rel.second()};
      for (int dir = 0; dir < 2; ++dir) {
        const FormalSum& from = *sides[dir];
        if (from.term_count() != 1) continue;
        const Monomial& head = from.terms().front();
        for (const Monomial& m : multipliers) {
          const Monomial candidate = m * head;
          if (candidate.is_zero() || member(candidate)) continue;
          // The start {candidate} never qualifies since member(candidate)
          // is false here, so hits are genuine derivations.
          const bool landed =
              reaches(pres, FormalSum::of(candidate), budget,
                      [&](const FormalSum& s) {
                        for (const Monomial& t : s.terms()) {
                          if (!member(t)) return false;
                        }
                        return true;
                      });
          if (landed) {
            record(candidate);
            changed = true;
            if (++safety > kClosureSafetyLimit) {
              throw BlueprintError("additive closure did not stabilize");
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<Monomial> additive_closure(const BlueprintPresentation& pres,
                                       const std::vector<Monomial>& base,
                                       std::uint32_t budget) {
  std::set<Monomial> closure(base.begin(), base.end());
  closure.insert(Monomial::zero());

  auto member = [&](const Monomial& m) {
    return m.is_zero() || closure.contains(m);
  };
  auto pool = [&]() {
    // Exact quotients of current members by relation terms, plus the
    // bounded-degree pool; both keep the candidate set finite.
    std::set<Monomial> multipliers;
    for (const Monomial& m :
         monomials_up_to_degree(pres, max_relation_degree(pres))) {
      multipliers.insert(m);
    }
    for (const Relation& rel : pres.relations()) {
      for (const FormalSum* side : {&rel.first(), &rel.second()}) {
        for (const Monomial& t : side->terms()) {
          for (const Monomial& u : closure) {
            if (auto q = u.divided_by(t); q && !q->is_zero()) {
              multipliers.insert(*q);
            }
          }
        }
      }
    }
    return std::vector<Monomial>(multipliers.begin(), multipliers.end());
  };
  auto record = [&](const Monomial& m) { closure.insert(m); };

  force_to_fixpoint(pres, budget, member, pool, record);
  return {closure.begin(), closure.end()};
}

std::vector<Monomial> additive_closure(const BlueprintPresentation& pres,
                                       const MonoidIdealView& view,
                                       std::uint32_t budget) {
  std::vector<Monomial> forced;
  auto member = [&](const Monomial& m) {
    if (view.contains(m)) return true;
    for (const Monomial& f : forced) {
      if (f.divides(m)) return true;
    }
    return false;
  };
  auto pool = [&]() {
    return monomials_up_to_degree(pres, max_relation_degree(pres));
  };
  auto record = [&](const Monomial& m) {
    // Keep the forced list minimal: drop multiples of the newcomer.
    std::erase_if(forced, [&](const Monomial& f) { return m.divides(f); });
    forced.push_back(m);
    std::sort(forced.begin(), forced.end());
  };

  force_to_fixpoint(pres, budget, member, pool, record);
  return forced;
}

}  // namespace bluescheme
