#include "bluescheme/models.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace bluescheme {
namespace {

std::vector<std::string> numbered_names(std::string_view stem, unsigned first,
                                        unsigned last) {
  std::vector<std::string> names;
  for (unsigned i = first; i <= last; ++i) {
    names.push_back(std::string(stem) + std::to_string(i));
  }
  return names;
}

bool is_prime_number(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Monomial renaming along a generator bijection.
Monomial remap(const Monomial& m, const std::vector<GenIndex>& image) {
  Monomial::Factors factors;
  for (const auto& [idx, exp] : m.factors()) {
    factors.emplace_back(image[idx], exp);
  }
  return Monomial::from_factors(std::move(factors));
}

FormalSum remap(const FormalSum& s, const std::vector<GenIndex>& image) {
  FormalSum out;
  for (const Monomial& t : s.terms()) out.add_term(remap(t, image));
  return out;
}

bool relations_match(const BlueprintPresentation& chart,
                     const BlueprintPresentation& model,
                     const std::vector<GenIndex>& image) {
  std::vector<Relation> lhs;
  for (const Relation& rel : chart.relations()) {
    lhs.emplace_back(remap(rel.first(), image), remap(rel.second(), image));
  }
  std::vector<Relation> rhs = model.relations();
  auto key = [](const Relation& r) { return std::pair(r.first(), r.second()); };
  std::sort(lhs.begin(), lhs.end(), [&](const auto& a, const auto& b) {
    return key(a) < key(b);
  });
  std::sort(rhs.begin(), rhs.end(), [&](const auto& a, const auto& b) {
    return key(a) < key(b);
  });
  return lhs == rhs;
}

std::optional<std::vector<GenIndex>> find_bijection(
    const BlueprintPresentation& chart, const BlueprintPresentation& model) {
  if (chart.generator_count() != model.generator_count()) return std::nullopt;
  std::vector<GenIndex> image(chart.generator_count());
  std::iota(image.begin(), image.end(), 0);
  do {
    if (relations_match(chart, model, image)) return image;
  } while (std::next_permutation(image.begin(), image.end()));
  return std::nullopt;
}

}  // namespace

BlueprintPresentation affine_space(unsigned n) {
  return make_free_blueprint(numbered_names("T", 1, n), std::nullopt,
                             "a" + std::to_string(n));
}

BlueprintPresentation projective_space_presentation(unsigned n) {
  auto names = numbered_names("T", 0, n);
  std::vector<std::uint32_t> degrees(names.size(), 1);
  return make_free_blueprint(std::move(names), std::move(degrees),
                             "p" + std::to_string(n));
}

ProjSpace projective_space(unsigned n, std::uint32_t budget) {
  return make_proj(projective_space_presentation(n), budget);
}

BlueprintPresentation grassmannian_presentation(std::string name) {
  std::vector<std::string> names = {"x12", "x13", "x14",
                                    "x23", "x24", "x34"};
  std::vector<std::uint32_t> degrees(names.size(), 1);
  BlueprintPresentation free =
      make_free_blueprint(std::move(names), std::move(degrees),
                          std::move(name));
  const FormalSum lhs{free.var("x12") * free.var("x34"),
                      free.var("x14") * free.var("x23")};
  const FormalSum rhs{free.var("x13") * free.var("x24")};
  return quotient(free, {Relation(lhs, rhs)});
}

ProjSpace grassmannian_2_4(std::uint32_t budget) {
  return make_proj(grassmannian_presentation(), budget);
}

BlueprintPresentation matrices_2x2(bool twisted) {
  BlueprintPresentation free = make_free_blueprint(
      {"a", "b", "c", "d", "D"}, std::nullopt, twisted ? "m2t" : "m2");
  const Monomial ad = free.var("a") * free.var("d");
  const Monomial bc = free.var("b") * free.var("c");
  const Monomial det = free.var("D");
  const Relation rel = twisted ? Relation(FormalSum{ad, bc}, FormalSum{det})
                               : Relation(FormalSum{ad}, FormalSum{bc, det});
  return quotient(free, {rel});
}

ChartMatch chart_matches_model(const ProjSpace& proj, std::string_view h) {
  const DegreeZeroChart& chart = proj.chart(h);  // throws for unknown h
  for (const bool twisted : {false, true}) {
    const BlueprintPresentation model = matrices_2x2(twisted);
    if (auto image = find_bijection(chart.presentation, model)) {
      ChartMatch match;
      match.matched = true;
      match.twisted = twisted;
      for (GenIndex g = 0; g < chart.presentation.generator_count(); ++g) {
        match.bijection.emplace_back(chart.presentation.generator_name(g),
                                     model.generator_name((*image)[g]));
      }
      return match;
    }
  }
  return {};
}

std::uint64_t CountingPolynomial::evaluate(std::uint64_t q) const {
  std::uint64_t value = 0;
  std::uint64_t power = 1;
  for (std::uint64_t c : coefficients_) {
    value += c * power;
    power *= q - 1;
  }
  return value;
}

CountingPolynomial grassmannian_counting_polynomial() {
  return CountingPolynomial({6, 12, 11, 5, 1});
}

std::uint64_t eval_counting_polynomial(const CountingPolynomial& poly,
                                       std::uint64_t q) {
  return poly.evaluate(q);
}

std::uint64_t count_subspaces_bruteforce(unsigned k, unsigned n, unsigned q) {
  if (!is_prime_number(q)) {
    throw NonPrimeModulusError("q = " + std::to_string(q) +
                               " is not prime; the echelon oracle needs a "
                               "prime field");
  }
  if (q > 7 || n > 5 || k > n) {
    throw BlueprintError("subspace oracle is desk-scale: q <= 7, k <= n <= 5");
  }
  if (k == 0) return 1;

  // A k-dimensional subspace has a unique reduced row-echelon basis, so we
  // enumerate pivot column sets and all fillings of the free entries, verify
  // each matrix is genuinely in reduced form, and count.
  auto verify_rref = [&](const std::vector<std::vector<unsigned>>& m,
                         const std::vector<unsigned>& pivots) {
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < pivots[i]; ++j) {
        if (m[i][j] != 0) return false;
      }
      if (m[i][pivots[i]] != 1) return false;
      for (unsigned r = 0; r < k; ++r) {
        if (r != i && m[r][pivots[i]] != 0) return false;
      }
    }
    return std::is_sorted(pivots.begin(), pivots.end());
  };

  std::uint64_t count = 0;
  std::vector<unsigned> pivots(k);
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = pivots[i] + 1; j < n; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) {
          free_cells.emplace_back(i, j);
        }
      }
    }

    std::vector<unsigned> digits(free_cells.size(), 0);
    while (true) {
      std::vector<std::vector<unsigned>> m(k, std::vector<unsigned>(n, 0));
      for (unsigned i = 0; i < k; ++i) m[i][pivots[i]] = 1;
      for (std::size_t c = 0; c < free_cells.size(); ++c) {
        m[free_cells[c].first][free_cells[c].second] = digits[c];
      }
      if (verify_rref(m, pivots)) ++count;

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == q) {
        digits[pos++] = 0;
      }
      if (pos == digits.size()) break;
    }

    // next pivot combination
    int move = static_cast<int>(k) - 1;
    while (move >= 0 && pivots[move] == n - k + move) --move;
    if (move < 0) break;
    ++pivots[move];
    for (unsigned j = move + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return count;
}

std::optional<BlueprintPresentation> builtin_presentation(
    std::string_view name) {
  if (name == "gr24") return grassmannian_presentation("gr24");
  if (name == "gr24-cone") return grassmannian_presentation("gr24-cone");
  if (name == "m2") return matrices_2x2(false);
  if (name == "m2t") return matrices_2x2(true);
  if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '4') {
    return affine_space(static_cast<unsigned>(name[1] - '0'));
  }
  if (name.size() == 2 && name[0] == 'p' && name[1] >= '0' && name[1] <= '5') {
    return projective_space_presentation(
        static_cast<unsigned>(name[1] - '0'));
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"a1", "a2", "a3", "a4",        "p0",  "p1",
          "p2", "p3", "p4", "p5",        "gr24", "gr24-cone",
          "m2", "m2t"};
}

}  // namespace bluescheme
