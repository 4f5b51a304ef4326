#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbwdeg/demazure.hpp"

using namespace pbwdeg;

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::vector<DominantWeight> small_weights(int n, int bound) {
  std::vector<DominantWeight> out;
  std::vector<int> c(n - 1, 0);
  for (;;) {
    int pos = n - 2;
    while (pos >= 0 && c[pos] == bound) c[pos--] = 0;
    if (pos < 0) break;
    ++c[pos];
    out.emplace_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("counterexample dimensions") {
  const Permutation w = Permutation::parse("6,4,2,5,3,1");
  CHECK(demazure_dim(w, DominantWeight({1, 1, 0, 1, 1})) == 2942);
  CHECK(demazure_dim(w, DominantWeight({2, 1, 0, 1, 1})) == 8226);
}

TEST_CASE("trivial and longest elements") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lambda : small_weights(n, 2)) {
      CHECK(demazure_dim(Permutation::identity(n), lambda) == 1);
      CHECK(demazure_dim(Permutation::longest(n), lambda) == weyl_dimension(lambda));
    }
    for (int k = 1; k < n; ++k)
      CHECK(demazure_dim(Permutation::longest(n), DominantWeight::fundamental(n, k)) == binomial(n, k));
  }
}

TEST_CASE("reduced word independence") {
  std::mt19937 rng(11);
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      if (length(w) < 3) continue;
      for (const auto& lambda : small_weights(n, 1)) {
        const auto first = demazure_character(reduced_word(w), lambda);
        const auto last = demazure_character(
            reduced_word(w, [](const std::vector<int>& d) { return d.back(); }), lambda);
        const auto random = demazure_character(reduced_word(w, [&](const std::vector<int>& d) {
                                                 return d[rng() % d.size()];
                                               }),
                                               lambda);
        CHECK(first == last);
        CHECK(first == random);
      }
    }
}

TEST_CASE("single divided difference") {
  const CharacterPolynomial e1{{{1, 0, 0}, 1}};
  CHECK(demazure_operator(1, e1) == CharacterPolynomial{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}});
  CHECK(demazure_operator(2, e1) == e1);
  CHECK(demazure_operator(1, CharacterPolynomial{{{0, 1, 0}, 1}}).empty());
  const CharacterPolynomial two{{{2, 0, 0}, 1}};
  CHECK(demazure_operator(1, two) == CharacterPolynomial{{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 2, 0}, 1}});
}

TEST_CASE("fundamental bases have the Demazure dimension") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (int k = 1; k < n; ++k)
        CHECK(static_cast<std::int64_t>(fund_basis(w, k).size()) ==
              demazure_dim(w, DominantWeight::fundamental(n, k)));
  const Permutation w = Permutation::parse("6,4,2,5,3,1");
  CHECK(fund_basis(w, 2).size() == 14);
  CHECK(fund_basis(Permutation::identity(6), 3) == std::vector<WedgeIndex>{WedgeIndex::highest(3)});
}

TEST_CASE("classical filtration profile") {
  const auto trivial = classical_filtration_profile(Permutation::identity(4), DominantWeight({1, 0, 2}));
  CHECK(trivial.total() == 1);
  CHECK(trivial.cells().size() == 1);
  CHECK(trivial.cells().begin()->first.first == 0);

  for (int n = 3; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& lambda : small_weights(n, 1)) {
        const auto p = classical_filtration_profile(w, lambda, 1);
        CHECK(p.total() == demazure_dim(w, lambda));
        CHECK(p.by_grade().at(0) == 1);
      }
}

TEST_CASE("rank mismatch is an input error") {
  CHECK_THROWS_AS(demazure_dim(Permutation::identity(4), DominantWeight({1, 1})), InputError);
}
