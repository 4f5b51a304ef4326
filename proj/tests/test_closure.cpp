#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbwdeg/closure.hpp"
#include "pbwdeg/demazure.hpp"

using namespace pbwdeg;

TEST_CASE("parallel closure matches the serial reference") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"3,2,1", "1,1"},     {"3,2,1", "2,1"},       {"2,4,1,3", "1,0,1"}, {"4,2,3,1", "1,1,1"},
      {"4,3,2,1", "1,0,1"}, {"3,5,1,4,2", "1,0,1,0"}, {"5,3,4,1,2", "0,1,1,0"}};
  for (const auto& [ws, ls] : cases) {
    const Permutation w = Permutation::parse(ws);
    const DominantWeight lambda = DominantWeight::parse(ls);
    for (auto mode : {ActionMode::classical, ActionMode::degenerate}) {
      const auto roots = ordered_inversions(w);
      const auto ref = closure_profile_reference(lambda, roots, mode);
      CHECK_MESSAGE(closure_profile(lambda, roots, mode, 1) == ref, ws << " " << ls);
      CHECK_MESSAGE(closure_profile(lambda, roots, mode, 4) == ref, ws << " " << ls);
    }
  }
}

TEST_CASE("classical closure reproduces the character formula") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      if (n == 5 && length(w) % 3) continue;
      const DominantWeight lambda = DominantWeight::fundamental(n, 1);
      DominantWeight rho(std::vector<int>(n - 1, 1));
      for (const auto& l : {lambda, rho}) {
        ClosureStats stats;
        const auto p = closure_profile(l, ordered_inversions(w), ActionMode::classical, 0, &stats);
        CHECK(p.total() == demazure_dim(w, l));
        CHECK(stats.accepted + 1 == p.total());
      }
    }
}

TEST_CASE("empty root set gives the line through the top vector") {
  const auto p = closure_profile(DominantWeight({1, 2}), {}, ActionMode::degenerate);
  CHECK(p.total() == 1);
  CHECK(p.max_grade() == 0);
}
