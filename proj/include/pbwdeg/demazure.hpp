#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pbwdeg/profile.hpp"
#include "pbwdeg/rootsystem.hpp"
#include "pbwdeg/wedgerep.hpp"

namespace pbwdeg {

/// Level-k indices S whose sorted w-images are bounded entrywise by the
/// sorted w-images of (1..k). These b_S span the fundamental Demazure module.
std::vector<WedgeIndex> fund_basis(const Permutation& w, int k);

/// GL_n character: exponent vector -> multiplicity.
using CharacterPolynomial = std::map<std::vector<int>, std::int64_t>;

/// Demazure operator pi_i f = (f - x^{-alpha_i} s_i f) / (1 - x^{-alpha_i}).
/// Throws ConsistencyError if the numerator is not divisible.
CharacterPolynomial demazure_operator(int i, const CharacterPolynomial& f);

/// pi_{word[0]} ... pi_{word[l-1]} x^lambda.
CharacterPolynomial demazure_character(const std::vector<int>& word, const DominantWeight& lambda);

std::int64_t demazure_dim(const Permutation& w, const DominantWeight& lambda);
std::int64_t demazure_dim(const std::vector<int>& word, const DominantWeight& lambda);

/// PBW filtration of U(n_{-w}) v_lambda, refined by weight. Total equals demazure_dim.
GradedProfile classical_filtration_profile(const Permutation& w, const DominantWeight& lambda,
                                           int jobs = 0);

void require_same_rank(const Permutation& w, const DominantWeight& lambda);

}  // namespace pbwdeg
