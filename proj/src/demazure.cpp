#include "pbwdeg/demazure.hpp"

#include <algorithm>

#include "pbwdeg/closure.hpp"

namespace pbwdeg {

void require_same_rank(const Permutation& w, const DominantWeight& lambda) {
  if (w.n() != lambda.n())
    throw InputError("permutation of " + std::to_string(w.n()) + " letters needs a weight with " +
                     std::to_string(w.n() - 1) + " coordinates");
}

std::vector<WedgeIndex> fund_basis(const Permutation& w, int k) {
  const int n = w.n();
  if (k < 1 || k >= n) throw InputError("level must be in 1..n-1");
  std::vector<int> bound(k);
  for (int p = 1; p <= k; ++p) bound[p - 1] = w(p);
  std::sort(bound.begin(), bound.end());

  std::vector<WedgeIndex> out;
  for (WedgeIndex s : wedge_basis(n, k)) {
    std::vector<int> images;
    for (int m : s.entries()) images.push_back(w(m));
    std::sort(images.begin(), images.end());
    bool ok = true;
    for (int l = 0; l < k && ok; ++l) ok = images[l] <= bound[l];
    if (ok) out.push_back(s);
  }
  return out;
}

CharacterPolynomial demazure_operator(int i, const CharacterPolynomial& f) {
  // Numerator f - x^{-alpha} s_i f.
  CharacterPolynomial num = f;
  for (const auto& [beta, c] : f) {
    std::vector<int> img = beta;
    std::swap(img[i - 1], img[i]);
    --img[i - 1];
    ++img[i];
    if ((num[img] -= c) == 0) num.erase(img);
  }

  // Divide by (1 - t), t = x^{-alpha}, one alpha-string at a time:
  // q_beta = N_beta + q_{beta+alpha}, walking down each string.
  // String key: beta with (beta_i, beta_{i+1}) -> (0, beta_i + beta_{i+1}).
  std::map<std::vector<int>, std::map<int, std::int64_t, std::greater<>>> strings;
  for (const auto& [beta, c] : num) {
    std::vector<int> key = beta;
    key[i] += key[i - 1];
    key[i - 1] = 0;
    strings[key][beta[i - 1]] += c;
  }

  CharacterPolynomial out;
  for (const auto& [key, terms] : strings) {
    const int top = terms.begin()->first;
    const int bottom = terms.rbegin()->first;
    std::int64_t carry = 0;
    for (int b = top; b >= bottom; --b) {
      auto it = terms.find(b);
      if (it != terms.end()) carry += it->second;
      if (b == bottom) break;
      if (carry != 0) {
        std::vector<int> beta = key;
        beta[i - 1] = b;
        beta[i] = key[i] - b;
        out[beta] += carry;
      }
    }
    if (carry != 0)
      throw ConsistencyError("Demazure operator: numerator not divisible by 1 - x^{-alpha_" +
                             std::to_string(i) + "}");
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

CharacterPolynomial demazure_character(const std::vector<int>& word, const DominantWeight& lambda) {
  CharacterPolynomial ch{{lambda.partition(), 1}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it >= lambda.n()) throw InputError("reduced word letter out of range");
    ch = demazure_operator(*it, ch);
  }
  return ch;
}

std::int64_t demazure_dim(const std::vector<int>& word, const DominantWeight& lambda) {
  std::int64_t dim = 0;
  for (const auto& [beta, c] : demazure_character(word, lambda)) dim += c;
  return dim;
}

std::int64_t demazure_dim(const Permutation& w, const DominantWeight& lambda) {
  require_same_rank(w, lambda);
  return demazure_dim(reduced_word(w), lambda);
}

GradedProfile classical_filtration_profile(const Permutation& w, const DominantWeight& lambda,
                                           int jobs) {
  require_same_rank(w, lambda);
  return closure_profile(lambda, ordered_inversions(w), ActionMode::classical, jobs);
}

}  // namespace pbwdeg
