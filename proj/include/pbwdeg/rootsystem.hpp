#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pbwdeg {

/// Thrown for malformed user input (bad permutation, bad weight, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant is violated. Never caused by bad input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Largest rank supported; wedge indices are stored as 16-bit masks.
inline constexpr int kMaxN = 16;

/// Negative root label f_{i,j}, 1 <= i < j <= n.
struct RootIndex {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

/// Order of the generators used for closures and for the monomial order:
/// i+j increasing, then j increasing.
struct RootOrder {
  constexpr bool operator()(const RootIndex& a, const RootIndex& b) const {
    if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
    return a.j < b.j;
  }
};

std::string to_string(const RootIndex& r);

/// Element of S_n in one-line notation, 1-indexed: image()[p-1] == w(p).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int p) const { return image_[p - 1]; }
  const std::vector<int>& image() const { return image_; }

  /// Right multiplication by the simple transposition s_i (swaps positions i, i+1).
  Permutation times_simple(int i) const;
  Permutation inverse() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

/// Pairs (i,j), i<j, with w(i) > w(j), sorted lexicographically.
std::vector<RootIndex> inversions(const Permutation& w);
/// Same set, sorted by RootOrder.
std::vector<RootIndex> ordered_inversions(const Permutation& w);
std::vector<RootIndex> all_roots(int n);

int length(const Permutation& w);

/// Avoids both 4231 and 2413.
bool is_triangular(const Permutation& w);

/// Reduced word via greedy descents: w = s_{word[0]} s_{word[1]} ... .
/// `choose` picks among the available right descents; the default takes the first.
std::vector<int> reduced_word(const Permutation& w);
std::vector<int> reduced_word(const Permutation& w,
                              const std::function<int(const std::vector<int>&)>& choose);

/// Product s_{word[0]} ... s_{word[l-1]} in S_n.
Permutation word_product(int n, const std::vector<int>& word);

std::vector<Permutation> all_permutations(int n);

/// a_1 w_1 + ... + a_{n-1} w_{n-1}; coordinates in the fundamental weight basis.
class DominantWeight {
public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> coords);

  static DominantWeight parse(std::string_view text);
  static DominantWeight fundamental(int n, int k);

  int n() const { return static_cast<int>(coords_.size()) + 1; }
  int operator[](int k) const { return coords_[k - 1]; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_zero() const;

  /// GL_n partition (sum_{k>=1} a_k, sum_{k>=2} a_k, ..., 0).
  std::vector<int> partition() const;

  std::string to_string() const;

  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
  std::vector<int> coords_;
};

/// Indices k with a_k > 0, increasing. Empty for the zero weight.
std::vector<int> support(const DominantWeight& lambda);

/// Dimension of L_lambda by the Weyl dimension formula.
std::int64_t weyl_dimension(const DominantWeight& lambda);

/// T_0-weight in e_1..e_n coordinates, normalised so the minimum entry is 0.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> e);

  const std::vector<int>& coords() const { return e_; }
  std::string to_string() const;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<int> e_;
};

std::vector<int> parse_int_list(std::string_view text);

}  // namespace pbwdeg
