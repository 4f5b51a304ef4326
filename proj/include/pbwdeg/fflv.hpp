#pragma once

#include <cstdint>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pbwdeg/rootsystem.hpp"
#include "pbwdeg/wedgerep.hpp"

namespace pbwdeg {

/// Monomial in the commuting f^a_{i,j}: root -> positive exponent.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(const std::vector<RootIndex>& factors);

  int degree() const { return degree_; }
  int exponent(const RootIndex& r) const;
  const std::map<RootIndex, int, RootOrder>& exponents() const { return exps_; }

  ExponentVector operator+(const ExponentVector& other) const;
  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
  std::map<RootIndex, int, RootOrder> exps_;
  int degree_ = 0;
};

/// Graded lexicographic order: lower degree first; otherwise the first root
/// (in RootOrder) with unequal exponents decides, lower exponent is smaller.
std::strong_ordering monomial_cmp(const ExponentVector& a, const ExponentVector& b);

struct MonomialLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return monomial_cmp(a, b) < 0;
  }
};

using LatticeSet = std::set<ExponentVector, MonomialLess>;

/// Applies the degenerate monomial to b_S. Returns the signed result, if nonzero.
std::optional<SignedWedge> apply_monomial(const ExponentVector& m, WedgeIndex s);

/// Least monomial in the inversion roots of w taking v_{omega_k} to a nonzero
/// multiple of b_S. Throws InputError when S is not in fund_basis(w, k).
ExponentVector minimal_monomial(const Permutation& w, int k, WedgeIndex s);

LatticeSet gamma_set(const Permutation& w, int k);

struct MinkowskiResult {
  LatticeSet points;
  std::int64_t cardinality = 0;
};

/// Sum of a_k copies of gamma_set(w, k) over all k.
MinkowskiResult minkowski_count(const Permutation& w, const DominantWeight& lambda);

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b);

}  // namespace pbwdeg
