#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbwdeg/exactlinalg.hpp"
#include "pbwdeg/rootsystem.hpp"

namespace pbwdeg {

/// Basis vector b_{i_1,...,i_k} of the k-th exterior power, stored as a bitmask
/// (bit m-1 set iff m is among the i's). The level k is the popcount.
class WedgeIndex {
public:
  constexpr WedgeIndex() = default;
  constexpr explicit WedgeIndex(std::uint16_t mask) : mask_(mask) {}
  explicit WedgeIndex(const std::vector<int>& entries);
  WedgeIndex(std::initializer_list<int> entries) : WedgeIndex(std::vector<int>(entries)) {}

  /// (1, ..., k): the highest weight vector of level k.
  static constexpr WedgeIndex highest(int k) {
    return WedgeIndex(static_cast<std::uint16_t>((1u << k) - 1u));
  }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr int level() const { return std::popcount(mask_); }
  constexpr bool contains(int m) const { return (mask_ >> (m - 1)) & 1u; }
  std::vector<int> entries() const;
  std::string to_string() const;

  friend constexpr bool operator==(WedgeIndex a, WedgeIndex b) { return a.mask_ == b.mask_; }
  /// Lexicographic on the increasing tuples (for equal levels).
  friend constexpr bool operator<(WedgeIndex a, WedgeIndex b) {
    const std::uint16_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    const std::uint16_t low = diff & static_cast<std::uint16_t>(-diff);
    return (a.mask_ & low) != 0;
  }

private:
  std::uint16_t mask_ = 0;
};

/// All level-k indices over 1..n, in lexicographic order.
std::vector<WedgeIndex> wedge_basis(int n, int k);

/// Number of entries exceeding the level.
constexpr int pbw_degree(WedgeIndex s) {
  return std::popcount(static_cast<unsigned>(s.mask() >> s.level()));
}

struct SignedWedge {
  int sign;
  WedgeIndex index;
  friend bool operator==(const SignedWedge&, const SignedWedge&) = default;
};

/// f_{i,j} b_S: replace i by j, re-sort; sign (-1)^{#{s in S: i<s<j}}.
std::optional<SignedWedge> act_classical(RootIndex r, WedgeIndex s);
/// Associated graded action: defined only when i <= k < j.
std::optional<SignedWedge> act_degenerate(RootIndex r, WedgeIndex s);

enum class ActionMode { classical, degenerate };

inline std::optional<SignedWedge> act(ActionMode mode, RootIndex r, WedgeIndex s) {
  return mode == ActionMode::classical ? act_classical(r, s) : act_degenerate(r, s);
}

inline constexpr int kMaxFactors = 16;

/// Levels of the factors of Sym^{a_1}(L_{w_1}) (x) ... (x) Sym^{a_{n-1}}(L_{w_{n-1}}),
/// level k repeated a_k times, increasing.
class FactorShape {
public:
  FactorShape() = default;
  explicit FactorShape(const DominantWeight& lambda);

  int n() const { return n_; }
  int size() const { return static_cast<int>(levels_.size()); }
  int level(int slot) const { return levels_[slot]; }
  const std::vector<int>& levels() const { return levels_; }
  /// Half-open slot range [first, last) of the group containing `slot`.
  std::pair<int, int> group_of(int slot) const { return groups_[slot]; }
  /// Sum of a_k * min(k, n-k).
  int max_grade() const;

private:
  int n_ = 0;
  std::vector<int> levels_;
  std::vector<std::pair<int, int>> groups_;
};

/// Basis vector of T_lambda: one wedge index per factor slot, sorted within
/// each group of equal levels.
class TensorIndex {
public:
  TensorIndex() = default;
  static TensorIndex highest(const FactorShape& shape);
  static TensorIndex parse(std::string_view text);

  int size() const { return size_; }
  WedgeIndex operator[](int slot) const { return WedgeIndex(comps_[slot]); }
  /// Replaces the component at `slot` and restores the group's sorted order.
  TensorIndex with_component(const FactorShape& shape, int slot, WedgeIndex s) const;
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const TensorIndex& a, const TensorIndex& b) {
    if (a.size_ != b.size_) return false;
    for (int t = 0; t < a.size_; ++t)
      if (a.comps_[t] != b.comps_[t]) return false;
    return true;
  }
  friend bool operator<(const TensorIndex& a, const TensorIndex& b) {
    const int m = a.size_ < b.size_ ? a.size_ : b.size_;
    for (int t = 0; t < m; ++t) {
      if (a.comps_[t] != b.comps_[t]) return WedgeIndex(a.comps_[t]) < WedgeIndex(b.comps_[t]);
    }
    return a.size_ < b.size_;
  }

private:
  std::array<std::uint16_t, kMaxFactors> comps_{};
  std::uint8_t size_ = 0;
};

struct TensorIndexHash {
  std::size_t operator()(const TensorIndex& t) const { return t.hash(); }
};

using TensorVector = SparseVector<TensorIndex>;

/// Leibniz action of f_{i,j} on a basis tensor.
TensorVector tensor_act(ActionMode mode, RootIndex r, const TensorIndex& t, const FactorShape& shape);
/// Linear extension to vectors.
TensorVector tensor_act(ActionMode mode, RootIndex r, const TensorVector& v, const FactorShape& shape);

/// Content count: e-coordinate m counts occurrences of m over all components.
std::vector<int> content(const TensorIndex& t, int n);
WeightVector torus_weight(const TensorIndex& t, int n);
int total_grade(const TensorIndex& t);

}  // namespace pbwdeg
