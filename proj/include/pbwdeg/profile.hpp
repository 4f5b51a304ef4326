#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "pbwdeg/rootsystem.hpp"

namespace pbwdeg {

/// Dimensions refined by (grade, T_0-weight).
class GradedProfile {
public:
  using Key = std::pair<int, WeightVector>;

  void add(int grade, const WeightVector& wt, std::int64_t dim);

  const std::map<Key, std::int64_t>& cells() const { return cells_; }
  std::int64_t total() const { return total_; }
  std::int64_t at(int grade, const WeightVector& wt) const;
  std::map<int, std::int64_t> by_grade() const;
  int max_grade() const;

  friend bool operator==(const GradedProfile&, const GradedProfile&) = default;

private:
  std::map<Key, std::int64_t> cells_;
  std::int64_t total_ = 0;
};

}  // namespace pbwdeg
