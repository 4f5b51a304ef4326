#include "pbwdeg/profile.hpp"

namespace pbwdeg {

void GradedProfile::add(int grade, const WeightVector& wt, std::int64_t dim) {
  if (dim == 0) return;
  cells_[{grade, wt}] += dim;
  total_ += dim;
}

std::int64_t GradedProfile::at(int grade, const WeightVector& wt) const {
  auto it = cells_.find({grade, wt});
  return it == cells_.end() ? 0 : it->second;
}

std::map<int, std::int64_t> GradedProfile::by_grade() const {
  std::map<int, std::int64_t> out;
  for (const auto& [key, dim] : cells_) out[key.first] += dim;
  return out;
}

int GradedProfile::max_grade() const {
  int m = -1;
  for (const auto& [key, dim] : cells_)
    if (dim > 0 && key.first > m) m = key.first;
  return m;
}

}  // namespace pbwdeg
