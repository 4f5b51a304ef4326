#include "pbwdeg/cartan.hpp"

#include <set>

#include "pbwdeg/closure.hpp"
#include "pbwdeg/demazure.hpp"

namespace pbwdeg {

GradedProfile cartan_profile(const Permutation& w, const DominantWeight& lambda, int jobs) {
  require_same_rank(w, lambda);
  return closure_profile(lambda, ordered_inversions(w), ActionMode::degenerate, jobs);
}

KernelReport kernel_from_profiles(const GradedProfile& classical, const GradedProfile& cartan) {
  KernelReport report;
  report.d_dim = classical.total();
  report.e_dim = cartan.total();

  std::set<GradedProfile::Key> keys;
  for (const auto& [key, dim] : classical.cells()) keys.insert(key);
  for (const auto& [key, dim] : cartan.cells()) keys.insert(key);

  for (const auto& key : keys) {
    const std::int64_t diff = classical.at(key.first, key.second) - cartan.at(key.first, key.second);
    if (diff < 0)
      throw ConsistencyError("negative kernel cell at grade " + std::to_string(key.first) +
                             ", weight " + key.second.to_string());
    if (diff > 0) {
      report.cells.emplace(key, diff);
      report.kernel_total += diff;
    }
  }
  if (report.kernel_total != report.d_dim - report.e_dim)
    throw ConsistencyError("kernel cells do not sum to d_dim - e_dim");
  return report;
}

KernelReport kernel_profile(const Permutation& w, const DominantWeight& lambda, int jobs) {
  const GradedProfile classical = classical_filtration_profile(w, lambda, jobs);
  const GradedProfile cartan = cartan_profile(w, lambda, jobs);
  return kernel_from_profiles(classical, cartan);
}

std::int64_t degenerate_flag_dim(const DominantWeight& lambda, int jobs) {
  return closure_profile(lambda, all_roots(lambda.n()), ActionMode::degenerate, jobs).total();
}

}  // namespace pbwdeg
