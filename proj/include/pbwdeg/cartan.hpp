#pragma once

#include <cstdint>
#include <map>

#include "pbwdeg/profile.hpp"
#include "pbwdeg/rootsystem.hpp"

namespace pbwdeg {

/// (grade, weight) dimensions of E_{w lambda} = U(n_{-w}^a) t_lambda^a.
GradedProfile cartan_profile(const Permutation& w, const DominantWeight& lambda, int jobs = 0);

/// Dimension data of the kernel of D~_{w lambda}^a -> L_lambda^a.
struct KernelReport {
  std::int64_t d_dim = 0;
  std::int64_t e_dim = 0;
  std::int64_t kernel_total = 0;
  std::map<GradedProfile::Key, std::int64_t> cells;

  friend bool operator==(const KernelReport&, const KernelReport&) = default;
};

/// Cellwise difference of the two profiles. Throws ConsistencyError on a
/// negative cell or when the totals disagree.
KernelReport kernel_from_profiles(const GradedProfile& classical, const GradedProfile& cartan);

KernelReport kernel_profile(const Permutation& w, const DominantWeight& lambda, int jobs = 0);

/// Closure of t_lambda^a under every f^a_{i,j}; equals dim L_lambda.
std::int64_t degenerate_flag_dim(const DominantWeight& lambda, int jobs = 0);

}  // namespace pbwdeg
