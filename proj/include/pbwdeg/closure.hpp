#pragma once

// Span closure of the highest tensor t_lambda under a set of root vectors.
//
// degenerate: grade-synchronous closure in T_lambda^a. Cell (m, wt) is the
//   dimension of the grade-m, weight-wt part of U(n^a) t_lambda^a.
// classical: PBW filtration of U(n) t_lambda in T_lambda. Cell (m, wt) is
//   dim of the wt-part of span_{<=m} minus that of span_{<=m-1}.
//
// closure_profile splits every step into weight buckets and processes the
// buckets with OpenMP; closure_profile_reference is the serial single-span
// version kept as a test oracle.

#include <vector>

#include "pbwdeg/profile.hpp"
#include "pbwdeg/rootsystem.hpp"
#include "pbwdeg/wedgerep.hpp"

namespace pbwdeg {

struct ClosureStats {
  int steps = 0;
  std::int64_t candidates = 0;
  std::int64_t accepted = 0;
  std::size_t weight_buckets = 0;
};

/// `jobs` <= 0 uses the OpenMP default thread count.
GradedProfile closure_profile(const DominantWeight& lambda, const std::vector<RootIndex>& roots,
                              ActionMode mode, int jobs = 0, ClosureStats* stats = nullptr);

GradedProfile closure_profile_reference(const DominantWeight& lambda,
                                        const std::vector<RootIndex>& roots, ActionMode mode);

}  // namespace pbwdeg
