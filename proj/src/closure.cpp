#include "pbwdeg/closure.hpp"

#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pbwdeg/exactlinalg.hpp"

namespace pbwdeg {
namespace {

using Content = std::vector<int>;

struct FrontierItem {
  Content wt;
  TensorVector vec;
};

Content shifted(const Content& wt, RootIndex r) {
  Content out = wt;
  --out[r.i - 1];
  ++out[r.j - 1];
  return out;
}

// Candidate f_r * frontier[item] destined for one weight bucket.
struct Task {
  std::size_t item;
  std::size_t root;
};

struct Bucket {
  Content wt;
  std::vector<Task> tasks;
  EchelonSpan<TensorIndex>* span = nullptr;
  std::vector<TensorVector> accepted;
  std::int64_t candidates = 0;
};

int resolve_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace

GradedProfile closure_profile(const DominantWeight& lambda, const std::vector<RootIndex>& roots,
                              ActionMode mode, int jobs, ClosureStats* stats) {
  const FactorShape shape(lambda);
  const int n = lambda.n();
  const bool cumulative = mode == ActionMode::classical;
  const int threads = resolve_jobs(jobs);

  GradedProfile profile;
  ClosureStats local;
  const TensorIndex top = TensorIndex::highest(shape);
  std::vector<FrontierItem> frontier{{content(top, n), TensorVector::unit(top)}};
  profile.add(0, WeightVector(frontier.front().wt), 1);

  // Persistent per-weight spans for the filtration; the top vector seeds its own.
  std::map<Content, EchelonSpan<TensorIndex>> filtration;
  if (cumulative) filtration[frontier.front().wt].insert(frontier.front().vec);

  for (int step = 1; !frontier.empty(); ++step) {
    std::map<Content, std::size_t> slot_of;
    std::vector<Bucket> buckets;
    for (std::size_t item = 0; item < frontier.size(); ++item) {
      for (std::size_t root = 0; root < roots.size(); ++root) {
        Content wt = shifted(frontier[item].wt, roots[root]);
        auto [it, fresh] = slot_of.try_emplace(wt, buckets.size());
        if (fresh) buckets.push_back(Bucket{std::move(wt), {}, nullptr, {}, 0});
        buckets[it->second].tasks.push_back({item, root});
      }
    }
    // Canonical bucket order: by weight.
    std::vector<Bucket> ordered;
    ordered.reserve(buckets.size());
    for (auto& [wt, slot] : slot_of) ordered.push_back(std::move(buckets[slot]));
    buckets = std::move(ordered);

    std::vector<EchelonSpan<TensorIndex>> graded_spans;
    if (cumulative) {
      for (auto& b : buckets) b.span = &filtration[b.wt];
    } else {
      graded_spans.resize(buckets.size());
      for (std::size_t b = 0; b < buckets.size(); ++b) buckets[b].span = &graded_spans[b];
    }

    const auto count = static_cast<std::int64_t>(buckets.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
    for (std::int64_t b = 0; b < count; ++b) {
      Bucket& bucket = buckets[b];
      for (const Task& task : bucket.tasks) {
        TensorVector v = tensor_act(mode, roots[task.root], frontier[task.item].vec, shape);
        if (v.is_zero()) continue;
        ++bucket.candidates;
        if (bucket.span->insert(v)) bucket.accepted.push_back(std::move(v));
      }
    }

    std::vector<FrontierItem> next;
    for (auto& bucket : buckets) {
      local.candidates += bucket.candidates;
      if (bucket.accepted.empty()) continue;
      profile.add(step, WeightVector(bucket.wt), static_cast<std::int64_t>(bucket.accepted.size()));
      for (auto& v : bucket.accepted) next.push_back({bucket.wt, std::move(v)});
    }
    local.weight_buckets += buckets.size();
    local.accepted += static_cast<std::int64_t>(next.size());
    if (!next.empty()) local.steps = step;
    frontier = std::move(next);
  }

  if (stats) *stats = local;
  return profile;
}

GradedProfile closure_profile_reference(const DominantWeight& lambda,
                                        const std::vector<RootIndex>& roots, ActionMode mode) {
  const FactorShape shape(lambda);
  const int n = lambda.n();
  const TensorIndex top = TensorIndex::highest(shape);

  // One global span. Weight and grade spaces are independent, so acceptance
  // counts per (step, weight) agree with the bucketed computation.
  EchelonSpan<TensorIndex> span;
  GradedProfile profile;
  std::vector<TensorVector> frontier{TensorVector::unit(top)};
  span.insert(frontier.front());
  profile.add(0, torus_weight(top, n), 1);

  for (int step = 1; !frontier.empty(); ++step) {
    std::vector<TensorVector> next;
    for (const auto& x : frontier) {
      for (const RootIndex& r : roots) {
        TensorVector v = tensor_act(mode, r, x, shape);
        if (v.is_zero()) continue;
        if (span.insert(v)) {
          profile.add(step, torus_weight(v.leading().first, n), 1);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return profile;
}

}  // namespace pbwdeg
