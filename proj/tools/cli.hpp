#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbwdeg/rootsystem.hpp"
#include "pbwdeg/serialize.hpp"

namespace pbwdeg::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

enum class Format { json, csv, text };

struct RunConfig {
  std::optional<int> n;
  std::string w;
  std::string lambda;
  std::string mu;
  int max_coord = 1;
  std::string filter = "all";
  Format format = Format::json;
  std::string cache_dir;
  int jobs = 0;
  std::string checkpoint;
  std::string only;  // verify-counterexample: "", "lambda" or "mu"
  bool points = false;
};

struct SweepRecord {
  int n = 0;
  Permutation w;
  DominantWeight lambda;
  std::int64_t d_dim = 0;
  std::int64_t e_dim = 0;
  std::int64_t kernel_total = 0;
  std::int64_t gamma_count = 0;
  bool is_triangular = false;
  double elapsed = 0;
};

Json to_json(const SweepRecord& r);
SweepRecord sweep_record_from_json(const Json& j);
/// Header plus one line per record, columns in SweepRecord field order.
std::string to_csv(const std::vector<SweepRecord>& records);

/// Results of pure computations keyed by (kind, w, lambda). Entries with a
/// different format version or key are ignored.
class ResultCache {
public:
  static constexpr int kFormatVersion = 1;

  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(const std::string& kind, const Permutation& w, const DominantWeight& lambda) const;
  void store(const std::string& kind, const Permutation& w, const DominantWeight& lambda, const Json& result) const;
  std::filesystem::path path_for(const std::string& kind, const Permutation& w,
                                 const DominantWeight& lambda) const;

private:
  static std::string key(const std::string& kind, const Permutation& w, const DominantWeight& lambda);
  std::string dir_;
};

Json cmd_inversions(const RunConfig& cfg);
Json cmd_demazure_dim(const RunConfig& cfg);
Json cmd_demazure_profile(const RunConfig& cfg);
Json cmd_cartan(const RunConfig& cfg);
Json cmd_kernel(const RunConfig& cfg);
Json cmd_fflv_count(const RunConfig& cfg);
/// Returns the certificate; `passed` receives all_pass().
Json cmd_verify_q(const RunConfig& cfg, bool& passed);

struct CheckRow {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

std::vector<CheckRow> counterexample_checks(const RunConfig& cfg);
int cmd_verify_counterexample(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// All records of the sweep in canonical (w, lambda) order. Records already
/// present in the checkpoint file are reused; new ones are appended to it.
std::vector<SweepRecord> cmd_sweep(const RunConfig& cfg, std::ostream& err, int* failures = nullptr);

/// Full command line entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pbwdeg::cli
