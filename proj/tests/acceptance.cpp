// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "minimal_sets.hpp"
#include "pbwdeg/cartan.hpp"
#include "pbwdeg/demazure.hpp"
#include "pbwdeg/fflv.hpp"
#include "pbwdeg/plucker.hpp"

using namespace pbwdeg;

namespace {

const Permutation kW = Permutation::parse("6,4,2,5,3,1");
const DominantWeight kLambda({1, 1, 0, 1, 1});
const DominantWeight kMu({2, 1, 0, 1, 1});

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what;
      else detail << "; " << what;
      pass = false;
    }
  }
};

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pbwdeg");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

void criterion1(Outcome& o) {
  for (const auto& [lambda, expected] : {std::pair{kLambda, 2942}, std::pair{kMu, 8226}}) {
    const auto formula = demazure_dim(kW, lambda);
    const auto closure = classical_filtration_profile(kW, lambda).total();
    o.expect(formula == expected, lambda.to_string() + ": character formula gave " + std::to_string(formula));
    o.expect(closure == expected, lambda.to_string() + ": classical closure gave " + std::to_string(closure));
  }
  o.detail << (o.pass ? "dim D = 2942 and 8226 by both methods" : "");
}

void criterion2(Outcome& o) {
  for (const auto& [lambda, expected] : {std::pair{kLambda, 2941}, std::pair{kMu, 8221}}) {
    const auto e = cartan_profile(kW, lambda).total();
    o.expect(e == expected, lambda.to_string() + ": dim E = " + std::to_string(e));
  }
  o.detail << (o.pass ? "dim E = 2941 and 8221" : "");
}

void criterion3(Outcome& o) {
  const auto kl = kernel_profile(kW, kLambda);
  o.expect(kl.kernel_total == 1, "lambda kernel total " + std::to_string(kl.kernel_total));
  o.expect(kl.cells.size() == 1, "lambda kernel cells " + std::to_string(kl.cells.size()));
  for (const auto& [key, dim] : kl.cells) o.expect(key.first == 7 && dim == 1, "lambda kernel off grade 7");

  const auto km = kernel_profile(kW, kMu);
  o.expect(km.kernel_total == 5, "mu kernel total " + std::to_string(km.kernel_total));
  o.expect(km.cells.size() == 5, "mu kernel cells " + std::to_string(km.cells.size()));
  std::set<WeightVector> weights;
  for (const auto& [key, dim] : km.cells) {
    o.expect(key.first == 8 && dim == 1, "mu kernel cell off grade 8 or of dimension > 1");
    weights.insert(key.second);
  }
  o.expect(weights.size() == 5, "mu kernel weights not pairwise distinct");
  o.detail << (o.pass ? "kernel 1 at grade 7; 5 one-dimensional cells at grade 8 with distinct weights" : "");
}

void criterion4(Outcome& o) {
  const auto gl = minkowski_count(kW, kLambda).cardinality;
  const auto gm = minkowski_count(kW, kMu).cardinality;
  o.expect(gl == 2941, "|Gamma_lambda| = " + std::to_string(gl));
  o.expect(gm == 8221, "|Gamma_mu| = " + std::to_string(gm));
  for (const auto& [k, list] : reference::minimal_sets()) {
    const auto got = gamma_set(kW, k);
    o.expect(got == reference::as_lattice(list), "Gamma_omega" + std::to_string(k) + " differs (size " +
                                                 std::to_string(got.size()) + ")");
  }
  o.detail << (o.pass ? "|Gamma| = 2941 and 8221; four fundamental sets match (6, 14, 14, 6)" : "");
}

void criterion5(Outcome& o) {
  const std::vector<std::pair<std::vector<int>, std::string>> listed{
      {{6}, "z[1,6]"},
      {{4, 5}, "z[1,4]*z[2,5]"},
      {{2, 4, 5, 6}, "-z[1,5]*z[3,6]"},
      {{1, 3, 4, 5, 6}, "-z[2,6]"},
      {{5}, "z[1,5]"},
      {{4, 6}, "z[1,4]*z[2,6]"},
      {{1, 4, 5, 6}, "z[2,5]*z[3,6]"},
      {{2, 3, 4, 5, 6}, "z[1,6]"},
  };
  for (const auto& [s, text] : listed) {
    const auto got = pw_poly(kW, WedgeIndex(s)).to_string();
    o.expect(got == text, "p^w" + WedgeIndex(s).to_string() + " = " + got);
  }
  const QCertificate cert = verify_q(kW);
  o.expect(cert.restricted_zero, "restricted evaluation of Q is nonzero");
  o.expect(cert.full_nonzero, "full evaluation of Q is zero");
  o.expect(cert.excluded_empty, "excluded-symbol enumeration not empty");
  o.expect(cert.divisibility_ok, "p[4,5] divisibility check failed");
  o.detail << (o.pass ? "eight p^w values match; all four certificate checks pass" : "");
}

std::vector<DominantWeight> weights(int n, int bound) {
  std::vector<DominantWeight> out;
  std::vector<int> c(n - 1, 0);
  for (;;) {
    int pos = n - 2;
    while (pos >= 0 && c[pos] == bound) c[pos--] = 0;
    if (pos < 0) break;
    ++c[pos];
    out.emplace_back(c);
  }
  return out;
}

void criterion6(Outcome& o) {
  std::ostringstream log;
  auto sweep = [&](int n, int bound, const std::string& filter) {
    cli::RunConfig cfg;
    cfg.n = n;
    cfg.max_coord = bound;
    cfg.filter = filter;
    int failures = 0;
    auto records = cli::cmd_sweep(cfg, log, &failures);
    o.expect(failures == 0, "sweep n=" + std::to_string(n) + " had failing records");
    return records;
  };

  const auto a = sweep(3, 2, "all");
  o.expect(a.size() == 6 * 8, "(a) unexpected record count");
  for (const auto& r : a)
    o.expect(r.kernel_total == 0, "(a) kernel at " + r.w.to_string() + " " + r.lambda.to_string());

  const auto b = sweep(4, 1, "triangular");
  o.expect(!b.empty(), "(b) no triangular permutations");
  for (const auto& r : b)
    o.expect(r.kernel_total == 0, "(b) kernel at " + r.w.to_string() + " " + r.lambda.to_string());

  std::size_t c_count = 0;
  for (int n = 2; n <= 4; ++n)
    for (const auto& lambda : weights(n, 2)) {
      const auto e = cartan_profile(Permutation::longest(n), lambda).total();
      o.expect(e == weyl_dimension(lambda), "(c) w0 " + lambda.to_string() + " gave " + std::to_string(e));
      ++c_count;
    }

  for (const auto* set : {&a, &b})
    for (const auto& r : *set) {
      o.expect(r.gamma_count <= r.e_dim, "(d) |Gamma| > dim E at " + r.w.to_string() + " " + r.lambda.to_string());
      o.expect(r.kernel_total == r.d_dim - r.e_dim, "(d) inconsistent record");
    }

  std::mt19937 rng(3);
  std::size_t e_count = 0;
  std::vector<std::pair<Permutation, DominantWeight>> cases;
  for (const auto& w : all_permutations(4))
    for (const auto& lambda : weights(4, 1)) cases.emplace_back(w, lambda);
  cases.emplace_back(kW, kLambda);
  cases.emplace_back(kW, kMu);
  for (const auto& [w, lambda] : cases) {
    const std::vector<std::vector<int>> words{
        reduced_word(w), reduced_word(w, [](const std::vector<int>& d) { return d.back(); }),
        reduced_word(w, [&](const std::vector<int>& d) { return d[rng() % d.size()]; })};
    const auto ref = demazure_dim(words[0], lambda);
    for (const auto& word : words) {
      o.expect(word_product(w.n(), word) == w, "(e) word does not multiply to w");
      o.expect(demazure_dim(word, lambda) == ref, "(e) word dependence at " + w.to_string());
    }
    ++e_count;
  }
  o.expect(log.str().empty(), "sweep log: " + log.str());
  if (o.pass)
    o.detail << "(a) " << a.size() << " records, (b) " << b.size() << " records, (c) " << c_count
             << " weights, (d) all records, (e) " << e_count << " cases x 3 words";
}

void criterion7(Outcome& o) {
  const std::string w = kW.to_string();
  auto outputs = [&](const std::string& jobs) {
    std::vector<std::string> out;
    for (const auto& lam : {kLambda.to_string(), kMu.to_string()}) {
      out.push_back(run_cli({"demazure-dim", "--w", w, "--lambda", lam}));
      out.push_back(run_cli({"demazure-profile", "--w", w, "--lambda", lam, "--jobs", jobs}));
      out.push_back(run_cli({"cartan", "--w", w, "--lambda", lam, "--jobs", jobs}));
      out.push_back(run_cli({"kernel", "--w", w, "--lambda", lam, "--jobs", jobs}));
      out.push_back(run_cli({"fflv-count", "--w", w, "--lambda", lam, "--points", "--jobs", jobs}));
    }
    out.push_back(run_cli({"verify-q", "--jobs", jobs}));
    out.push_back(run_cli({"verify-counterexample", "--format", "json", "--jobs", jobs}));
    return out;
  };
  const auto first = outputs("1");
  const auto second = outputs("1");
  const auto parallel = outputs("4");
  for (std::size_t t = 0; t < first.size(); ++t) {
    o.expect(first[t].rfind("0\n", 0) == 0, "command " + std::to_string(t) + " exited nonzero");
    o.expect(first[t] == second[t], "command " + std::to_string(t) + " differs between runs");
    o.expect(first[t] == parallel[t], "command " + std::to_string(t) + " differs between 1 and 4 workers");
  }
  o.detail << (o.pass ? std::to_string(first.size()) + " outputs byte-identical across runs and worker counts"
                      : "");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 Demazure dimensions", criterion1},   {"2 Cartan component dimensions", criterion2},
      {"3 kernel profiles", criterion3},       {"4 minimal monomial sets", criterion4},
      {"5 certificate for Q", criterion5},     {"6 property suite", criterion6},
      {"7 reproducibility", criterion7},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail.str() << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
