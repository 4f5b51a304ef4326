#include "pbwdeg/fflv.hpp"

#include <algorithm>
#include <functional>

#include "pbwdeg/demazure.hpp"

namespace pbwdeg {

ExponentVector::ExponentVector(const std::vector<RootIndex>& factors) {
  for (const auto& r : factors) ++exps_[r];
  degree_ = static_cast<int>(factors.size());
}

int ExponentVector::exponent(const RootIndex& r) const {
  auto it = exps_.find(r);
  return it == exps_.end() ? 0 : it->second;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out = *this;
  for (const auto& [r, e] : other.exps_) out.exps_[r] += e;
  out.degree_ += other.degree_;
  return out;
}

std::string ExponentVector::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [r, e] : exps_) {
    if (!s.empty()) s += '*';
    s += pbwdeg::to_string(r);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::strong_ordering monomial_cmp(const ExponentVector& a, const ExponentVector& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  const RootOrder before;
  while (ia != a.exponents().end() || ib != b.exponents().end()) {
    // The earlier root present in only one of them: the other has exponent 0 there.
    if (ib == b.exponents().end() || (ia != a.exponents().end() && before(ia->first, ib->first)))
      return std::strong_ordering::greater;
    if (ia == a.exponents().end() || before(ib->first, ia->first))
      return std::strong_ordering::less;
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

std::optional<SignedWedge> apply_monomial(const ExponentVector& m, WedgeIndex s) {
  SignedWedge cur{1, s};
  for (const auto& [r, e] : m.exponents()) {
    for (int t = 0; t < e; ++t) {
      auto next = act_degenerate(r, cur.index);
      if (!next) return std::nullopt;
      cur = {cur.sign * next->sign, next->index};
    }
  }
  return cur;
}

namespace {

// All multisets of `degree` roots, as sorted factor lists.
void multisets(const std::vector<RootIndex>& roots, int degree, std::size_t from,
               std::vector<RootIndex>& cur, std::vector<ExponentVector>& out) {
  if (static_cast<int>(cur.size()) == degree) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t t = from; t < roots.size(); ++t) {
    cur.push_back(roots[t]);
    multisets(roots, degree, t, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ExponentVector minimal_monomial(const Permutation& w, int k, WedgeIndex s) {
  if (s.level() != k) throw InputError("wedge index " + s.to_string() + " is not at level " + std::to_string(k));
  const auto roots = ordered_inversions(w);
  std::vector<ExponentVector> candidates;
  std::vector<RootIndex> cur;
  multisets(roots, pbw_degree(s), 0, cur, candidates);
  std::sort(candidates.begin(), candidates.end(), MonomialLess{});
  const WedgeIndex top = WedgeIndex::highest(k);
  for (const auto& m : candidates) {
    auto res = apply_monomial(m, top);
    if (res && res->index == s) return m;
  }
  throw InputError("no monomial in n_{-w} reaches " + s.to_string() + "; it is not in the Demazure module");
}

LatticeSet gamma_set(const Permutation& w, int k) {
  const auto basis = fund_basis(w, k);
  std::vector<ExponentVector> found(basis.size());
  const auto count = static_cast<std::int64_t>(basis.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < count; ++t) found[t] = minimal_monomial(w, k, basis[t]);
  return LatticeSet(found.begin(), found.end());
}

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b) {
  LatticeSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(x + y);
  return out;
}

MinkowskiResult minkowski_count(const Permutation& w, const DominantWeight& lambda) {
  require_same_rank(w, lambda);
  LatticeSet acc{ExponentVector{}};
  for (int k = 1; k < lambda.n(); ++k) {
    if (lambda[k] == 0) continue;
    const LatticeSet gamma = gamma_set(w, k);
    for (int c = 0; c < lambda[k]; ++c) acc = minkowski_sum(acc, gamma);
  }
  MinkowskiResult out;
  out.cardinality = static_cast<std::int64_t>(acc.size());
  out.points = std::move(acc);
  return out;
}

}  // namespace pbwdeg
