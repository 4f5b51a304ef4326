#include "pbwdeg/wedgerep.hpp"

#include <algorithm>

namespace pbwdeg {

WedgeIndex::WedgeIndex(const std::vector<int>& entries) {
  int prev = 0;
  for (int m : entries) {
    if (m <= prev || m > kMaxN) throw InputError("wedge index must be strictly increasing in 1..n");
    mask_ |= static_cast<std::uint16_t>(1u << (m - 1));
    prev = m;
  }
}

std::vector<int> WedgeIndex::entries() const {
  std::vector<int> out;
  for (int m = 1; m <= kMaxN; ++m)
    if (contains(m)) out.push_back(m);
  return out;
}

std::string WedgeIndex::to_string() const {
  std::string s = "[";
  bool first = true;
  for (int m : entries()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "]";
}

std::vector<WedgeIndex> wedge_basis(int n, int k) {
  std::vector<WedgeIndex> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) out.emplace_back(static_cast<std::uint16_t>(mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SignedWedge> act_classical(RootIndex r, WedgeIndex s) {
  if (!s.contains(r.i) || s.contains(r.j)) return std::nullopt;
  const unsigned between = ((1u << (r.j - 1)) - 1u) & ~((1u << r.i) - 1u);
  const int crossings = std::popcount(s.mask() & between);
  const auto mask = static_cast<std::uint16_t>(s.mask() ^ (1u << (r.i - 1)) ^ (1u << (r.j - 1)));
  return SignedWedge{crossings % 2 ? -1 : 1, WedgeIndex(mask)};
}

std::optional<SignedWedge> act_degenerate(RootIndex r, WedgeIndex s) {
  const int k = s.level();
  if (!(r.i <= k && k < r.j)) return std::nullopt;
  return act_classical(r, s);
}

// ---- FactorShape / TensorIndex ---------------------------------------------

FactorShape::FactorShape(const DominantWeight& lambda) : n_(lambda.n()) {
  for (int k = 1; k < n_; ++k) {
    const int first = static_cast<int>(levels_.size());
    for (int c = 0; c < lambda[k]; ++c) levels_.push_back(k);
    const int last = static_cast<int>(levels_.size());
    for (int t = first; t < last; ++t) groups_.emplace_back(first, last);
  }
  if (size() > kMaxFactors)
    throw InputError("weight has more than " + std::to_string(kMaxFactors) + " fundamental factors");
}

int FactorShape::max_grade() const {
  int total = 0;
  for (int k : levels_) total += std::min(k, n_ - k);
  return total;
}

TensorIndex TensorIndex::highest(const FactorShape& shape) {
  TensorIndex t;
  t.size_ = static_cast<std::uint8_t>(shape.size());
  for (int s = 0; s < shape.size(); ++s) t.comps_[s] = WedgeIndex::highest(shape.level(s)).mask();
  return t;
}

TensorIndex TensorIndex::parse(std::string_view text) {
  TensorIndex t;
  std::size_t pos = text.find('[');
  if (pos == std::string_view::npos) throw InputError("tensor index must be a nested list");
  ++pos;
  while (true) {
    std::size_t open = text.find('[', pos);
    if (open == std::string_view::npos) break;
    std::size_t close = text.find(']', open);
    if (close == std::string_view::npos) throw InputError("unbalanced brackets in tensor index");
    if (t.size_ == kMaxFactors) throw InputError("too many factors in tensor index");
    t.comps_[t.size_++] = WedgeIndex(parse_int_list(text.substr(open + 1, close - open - 1))).mask();
    pos = close + 1;
  }
  // Stable order: by level, then lexicographic within a level.
  std::sort(t.comps_.begin(), t.comps_.begin() + t.size_, [](std::uint16_t a, std::uint16_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return WedgeIndex(a) < WedgeIndex(b);
  });
  return t;
}

TensorIndex TensorIndex::with_component(const FactorShape& shape, int slot, WedgeIndex s) const {
  TensorIndex out = *this;
  out.comps_[slot] = s.mask();
  auto [first, last] = shape.group_of(slot);
  // Only `slot` moved; bubble it into place.
  int p = slot;
  while (p > first && WedgeIndex(out.comps_[p]) < WedgeIndex(out.comps_[p - 1])) {
    std::swap(out.comps_[p], out.comps_[p - 1]);
    --p;
  }
  while (p + 1 < last && WedgeIndex(out.comps_[p + 1]) < WedgeIndex(out.comps_[p])) {
    std::swap(out.comps_[p], out.comps_[p + 1]);
    ++p;
  }
  return out;
}

std::string TensorIndex::to_string() const {
  std::string s = "[";
  for (int t = 0; t < size_; ++t) {
    if (t) s += ',';
    s += WedgeIndex(comps_[t]).to_string();
  }
  return s + "]";
}

std::size_t TensorIndex::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int t = 0; t < size_; ++t) {
    h ^= comps_[t];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

TensorVector tensor_act(ActionMode mode, RootIndex r, const TensorIndex& t, const FactorShape& shape) {
  std::vector<TensorVector::Entry> terms;
  for (int slot = 0; slot < t.size(); ++slot) {
    auto res = act(mode, r, t[slot]);
    if (!res) continue;
    terms.emplace_back(t.with_component(shape, slot, res->index), res->sign);
  }
  return TensorVector::from_terms(std::move(terms));
}

TensorVector tensor_act(ActionMode mode, RootIndex r, const TensorVector& v, const FactorShape& shape) {
  std::vector<TensorVector::Entry> terms;
  for (const auto& [idx, c] : v.entries()) {
    for (int slot = 0; slot < idx.size(); ++slot) {
      auto res = act(mode, r, idx[slot]);
      if (!res) continue;
      terms.emplace_back(idx.with_component(shape, slot, res->index), res->sign * c);
    }
  }
  return TensorVector::from_terms(std::move(terms));
}

std::vector<int> content(const TensorIndex& t, int n) {
  std::vector<int> e(n, 0);
  for (int slot = 0; slot < t.size(); ++slot)
    for (int m = 1; m <= n; ++m)
      if (t[slot].contains(m)) ++e[m - 1];
  return e;
}

WeightVector torus_weight(const TensorIndex& t, int n) { return WeightVector(content(t, n)); }

int total_grade(const TensorIndex& t) {
  int g = 0;
  for (int slot = 0; slot < t.size(); ++slot) g += pbw_degree(t[slot]);
  return g;
}

}  // namespace pbwdeg
