#include "pbwdeg/rootsystem.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

namespace pbwdeg {

std::string to_string(const RootIndex& r) {
  return "f[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]";
}

std::vector<int> parse_int_list(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw InputError("empty entry in list '" + std::string(text) + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("not an integer: '" + std::string(tok) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

// ---- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1 || n > kMaxN) throw InputError("permutation size must be in 1.." + std::to_string(kMaxN));
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v])
      throw InputError("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::longest(int n) {
  std::vector<int> img(n);
  for (int p = 0; p < n; ++p) img[p] = n - p;
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_int_list(text));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= n()) throw InputError("simple reflection index out of range");
  Permutation out = *this;
  std::swap(out.image_[i - 1], out.image_[i]);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int p = 1; p <= n(); ++p) inv[(*this)(p) - 1] = p;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (p) s += ',';
    s += std::to_string(image_[p]);
  }
  return s;
}

std::vector<RootIndex> inversions(const Permutation& w) {
  std::vector<RootIndex> out;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

std::vector<RootIndex> ordered_inversions(const Permutation& w) {
  auto out = inversions(w);
  std::sort(out.begin(), out.end(), RootOrder{});
  return out;
}

std::vector<RootIndex> all_roots(int n) {
  return ordered_inversions(Permutation::longest(n));
}

int length(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

bool is_triangular(const Permutation& w) {
  // 4-subsequence a<b<c<d at positions p<q<r<s.
  const int n = w.n();
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = q + 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
          const int a = w(p), b = w(q), c = w(r), d = w(s);
          // 4231: d < b < c < a
          if (d < b && b < c && c < a) return false;
          // 2413: c < a < d < b
          if (c < a && a < d && d < b) return false;
        }
  return true;
}

std::vector<int> reduced_word(const Permutation& w,
                              const std::function<int(const std::vector<int>&)>& choose) {
  std::vector<int> reversed;
  Permutation cur = w;
  for (;;) {
    std::vector<int> descents;
    for (int i = 1; i < cur.n(); ++i)
      if (cur(i) > cur(i + 1)) descents.push_back(i);
    if (descents.empty()) break;
    const int i = choose(descents);
    reversed.push_back(i);
    cur = cur.times_simple(i);
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<int> reduced_word(const Permutation& w) {
  return reduced_word(w, [](const std::vector<int>& d) { return d.front(); });
}

Permutation word_product(int n, const std::vector<int>& word) {
  Permutation out = Permutation::identity(n);
  for (int i : word) out = out.times_simple(i);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---- Weights ----------------------------------------------------------------

DominantWeight::DominantWeight(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty() || static_cast<int>(coords_.size()) >= kMaxN)
    throw InputError("weight must have between 1 and " + std::to_string(kMaxN - 1) + " coordinates");
  for (int a : coords_)
    if (a < 0) throw InputError("weight is not dominant: " + to_string());
}

DominantWeight DominantWeight::parse(std::string_view text) {
  return DominantWeight(parse_int_list(text));
}

DominantWeight DominantWeight::fundamental(int n, int k) {
  std::vector<int> c(n - 1, 0);
  c.at(k - 1) = 1;
  return DominantWeight(std::move(c));
}

bool DominantWeight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int a) { return a == 0; });
}

std::vector<int> DominantWeight::partition() const {
  std::vector<int> part(n(), 0);
  for (int k = n() - 1; k >= 1; --k) part[k - 1] = part[k] + coords_[k - 1];
  return part;
}

std::string DominantWeight::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords_[k]);
  }
  return s;
}

std::vector<int> support(const DominantWeight& lambda) {
  std::vector<int> d;
  for (int k = 1; k < lambda.n(); ++k)
    if (lambda[k] > 0) d.push_back(k);
  return d;
}

std::int64_t weyl_dimension(const DominantWeight& lambda) {
  const auto part = lambda.partition();
  const int n = lambda.n();
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= part[i] - part[j] + j - i;
      den *= j - i;
    }
  mpz_class q = num / den;
  return q.get_si();
}

WeightVector::WeightVector(std::vector<int> e) : e_(std::move(e)) {
  if (!e_.empty()) {
    const int lo = *std::min_element(e_.begin(), e_.end());
    for (int& x : e_) x -= lo;
  }
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t m = 0; m < e_.size(); ++m) {
    if (m) s += ',';
    s += std::to_string(e_[m]);
  }
  return s + ")";
}

}  // namespace pbwdeg
