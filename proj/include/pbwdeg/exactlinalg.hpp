#pragma once

// Exact rational sparse vectors and an incrementally maintained reduced row
// echelon span. Index types need a strict weak order (operator<); pivots are
// the smallest index of each row.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pbwdeg {

using Rational = mpq_class;

template <class Index>
class SparseVector {
public:
  using Entry = std::pair<Index, Rational>;

  SparseVector() = default;

  /// Sorts, merges duplicate indices and drops zero coefficients.
  static SparseVector from_terms(std::vector<Entry> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector out;
    out.entries_.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.entries_.empty() && !(out.entries_.back().first < t.first)) {
        out.entries_.back().second += t.second;
      } else {
        if (!out.entries_.empty() && sgn(out.entries_.back().second) == 0)
          out.entries_.pop_back();
        out.entries_.push_back(std::move(t));
      }
    }
    if (!out.entries_.empty() && sgn(out.entries_.back().second) == 0) out.entries_.pop_back();
    return out;
  }

  static SparseVector unit(const Index& idx, Rational c = 1) {
    SparseVector out;
    if (sgn(c) != 0) out.entries_.emplace_back(idx, std::move(c));
    return out;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& leading() const { return entries_.front(); }

  Rational coefficient(const Index& idx) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const Entry& e, const Index& i) { return e.first < i; });
    if (it != entries_.end() && !(idx < it->first)) return it->second;
    return 0;
  }

  SparseVector& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      entries_.clear();
    } else {
      for (auto& e : entries_) e.second *= c;
    }
    return *this;
  }

  /// this += c * other
  void axpy(const Rational& c, const SparseVector& other) {
    if (sgn(c) == 0 || other.is_zero()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        merged.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        Rational s = a->second + c * b->second;
        if (sgn(s) != 0) merged.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(merged);
  }

  friend bool operator==(const SparseVector& x, const SparseVector& y) {
    if (x.entries_.size() != y.entries_.size()) return false;
    for (std::size_t t = 0; t < x.entries_.size(); ++t) {
      const auto& a = x.entries_[t];
      const auto& b = y.entries_[t];
      if (a.first < b.first || b.first < a.first || a.second != b.second) return false;
    }
    return true;
  }

private:
  std::vector<Entry> entries_;
};

/// Span of inserted vectors, kept in fully reduced row echelon form: every
/// row has leading coefficient 1 and no row has a nonzero entry in another
/// row's pivot column.
template <class Index>
class EchelonSpan {
public:
  using Vector = SparseVector<Index>;

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }

  /// Residual of v after elimination; zero iff v lies in the span.
  Vector reduce(const Vector& v) const {
    if (rows_.empty() || v.is_zero()) return v;
    // Rows carry no other pivot columns, so the multipliers are v's own
    // coefficients on pivot columns and a single pass suffices.
    std::vector<typename Vector::Entry> terms;
    bool touched = false;
    for (const auto& [idx, c] : v.entries()) {
      auto it = pivots_.find(idx);
      if (it == pivots_.end()) {
        terms.emplace_back(idx, c);
        continue;
      }
      touched = true;
      const Vector& row = rows_[it->second];
      for (std::size_t t = 1; t < row.entries().size(); ++t) {
        const auto& e = row.entries()[t];
        terms.emplace_back(e.first, -c * e.second);
      }
    }
    if (!touched) return v;
    return Vector::from_terms(std::move(terms));
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.is_zero()) return false;
    Rational inv = 1 / r.leading().second;
    r *= inv;
    const Index pivot = r.leading().first;
    for (auto& row : rows_) {
      Rational c = row.coefficient(pivot);
      if (sgn(c) != 0) row.axpy(-c, r);
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

private:
  std::vector<Vector> rows_;
  std::map<Index, std::size_t> pivots_;
};

}  // namespace pbwdeg
