#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbwdeg/exactlinalg.hpp"
#include "pbwdeg/rootsystem.hpp"

namespace pbwdeg {

/// Variable z_{i,j} (i<j) or the column scalar z_k.
class ZVar {
public:
  static ZVar pair(int i, int j) { return ZVar(i * (kMaxN + 1) + j); }
  static ZVar pair(RootIndex r) { return pair(r.i, r.j); }
  static ZVar column(int k) { return ZVar(kColumnBase + k); }

  bool is_column() const { return id_ >= kColumnBase; }
  RootIndex root() const { return {id_ / (kMaxN + 1), id_ % (kMaxN + 1)}; }
  int column_level() const { return id_ - kColumnBase; }
  int id() const { return id_; }
  std::string to_string() const;

  /// Variable order: z_{1,2} < z_{1,3} < ... < z_{n-1,n} < z_1 < z_2 < ...
  friend auto operator<=>(const ZVar&, const ZVar&) = default;

private:
  static constexpr int kColumnBase = (kMaxN + 1) * (kMaxN + 1);
  explicit ZVar(int id) : id_(id) {}
  int id_;
};

/// Sorted (variable, positive exponent) list.
using ZMonomial = std::vector<std::pair<ZVar, int>>;

ZMonomial monomial_product(const ZMonomial& a, const ZMonomial& b);
/// a / b if b divides a.
std::optional<ZMonomial> monomial_quotient(const ZMonomial& a, const ZMonomial& b);
int monomial_degree(const ZMonomial& m);
/// Lex order with the largest variable most significant.
bool lex_less(const ZMonomial& a, const ZMonomial& b);

class ZPolynomial {
public:
  ZPolynomial() = default;
  ZPolynomial(int constant);  // NOLINT: integers promote naturally
  explicit ZPolynomial(const Rational& constant);
  static ZPolynomial variable(ZVar v, int power = 1);
  static ZPolynomial term(ZMonomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<ZMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const ZMonomial& m) const;
  /// Degree if homogeneous, nullopt otherwise (and for zero).
  std::optional<int> homogeneous_degree() const;

  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial& operator*=(const ZPolynomial& o);
  ZPolynomial& operator*=(const Rational& c);
  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(ZPolynomial a, const ZPolynomial& b) { return a *= b; }
  friend ZPolynomial operator-(ZPolynomial a) { return a *= Rational(-1); }
  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

  /// Sets every z_{i,j} with keep(root) == false to zero.
  template <class Keep>
  ZPolynomial restrict_roots(Keep keep) const {
    ZPolynomial out;
    for (const auto& [m, c] : terms_) {
      bool alive = true;
      for (const auto& [v, e] : m)
        if (!v.is_column() && !keep(v.root())) alive = false;
      if (alive) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// Leading term under lex_less.
  std::pair<ZMonomial, Rational> leading_term() const;

  /// Canonical text, e.g. "z[1,4]*z[2,5] - z[1,5]*z[2,4]".
  std::string to_string() const;

private:
  void add_term(const ZMonomial& m, const Rational& c);
  std::map<ZMonomial, Rational> terms_;
};

struct DivisionResult {
  ZPolynomial quotient;
  ZPolynomial remainder;
};

/// Multivariate division by a single polynomial in lex order. The remainder
/// is zero exactly when the divisor divides the dividend.
DivisionResult divide(const ZPolynomial& dividend, const ZPolynomial& divisor);
bool divides(const ZPolynomial& divisor, const ZPolynomial& dividend);

}  // namespace pbwdeg
