#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbwdeg/exactlinalg.hpp"
#include "pbwdeg/rootsystem.hpp"
#include "pbwdeg/wedgerep.hpp"
#include "pbwdeg/zpoly.hpp"

namespace pbwdeg {

/// Coefficient of b_S in exp(sum z_{i,j} f^a_{i,j}) v_{omega_k}, k = |S|.
ZPolynomial p_poly(int n, WedgeIndex s);
/// Same with z_{i,j} = 0 whenever w(i) < w(j).
ZPolynomial pw_poly(const Permutation& w, WedgeIndex s);
/// Expansion using only the given roots. pw_poly(w, S) == p_poly_over(n, inversions(w), S).
ZPolynomial p_poly_over(int n, const std::vector<RootIndex>& roots, WedgeIndex s);

/// Plücker coordinate X_S.
struct PlueckerSymbol {
  WedgeIndex index;

  std::string to_string() const;
  /// Level first, then lexicographic.
  friend bool operator<(const PlueckerSymbol& a, const PlueckerSymbol& b) {
    if (a.index.level() != b.index.level()) return a.index.level() < b.index.level();
    return a.index < b.index;
  }
  friend bool operator==(const PlueckerSymbol&, const PlueckerSymbol&) = default;
};

PlueckerSymbol symbol(const std::vector<int>& entries);

/// Sorted multiset of symbols.
using PlueckerMonomial = std::vector<PlueckerSymbol>;

PlueckerMonomial make_monomial(std::vector<PlueckerSymbol> symbols);
std::string to_string(const PlueckerMonomial& m);
bool monomial_divisible_by(const PlueckerMonomial& m, const PlueckerSymbol& s);

class PlueckerPolynomial {
public:
  void add(PlueckerMonomial m, const Rational& c);
  const std::map<PlueckerMonomial, Rational>& terms() const { return terms_; }
  std::string to_string() const;

private:
  std::map<PlueckerMonomial, Rational> terms_;
};

/// z_{|S|} * p_S for every symbol (full), or with p^w_S (restricted).
ZPolynomial evaluate(const PlueckerPolynomial& p, int n, const std::optional<Permutation>& restrict_to = {});

std::vector<int> wt_of(const PlueckerMonomial& m, int n);
int grad_of(const PlueckerMonomial& m);
DominantWeight deg_of(const PlueckerMonomial& m, int n);

/// Symbols at the levels in d whose index is not in fund_basis(w, level).
std::vector<PlueckerSymbol> schubert_excluded_symbols(const Permutation& w, const std::vector<int>& d);

/// Every monomial of degree lambda with the given wt that is divisible by `must_divide`.
std::vector<PlueckerMonomial> monomials_with_wt(const DominantWeight& lambda, const std::vector<int>& wt,
                                                const PlueckerSymbol& must_divide);

/// Q = X_6 X_{4,5} X_{2,4,5,6} X_{1,3,4,5,6} - X_5 X_{4,6} X_{1,4,5,6} X_{2,3,4,5,6}.
PlueckerPolynomial counterexample_q();

struct SymbolEnumeration {
  PlueckerSymbol symbol;
  std::vector<PlueckerMonomial> monomials;
};

struct FactorDivisibility {
  PlueckerSymbol symbol;
  ZPolynomial p;
  bool divisible = false;
};

/// Outcome of the four checks certifying Q in J_{w,d} but not in the initial
/// ideal of the Schubert ideal.
struct QCertificate {
  ZPolynomial restricted;
  ZPolynomial full;
  bool restricted_zero = false;
  bool full_nonzero = false;

  std::vector<int> wt;
  std::vector<SymbolEnumeration> excluded;
  bool excluded_empty = false;

  PlueckerSymbol divisor_symbol;
  ZPolynomial divisor;
  bool divides_first = false;
  std::vector<FactorDivisibility> second_factors;
  bool divides_second_product = false;
  bool divisibility_ok = false;

  bool all_pass() const { return restricted_zero && full_nonzero && excluded_empty && divisibility_ok; }
  /// Name of the first failing check, empty when all pass.
  std::string first_failure() const;
};

/// Runs the checks for a two-term Q = m1 - m2. The divisor is p of
/// `divisor_symbol`, which must occur in the first monomial.
QCertificate verify_q(const Permutation& w, const DominantWeight& lambda, const PlueckerPolynomial& q,
                      const PlueckerSymbol& divisor_symbol);
/// The fixed instance: w = [6,4,2,5,3,1], lambda = (1,1,0,1,1), divisor X_{4,5}.
QCertificate verify_q(const Permutation& w);

}  // namespace pbwdeg
