#include "pbwdeg/plucker.hpp"

#include <algorithm>
#include <functional>

#include "pbwdeg/demazure.hpp"

namespace pbwdeg {

ZPolynomial p_poly_over(int n, const std::vector<RootIndex>& roots, WedgeIndex s) {
  const int k = s.level();
  if (k < 1 || k >= n) throw InputError("wedge index level must be in 1..n-1");
  // exp(sum z_r f_r) = prod_r exp(z_r f_r) because the f^a commute.
  std::map<std::uint16_t, ZPolynomial> state{{WedgeIndex::highest(k).mask(), ZPolynomial(1)}};
  for (const RootIndex& r : roots) {
    std::map<std::uint16_t, ZPolynomial> next;
    for (const auto& [mask, coef] : state) {
      next[mask] += coef;
      // z_r^e / e! * f_r^e
      ZPolynomial power = coef;
      WedgeIndex cur(mask);
      for (int e = 1;; ++e) {
        auto res = act_degenerate(r, cur);
        if (!res) break;
        power *= ZPolynomial::variable(ZVar::pair(r));
        power *= Rational(res->sign, e);
        cur = res->index;
        next[cur.mask()] += power;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    state = std::move(next);
  }
  auto it = state.find(s.mask());
  return it == state.end() ? ZPolynomial() : it->second;
}

ZPolynomial p_poly(int n, WedgeIndex s) { return p_poly_over(n, all_roots(n), s); }

ZPolynomial pw_poly(const Permutation& w, WedgeIndex s) {
  return p_poly(w.n(), s).restrict_roots([&](RootIndex r) { return w(r.i) > w(r.j); });
}

// ---- symbols ------------------------------------------------------------------

std::string PlueckerSymbol::to_string() const {
  std::string s = "X[";
  bool first = true;
  for (int m : index.entries()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "]";
}

PlueckerSymbol symbol(const std::vector<int>& entries) { return {WedgeIndex(entries)}; }

PlueckerMonomial make_monomial(std::vector<PlueckerSymbol> symbols) {
  std::sort(symbols.begin(), symbols.end());
  return symbols;
}

std::string to_string(const PlueckerMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& x : m) {
    if (!s.empty()) s += '*';
    s += x.to_string();
  }
  return s;
}

bool monomial_divisible_by(const PlueckerMonomial& m, const PlueckerSymbol& s) {
  return std::find(m.begin(), m.end(), s) != m.end();
}

void PlueckerPolynomial::add(PlueckerMonomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(make_monomial(std::move(m)), c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::string PlueckerPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mag != 1) s += mag.get_str() + "*";
    s += pbwdeg::to_string(m);
  }
  return s;
}

// ---- evaluation and gradings --------------------------------------------------

ZPolynomial evaluate(const PlueckerPolynomial& p, int n, const std::optional<Permutation>& restrict_to) {
  std::map<std::uint16_t, ZPolynomial> cache;
  auto image = [&](const PlueckerSymbol& x) -> const ZPolynomial& {
    auto it = cache.find(x.index.mask());
    if (it != cache.end()) return it->second;
    ZPolynomial v = ZPolynomial::variable(ZVar::column(x.index.level()));
    v *= restrict_to ? pw_poly(*restrict_to, x.index) : p_poly(n, x.index);
    return cache.emplace(x.index.mask(), std::move(v)).first->second;
  };
  ZPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    ZPolynomial prod(c);
    for (const auto& x : m) prod *= image(x);
    out += prod;
  }
  return out;
}

std::vector<int> wt_of(const PlueckerMonomial& m, int n) {
  std::vector<int> wt(n, 0);
  for (const auto& x : m)
    for (int e : x.index.entries()) ++wt.at(e - 1);
  return wt;
}

int grad_of(const PlueckerMonomial& m) {
  int g = 0;
  for (const auto& x : m) g += pbw_degree(x.index);
  return g;
}

DominantWeight deg_of(const PlueckerMonomial& m, int n) {
  std::vector<int> coords(n - 1, 0);
  for (const auto& x : m) ++coords.at(x.index.level() - 1);
  return DominantWeight(std::move(coords));
}

std::vector<PlueckerSymbol> schubert_excluded_symbols(const Permutation& w, const std::vector<int>& d) {
  std::vector<PlueckerSymbol> out;
  for (int k : d) {
    const auto keep = fund_basis(w, k);
    for (WedgeIndex s : wedge_basis(w.n(), k))
      if (std::find(keep.begin(), keep.end(), s) == keep.end()) out.push_back({s});
  }
  return out;
}

std::vector<PlueckerMonomial> monomials_with_wt(const DominantWeight& lambda, const std::vector<int>& wt,
                                                const PlueckerSymbol& must_divide) {
  const int n = lambda.n();
  if (static_cast<int>(wt.size()) != n) throw InputError("wt must have n coordinates");
  // One slot per unit of each coordinate; multisets via non-decreasing choice within a level.
  std::vector<int> levels;
  for (int k = 1; k < n; ++k)
    for (int c = 0; c < lambda[k]; ++c) levels.push_back(k);
  std::vector<std::vector<WedgeIndex>> bases(n);
  for (int k = 1; k < n; ++k) bases[k] = wedge_basis(n, k);

  std::vector<PlueckerMonomial> out;
  std::vector<int> remaining = wt;
  PlueckerMonomial cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t from) {
    if (slot == levels.size()) {
      if (std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; }) &&
          monomial_divisible_by(cur, must_divide))
        out.push_back(make_monomial(cur));
      return;
    }
    const int k = levels[slot];
    const auto& basis = bases[k];
    const std::size_t start = (slot > 0 && levels[slot - 1] == k) ? from : 0;
    for (std::size_t t = start; t < basis.size(); ++t) {
      const auto entries = basis[t].entries();
      bool fits = true;
      for (int e : entries) fits = fits && remaining[e - 1] > 0;
      if (!fits) continue;
      for (int e : entries) --remaining[e - 1];
      cur.push_back({basis[t]});
      rec(slot + 1, t);
      cur.pop_back();
      for (int e : entries) ++remaining[e - 1];
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

PlueckerPolynomial counterexample_q() {
  PlueckerPolynomial q;
  q.add({symbol({6}), symbol({4, 5}), symbol({2, 4, 5, 6}), symbol({1, 3, 4, 5, 6})}, 1);
  q.add({symbol({5}), symbol({4, 6}), symbol({1, 4, 5, 6}), symbol({2, 3, 4, 5, 6})}, -1);
  return q;
}

// ---- certificate --------------------------------------------------------------

std::string QCertificate::first_failure() const {
  if (!restricted_zero) return "restricted evaluation is nonzero";
  if (!full_nonzero) return "full evaluation is zero";
  if (!excluded_empty) return "a monomial with the same wt is divisible by an excluded symbol";
  if (!divisibility_ok) return "divisor check failed";
  return {};
}

QCertificate verify_q(const Permutation& w, const DominantWeight& lambda, const PlueckerPolynomial& q,
                      const PlueckerSymbol& divisor_symbol) {
  require_same_rank(w, lambda);
  const int n = w.n();
  if (q.terms().size() != 2) throw InputError("verify_q expects a two-term polynomial");

  QCertificate cert;
  cert.restricted = evaluate(q, n, w);
  cert.full = evaluate(q, n);
  cert.restricted_zero = cert.restricted.is_zero();
  cert.full_nonzero = !cert.full.is_zero();

  const PlueckerMonomial& a = q.terms().begin()->first;
  const PlueckerMonomial& b = std::next(q.terms().begin())->first;
  if (wt_of(a, n) != wt_of(b, n)) throw InputError("Q is not wt-homogeneous");
  if (deg_of(a, n) != lambda || deg_of(b, n) != lambda) throw InputError("Q does not have degree lambda");
  cert.wt = wt_of(a, n);

  cert.excluded_empty = true;
  for (const auto& x : schubert_excluded_symbols(w, support(lambda))) {
    SymbolEnumeration e{x, monomials_with_wt(lambda, cert.wt, x)};
    cert.excluded_empty = cert.excluded_empty && e.monomials.empty();
    cert.excluded.push_back(std::move(e));
  }

  const bool in_a = monomial_divisible_by(a, divisor_symbol);
  const bool in_b = monomial_divisible_by(b, divisor_symbol);
  if (in_a == in_b) throw InputError("divisor symbol must occur in exactly one monomial of Q");
  const PlueckerMonomial& first = in_a ? a : b;
  const PlueckerMonomial& second = in_a ? b : a;

  cert.divisor_symbol = divisor_symbol;
  cert.divisor = p_poly(n, divisor_symbol.index);
  ZPolynomial first_product(1), second_product(1);
  for (const auto& x : first) first_product *= p_poly(n, x.index);
  cert.divides_first = divides(cert.divisor, first_product);
  bool any_factor = false;
  for (const auto& x : second) {
    FactorDivisibility f{x, p_poly(n, x.index), false};
    f.divisible = divides(cert.divisor, f.p);
    any_factor = any_factor || f.divisible;
    second_product *= f.p;
    cert.second_factors.push_back(std::move(f));
  }
  cert.divides_second_product = divides(cert.divisor, second_product);
  cert.divisibility_ok = cert.divides_first && !any_factor && !cert.divides_second_product;
  return cert;
}

QCertificate verify_q(const Permutation& w) {
  return verify_q(w, DominantWeight({1, 1, 0, 1, 1}), counterexample_q(), symbol({4, 5}));
}

}  // namespace pbwdeg
