#include "pbwdeg/zpoly.hpp"

#include <algorithm>

namespace pbwdeg {

std::string ZVar::to_string() const {
  if (is_column()) return "z[" + std::to_string(column_level()) + "]";
  const RootIndex r = root();
  return "z[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]";
}

ZMonomial monomial_product(const ZMonomial& a, const ZMonomial& b) {
  ZMonomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::optional<ZMonomial> monomial_quotient(const ZMonomial& a, const ZMonomial& b) {
  ZMonomial out;
  auto ia = a.begin();
  for (const auto& [v, e] : b) {
    while (ia != a.end() && ia->first < v) out.push_back(*ia++);
    if (ia == a.end() || v < ia->first || ia->second < e) return std::nullopt;
    if (ia->second > e) out.emplace_back(v, ia->second - e);
    ++ia;
  }
  out.insert(out.end(), ia, a.end());
  return out;
}

int monomial_degree(const ZMonomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

bool lex_less(const ZMonomial& a, const ZMonomial& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.rend() && ib != b.rend();
}

// ---- ZPolynomial ------------------------------------------------------------

ZPolynomial::ZPolynomial(int constant) : ZPolynomial(Rational(constant)) {}

ZPolynomial::ZPolynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(ZMonomial{}, constant);
}

ZPolynomial ZPolynomial::term(ZMonomial m, const Rational& c) {
  ZPolynomial p;
  if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

ZPolynomial ZPolynomial::variable(ZVar v, int power) {
  ZPolynomial p;
  p.terms_.emplace(power == 0 ? ZMonomial{} : ZMonomial{{v, power}}, Rational(1));
  return p;
}

Rational ZPolynomial::coefficient(const ZMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ZPolynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = monomial_degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

void ZPolynomial::add_term(const ZMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const ZPolynomial& o) {
  ZPolynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  *this = std::move(out);
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

std::pair<ZMonomial, Rational> ZPolynomial::leading_term() const {
  if (terms_.empty()) throw ConsistencyError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (lex_less(best->first, it->first)) best = it;
  return *best;
}

std::string ZPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [v, e] : m) {
      if (!body.empty()) body += '*';
      body += v.to_string();
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += body;
    } else {
      s += mag.get_str() + "*" + body;
    }
  }
  return s;
}

DivisionResult divide(const ZPolynomial& dividend, const ZPolynomial& divisor) {
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  const auto [lead_m, lead_c] = divisor.leading_term();
  DivisionResult out;
  ZPolynomial rest = dividend;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading_term();
    if (auto q = monomial_quotient(m, lead_m)) {
      const ZPolynomial qt = ZPolynomial::term(*q, c / lead_c);
      out.quotient += qt;
      rest -= qt * divisor;
    } else {
      const ZPolynomial lt = ZPolynomial::term(m, c);
      out.remainder += lt;
      rest -= lt;
    }
  }
  return out;
}

bool divides(const ZPolynomial& divisor, const ZPolynomial& dividend) {
  return divide(dividend, divisor).remainder.is_zero();
}

}  // namespace pbwdeg
