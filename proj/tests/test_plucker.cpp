#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pbwdeg/demazure.hpp"
#include "pbwdeg/plucker.hpp"

using namespace pbwdeg;

namespace {
const Permutation kW = Permutation::parse("6,4,2,5,3,1");
ZPolynomial z(int i, int j) { return ZPolynomial::variable(ZVar::pair(i, j)); }
}  // namespace

TEST_CASE("p polynomials against determinant minors") {
  CHECK(p_poly(6, WedgeIndex({4, 5})) == z(1, 4) * z(2, 5) - z(1, 5) * z(2, 4));
  CHECK(p_poly(6, WedgeIndex({4, 5})).to_string() == "z[1,4]*z[2,5] - z[1,5]*z[2,4]");
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      CHECK(p_poly(n, WedgeIndex::highest(k)) == ZPolynomial(1));
      for (auto s : wedge_basis(n, k)) {
        const ZPolynomial p = p_poly(n, s);
        CHECK_MESSAGE(p == oracle::degenerate_minor(s.entries()), s.to_string());
        CHECK(p.homogeneous_degree() == pbw_degree(s));
      }
    }
  CHECK(pw_poly(kW, WedgeIndex({2, 4, 5, 6})) == -(z(1, 5) * z(3, 6)));
}

TEST_CASE("the eight restricted polynomials") {
  CHECK(pw_poly(kW, WedgeIndex({6})).to_string() == "z[1,6]");
  CHECK(pw_poly(kW, WedgeIndex({4, 5})).to_string() == "z[1,4]*z[2,5]");
  CHECK(pw_poly(kW, WedgeIndex({2, 4, 5, 6})).to_string() == "-z[1,5]*z[3,6]");
  CHECK(pw_poly(kW, WedgeIndex({1, 3, 4, 5, 6})).to_string() == "-z[2,6]");
  CHECK(pw_poly(kW, WedgeIndex({5})).to_string() == "z[1,5]");
  CHECK(pw_poly(kW, WedgeIndex({4, 6})).to_string() == "z[1,4]*z[2,6]");
  CHECK(pw_poly(kW, WedgeIndex({1, 4, 5, 6})).to_string() == "z[2,5]*z[3,6]");
  CHECK(pw_poly(kW, WedgeIndex({2, 3, 4, 5, 6})).to_string() == "z[1,6]");
}

TEST_CASE("restriction at the extremes") {
  for (int k = 1; k < 5; ++k)
    for (auto s : wedge_basis(5, k)) {
      CHECK(pw_poly(Permutation::longest(5), s) == p_poly(5, s));
      const ZPolynomial id = pw_poly(Permutation::identity(5), s);
      CHECK((id.is_zero() || id.homogeneous_degree() == 0));
    }
}

TEST_CASE("quadratic Pluecker relation vanishes under the full map") {
  PlueckerPolynomial rel;
  rel.add(make_monomial({symbol({1, 2}), symbol({3, 4})}), 1);
  rel.add(make_monomial({symbol({1, 3}), symbol({2, 4})}), -1);
  rel.add(make_monomial({symbol({1, 4}), symbol({2, 3})}), 1);
  CHECK(evaluate(rel, 4).is_zero());
  CHECK(evaluate(rel, 4, Permutation::parse("3,4,1,2")).is_zero());

  PlueckerPolynomial top;
  top.add(make_monomial({symbol({1, 2, 3})}), 1);
  CHECK(evaluate(top, 5) == ZPolynomial::variable(ZVar::column(3)));
  CHECK(evaluate(top, 5, Permutation::parse("5,3,1,4,2")) == ZPolynomial::variable(ZVar::column(3)));
}

TEST_CASE("gradings of Q") {
  const PlueckerPolynomial q = counterexample_q();
  REQUIRE(q.terms().size() == 2);
  for (const auto& [m, c] : q.terms()) {
    CHECK(wt_of(m, 6) == std::vector<int>{1, 1, 1, 3, 3, 3});
    CHECK(grad_of(m) == 6);
    CHECK(deg_of(m, 6) == DominantWeight({1, 1, 0, 1, 1}));
  }
  const auto a = make_monomial({symbol({6}), symbol({4, 5})});
  const auto b = make_monomial({symbol({2, 4, 5, 6})});
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  ab = make_monomial(ab);
  std::vector<int> sum = wt_of(a, 6);
  for (int t = 0; t < 6; ++t) sum[t] += wt_of(b, 6)[t];
  CHECK(wt_of(ab, 6) == sum);
  CHECK(grad_of(ab) == grad_of(a) + grad_of(b));
}

TEST_CASE("excluded symbols") {
  const auto ex = schubert_excluded_symbols(kW, {1, 2, 4, 5});
  CHECK(ex == std::vector<PlueckerSymbol>{symbol({1, 4}), symbol({1, 2, 4, 5})});
  CHECK(schubert_excluded_symbols(Permutation::longest(6), {1, 2, 4, 5}).empty());
  std::size_t all = 0;
  for (int k : {1, 2, 4, 5}) all += wedge_basis(6, k).size() - 1;
  CHECK(schubert_excluded_symbols(Permutation::identity(6), {1, 2, 4, 5}).size() == all);
}

TEST_CASE("weight enumeration") {
  const DominantWeight lambda({1, 1, 0, 1, 1});
  const std::vector<int> wt{1, 1, 1, 3, 3, 3};
  CHECK(monomials_with_wt(lambda, wt, symbol({1, 4})).empty());
  CHECK(monomials_with_wt(lambda, wt, symbol({1, 2, 4, 5})).empty());
  const auto with6 = monomials_with_wt(lambda, wt, symbol({6}));
  const auto first = make_monomial({symbol({6}), symbol({4, 5}), symbol({2, 4, 5, 6}), symbol({1, 3, 4, 5, 6})});
  CHECK(std::find(with6.begin(), with6.end(), first) != with6.end());
  for (const auto& m : with6) {
    CHECK(wt_of(m, 6) == wt);
    CHECK(monomial_divisible_by(m, symbol({6})));
  }
}

TEST_CASE("certificate for Q") {
  const QCertificate cert = verify_q(kW);
  CHECK(cert.restricted_zero);
  CHECK(cert.full_nonzero);
  CHECK(cert.excluded_empty);
  CHECK(cert.divides_first);
  CHECK_FALSE(cert.divides_second_product);
  CHECK(cert.second_factors.size() == 4);
  for (const auto& f : cert.second_factors) CHECK_FALSE(f.divisible);
  CHECK(cert.divisor.to_string() == "z[1,4]*z[2,5] - z[1,5]*z[2,4]");
  CHECK(cert.all_pass());
}

TEST_CASE("certificate detects a wrong sign") {
  const PlueckerPolynomial q = counterexample_q();
  PlueckerPolynomial flipped;
  for (const auto& [m, c] : q.terms()) flipped.add(m, c > 0 ? c : Rational(-c));
  const QCertificate cert = verify_q(kW, DominantWeight({1, 1, 0, 1, 1}), flipped, symbol({4, 5}));
  CHECK_FALSE(cert.restricted_zero);
  CHECK_FALSE(cert.all_pass());
  const ZPolynomial product = evaluate(flipped, 6, kW);
  CHECK(product.terms().size() == 1);
  CHECK(product.terms().begin()->second == 2);
}

TEST_CASE("certificate fails for the longest element") {
  const QCertificate cert = verify_q(Permutation::longest(6));
  CHECK_FALSE(cert.restricted_zero);
  CHECK(cert.restricted == cert.full);
  CHECK_FALSE(cert.all_pass());
  CHECK_FALSE(cert.first_failure().empty());
}

TEST_CASE("a single sign change in one restricted value breaks the restricted evaluation") {
  const auto q = counterexample_q();
  for (std::size_t victim = 0; victim < 8; ++victim) {
    ZPolynomial total;
    std::size_t slot = 0;
    for (const auto& [m, c] : q.terms()) {
      ZPolynomial prod(c);
      for (const auto& s : m) {
        ZPolynomial v = pw_poly(kW, s.index) * ZPolynomial::variable(ZVar::column(s.index.level()));
        if (slot++ == victim) v = -v;
        prod *= v;
      }
      total += prod;
    }
    CHECK_FALSE(total.is_zero());
  }
}
