#include "qhh/field.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace qhh;
using namespace qhh::testing;

namespace {

NumericAssignment random_point() {
  NumericAssignment nu;
  for (SymbolId s = 0; s < 2; ++s) nu.set(s, ratio(uniform(2, 40), uniform(1, 9)));
  return nu;
}

RationalFunction random_function() {
  LaurentPolynomial num;
  LaurentPolynomial den;
  for (int k = 0; k < uniform(1, 3); ++k) num += LaurentPolynomial(random_coefficient(2));
  for (int k = 0; k < uniform(1, 2); ++k) den += LaurentPolynomial(random_coefficient(2));
  if (den.is_zero()) den = LaurentPolynomial(QCoefficient::one());
  return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("Laurent polynomials cancel and multiply exactly") {
  auto q = QCoefficient::symbol(0);
  LaurentPolynomial a = LaurentPolynomial(q) - LaurentPolynomial(QCoefficient::one());
  LaurentPolynomial b = LaurentPolynomial(q) + LaurentPolynomial(QCoefficient::one());
  auto product = a * b;  // q^2 − 1
  CHECK(product.terms().size() == 2);
  CHECK(product == LaurentPolynomial(q.pow(2)) - LaurentPolynomial(QCoefficient::one()));
  CHECK((a - a).is_zero());
  CHECK((-a + a).is_zero());
  CHECK(LaurentPolynomial(QCoefficient{}).is_zero());
  CHECK(LaurentPolynomial(q).is_monomial());
  CHECK(LaurentPolynomial(q).leading_term() == q);
  CHECK(product.to_string({"q"}) == "-1 + q^2");
}

TEST_CASE("rational functions are a field") {
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_function();
    auto b = random_function();
    auto nu = random_point();
    // Skip points where a sampled denominator happens to vanish.
    if (evaluate(a.denominator(), nu) == 0 || evaluate(b.denominator(), nu) == 0) continue;
    CHECK(evaluate(a + b, nu) == evaluate(a, nu) + evaluate(b, nu));
    CHECK(evaluate(a * b, nu) == evaluate(a, nu) * evaluate(b, nu));
    CHECK(evaluate(a - b, nu) == evaluate(a, nu) - evaluate(b, nu));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      auto inv = a.inverse();
      CHECK(a * inv == RationalFunction(QCoefficient::one()));
      if (evaluate(a.numerator(), nu) != 0) CHECK(evaluate(inv, nu) == 1 / evaluate(a, nu));
    }
  }
  CHECK_THROWS_AS(RationalFunction().inverse(), std::domain_error);
  CHECK_THROWS_AS(RationalFunction(LaurentPolynomial(QCoefficient::one()), LaurentPolynomial()), std::domain_error);
}

TEST_CASE("equality ignores the representation") {
  auto q = QCoefficient::symbol(0);
  LaurentPolynomial qm1 = LaurentPolynomial(q) - LaurentPolynomial(QCoefficient::one());
  RationalFunction f(qm1 * qm1, qm1);
  CHECK(f == RationalFunction(qm1, LaurentPolynomial(QCoefficient::one())));
  RationalFunction g(LaurentPolynomial(QCoefficient::one()), LaurentPolynomial(q.pow(2)));
  CHECK(g == RationalFunction(q.pow(-2)));
  CHECK(g.denominator() == LaurentPolynomial(QCoefficient::one()));
}

TEST_CASE("coefficient fields") {
  static_assert(CoefficientField<NumericField>);
  static_assert(CoefficientField<SymbolicField>);
  CHECK(NumericField::embed(QCoefficient(Rational(3, 4))) == Rational(3, 4));
  CHECK_THROWS_AS(NumericField::embed(QCoefficient::symbol(0)), std::invalid_argument);
  CHECK_THROWS_AS(NumericField::inverse(Rational(0)), std::domain_error);
  CHECK(NumericField::inverse(Rational(-2)) == Rational(-1, 2));
  CHECK(SymbolicField::is_zero(SymbolicField::embed(QCoefficient{})));
}
