#include "qhh/field.hpp"

#include <sstream>
#include <stdexcept>

namespace qhh {

LaurentPolynomial::LaurentPolynomial(const QCoefficient& term) {
  if (!term.is_zero()) terms_.emplace(term.monomial(), term.scalar());
}

QCoefficient LaurentPolynomial::leading_term() const {
  if (terms_.empty()) return {};
  const auto& [m, c] = *terms_.begin();
  return QCoefficient(c, m);
}

void LaurentPolynomial::add_term(const QExponent& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, Rational(ca * cb));
  }
  return r;
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& symbols) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto text = qhh::to_string(QCoefficient(c, m), symbols);
    if (!first && text[0] != '-') out << " + ";
    if (!first && text[0] == '-') {
      out << " - ";
      text.erase(0, 1);
    }
    out << text;
    first = false;
  }
  return out.str();
}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial(QCoefficient::one());
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_ * LaurentPolynomial(den_.leading_term().inverse());
    den_ = LaurentPolynomial(QCoefficient::one());
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inversion of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  RationalFunction negated(-other.num_, other.den_);
  return *this += negated;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::string RationalFunction::to_string(const std::vector<std::string>& symbols) const {
  if (den_ == LaurentPolynomial(QCoefficient::one())) return num_.to_string(symbols);
  return "(" + num_.to_string(symbols) + ")/(" + den_.to_string(symbols) + ")";
}

Rational NumericField::embed(const QCoefficient& c) {
  if (!c.is_numeric()) throw std::invalid_argument("symbolic coefficient in a numeric computation");
  return c.scalar();
}

Rational NumericField::inverse(const Rational& a) {
  if (sgn(a) == 0) throw std::domain_error("inversion of zero");
  return Rational(1) / a;
}

}  // namespace qhh
