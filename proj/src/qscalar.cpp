#include "qhh/qscalar.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qhh {

QExponent QExponent::symbol(SymbolId id, std::int64_t power) {
  QExponent e;
  if (power != 0) e.entries_.emplace_back(id, power);
  return e;
}

std::int64_t QExponent::operator[](SymbolId id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const Entry& e, SymbolId s) { return e.first < s; });
  return (it != entries_.end() && it->first == id) ? it->second : 0;
}

QExponent& QExponent::operator+=(const QExponent& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      if (auto sum = a->second + b->second; sum != 0) merged.emplace_back(a->first, sum);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

QExponent& QExponent::operator-=(const QExponent& other) { return *this += -other; }

QExponent QExponent::operator-() const { return scaled(-1); }

QExponent QExponent::scaled(std::int64_t factor) const {
  QExponent e;
  if (factor == 0) return e;
  e.entries_ = entries_;
  for (auto& entry : e.entries_) entry.second *= factor;
  return e;
}

QCoefficient::QCoefficient(Rational scalar, QExponent monomial)
    : scalar_(std::move(scalar)), monomial_(std::move(monomial)) {
  scalar_.canonicalize();
  if (sgn(scalar_) == 0) monomial_ = QExponent{};
}

QCoefficient QCoefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inversion of the zero coefficient");
  return QCoefficient(Rational(1) / scalar_, -monomial_);
}

QCoefficient QCoefficient::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return QCoefficient(rational_pow(scalar_, exponent), monomial_.scaled(exponent));
}

QCoefficient& QCoefficient::operator*=(const QCoefficient& other) {
  scalar_ *= other.scalar_;
  if (sgn(scalar_) == 0) {
    monomial_ = QExponent{};
  } else {
    monomial_ += other.monomial_;
  }
  return *this;
}

std::strong_ordering operator<=>(const QCoefficient& a, const QCoefficient& b) {
  if (auto c = a.monomial_ <=> b.monomial_; c != 0) return c;
  int r = cmp(a.scalar_, b.scalar_);
  return r < 0 ? std::strong_ordering::less
               : (r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QCoefficient qc_mul(const QCoefficient& a, const QCoefficient& b) { return a * b; }
QCoefficient qc_inv(const QCoefficient& a) { return a.inverse(); }

void NumericAssignment::set(SymbolId id, Rational value) {
  value.canonicalize();
  if (sgn(value) == 0) throw std::invalid_argument("numeric parameter values must be nonzero");
  values_[id] = std::move(value);
}

const Rational& NumericAssignment::at(SymbolId id) const {
  auto it = values_.find(id);
  if (it == values_.end()) {
    throw MissingAssignment("no numeric value for parameter symbol #" + std::to_string(id));
  }
  return it->second;
}

Rational rational_pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("negative power of zero");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

Rational qc_specialize(const QCoefficient& a, const NumericAssignment& nu) {
  Rational value = a.scalar();
  if (sgn(value) == 0) return value;
  for (const auto& [id, power] : a.monomial().entries()) value *= rational_pow(nu.at(id), power);
  return value;
}

std::int64_t nth_prime(int k) {
  static std::vector<std::int64_t> primes{2};
  for (std::int64_t candidate = primes.back() + 1; static_cast<int>(primes.size()) <= k; ++candidate) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes[static_cast<std::size_t>(k)];
}

Rational parse_rational(const std::string& text) {
  auto trimmed = text;
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), [](unsigned char c) { return std::isspace(c); }),
                trimmed.end());
  if (trimmed.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (trimmed[0] == '-' || trimmed[0] == '+') ? 1 : 0;
  auto slash = trimmed.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(trimmed.begin() + static_cast<long>(from), trimmed.begin() + static_cast<long>(to),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  bool ok = slash == std::string::npos ? digits_ok(start, trimmed.size())
                                       : digits_ok(start, slash) && digits_ok(slash + 1, trimmed.size());
  if (!ok) throw std::invalid_argument("not an exact rational: '" + text + "'");
  if (trimmed[0] == '+') trimmed.erase(0, 1);
  Rational r;
  if (r.set_str(trimmed, 10) != 0) throw std::invalid_argument("not an exact rational: '" + text + "'");
  if (slash != std::string::npos && sgn(r.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const QCoefficient& a, const std::vector<std::string>& symbol_names) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (a.scalar() != 1 || a.monomial().is_zero()) {
    if (a.scalar() == -1 && !a.monomial().is_zero()) {
      out << "-";
    } else {
      out << to_string(a.scalar());
      first = false;
    }
  }
  for (const auto& [id, power] : a.monomial().entries()) {
    if (!first) out << "*";
    first = false;
    auto index = static_cast<std::size_t>(id);
    out << (index < symbol_names.size() ? symbol_names[index] : "s" + std::to_string(id));
    if (power != 1) out << "^" << power;
  }
  return out.str();
}

namespace {

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

QCoefficient parse_coefficient(const std::string& text, std::vector<std::string>& symbol_names,
                               bool allow_new_symbols) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty coefficient expression");
  QCoefficient result = QCoefficient::one();
  std::size_t pos = 0;
  while (true) {
    auto end = s.find('*', pos);
    std::string factor = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (factor.empty()) throw std::invalid_argument("malformed coefficient '" + text + "'");
    std::size_t name_at = (factor[0] == '-' && factor.size() > 1 && is_identifier_start(factor[1])) ? 1 : 0;
    if (is_identifier_start(factor[name_at])) {
      if (name_at == 1) result *= QCoefficient(-1);
      std::size_t i = name_at;
      while (i < factor.size() && is_identifier_char(factor[i])) ++i;
      std::string name = factor.substr(name_at, i - name_at);
      std::int64_t power = 1;
      if (i < factor.size()) {
        if (factor[i] != '^' || i + 1 == factor.size()) {
          throw std::invalid_argument("malformed power in '" + text + "'");
        }
        std::string exponent = factor.substr(i + 1);
        std::size_t digits = (exponent[0] == '-' || exponent[0] == '+') ? 1 : 0;
        if (digits == exponent.size() ||
            !std::all_of(exponent.begin() + static_cast<long>(digits), exponent.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
          throw std::invalid_argument("malformed power in '" + text + "'");
        }
        power = std::stoll(exponent);
      }
      auto it = std::find(symbol_names.begin(), symbol_names.end(), name);
      if (it == symbol_names.end()) {
        if (!allow_new_symbols) throw std::invalid_argument("unknown parameter symbol '" + name + "'");
        symbol_names.push_back(name);
        it = symbol_names.end() - 1;
      }
      result *= QCoefficient::symbol(static_cast<SymbolId>(it - symbol_names.begin()), power);
    } else {
      result *= QCoefficient(parse_rational(factor));
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return result;
}

LogBasis::LogBasis(const std::vector<QCoefficient>& family) {
  std::set<SymbolId> symbols;
  std::vector<mpz_class> numbers;
  for (const auto& c : family) {
    if (c.is_zero()) throw std::invalid_argument("log of zero coefficient");
    if (sgn(c.scalar()) < 0) has_negative_ = true;
    for (const auto& [id, power] : c.monomial().entries()) symbols.insert(id);
    mpz_class num = abs(c.scalar().get_num());
    mpz_class den = c.scalar().get_den();
    if (num > 1) numbers.push_back(num);
    if (den > 1) numbers.push_back(den);
  }
  symbols_.assign(symbols.begin(), symbols.end());

  // Factor refinement: replace any two non-coprime members by their gcd and
  // cofactors until the set is pairwise coprime.
  auto& base = base_;
  base = numbers;
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t a = 0; a < base.size() && !changed; ++a) {
      for (std::size_t b = a + 1; b < base.size() && !changed; ++b) {
        mpz_class g = gcd(base[a], base[b]);
        if (g == 1) continue;
        mpz_class x = base[a] / g;
        mpz_class y = base[b] / g;
        std::vector<mpz_class> next;
        for (std::size_t k = 0; k < base.size(); ++k) {
          if (k != a && k != b) next.push_back(base[k]);
        }
        for (const auto& v : {g, x, y}) {
          if (v > 1) next.push_back(v);
        }
        base = std::move(next);
        changed = true;
      }
    }
  }
}

std::vector<Rational> LogBasis::log(const QCoefficient& c) const {
  if (c.is_zero()) throw std::invalid_argument("log of zero coefficient");
  std::vector<Rational> out(dimension(), Rational(0));
  for (const auto& [id, power] : c.monomial().entries()) {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), id);
    if (it == symbols_.end() || *it != id) throw std::invalid_argument("symbol outside log basis");
    out[static_cast<std::size_t>(it - symbols_.begin())] = Rational(power);
  }
  auto absorb = [&](mpz_class n, long sign) {
    for (std::size_t k = 0; k < base_.size() && n > 1; ++k) {
      long count = 0;
      while (n % base_[k] == 0) {
        n /= base_[k];
        ++count;
      }
      out[symbols_.size() + k] += Rational(sign * count);
    }
    if (n != 1) throw std::invalid_argument("scalar outside log basis");
  };
  absorb(abs(c.scalar().get_num()), 1);
  absorb(c.scalar().get_den(), -1);
  return out;
}

}  // namespace qhh
