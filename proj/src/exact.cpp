#include "parcat/exact.hpp"

#include <cctype>
#include <sstream>

namespace parcat {

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw precondition_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw precondition_error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational acc(1), base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw precondition_error("rational does not fit a machine integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) os << "/" << v_.get_den();
  return os.str();
}

Rational Rational::parse(const std::string& s) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  auto read_int = [&]() -> mpz_class {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw parse_error("bad rational: '" + s + "'");
    return mpz_class(s.substr(start, i - start));
  };
  mpz_class num = read_int();
  skip_ws();
  mpz_class den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = read_int();
    if (den == 0) throw parse_error("bad rational: zero denominator");
  }
  skip_ws();
  if (i != s.size()) throw parse_error("bad rational: '" + s + "'");
  return Rational(num, den);
}

Poly Poly::T(long exp) {
  if (exp < 0) throw precondition_error("negative T power");
  std::vector<Rational> c(static_cast<size_t>(exp) + 1, Rational(0));
  c.back() = Rational(1);
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator/(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw precondition_error("polynomial division by zero");
  if (!b.is_constant())
    throw precondition_error("division by a nonconstant polynomial is not supported");
  Poly out(a);
  Rational inv = b.coeff(0).inverse();
  for (auto& c : out.c_) c *= inv;
  return out;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t k = a.c_.size(); k-- > 0;) {
    if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
  }
  return false;
}

Poly Poly::pow(long e) const {
  if (e < 0) throw precondition_error("negative polynomial power");
  Poly acc(1), base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c < Rational(0);
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "T";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// Grammar: poly := [sign] term (sign term)* ; term := rat [*T[^k]] | T[^k]
Poly Poly::parse(const std::string& s) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  auto peek = [&]() -> int { return i < s.size() ? s[i] : -1; };
  std::vector<Rational> acc;
  auto add_term = [&](size_t deg, const Rational& c) {
    if (acc.size() <= deg) acc.resize(deg + 1, Rational(0));
    acc[deg] += c;
  };
  skip_ws();
  if (i == s.size()) throw parse_error("empty polynomial");
  bool expect_term = true;
  Rational sign(1);
  if (peek() == '+' || peek() == '-') {  // at most one leading sign
    if (peek() == '-') sign = Rational(-1);
    ++i;
  }
  while (true) {
    skip_ws();
    if (i == s.size()) {
      if (expect_term) throw parse_error("bad polynomial: '" + s + "'");
      break;
    }
    if (!expect_term) {
      if (peek() == '+') sign = Rational(1);
      else if (peek() == '-') sign = Rational(-1);
      else throw parse_error("bad polynomial: '" + s + "'");
      ++i;
      expect_term = true;
      continue;
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      mpz_class num(s.substr(start, i - start));
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++i;
        skip_ws();
        size_t d0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (d0 == i) throw parse_error("bad polynomial: '" + s + "'");
        den = mpz_class(s.substr(d0, i - d0));
      }
      coeff = Rational(num, den);
      have_coeff = true;
      skip_ws();
      if (peek() == '*') { ++i; skip_ws(); }
    }
    size_t deg = 0;
    if (peek() == 'T') {
      ++i;
      deg = 1;
      skip_ws();
      if (peek() == '^') {
        ++i;
        skip_ws();
        size_t d0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (d0 == i) throw parse_error("bad polynomial: '" + s + "'");
        deg = std::stoul(s.substr(d0, i - d0));
      }
    } else if (!have_coeff) {
      throw parse_error("bad polynomial: '" + s + "'");
    }
    add_term(deg, sign * coeff);
    sign = Rational(1);
    expect_term = false;
  }
  return Poly(std::move(acc));
}

}  // namespace parcat
