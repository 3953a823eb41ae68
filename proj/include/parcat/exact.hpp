// Exact scalar arithmetic: arbitrary-precision rationals, univariate
// polynomials in the generic parameter T, and truncated power series in
// u^{-1} over an arbitrary commutative ring.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parcat {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reduced fraction with positive denominator; all operations exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational parse(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational pow(long e) const;

  // "p/q", q omitted when 1.
  std::string str() const;

 private:
  mpq_class v_;
};

// Element of Q[T]: coefficient list indexed by degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }  // NOLINT
  Poly(long c) : Poly(Rational(c)) {}                      // NOLINT
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly T(long exp = 1);
  static Poly parse(const std::string& s);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& t) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  // Division is defined only by nonzero constants; anything else throws.
  friend Poly operator/(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b);

  Poly pow(long e) const;

  // "3/2*T^2 - T + 1", descending degree; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
  std::vector<Rational> c_;
};

// Ring hooks used by TruncSeries; specialized per coefficient ring.
template <class R>
struct RingOps {
  static R zero_like(const R&) { return R(); }
  static R one_like(const R&);
  static R scale(const R& a, long k);
  static std::optional<R> try_invert(const R&);
};

template <>
struct RingOps<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational scale(const Rational& a, long k) { return a * Rational(k); }
  static std::optional<Rational> try_invert(const Rational& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
};

template <>
struct RingOps<Poly> {
  static Poly zero_like(const Poly&) { return Poly(); }
  static Poly one_like(const Poly&) { return Poly(1); }
  static Poly scale(const Poly& a, long k) { return a * Poly(k); }
  static std::optional<Poly> try_invert(const Poly& a) {
    if (a.is_zero() || !a.is_constant()) return std::nullopt;
    return Poly(a.coeff(0).inverse());
  }
};

// Truncated power series in u^{-1}: coefficient k is the u^{-k} term.
// Operations never read beyond the truncation order.
template <class R>
class TruncSeries {
 public:
  TruncSeries(int order, const R& sample)
      : c_(static_cast<size_t>(order) + 1, RingOps<R>::zero_like(sample)) {
    if (order < 0) throw precondition_error("series order must be >= 0");
  }
  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw precondition_error("series needs at least the constant term");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
  R& coeff(int k) { return c_.at(static_cast<size_t>(k)); }
  const std::vector<R>& coeffs() const { return c_; }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    a.check_same_order(b);
    for (int k = 0; k <= a.order(); ++k) a.c_[k] = a.c_[k] + b.c_[k];
    return a;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    a.check_same_order(b);
    for (int k = 0; k <= a.order(); ++k) a.c_[k] = a.c_[k] - b.c_[k];
    return a;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_same_order(b);
    TruncSeries out(a.order(), a.c_[0]);
    for (int k = 0; k <= a.order(); ++k) {
      R acc = RingOps<R>::zero_like(a.c_[0]);
      for (int i = 0; i <= k; ++i) acc = acc + a.c_[i] * b.c_[k - i];
      out.c_[k] = acc;
    }
    return out;
  }

  // Multiplicative inverse up to the truncation order; requires an
  // invertible constant term.
  TruncSeries inverse() const {
    auto b0 = RingOps<R>::try_invert(c_[0]);
    if (!b0) throw precondition_error("series inverse: constant term not invertible");
    TruncSeries out(order(), c_[0]);
    out.c_[0] = *b0;
    for (int k = 1; k <= order(); ++k) {
      R acc = RingOps<R>::zero_like(c_[0]);
      for (int i = 1; i <= k; ++i) acc = acc + c_[i] * out.c_[k - i];
      out.c_[k] = -(*b0 * acc);
    }
    return out;
  }

 private:
  void check_same_order(const TruncSeries& o) const {
    if (c_.size() != o.c_.size())
      throw precondition_error("series order mismatch");
  }
  std::vector<R> c_;
};

// alpha_a(u) = (u-(a+1))(u-(a-1))/(u-a)^2 = 1 - (u-a)^{-2}, expanded to
// order N: coefficients 1, 0, -1, -2a, -3a^2, -4a^3, ...
template <class R>
TruncSeries<R> alpha_series(const R& a, int N) {
  TruncSeries<R> s(N, a);
  s.coeff(0) = RingOps<R>::one_like(a);
  R apow = RingOps<R>::one_like(a);  // a^{k-2} for k>=2
  for (int k = 2; k <= N; ++k) {
    s.coeff(k) = RingOps<R>::scale(apow, -(k - 1));
    apow = apow * a;
  }
  return s;
}

// Expansion of alpha_y(u)/alpha_x(u):
// 1 + 2(x-y) u^{-3} + 3(x^2-y^2) u^{-4} + [4(x^3-y^3)+2(x-y)] u^{-5} + ...
// x and y must commute in R.
template <class R>
TruncSeries<R> series_ratio_alpha(const R& x, const R& y, int N) {
  return alpha_series(y, N) * alpha_series(x, N).inverse();
}

// poly_eval as a named free function (the canonical specialization T -> t).
inline Rational poly_eval(const Poly& p, const Rational& t) { return p.eval(t); }

}  // namespace parcat
