#include <doctest.h>

#include <map>
#include <random>

#include "parcat/exact.hpp"

using namespace parcat;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

Poly rand_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::vector<Rational> c;
  int d = deg(rng);
  for (int k = 0; k <= d; ++k) c.push_back(rand_rational(rng));
  return Poly(std::move(c));
}

// Tiny polynomial ring Q[x, y] used as the symbolic oracle for the
// two-variable series identities.
struct Poly2 {
  std::map<std::pair<int, int>, Rational> c;

  Poly2() = default;
  Poly2(long v) {  // NOLINT
    if (v) c[{0, 0}] = Rational(v);
  }
  static Poly2 var(int which) {
    Poly2 p;
    p.c[{which == 0 ? 1 : 0, which == 0 ? 0 : 1}] = Rational(1);
    return p;
  }
  bool is_zero() const { return c.empty(); }
  void add(std::pair<int, int> key, const Rational& v) {
    auto [it, fresh] = c.emplace(key, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) c.erase(it);
    } else if (it->second.is_zero()) {
      c.erase(it);
    }
  }
  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [k, v] : b.c) out.add(k, v);
    return out;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [k, v] : b.c) out.add(k, -v);
    return out;
  }
  Poly2 operator-() const { return Poly2() - *this; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ka, va] : a.c)
      for (const auto& [kb, vb] : b.c)
        out.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return out;
  }
  friend bool operator==(const Poly2&, const Poly2&) = default;
};

}  // namespace

template <>
struct parcat::RingOps<Poly2> {
  static Poly2 zero_like(const Poly2&) { return Poly2(); }
  static Poly2 one_like(const Poly2&) { return Poly2(1); }
  static Poly2 scale(const Poly2& a, long k) { return a * Poly2(k); }
  static std::optional<Poly2> try_invert(const Poly2& a) {
    if (a.c.size() == 1 && a.c.begin()->first == std::make_pair(0, 0)) {
      Poly2 out;
      out.c[{0, 0}] = a.c.begin()->second.inverse();
      return out;
    }
    return std::nullopt;
  }
};

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational::parse("3/6") == Rational(mpz_class(1), mpz_class(2)));
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational(mpz_class(2), mpz_class(-4)).str() == "-1/2");
  CHECK(Rational(3).str() == "3");
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), precondition_error);

  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    // Always reduced with positive denominator.
    Rational s = a * b;
    CHECK(gcd(s.num(), s.den()) == 1);
    CHECK(s.den() > 0);
  }
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(Poly::T(), Rational(3)) == Rational(3));
  Poly p = Poly::T(2) - Poly(1);
  CHECK(poly_eval(p, Rational(mpz_class(1), mpz_class(2))) ==
        Rational(mpz_class(-3), mpz_class(4)));
  for (long t : {-2L, 0L, 5L}) CHECK(poly_eval(Poly(), Rational(t)) == Rational(0));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Poly a = rand_poly(rng), b = rand_poly(rng);
    Rational t = rand_rational(rng);
    CHECK(poly_eval(a * b, t) == poly_eval(a, t) * poly_eval(b, t));
    CHECK(poly_eval(a + b, t) == poly_eval(a, t) + poly_eval(b, t));
  }
}

TEST_CASE("poly formatting and parsing") {
  Poly p = Poly(Rational(mpz_class(3), mpz_class(2))) * Poly::T(2) - Poly::T() + Poly(1);
  CHECK(p.str() == "3/2*T^2 - T + 1");
  CHECK(Poly::parse("3/2*T^2 - T + 1") == p);
  CHECK(Poly::parse("T-1") == Poly::T() - Poly(1));
  CHECK(Poly::parse("-T^3") == -Poly::T(3));
  CHECK(Poly().str() == "0");
  CHECK_THROWS_AS(Poly::parse("T + + 1"), parse_error);
  CHECK_THROWS_AS(Poly::T(2) / Poly::T(), precondition_error);
  CHECK(Poly::T(2) / Poly(2) == Poly(Rational(mpz_class(1), mpz_class(2))) * Poly::T(2));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly a = rand_poly(rng);
    CHECK(Poly::parse(a.str()) == a);
  }
}

TEST_CASE("alpha series matches the closed expansions") {
  // Symbolic a: work in Q[T] with a = T.
  auto s = alpha_series(Poly::T(), 5);
  CHECK(s.coeff(0) == Poly(1));
  CHECK(s.coeff(1) == Poly(0));
  CHECK(s.coeff(2) == Poly(-1));
  CHECK(s.coeff(3) == Poly(-2) * Poly::T());
  CHECK(s.coeff(4) == Poly(-3) * Poly::T(2));
  CHECK(s.coeff(5) == Poly(-4) * Poly::T(3));

  auto inv = s.inverse();
  CHECK(inv.coeff(0) == Poly(1));
  CHECK(inv.coeff(1) == Poly(0));
  CHECK(inv.coeff(2) == Poly(1));
  CHECK(inv.coeff(3) == Poly(2) * Poly::T());
  CHECK(inv.coeff(4) == Poly(3) * Poly::T(2) + Poly(1));
  CHECK(inv.coeff(5) == Poly(4) * Poly::T(3) + Poly(4) * Poly::T());

  auto s0 = alpha_series(Rational(0), 2);
  CHECK(s0.coeff(0) == Rational(1));
  CHECK(s0.coeff(1) == Rational(0));
  CHECK(s0.coeff(2) == Rational(-1));

  CHECK_THROWS_AS(TruncSeries<Rational>(std::vector<Rational>{Rational(0), Rational(1)}).inverse(),
                  precondition_error);
}

TEST_CASE("series ratio of alphas") {
  Poly2 x = Poly2::var(0), y = Poly2::var(1);
  auto r = series_ratio_alpha(x, y, 5);
  CHECK(r.coeff(0) == Poly2(1));
  CHECK(r.coeff(1) == Poly2());
  CHECK(r.coeff(2) == Poly2());
  CHECK(r.coeff(3) == Poly2(2) * (x - y));
  CHECK(r.coeff(4) == Poly2(3) * (x * x - y * y));
  CHECK(r.coeff(5) == Poly2(4) * (x * x * x - y * y * y) + Poly2(2) * (x - y));

  // x = y gives the constant series 1.
  auto same = series_ratio_alpha(Rational(5), Rational(5), 4);
  CHECK(same.coeff(0) == Rational(1));
  for (int k = 1; k <= 4; ++k) CHECK(same.coeff(k) == Rational(0));

  auto num = series_ratio_alpha(Rational(1), Rational(0), 3);
  CHECK(num.coeff(0) == Rational(1));
  CHECK(num.coeff(1) == Rational(0));
  CHECK(num.coeff(2) == Rational(0));
  CHECK(num.coeff(3) == Rational(2));

  // ratio(x, y) ratio(y, x) = 1, symbolically and at random rationals.
  auto prod = series_ratio_alpha(x, y, 5) * series_ratio_alpha(y, x, 5);
  CHECK(prod.coeff(0) == Poly2(1));
  for (int k = 1; k <= 5; ++k) CHECK(prod.coeff(k) == Poly2());
}

TEST_CASE("series inverse is a true inverse") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c;
    c.push_back(rand_rational(rng));
    while (c[0].is_zero()) c[0] = rand_rational(rng);
    for (int k = 0; k < 5; ++k) c.push_back(rand_rational(rng));
    TruncSeries<Rational> s(std::move(c));
    auto prod = s * s.inverse();
    CHECK(prod.coeff(0) == Rational(1));
    for (int k = 1; k <= s.order(); ++k) CHECK(prod.coeff(k) == Rational(0));
  }
}
