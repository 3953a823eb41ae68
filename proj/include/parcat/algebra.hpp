// Morphisms of the (generic) partition category: finitely supported
// linear combinations of partition diagrams over Q[T] or Q, their
// multiplication, the Harish-Chandra projection, Jucys-Murphy elements
// and central elements.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "parcat/diagram.hpp"
#include "parcat/exact.hpp"

namespace parcat {

template <class R>
struct AlgebraElement {
  int m = 0, n = 0;
  std::map<PartitionDiagram, R> terms;  // no zero coefficients stored

  AlgebraElement() = default;
  AlgebraElement(int m_, int n_) : m(m_), n(n_) {}

  static AlgebraElement zero(int m, int n) { return AlgebraElement(m, n); }
  static AlgebraElement identity(int n) {
    AlgebraElement e(n, n);
    e.terms.emplace(PartitionDiagram::identity(n), R(1));
    return e;
  }
  static AlgebraElement from_diagram(const PartitionDiagram& d, R coeff = R(1)) {
    AlgebraElement e(d.m, d.n);
    if (!coeff.is_zero()) e.terms.emplace(d, std::move(coeff));
    return e;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const PartitionDiagram& d, const R& c) {
    if (d.m != m || d.n != n) throw precondition_error("term arity mismatch");
    auto [it, fresh] = terms.emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    } else if (it->second.is_zero()) {
      terms.erase(it);
    }
  }

  AlgebraElement operator-() const {
    AlgebraElement out(m, n);
    for (const auto& [d, c] : terms) out.terms.emplace(d, -c);
    return out;
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_arity(o);
    for (const auto& [d, c] : o.terms) add_term(d, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_arity(o);
    for (const auto& [d, c] : o.terms) add_term(d, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.m == b.m && a.n == b.n && a.terms == b.terms;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement scaled(const R& c) const {
    AlgebraElement out(m, n);
    if (c.is_zero()) return out;
    for (const auto& [d, k] : terms) {
      R nc = k * c;
      if (!nc.is_zero()) out.terms.emplace(d, std::move(nc));
    }
    return out;
  }

  void check_arity(const AlgebraElement& o) const {
    if (o.m != m || o.n != n) throw precondition_error("element arity mismatch");
  }
};

using PolyElement = AlgebraElement<Poly>;
using RatElement = AlgebraElement<Rational>;

// Bilinear extension of diagram composition; loops contribute T^loops.
PolyElement mul(const PolyElement& f, const PolyElement& g);
// Same over Q at a fixed parameter value t (loops contribute t^loops).
RatElement mul(const RatElement& f, const RatElement& g, const Rational& t);

PolyElement tensor(const PolyElement& f, const PolyElement& g);
// Flip in a horizontal axis, extended linearly (an anti-automorphism).
template <class R>
AlgebraElement<R> sigma(const AlgebraElement<R>& f) {
  AlgebraElement<R> out(f.n, f.m);
  for (const auto& [d, c] : f.terms) out.terms.emplace(flip_sigma(d), c);
  return out;
}

RatElement specialize(const PolyElement& f, const Rational& t);

// Group algebra of S_n; permutations stored as 0-based image vectors.
template <class R>
struct GroupAlgebraElement {
  int n = 0;
  std::map<std::vector<int>, R> terms;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int n_) : n(n_) {}
  static GroupAlgebraElement identity(int n) {
    GroupAlgebraElement e(n);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    e.terms.emplace(std::move(id), R(1));
    return e;
  }
  void add_term(const std::vector<int>& g, const R& c) {
    auto [it, fresh] = terms.emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    } else if (it->second.is_zero()) {
      terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

using PolyGroupElement = GroupAlgebraElement<Poly>;

// Keeps exactly the permutation-diagram terms of an endomorphism;
// everything factoring through smaller objects is discarded.
template <class R>
GroupAlgebraElement<R> hc_project(const AlgebraElement<R>& f) {
  if (f.m != f.n) throw precondition_error("hc_project needs m == n");
  GroupAlgebraElement<R> out(f.n);
  for (const auto& [d, c] : f.terms) {
    std::vector<int> perm;
    if (d.as_permutation(&perm)) out.add_term(perm, c);
  }
  return out;
}

// Jucys-Murphy elements x_j^L, x_j^R and the dotted crossings s_k^L,
// s_k^R of P_n(T), built by the affine-category recurrences (memoized).
PolyElement jm_left(int n, int j);
PolyElement jm_right(int n, int j);
PolyElement cross_left(int n, int k);
PolyElement cross_right(int n, int k);

// z_n^(r) = sum_i (x_i^L)^r - (x_i^R)^r.
PolyElement central_z(int n, int r);
// Coefficient of u^{-r} in the strand-wise product of alpha_{x^L}(u)/alpha_{x^R}(u).
PolyElement central_c(int n, int r);

PolyElement power(const PolyElement& f, long e);

// Verifies z_m h = h z_n for every diagram h in Hom(n,m), m,n <= n_max.
bool check_centrality(const std::function<PolyElement(int)>& family, int n_max);

// Recovers the unique element of Hom_Par(n, m) whose psi_t matrix agrees
// with `oracle` for t >= m+n, as diagram-basis coefficients in Q[T].
// The matrix is supplied as a dense row-major table of size t^m x t^n.
using MatrixOracle = std::function<std::vector<std::vector<Rational>>(long t)>;
PolyElement interpolate_element(const MatrixOracle& oracle, int m, int n,
                                int initial_degree_bound = 1, int max_degree_bound = 64);

// JSON round trip ({"m":..,"n":..,"terms":[{"coeff":..,"diagram":..}]}).
std::string to_json_string(const PolyElement& f);
PolyElement element_from_json(const std::string& text);

// Text rendering: one "<diagram> * <coeff>" per line, canonical order.
std::string to_text(const PolyElement& f);

template <>
struct RingOps<PolyElement> {
  static PolyElement zero_like(const PolyElement& a) { return PolyElement::zero(a.m, a.n); }
  static PolyElement one_like(const PolyElement& a) {
    if (a.m != a.n) throw precondition_error("identity needs m == n");
    return PolyElement::identity(a.n);
  }
  static PolyElement scale(const PolyElement& a, long k) { return a.scaled(Poly(k)); }
  static std::optional<PolyElement> try_invert(const PolyElement& a);
};

PolyElement operator*(const PolyElement& a, const PolyElement& b);

}  // namespace parcat
