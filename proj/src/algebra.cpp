#include "parcat/algebra.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "parcat/schurweyl.hpp"

namespace parcat {

PolyElement mul(const PolyElement& f, const PolyElement& g) {
  if (f.n != g.m) throw precondition_error("mul arity mismatch");
  PolyElement out(f.m, g.n);
  for (const auto& [df, cf] : f.terms) {
    for (const auto& [dg, cg] : g.terms) {
      ComposeResult r = compose(df, dg);
      out.add_term(r.diagram, cf * cg * Poly::T().pow(r.loops));
    }
  }
  return out;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b) { return mul(a, b); }

RatElement mul(const RatElement& f, const RatElement& g, const Rational& t) {
  if (f.n != g.m) throw precondition_error("mul arity mismatch");
  RatElement out(f.m, g.n);
  for (const auto& [df, cf] : f.terms) {
    for (const auto& [dg, cg] : g.terms) {
      ComposeResult r = compose(df, dg);
      out.add_term(r.diagram, cf * cg * t.pow(r.loops));
    }
  }
  return out;
}

PolyElement tensor(const PolyElement& f, const PolyElement& g) {
  PolyElement out(f.m + g.m, f.n + g.n);
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) out.add_term(tensor(df, dg), cf * cg);
  return out;
}

RatElement specialize(const PolyElement& f, const Rational& t) {
  RatElement out(f.m, f.n);
  for (const auto& [d, c] : f.terms) {
    Rational v = c.eval(t);
    if (!v.is_zero()) out.terms.emplace(d, v);
  }
  return out;
}

PolyElement power(const PolyElement& f, long e) {
  if (f.m != f.n) throw precondition_error("power needs an endomorphism");
  if (e < 0) throw precondition_error("negative power");
  PolyElement acc = PolyElement::identity(f.n);
  PolyElement base = f;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    if (e >>= 1) base = mul(base, base);
  }
  return acc;
}

std::optional<PolyElement> RingOps<PolyElement>::try_invert(const PolyElement& a) {
  if (a.m != a.n) return std::nullopt;
  if (a.terms.size() != 1) return std::nullopt;
  const auto& [d, c] = *a.terms.begin();
  if (!d.is_identity()) return std::nullopt;
  auto ci = RingOps<Poly>::try_invert(c);
  if (!ci) return std::nullopt;
  return PolyElement::identity(a.n).scaled(*ci);
}

// ---------------------------------------------------------------------------
// Jucys-Murphy elements via the affine-category recurrences.
//
// Base cases on strand 1: x_1^L is the leaf-leaf diagram, x_1^R = T,
// s_1^L = 1, s_1^R = (1 2).  The step j -> j+1 rewrites the dot/dotted
// crossing on strand j+1 through the crossing of strands (j, j+1); the
// correction terms all factor through smaller objects, which is what
// makes the Harish-Chandra images come out right.
// ---------------------------------------------------------------------------

namespace {

struct JmCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, PolyElement> table;
};

JmCache& jm_cache() {
  static JmCache c;
  return c;
}

PolyElement elem(const PartitionDiagram& d) { return PolyElement::from_diagram(d); }

PolyElement jm_build(int n, int j, JmKind kind);

PolyElement jm_get(int n, int j, JmKind kind) {
  bool crossing = (kind == JmKind::LeftCross || kind == JmKind::RightCross);
  if (n < 1 || j < 1 || (crossing ? j >= n : j > n))
    throw precondition_error("jm position out of range");
  auto key = std::make_tuple(n, j, static_cast<int>(kind));
  {
    std::lock_guard<std::mutex> lk(jm_cache().mu);
    auto it = jm_cache().table.find(key);
    if (it != jm_cache().table.end()) return it->second;
  }
  PolyElement v = jm_build(n, j, kind);
  std::lock_guard<std::mutex> lk(jm_cache().mu);
  return jm_cache().table.emplace(key, std::move(v)).first->second;
}

PolyElement jm_build(int n, int j, JmKind kind) {
  if (j == 1) {
    switch (kind) {
      case JmKind::LeftDot:
        return elem(leafleaf_at(n, 1));
      case JmKind::RightDot:
        return PolyElement::identity(n).scaled(Poly::T());
      case JmKind::LeftCross:
        return PolyElement::identity(n);
      case JmKind::RightCross:
        return elem(crossing_at(n, 1));
    }
  }
  const int p = j - 1;  // the relation lives on strands p, p+1 (and p+2)
  PolyElement sig = elem(crossing_at(n, p));
  PolyElement E = elem(splitmerge_at(n, p));
  PolyElement M = elem(merge_at(n, p));          // n -> n-1
  PolyElement S = elem(split_at(n - 1, p));      // n-1 -> n
  switch (kind) {
    case JmKind::LeftDot: {
      PolyElement xp = jm_get(n, p, JmKind::LeftDot);
      PolyElement down = jm_get(n - 1, p, JmKind::LeftDot);
      return mul(mul(sig, xp), sig) + jm_get(n, p, JmKind::RightCross) +
             mul(mul(S, down), M) - mul(mul(sig, xp), E) - mul(E, mul(xp, sig));
    }
    case JmKind::RightDot: {
      PolyElement xp = jm_get(n, p, JmKind::RightDot);
      PolyElement xl = jm_get(n, p, JmKind::LeftDot);
      PolyElement down = jm_get(n - 1, p, JmKind::RightDot);
      return mul(mul(sig, xp), sig) + mul(xl, E) + mul(E, xl) -
             mul(mul(S, down), M) - jm_get(n, p, JmKind::LeftCross);
    }
    case JmKind::LeftCross:
    case JmKind::RightCross: {
      // Conjugate the dotted crossing of strands (p, p+1) through the cycle
      // moving strand p across strands p+1, p+2.  The corrections reroute a
      // merged pair through the third strand:
      //   C = split_p . crossing . merge_p  -  sigma_{p+1} . E_p.
      PolyElement sig2 = elem(crossing_at(n, p + 1));
      PolyElement sp = jm_get(n, p, kind);
      PolyElement conj = mul(mul(mul(mul(sig, sig2), sp), sig2), sig);
      PolyElement down_r = mul(mul(S, jm_get(n - 1, p, JmKind::RightCross)), M);
      PolyElement down_l = mul(mul(S, jm_get(n - 1, p, JmKind::LeftCross)), M);
      PolyElement corr = down_r - mul(sig2, down_l);
      if (kind == JmKind::RightCross)
        return conj + corr + mul(mul(sig2, corr), sig2);
      return conj + mul(sig2, corr) + mul(corr, sig2);
    }
  }
  throw precondition_error("unreachable");
}

}  // namespace

PolyElement jm_left(int n, int j) { return jm_get(n, j, JmKind::LeftDot); }
PolyElement jm_right(int n, int j) { return jm_get(n, j, JmKind::RightDot); }
PolyElement cross_left(int n, int k) { return jm_get(n, k, JmKind::LeftCross); }
PolyElement cross_right(int n, int k) { return jm_get(n, k, JmKind::RightCross); }

PolyElement central_z(int n, int r) {
  if (r < 1) throw precondition_error("central_z needs r >= 1");
  PolyElement out = PolyElement::zero(n, n);
  for (int i = 1; i <= n; ++i)
    out += power(jm_left(n, i), r) - power(jm_right(n, i), r);
  return out;
}

PolyElement central_c(int n, int r) {
  if (r < 0) throw precondition_error("central_c needs r >= 0");
  if (r == 0) return PolyElement::identity(n);
  TruncSeries<PolyElement> prod(r, PolyElement::identity(n));
  prod.coeff(0) = PolyElement::identity(n);
  for (int i = 1; i <= n; ++i)
    prod = prod * series_ratio_alpha(jm_right(n, i), jm_left(n, i), r);
  return prod.coeff(r);
}

bool check_centrality(const std::function<PolyElement(int)>& family, int n_max) {
  for (int m = 0; m <= n_max; ++m) {
    PolyElement zm = family(m);
    for (int n = 0; n <= n_max; ++n) {
      PolyElement zn = family(n);
      for (const auto& h : enumerate_diagrams(m, n)) {
        PolyElement eh = PolyElement::from_diagram(h);
        if (mul(zm, eh) != mul(eh, zn)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Interpolation from Schur-Weyl matrices (Lemma-style uniqueness: an
// element of Hom_Par(n, m) is pinned down by its matrices at enough
// integer specializations t >= m+n).
// ---------------------------------------------------------------------------

namespace {

Poly lagrange(const std::vector<std::pair<Rational, Rational>>& pts) {
  Poly acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    Poly numer(1);
    Rational denom(1);
    for (size_t k = 0; k < pts.size(); ++k) {
      if (k == i) continue;
      numer *= Poly::T() - Poly(pts[k].first);
      denom *= pts[i].first - pts[k].first;
    }
    acc += numer * Poly(pts[i].second / denom);
  }
  return acc;
}

// Solve for the diagram-basis coefficients at one specialization.  Rows
// are scanned greedily until the selected subsystem reaches full column
// rank; the remaining rows are then checked as residuals.
bool solve_at(const MatrixOracle& oracle, const std::vector<PartitionDiagram>& basis,
              int m, int n, long t, std::vector<Rational>* coeffs) {
  auto target = oracle(t);
  long rows_full = power_long(t, m);
  long cols_full = power_long(t, n);
  if (static_cast<long>(target.size()) != rows_full)
    throw precondition_error("oracle matrix has wrong shape");
  const size_t ncols = basis.size();
  std::map<std::pair<long, long>, std::vector<std::pair<size_t, Rational>>> rows;
  for (size_t col = 0; col < ncols; ++col) {
    RatMatrix md = psi_diagram(basis[col], t);
    for (const auto& [rc, v] : md.entries) rows[rc].emplace_back(col, v);
  }
  for (long r = 0; r < rows_full; ++r)
    for (long c = 0; c < cols_full; ++c)
      if (!target[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero())
        rows.try_emplace(std::make_pair(r, c));
  auto rhs_of = [&](const std::pair<long, long>& rc) {
    return target[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)];
  };
  // Echelon of selected rows: pivot_col -> (reduced row, reduced rhs).
  std::map<size_t, std::pair<std::vector<Rational>, Rational>> echelon;
  std::vector<std::vector<Rational>> sel_a;
  std::vector<Rational> sel_b;
  for (const auto& [rc, sparse_row] : rows) {
    if (echelon.size() == ncols) break;
    std::vector<Rational> v(ncols, Rational(0));
    for (const auto& [col, val] : sparse_row) v[col] = val;
    Rational b = rhs_of(rc);
    std::vector<Rational> w = v;
    Rational wb = b;
    for (auto& [piv, rowrhs] : echelon) {
      if (w[piv].is_zero()) continue;
      Rational f = w[piv];
      for (size_t j = 0; j < ncols; ++j) w[j] -= f * rowrhs.first[j];
      wb -= f * rowrhs.second;
    }
    size_t piv = 0;
    while (piv < ncols && w[piv].is_zero()) ++piv;
    if (piv == ncols) continue;
    Rational inv = w[piv].inverse();
    for (size_t j = 0; j < ncols; ++j) w[j] *= inv;
    wb *= inv;
    echelon.emplace(piv, std::make_pair(std::move(w), wb));
    sel_a.push_back(std::move(v));
    sel_b.push_back(b);
  }
  if (!solve_dense(sel_a, sel_b, coeffs)) return false;
  // Residual check over every constrained entry.
  for (const auto& [rc, sparse_row] : rows) {
    Rational acc(0);
    for (const auto& [col, val] : sparse_row) acc += val * (*coeffs)[col];
    if (acc != rhs_of(rc)) return false;
  }
  return true;
}

}  // namespace

PolyElement interpolate_element(const MatrixOracle& oracle, int m, int n,
                                int initial_degree_bound, int max_degree_bound) {
  auto basis = enumerate_diagrams(m, n);
  long t0 = m + n;
  if (t0 == 0) t0 = 1;  // psi at t >= 1 still determines the scalar
  for (int bound = initial_degree_bound; bound <= max_degree_bound; bound *= 2) {
    std::vector<std::vector<Rational>> coeff_at;  // per point, per diagram
    std::vector<Rational> points;
    bool ok = true;
    for (int i = 0; i <= bound; ++i) {
      long t = t0 + i;
      std::vector<Rational> c;
      if (!solve_at(oracle, basis, m, n, t, &c))
        throw precondition_error("interpolate_element: inconsistent system at t=" +
                                 std::to_string(t));
      coeff_at.push_back(std::move(c));
      points.push_back(Rational(t));
    }
    PolyElement out(m, n);
    for (size_t d = 0; d < basis.size(); ++d) {
      std::vector<std::pair<Rational, Rational>> pts;
      pts.reserve(points.size());
      for (size_t i = 0; i < points.size(); ++i) pts.emplace_back(points[i], coeff_at[i][d]);
      Poly pd = lagrange(pts);
      if (!pd.is_zero()) out.terms.emplace(basis[d], std::move(pd));
    }
    // Held-out validation at two fresh specializations.
    for (int h = 1; h <= 2 && ok; ++h) {
      long t = t0 + bound + h;
      auto want = oracle(t);
      RatMatrix got = psi_element(out, t);
      auto dense = got.dense();
      if (dense.size() != want.size()) ok = false;
      for (size_t r = 0; ok && r < want.size(); ++r)
        for (size_t c = 0; ok && c < want[r].size(); ++c)
          if (dense[r][c] != want[r][c]) ok = false;
    }
    if (ok) return out;
  }
  throw precondition_error("interpolate_element: degree bound exceeded");
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string to_json_string(const PolyElement& f) {
  nlohmann::json j;
  j["m"] = f.m;
  j["n"] = f.n;
  j["terms"] = nlohmann::json::array();
  for (const auto& [d, c] : f.terms)
    j["terms"].push_back({{"coeff", c.str()}, {"diagram", d.str()}});
  return j.dump();
}

PolyElement element_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad element json: ") + e.what());
  }
  PolyElement out(j.at("m").get<int>(), j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    PartitionDiagram d = PartitionDiagram::parse(term.at("diagram").get<std::string>());
    Poly c = Poly::parse(term.at("coeff").get<std::string>());
    out.add_term(d, c);
  }
  return out;
}

std::string to_text(const PolyElement& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : f.terms) {
    if (!first) os << "\n";
    first = false;
    os << d.str() << " * " << c.str();
  }
  return os.str();
}

}  // namespace parcat
