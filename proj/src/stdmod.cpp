#include "parcat/stdmod.hpp"

#include <algorithm>

#include "parcat/schurweyl.hpp"

namespace parcat {

DeltaWeightSpace delta_weight_space(const Partition& lambda, int m, const Rational& t) {
  DeltaWeightSpace ws;
  ws.lambda = lambda;
  ws.m = m;
  ws.t = t;
  ws.orbits = enumerate_upward_orbits(m, static_cast<int>(lambda.size()));
  ws.specht = &specht_rep(lambda);
  return ws;
}

long delta_dim(const Partition& lambda, int m) {
  auto orbits = enumerate_upward_orbits(m, static_cast<int>(lambda.size()));
  return static_cast<long>(orbits.size()) * specht_rep(lambda).dim();
}

Vec act(const PartitionDiagram& d, const DeltaWeightSpace& from, const DeltaWeightSpace& to,
        const Vec& v) {
  if (d.n != from.m || d.m != to.m) throw precondition_error("act arity mismatch");
  if (from.lambda != to.lambda || from.t != to.t)
    throw precondition_error("act between different modules");
  const int n = static_cast<int>(from.lambda.size());
  const int sd = from.specht_dim();
  Vec out(static_cast<size_t>(to.dim()), Rational(0));
  // Index of target orbits for factorization lookups.
  std::map<UpwardOrbit, size_t> to_index;
  for (size_t i = 0; i < to.orbits.size(); ++i) to_index.emplace(to.orbits[i], i);
  for (size_t ob = 0; ob < from.orbits.size(); ++ob) {
    bool any = false;
    for (int tab = 0; tab < sd; ++tab)
      if (!v[static_cast<size_t>(from.index_of(ob, tab))].is_zero()) any = true;
    if (!any) continue;
    PartitionDiagram rep = from.orbits[ob].representative(from.m, n);
    ComposeResult comp = compose(d, rep);
    UpwardOrbit orbit;
    std::vector<int> perm;
    if (!factor_upward(comp.diagram, &orbit, &perm)) continue;  // radical acts as zero
    auto it = to_index.find(orbit);
    if (it == to_index.end()) throw precondition_error("factorization left the basis");
    Rational scale = from.t.pow(comp.loops);
    const auto& M = from.specht->matrix_of(perm);
    for (int tab = 0; tab < sd; ++tab) {
      const Rational& c = v[static_cast<size_t>(from.index_of(ob, tab))];
      if (c.is_zero()) continue;
      for (int row = 0; row < sd; ++row) {
        const Rational& g = M[static_cast<size_t>(row)][static_cast<size_t>(tab)];
        if (g.is_zero()) continue;
        out[static_cast<size_t>(to.index_of(it->second, row))] += scale * c * g;
      }
    }
  }
  return out;
}

Vec act(const RatElement& f, const DeltaWeightSpace& from, const DeltaWeightSpace& to,
        const Vec& v) {
  Vec out(static_cast<size_t>(to.dim()), Rational(0));
  for (const auto& [d, c] : f.terms) {
    Vec part = act(d, from, to, v);
    for (size_t i = 0; i < out.size(); ++i) out[i] += c * part[i];
  }
  return out;
}

GramMatrix gram_matrix(const Partition& lambda, int m, const Rational& t) {
  GramMatrix g;
  g.lambda = lambda;
  g.m = m;
  g.t = t;
  DeltaWeightSpace ws = delta_weight_space(lambda, m, t);
  const int n = static_cast<int>(lambda.size());
  const int sd = ws.specht_dim();
  const long dim = ws.dim();
  g.entries.assign(static_cast<size_t>(dim),
                   std::vector<Rational>(static_cast<size_t>(dim), Rational(0)));
  std::vector<PartitionDiagram> reps;
  reps.reserve(ws.orbits.size());
  for (const auto& orb : ws.orbits) reps.push_back(orb.representative(m, n));
  const auto& gamma = ws.specht->form_weights;
  for (size_t a = 0; a < reps.size(); ++a) {
    PartitionDiagram flipped = flip_sigma(reps[a]);
    for (size_t b = 0; b < reps.size(); ++b) {
      ComposeResult comp = compose(flipped, reps[b]);
      std::vector<int> perm;
      if (!comp.diagram.as_permutation(&perm)) continue;  // killed by the HC projection
      Rational scale = t.pow(comp.loops);
      const auto& M = ws.specht->matrix_of(perm);
      // <v_S, g v_T> = gamma_S M_{S,T}.
      for (int S = 0; S < sd; ++S)
        for (int T = 0; T < sd; ++T) {
          const Rational& mv = M[static_cast<size_t>(S)][static_cast<size_t>(T)];
          if (mv.is_zero()) continue;
          g.entries[static_cast<size_t>(ws.index_of(a, S))]
                   [static_cast<size_t>(ws.index_of(b, T))] = scale * gamma[static_cast<size_t>(S)] * mv;
        }
    }
  }
  g.rank = rank_dense(g.entries);
  return g;
}

long simple_dim(const Partition& lambda, int m, const Rational& t) {
  return gram_matrix(lambda, m, t).rank;
}

namespace {

Rational det_dense(std::vector<std::vector<Rational>> a) {
  size_t n = a.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = a[col][col].inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] * inv;
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace

Poly gram_det_generic(const Partition& lambda, int m) {
  // Every Gram entry is gamma * t^loops with loops <= m, so the
  // determinant has degree at most m * dim.
  long dim = delta_dim(lambda, m);
  long bound = static_cast<long>(m) * dim;
  std::vector<std::pair<Rational, Rational>> points;
  Poly result;
  for (long t = 0; t <= bound + 1; ++t)
    points.emplace_back(Rational(t), det_dense(gram_matrix(lambda, m, Rational(t)).entries));
  // Lagrange interpolation.
  Poly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly numer(1);
    Rational denom(1);
    for (size_t k = 0; k < points.size(); ++k) {
      if (k == i) continue;
      numer *= Poly::T() - Poly(points[k].first);
      denom *= points[i].first - points[k].first;
    }
    acc += numer * Poly(points[i].second / denom);
  }
  return acc;
}

BlockStructureReport verify_block_structure(const Partition& kappa, int m_max, int j_max) {
  BlockStructureReport report;
  report.kappa = kappa;
  report.t = kappa.size();
  Rational t(report.t);
  std::vector<Partition> orbit;
  for (int j = 0;; ++j) {
    Partition p = kappa_shift(kappa, j);
    orbit.push_back(p);
    if (j > j_max && p.size() > m_max) break;
  }
  for (int n = 0; n <= j_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      BlockStructureRow row;
      row.n = n;
      row.m = m;
      row.lambda = orbit[static_cast<size_t>(n)];
      row.gram_rank = gram_matrix(row.lambda, m, t).rank;
      long pred = 0;
      int sign = 1;
      // Orbit sizes strictly increase, so the sum is finite.
      for (size_t j = static_cast<size_t>(n); j < orbit.size(); ++j) {
        if (orbit[j].size() > m) break;
        pred += sign * delta_dim(orbit[j], m);
        sign = -sign;
      }
      row.predicted = pred;
      row.ok = (row.gram_rank == row.predicted);
      if (!row.ok) report.all_ok = false;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace parcat
