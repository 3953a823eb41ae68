// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.  Every bound and tolerance is fixed here; all checks are
// exact (no floating point anywhere).
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "parcat/algebra.hpp"
#include "parcat/blocks.hpp"
#include "parcat/diagram.hpp"
#include "parcat/schurweyl.hpp"
#include "parcat/stdmod.hpp"
#include "parcat/symfun.hpp"

using namespace parcat;

namespace {

int failures = 0;

void run(int id, const char* name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++failures;
  std::printf("[%2d] %s  %s (%.1fs)%s%s\n", id, ok ? "PASS" : "FAIL", name, secs,
              error.empty() ? "" : "  error: ", error.c_str());
  std::fflush(stdout);
}

PartitionDiagram rand_diagram(std::mt19937_64& rng, int m, int n) {
  int total = m + n;
  if (total == 0) return PartitionDiagram::empty();
  std::vector<int> rgs(static_cast<size_t>(total), 0);
  int maxv = 0;
  for (int i = 1; i < total; ++i) {
    std::uniform_int_distribution<int> pick(0, maxv + 1);
    rgs[static_cast<size_t>(i)] = pick(rng);
    maxv = std::max(maxv, rgs[static_cast<size_t>(i)]);
  }
  std::vector<std::vector<int>> blocks(static_cast<size_t>(maxv + 1));
  for (int v = 0; v < total; ++v) blocks[static_cast<size_t>(rgs[v])].push_back(v);
  return PartitionDiagram::from_blocks(m, n, std::move(blocks));
}

Rational Q(long num, long den = 1) { return Rational(mpz_class(num), mpz_class(den)); }

bool criterion_basis_dimensions() {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; m + n <= 8; ++n) {
      auto all = enumerate_diagrams(m, n);
      std::set<PartitionDiagram> uniq(all.begin(), all.end());
      if (uniq.size() != all.size()) return false;
      if (mpz_class(static_cast<long>(all.size())) != bell(m + n)) return false;
    }
  return true;
}

bool criterion_schur_weyl_faithful() {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; m + n <= 5; ++n)
      for (long t = m + n; t <= m + n + 1; ++t) {
        if (t == 0) continue;  // Hom(0,0) is 1-dimensional at every t >= 1
        if (mpz_class(hom_rank(m, n, t)) != bell(m + n)) return false;
      }
  if (hom_rank(0, 0, 1) != 1) return false;
  std::mt19937_64 rng(812);
  for (int trial = 0; trial < 200; ++trial) {
    int m = static_cast<int>(rng() % 3), k = static_cast<int>(rng() % 3),
        n = static_cast<int>(rng() % 3);
    long t = 2 + static_cast<long>(rng() % 3);
    PartitionDiagram f = rand_diagram(rng, m, k);
    PartitionDiagram g = rand_diagram(rng, k, n);
    ComposeResult fg = compose(f, g);
    if (psi_diagram(fg.diagram, t).scaled(Q(t).pow(fg.loops)) !=
        psi_diagram(f, t) * psi_diagram(g, t))
      return false;
  }
  return true;
}

bool criterion_jm_oracle_agreement() {
  for (int n = 1; n <= 3; ++n)
    for (long t = n + 1; t <= 5; ++t) {
      for (int j = 1; j <= n; ++j) {
        if (psi_element(jm_left(n, j), t) != jm_matrix_oracle(n, j, t, JmKind::LeftDot))
          return false;
        if (psi_element(jm_right(n, j), t) != jm_matrix_oracle(n, j, t, JmKind::RightDot))
          return false;
      }
      for (int k = 1; k < n; ++k) {
        if (psi_element(cross_left(n, k), t) != jm_matrix_oracle(n, k, t, JmKind::LeftCross))
          return false;
        if (psi_element(cross_right(n, k), t) != jm_matrix_oracle(n, k, t, JmKind::RightCross))
          return false;
      }
    }
  return true;
}

bool criterion_interpolation() {
  MatrixOracle left = [](long t) { return jm_matrix_oracle(2, 2, t, JmKind::LeftDot).dense(); };
  MatrixOracle right = [](long t) { return jm_matrix_oracle(2, 2, t, JmKind::RightDot).dense(); };
  return interpolate_element(left, 2, 2) == jm_left(2, 2) &&
         interpolate_element(right, 2, 2) == jm_right(2, 2);
}

bool criterion_hc_images() {
  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      PolyGroupElement sum(n);
      for (int i = 1; i < j; ++i) {
        std::vector<int> p(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) p[static_cast<size_t>(k)] = k;
        std::swap(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(j - 1)]);
        sum.add_term(p, Poly(1));
      }
      if (hc_project(jm_left(n, j)) != sum) return false;
      PolyGroupElement scalar = PolyGroupElement::identity(n);
      for (auto& [g, c] : scalar.terms) c = Poly::T() - Poly(j - 1);
      if (hc_project(jm_right(n, j)) != scalar) return false;
    }
    for (int k = 1; k < n; ++k) {
      if (hc_project(cross_left(n, k)) != PolyGroupElement::identity(n)) return false;
      std::vector<int> p(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
      std::swap(p[static_cast<size_t>(k - 1)], p[static_cast<size_t>(k)]);
      PolyGroupElement tr(n);
      tr.add_term(p, Poly(1));
      if (hc_project(cross_right(n, k)) != tr) return false;
    }
  }
  return true;
}

bool criterion_centrality() {
  for (int r = 1; r <= 4; ++r)
    if (!check_centrality([r](int n) { return central_z(n, r); }, 3)) return false;
  for (int r = 3; r <= 5; ++r)
    if (!check_centrality([r](int n) { return central_c(n, r); }, 3)) return false;
  for (int n = 0; n <= 3; ++n) {
    if (central_c(n, 0) != PolyElement::identity(n)) return false;
    if (!central_c(n, 1).is_zero() || !central_c(n, 2).is_zero()) return false;
    if (central_c(n, 3) != central_z(n, 1).scaled(Poly(-2))) return false;
    if (central_c(n, 4) != central_z(n, 2).scaled(Poly(-3))) return false;
    if (central_c(n, 5) !=
        central_z(n, 3).scaled(Poly(-4)) + central_z(n, 1).scaled(Poly(-2)))
      return false;
  }
  return true;
}

bool criterion_reduced_kronecker() {
  auto parts = partitions_up_to(4);
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts) {
        if (a < b || b < c) continue;  // symmetric, check each multiset once
        long stab = reduced_kronecker(a, b, c, ReducedKroneckerMethod::Stabilize);
        long lw = reduced_kronecker(a, b, c, ReducedKroneckerMethod::Littlewood);
        if (stab != lw) return false;
      }
  // One-box products.
  Partition box({1});
  for (const auto& lam : parts) {
    AddRem ar = add_rem(lam);
    if (reduced_kronecker(lam, box, lam) != static_cast<long>(ar.rem.size())) return false;
    for (const auto& mu : parts) {
      if (mu == lam) continue;
      long expect = 0;
      for (long a : ar.add)
        if (add_box(lam, a) == mu) expect = 1;
      for (long b : ar.rem) {
        Partition down = remove_box(lam, b);
        if (down == mu) expect = 1;
        for (long a : add_rem(down).add)
          if (add_box(down, a) == mu) expect = 1;
      }
      if (reduced_kronecker(mu, box, lam) != expect) return false;
    }
  }
  return true;
}

bool criterion_deformed_schur() {
  // Cartan matrix against its closed-form rows.
  auto parts = partitions_up_to(4);
  for (const auto& lam : parts) {
    if (cartan_B(lam, lam) != 1) return false;
    for (const auto& mu : parts)
      if ((mu.size() > lam.size() || (mu.size() == lam.size() && mu != lam)) &&
          cartan_B(lam, mu) != 0)
        return false;
  }
  for (long n = 1; n <= 5; ++n) {
    Partition col(std::vector<long>(static_cast<size_t>(n), 1));
    for (const auto& mu : partitions_up_to(n)) {
      long expect = (mu == col || mu == Partition(std::vector<long>(static_cast<size_t>(n - 1), 1)))
                        ? 1
                        : 0;
      if (cartan_B(col, mu) != expect) return false;
    }
  }
  // Structure constants of the deformed basis are the reduced Kroneckers,
  // for all products of total degree <= 4.
  for (const auto& mu : parts)
    for (const auto& nu : parts) {
      if (mu.size() + nu.size() > 4) continue;
      SchurPoly got = schur_to_deformed(schur_mul(deformed_schur(mu), deformed_schur(nu)));
      SchurPoly want;
      for (const auto& lam : partitions_up_to(mu.size() + nu.size())) {
        long g = reduced_kronecker(lam, mu, nu, ReducedKroneckerMethod::Littlewood);
        if (g) want.add(lam, Q(g));
      }
      if (got != want) return false;
    }
  return true;
}

bool criterion_block_combinatorics() {
  auto parts = partitions_up_to(6);
  for (long t = 0; t <= 3; ++t) {
    // same_block classes match the kappa-orbit classification.
    for (const auto& a : parts) {
      auto ra = recover_kappa(a, t);
      if (ra.has_value() == is_typical(a, Q(t))) return false;
      for (const auto& b : parts) {
        bool same = same_block(a, b, Q(t));
        bool orbit_same;
        auto rb = recover_kappa(b, t);
        if (ra.has_value() != rb.has_value()) orbit_same = false;
        else if (!ra.has_value()) orbit_same = (a == b);  // typical: singleton class
        else orbit_same = (ra->first == rb->first);
        if (same != orbit_same) return false;
        // Central characters r = 1..6 constant on classes, separating.
        bool chars_equal = true;
        for (int r = 1; r <= 6; ++r)
          if (central_char_z(a, r, Q(t)) != central_char_z(b, r, Q(t))) chars_equal = false;
        if (chars_equal != same) return false;
      }
    }
  }
  return true;
}

bool criterion_branching_partition() {
  for (const Rational& t : {Q(0), Q(1), Q(2), Q(3), Q(7, 3)})
    for (const auto& lam : partitions_up_to(6)) {
      BranchLayers sum;
      for (const auto& [a, b] : branch_support(lam, t)) {
        BranchLayers part = branch_D(lam, a, b, t);
        for (const auto& [p, c] : part.top) sum.top[p] += c;
        for (const auto& [p, c] : part.middle) sum.middle[p] += c;
        for (const auto& [p, c] : part.bottom) sum.bottom[p] += c;
      }
      if (sum != branch_hood(lam)) return false;
    }
  return true;
}

bool criterion_semisimple_generic() {
  for (const Rational& t : {Q(1, 2), Q(7, 3)})
    for (long size = 0; size <= 3; ++size)
      for (const auto& lam : all_partitions(size))
        for (int m = static_cast<int>(size); m <= 5; ++m)
          if (simple_dim(lam, m, t) != delta_dim(lam, m)) return false;
  return true;
}

bool criterion_block_structure() {
  struct Case {
    long t;
    Partition kappa;
  };
  std::vector<Case> cases = {{0, Partition(std::vector<long>{})},
                             {1, Partition(std::vector<long>{1})},
                             {2, Partition(std::vector<long>{2})},
                             {2, Partition(std::vector<long>{1, 1})}};
  for (const auto& c : cases) {
    BlockStructureReport rep = verify_block_structure(c.kappa, 4, 3);
    if (!rep.all_ok) {
      for (const auto& row : rep.rows)
        if (!row.ok)
          std::printf("    block-structure mismatch: kappa=%s n=%d m=%d rank=%ld predicted=%ld\n",
                      c.kappa.str().c_str(), row.n, row.m, row.gram_rank, row.predicted);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "diagram basis counts match Bell numbers (m+n <= 8)", criterion_basis_dimensions);
  run(2, "Schur-Weyl faithfulness and functoriality (m+n <= 5)", criterion_schur_weyl_faithful);
  run(3, "JM construction agrees with the dictionary matrices (n <= 3)",
      criterion_jm_oracle_agreement);
  run(4, "interpolation reconstructs x_2^L and x_2^R from matrices alone",
      criterion_interpolation);
  run(5, "Harish-Chandra images of dots and dotted crossings (n <= 4)", criterion_hc_images);
  run(6, "centrality of z^(r), c^(r) and the c-to-z identities (n <= 3)", criterion_centrality);
  run(7, "reduced Kronecker: stabilization equals the Littlewood route (sizes <= 4)",
      criterion_reduced_kronecker);
  run(8, "deformed Schur structure constants and the Cartan matrix", criterion_deformed_schur);
  run(9, "blocks of size <= 6 match the kappa-orbit classification (t <= 3)",
      criterion_block_combinatorics);
  run(10, "branching layers of D partition into the (b|a) summands (size <= 6)",
      criterion_branching_partition);
  run(11, "full Gram rank at non-integral parameters (size <= 3, m <= 5)",
      criterion_semisimple_generic);
  run(12, "length-two block structure via Gram ranks (m <= 4, orbit <= 3)",
      criterion_block_structure);
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 12 acceptance criteria passed\n");
  return failures == 0 ? 0 : 1;
}
