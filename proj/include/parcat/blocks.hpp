// Block combinatorics of the partition category at a fixed parameter:
// weights, block equivalence, kappa-orbits, typicality, central
// characters on standard modules, and the branching rules of the
// special projective functors.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parcat/exact.hpp"
#include "parcat/symfun.hpp"

namespace parcat {

// Canonical multiset {t - |lambda|} u {lambda_i - i : i <= K} at a fixed
// window size K >= len(lambda); two keys compare only at equal window.
struct WeightKey {
  int window = 0;
  std::vector<Rational> entries;  // sorted
  friend bool operator==(const WeightKey&, const WeightKey&) = default;
};

WeightKey weight_key(const Partition& lambda, const Rational& t, int window);

bool same_block(const Partition& lambda, const Partition& mu, const Rational& t);

// kappa^(n): add a node to the first n rows, then delete row n+1.
Partition kappa_shift(const Partition& kappa, int n);
std::vector<Partition> kappa_orbit(const Partition& kappa, const Rational& t, int n_max);

// Inverse of the kappa-orbit map: lambda = kappa^(n) for a unique
// (kappa, n) iff lambda is atypical at integer t.
std::optional<std::pair<Partition, int>> recover_kappa(const Partition& lambda, long t);

bool is_typical(const Partition& lambda, const Rational& t);

// chi_lambda(z^(r)) = sum_{boxes} content^r - sum_{i=1}^{|lambda|} (t-i+1)^r.
Rational central_char_z(const Partition& lambda, int r, const Rational& t);

// Divisor (pole/zero multiset with multiplicity) of
// prod_i alpha_{cont_i}(u)/alpha_{t-i+1}(u); total multiplicity 0.
std::map<Rational, long> central_char_c(const Partition& lambda, const Rational& t);

// Three-layer multisets of the branching filtrations.
struct BranchLayers {
  std::map<Partition, int> top, middle, bottom;
  friend bool operator==(const BranchLayers&, const BranchLayers&) = default;
};

// Filtration layers of D applied to the standard module of lambda.
BranchLayers branch_hood(const Partition& lambda);
// Filtration layers of the (b|a) generalized-eigenspace summand.
BranchLayers branch_D(const Partition& lambda, const Rational& a, const Rational& b,
                      const Rational& t);
// The finite (a, b) support grid outside which branch_D is empty.
std::vector<std::pair<Rational, Rational>> branch_support(const Partition& lambda,
                                                          const Rational& t);

}  // namespace parcat
