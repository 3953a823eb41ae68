// Symmetric-group and symmetric-function combinatorics: partitions,
// Specht data in rational seminormal form, characters, Littlewood-
// Richardson, Kronecker and reduced Kronecker coefficients, the Cartan
// matrix of the downward category, and deformed Schur functions.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parcat/exact.hpp"

namespace parcat {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  static Partition parse(const std::string& s);  // "(5,3,3,2)", "()" empty

  long size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  long part(int i) const {  // 1-based; 0 beyond the length
    return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }
  const std::vector<long>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  long first() const { return parts_.empty() ? 0 : parts_[0]; }

  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
};

std::vector<Partition> all_partitions(long n);
std::vector<Partition> partitions_up_to(long n);  // sizes 0..n, by size

mpz_class bell(int k);
// Number of set partitions of n with exactly k blocks.
mpz_class stirling2(int n, int k);

// Contents of the addable / removable nodes (all distinct).
struct AddRem {
  std::set<long> add;
  std::set<long> rem;
};
AddRem add_rem(const Partition& lambda);
Partition add_box(const Partition& lambda, long content);
Partition remove_box(const Partition& lambda, long content);
// Multiset of contents of all nodes.
std::vector<long> all_contents(const Partition& lambda);

mpz_class specht_dim(const Partition& lambda);  // hook length formula

// Order of the centralizer of the class mu (so |class| = n!/z_mu).
mpz_class class_size_z(const Partition& mu);

// chi^lambda(mu) by the Murnaghan-Nakayama rule (memoized).
long long char_value(const Partition& lambda, const Partition& mu);

// Littlewood-Richardson coefficient via induced-character inner products.
long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);
long lr_triple(const Partition& kappa, const Partition& lambda, const Partition& mu,
               const Partition& nu);

// Kronecker coefficient G^lambda_{mu,nu} (S_3-symmetric).
long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

enum class ReducedKroneckerMethod { Stabilize, Littlewood };
long reduced_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                       ReducedKroneckerMethod method = ReducedKroneckerMethod::Stabilize);

// Cartan matrix entry of the downward category: the multiplicity of
// chi^mu (x) chi^lambda in the permutation character of S_m x S_n on
// downward m x n diagram classes.
long cartan_B(const Partition& lambda, const Partition& mu);

// Finitely supported rational combination of Schur functions.
struct SchurPoly {
  std::map<Partition, Rational> terms;

  void add(const Partition& p, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const SchurPoly&, const SchurPoly&) = default;
  std::string str() const;  // "s(2) + s(1,1) - s()"
};

SchurPoly schur_mul(const SchurPoly& a, const SchurPoly& b);
// Deformed Schur function in the Schur basis: s~_lambda = sum A_{lambda,mu} s_mu.
SchurPoly deformed_schur(const Partition& lambda);
// Rewrite a Schur-basis element in the deformed basis (coefficients of s~).
SchurPoly schur_to_deformed(const SchurPoly& p);

// Rational seminormal Specht module: Young's basis indexed by standard
// tableaux; x_j acts diagonally by contents; the invariant bilinear form
// is diagonal, normalized so the dominant (row-reading) tableau has
// weight 1.
struct SeminormalRep {
  Partition lambda;
  // tableaux[a][k] = (row, col) of entry k+1, 0-based.
  std::vector<std::vector<std::pair<int, int>>> tableaux;
  // gens[i] is the matrix of s_{i+1} (0-based list), acting on columns.
  std::vector<std::vector<std::vector<Rational>>> gens;
  std::vector<Rational> form_weights;

  int dim() const { return static_cast<int>(tableaux.size()); }
  long content_of(int tab_index, int entry) const;  // entry 1..n
  // Matrix of an arbitrary permutation (0-based images), memoized.
  const std::vector<std::vector<Rational>>& matrix_of(const std::vector<int>& perm) const;

 private:
  mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();
  mutable std::map<std::vector<int>, std::vector<std::vector<Rational>>> perm_cache_;
};

const SeminormalRep& specht_rep(const Partition& lambda);  // cached

}  // namespace parcat
