// The Schur-Weyl functor psi_t into S_t-equivariant matrices on
// U_t^{(x)n}: the ground-truth oracle for the algebra module.
//
// Tuple encoding: a tuple (i_n,...,i_1) in {1..t}^n maps to the index
// sum_k (i_k - 1) t^{k-1}, strand 1 (rightmost) least significant.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parcat/algebra.hpp"
#include "parcat/diagram.hpp"
#include "parcat/exact.hpp"

namespace parcat {

// Sparse matrix over Q with explicit shape (t^m by t^n).
struct RatMatrix {
  long rows = 0, cols = 0;
  std::map<std::pair<long, long>, Rational> entries;

  void add(long r, long c, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = entries.emplace(std::make_pair(r, c), v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) entries.erase(it);
    }
  }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  // Kronecker product consistent with the tuple encoding (this = slower
  // strands, o = faster strands).
  RatMatrix kron(const RatMatrix& o) const;
  std::vector<std::vector<Rational>> dense() const;
  // Coordinate-list text: "row col value" per line.
  std::string coord_text() const;
};

long power_long(long base, int exp);

// 0/1 matrix of a diagram: entry 1 iff the joint labeling is constant
// on every block.
RatMatrix psi_diagram(const PartitionDiagram& d, long t);
// Evaluate T -> t, then apply psi_diagram to every term.
RatMatrix psi_element(const PolyElement& f, long t);
RatMatrix psi_element(const RatElement& f, long t);

// Rank of the span of {psi_diagram(d, t)} over all m x n diagram classes.
long hom_rank(int m, int n, long t);

enum class JmKind { LeftDot, RightDot, LeftCross, RightCross };

// Direct transcription of the matrices of x_j^L, x_j^R, s_k^L, s_k^R
// acting on U_t^{(x)n}.
RatMatrix jm_matrix_oracle(int n, int j, long t, JmKind kind);

// Diagonal action of a permutation g in S_t on U_t^{(x)n}.
RatMatrix diagonal_action(const std::vector<int>& g, int n, long t);

// Exact rank of a dense rational matrix (Gaussian elimination).
long rank_dense(std::vector<std::vector<Rational>> a);
// Solve A x = b exactly; returns false when inconsistent.  A is
// destroyed.  When the system is underdetermined the free variables are
// set to zero.
bool solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>* x);

}  // namespace parcat
