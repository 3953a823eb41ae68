// Standard modules of the partition category at a fixed rational
// parameter: weight-space bases, the diagram action via the triangular
// factorization, contravariant Gram forms, and Gram-rank verification of
// the block-structure theorem.
#pragma once

#include <string>
#include <vector>

#include "parcat/algebra.hpp"
#include "parcat/blocks.hpp"
#include "parcat/diagram.hpp"
#include "parcat/symfun.hpp"

namespace parcat {

// Basis of the weight-m piece of the standard module of lambda:
// upward-orbit representatives tensored with the seminormal Specht basis.
struct DeltaWeightSpace {
  Partition lambda;
  int m = 0;
  Rational t;
  std::vector<UpwardOrbit> orbits;
  const SeminormalRep* specht = nullptr;

  int specht_dim() const { return specht->dim(); }
  long dim() const { return static_cast<long>(orbits.size()) * specht_dim(); }
  long index_of(size_t orbit, int tab) const {
    return static_cast<long>(orbit) * specht_dim() + tab;
  }
};

DeltaWeightSpace delta_weight_space(const Partition& lambda, int m, const Rational& t);

long delta_dim(const Partition& lambda, int m);

// Dense column vector in a DeltaWeightSpace basis.
using Vec = std::vector<Rational>;

// Action of a single diagram d (m' x m) on a weight-m vector, landing in
// weight m'.  Strictly-downward contributions act as zero; upward
// composites factor uniquely through an orbit representative and a
// permutation applied through the seminormal matrices, scaled by t^loops.
Vec act(const PartitionDiagram& d, const DeltaWeightSpace& from, const DeltaWeightSpace& to,
        const Vec& v);
// Linear extension to specialized algebra elements.
Vec act(const RatElement& f, const DeltaWeightSpace& from, const DeltaWeightSpace& to,
        const Vec& v);

struct GramMatrix {
  Partition lambda;
  int m = 0;
  Rational t;
  std::vector<std::vector<Rational>> entries;  // symmetric, dim x dim
  long rank = 0;
};

GramMatrix gram_matrix(const Partition& lambda, int m, const Rational& t);

long simple_dim(const Partition& lambda, int m, const Rational& t);

// Determinant of the weight-m Gram form as a polynomial in the generic
// parameter (recovered by interpolation from integer specializations);
// its integer roots are exactly the parameters where the rank drops.
Poly gram_det_generic(const Partition& lambda, int m);

// Per-(n, m) check that rank gram(kappa^(n), m) equals the alternating
// sum of delta dimensions along the orbit.
struct BlockStructureRow {
  int n = 0;
  int m = 0;
  Partition lambda;
  long gram_rank = 0;
  long predicted = 0;
  bool ok = false;
};

struct BlockStructureReport {
  Partition kappa;
  long t = 0;
  std::vector<BlockStructureRow> rows;
  bool all_ok = true;
};

BlockStructureReport verify_block_structure(const Partition& kappa, int m_max, int j_max);

}  // namespace parcat
