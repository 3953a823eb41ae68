// Partition diagrams as canonical set partitions of n bottom + m top
// vertices, with composition (loop counting), monoidal product, flip,
// classification and enumeration.
//
// A diagram represents a morphism n -> m.  Vertices are numbered
// B1..Bn (bottom) and T1..Tm (top); strand j is the j-th from the
// RIGHT, so permutation diagrams compose like permutations written on
// strand indices directly.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace parcat {

struct PartitionDiagram {
  int n = 0;  // bottom arity (source)
  int m = 0;  // top arity (target)
  // Vertex ids: 0..n-1 are B1..Bn, n..n+m-1 are T1..Tm.  Canonical form:
  // each block ascending, blocks ordered by least vertex.  Structural
  // equality == diagram equivalence.
  std::vector<std::vector<int>> blocks;

  static PartitionDiagram from_blocks(int m, int n, std::vector<std::vector<int>> blocks);
  static PartitionDiagram identity(int n);
  static PartitionDiagram empty() { return identity(0); }
  // Permutation diagram: bottom i+1 joins top perm[i]+1 (0-based images).
  static PartitionDiagram permutation(const std::vector<int>& perm);

  bool is_identity() const;
  // If the diagram is a permutation, writes 0-based images into `perm`.
  bool as_permutation(std::vector<int>* perm = nullptr) const;

  std::string str() const;
  static PartitionDiagram parse(const std::string& text);

  friend auto operator<=>(const PartitionDiagram&, const PartitionDiagram&) = default;
};

// Result of stacking f on top of g, with the number of scalar loops removed.
struct ComposeResult {
  PartitionDiagram diagram;
  int loops = 0;
};

// f: k -> m, g: n -> k  =>  f.g : n -> m.
ComposeResult compose(const PartitionDiagram& f, const PartitionDiagram& g);

// Horizontal juxtaposition, g to the right of f (g keeps the low strand
// indices per the right-to-left numbering).
PartitionDiagram tensor(const PartitionDiagram& f, const PartitionDiagram& g);

// Flip in a horizontal axis: m x n -> n x m, contravariant.
PartitionDiagram flip_sigma(const PartitionDiagram& d);

enum class DiagramKind {
  Permutation,
  Upward,
  Downward,
  StrictlyUpward,
  StrictlyDownward,
  General,
};

struct DiagramClass {
  DiagramKind kind = DiagramKind::General;
  int propagating_rank = 0;
};

bool is_upward(const PartitionDiagram& d);
bool is_downward(const PartitionDiagram& d);
int propagating_rank(const PartitionDiagram& d);
DiagramClass classify(const PartitionDiagram& d);

// All canonical m x n diagrams in a fixed deterministic order;
// the count is Bell(m+n).
std::vector<PartitionDiagram> enumerate_diagrams(int m, int n);

// Orbit representatives of upward m x n diagrams under the free right
// S_n-action: a set partition of the m top vertices plus an n-subset of
// its blocks marked to receive the bottom legs (in canonical order).
struct UpwardOrbit {
  // Set partition of {T1..Tm}: block -> list of 1-based top labels,
  // blocks in canonical order (ascending least element).
  std::vector<std::vector<int>> top_blocks;
  // Indices into top_blocks (ascending) of the n marked blocks.
  std::vector<int> marked;

  // The representative upward diagram: bottom j joins marked block #j.
  PartitionDiagram representative(int m, int n) const;

  friend auto operator<=>(const UpwardOrbit&, const UpwardOrbit&) = default;
};

std::vector<UpwardOrbit> enumerate_upward_orbits(int m, int n);

// Unique factorization of an upward diagram as representative . g with
// g in S_n; returns false when d is not upward.
bool factor_upward(const PartitionDiagram& d, UpwardOrbit* orbit, std::vector<int>* perm);

// Elementary layers at strand position i (1-based, counted from the right).
PartitionDiagram crossing_at(int n, int i);           // n -> n, swaps i, i+1
PartitionDiagram merge_at(int n, int i);              // n -> n-1, joins i, i+1
PartitionDiagram split_at(int n, int i);              // n -> n+1, doubles strand i
PartitionDiagram leaf_down_at(int n, int i);          // n -> n-1, deletes strand i
PartitionDiagram leaf_up_at(int n, int i);            // n -> n+1, new strand at i
// The 2x2 "double tree" split.merge at position i (n -> n strands).
PartitionDiagram splitmerge_at(int n, int i);
// Leaf-leaf e = {B_i},{T_i} on strand i (n -> n).
PartitionDiagram leafleaf_at(int n, int i);

}  // namespace parcat
