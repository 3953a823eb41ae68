#include "parcat/schurweyl.hpp"

#include <algorithm>
#include <sstream>

namespace parcat {

long power_long(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols != o.rows) throw precondition_error("matrix shape mismatch");
  // index o's entries by row
  std::map<long, std::vector<std::pair<long, Rational>>> by_row;
  for (const auto& [rc, v] : o.entries) by_row[rc.first].emplace_back(rc.second, v);
  RatMatrix out;
  out.rows = rows;
  out.cols = o.cols;
  for (const auto& [rc, v] : entries) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [c2, v2] : it->second) out.add(rc.first, c2, v * v2);
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw precondition_error("matrix shape mismatch");
  RatMatrix out = *this;
  for (const auto& [rc, v] : o.entries) out.add(rc.first, rc.second, v);
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix out;
  out.rows = rows;
  out.cols = cols;
  if (c.is_zero()) return out;
  for (const auto& [rc, v] : entries) out.entries.emplace(rc, v * c);
  return out;
}

RatMatrix RatMatrix::kron(const RatMatrix& o) const {
  RatMatrix out;
  out.rows = rows * o.rows;
  out.cols = cols * o.cols;
  for (const auto& [rc, v] : entries)
    for (const auto& [rc2, v2] : o.entries)
      out.entries.emplace(std::make_pair(rc.first * o.rows + rc2.first,
                                         rc.second * o.cols + rc2.second),
                          v * v2);
  return out;
}

std::vector<std::vector<Rational>> RatMatrix::dense() const {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(rows),
                                       std::vector<Rational>(static_cast<size_t>(cols), Rational(0)));
  for (const auto& [rc, v] : entries) a[rc.first][rc.second] = v;
  return a;
}

std::string RatMatrix::coord_text() const {
  std::ostringstream os;
  for (const auto& [rc, v] : entries) os << rc.first << " " << rc.second << " " << v.str() << "\n";
  return os.str();
}

RatMatrix psi_diagram(const PartitionDiagram& d, long t) {
  RatMatrix out;
  out.rows = power_long(t, d.m);
  out.cols = power_long(t, d.n);
  if (t == 0) {
    if (d.m == 0 && d.n == 0) out.add(0, 0, Rational(1));
    return out;
  }
  // One nonzero per labeling of the blocks by {1..t}: the tuple must be
  // constant on each block.
  size_t nb = d.blocks.size();
  std::vector<long> label(nb, 0);
  // Precompute each block's contribution weights.
  std::vector<long> row_w(nb, 0), col_w(nb, 0);
  for (size_t b = 0; b < nb; ++b) {
    for (int v : d.blocks[b]) {
      if (v < d.n) col_w[b] += power_long(t, v);
      else row_w[b] += power_long(t, v - d.n);
    }
  }
  if (nb == 0) {
    out.add(0, 0, Rational(1));
    return out;
  }
  while (true) {
    long r = 0, c = 0;
    for (size_t b = 0; b < nb; ++b) {
      r += label[b] * row_w[b];
      c += label[b] * col_w[b];
    }
    out.add(r, c, Rational(1));
    size_t i = 0;
    while (i < nb && label[i] == t - 1) label[i++] = 0;
    if (i == nb) break;
    ++label[i];
  }
  return out;
}

RatMatrix psi_element(const RatElement& f, long t) {
  RatMatrix out;
  out.rows = power_long(t, f.m);
  out.cols = power_long(t, f.n);
  for (const auto& [d, c] : f.terms) out = out + psi_diagram(d, t).scaled(c);
  return out;
}

RatMatrix psi_element(const PolyElement& f, long t) {
  return psi_element(specialize(f, Rational(t)), t);
}

long rank_dense(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    Rational inv = a[row][col].inverse();
    for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>* x) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    Rational inv = a[row][col].inverse();
    for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col_of_row.push_back(static_cast<long>(col));
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (!b[i].is_zero()) return false;
  x->assign(cols, Rational(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
    (*x)[static_cast<size_t>(pivot_col_of_row[i])] = b[i];
  return true;
}

long hom_rank(int m, int n, long t) {
  auto diagrams = enumerate_diagrams(m, n);
  long dim = power_long(t, m) * power_long(t, n);
  if (t == 0) dim = (m == 0 ? 1 : 0) * (n == 0 ? 1 : 0);
  if (dim == 0) return 0;
  std::vector<std::vector<Rational>> vecs;
  vecs.reserve(diagrams.size());
  for (const auto& d : diagrams) {
    RatMatrix md = psi_diagram(d, t);
    std::vector<Rational> v(static_cast<size_t>(dim), Rational(0));
    for (const auto& [rc, val] : md.entries)
      v[static_cast<size_t>(rc.first * md.cols + rc.second)] = val;
    vecs.push_back(std::move(v));
  }
  return rank_dense(std::move(vecs));
}

namespace {

// Applies the transposition (a b) of {1..t} to a label.
inline long transpose_label(long lab, long a, long b) {
  if (lab == a) return b;
  if (lab == b) return a;
  return lab;
}

}  // namespace

RatMatrix jm_matrix_oracle(int n, int j, long t, JmKind kind) {
  bool crossing = (kind == JmKind::LeftCross || kind == JmKind::RightCross);
  if (crossing ? (j < 1 || j >= n) : (j < 1 || j > n))
    throw precondition_error("jm oracle position out of range");
  RatMatrix out;
  out.rows = power_long(t, n);
  out.cols = power_long(t, n);
  std::vector<long> lab(static_cast<size_t>(n), 1);  // lab[k-1] = i_k in 1..t
  if (t == 0) return out;
  while (true) {
    long col = 0;
    for (int k = 0; k < n; ++k) col += (lab[k] - 1) * power_long(t, k);
    auto emit = [&](const std::vector<long>& nl) {
      long row = 0;
      for (int k = 0; k < n; ++k) row += (nl[k] - 1) * power_long(t, k);
      out.add(row, col, Rational(1));
    };
    switch (kind) {
      case JmKind::LeftDot:
        // sum_i (i i_j) applied to factors j..1
        for (long i = 1; i <= t; ++i) {
          std::vector<long> nl = lab;
          for (int k = 0; k < j; ++k) nl[k] = transpose_label(nl[k], i, lab[j - 1]);
          emit(nl);
        }
        break;
      case JmKind::RightDot:
        // factor j untouched; sum_i (i i_j) applied to factors j-1..1
        for (long i = 1; i <= t; ++i) {
          std::vector<long> nl = lab;
          for (int k = 0; k + 1 < j; ++k) nl[k] = transpose_label(nl[k], i, lab[j - 1]);
          emit(nl);
        }
        break;
      case JmKind::LeftCross: {
        // (i_k i_{k+1}) applied to factors k-1..1, strands k, k+1 untouched
        std::vector<long> nl = lab;
        for (int k2 = 0; k2 + 1 < j; ++k2)
          nl[k2] = transpose_label(nl[k2], lab[j - 1], lab[j]);
        emit(nl);
        break;
      }
      case JmKind::RightCross: {
        // (i_k i_{k+1}) applied to factors k+1..1 (swaps strands k, k+1 too)
        std::vector<long> nl = lab;
        for (int k2 = 0; k2 <= j; ++k2)
          nl[k2] = transpose_label(nl[k2], lab[j - 1], lab[j]);
        emit(nl);
        break;
      }
    }
    int i = 0;
    while (i < n && lab[i] == t) lab[i++] = 1;
    if (i == n) break;
    ++lab[i];
  }
  return out;
}

RatMatrix diagonal_action(const std::vector<int>& g, int n, long t) {
  if (static_cast<long>(g.size()) != t) throw precondition_error("permutation size != t");
  RatMatrix out;
  out.rows = power_long(t, n);
  out.cols = power_long(t, n);
  if (t == 0) {
    if (n == 0) out.add(0, 0, Rational(1));
    return out;
  }
  std::vector<long> lab(static_cast<size_t>(n), 0);  // 0-based labels here
  while (true) {
    long col = 0, row = 0;
    for (int k = 0; k < n; ++k) {
      col += lab[k] * power_long(t, k);
      row += g[static_cast<size_t>(lab[k])] * power_long(t, k);
    }
    out.add(row, col, Rational(1));
    int i = 0;
    while (i < n && lab[i] == t - 1) lab[i++] = 0;
    if (i == n) break;
    ++lab[i];
  }
  return out;
}

}  // namespace parcat
