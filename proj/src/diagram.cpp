#include "parcat/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parcat/exact.hpp"

namespace parcat {

namespace {

// Union-find with path compression.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> canonicalize(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

PartitionDiagram PartitionDiagram::from_blocks(int m, int n,
                                               std::vector<std::vector<int>> blocks) {
  PartitionDiagram d;
  d.m = m;
  d.n = n;
  std::vector<char> seen(static_cast<size_t>(m) + n, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw precondition_error("empty block in partition diagram");
    for (int v : b) {
      if (v < 0 || v >= m + n || seen[v]) throw precondition_error("bad block structure");
      seen[v] = 1;
    }
  }
  for (char s : seen)
    if (!s) throw precondition_error("blocks do not cover all vertices");
  d.blocks = canonicalize(std::move(blocks));
  return d;
}

PartitionDiagram PartitionDiagram::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  PartitionDiagram d;
  d.m = n;
  d.n = n;
  d.blocks = std::move(blocks);
  return d;
}

PartitionDiagram PartitionDiagram::permutation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n) throw precondition_error("bad permutation");
    blocks.push_back({i, n + perm[i]});
  }
  PartitionDiagram d;
  d.m = n;
  d.n = n;
  d.blocks = canonicalize(std::move(blocks));
  return d;
}

bool PartitionDiagram::is_identity() const { return *this == identity(n); }

bool PartitionDiagram::as_permutation(std::vector<int>* perm) const {
  if (m != n) return false;
  std::vector<int> img(n, -1);
  for (const auto& b : blocks) {
    if (b.size() != 2) return false;
    if (b[0] >= n || b[1] < n) return false;
    img[b[0]] = b[1] - n;
  }
  if (perm) *perm = std::move(img);
  return true;
}

std::string PartitionDiagram::str() const {
  std::ostringstream os;
  os << m << " x " << n << " : ";
  if (blocks.empty()) {
    os << "(empty)";
    return os.str();
  }
  for (const auto& b : blocks) {
    os << "{";
    for (size_t k = 0; k < b.size(); ++k) {
      if (k) os << ",";
      if (b[k] < n) os << (b[k] + 1);
      else os << (b[k] - n + 1) << "'";
    }
    os << "}";
  }
  return os.str();
}

PartitionDiagram PartitionDiagram::parse(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_nat = [&]() -> int {
    skip_ws();
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw parse_error("bad diagram: '" + text + "'");
    return std::stoi(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) throw parse_error("bad diagram: '" + text + "'");
    ++i;
  };
  int m = read_nat();
  expect('x');
  int n = read_nat();
  expect(':');
  skip_ws();
  std::vector<std::vector<int>> blocks;
  if (text.compare(i, 7, "(empty)") == 0) {
    i += 7;
  } else {
    while (true) {
      skip_ws();
      if (i >= text.size() || text[i] != '{') break;
      ++i;
      std::vector<int> block;
      while (true) {
        int v = read_nat();
        skip_ws();
        bool top = false;
        if (i < text.size() && text[i] == '\'') {
          top = true;
          ++i;
        }
        if (top) {
          if (v < 1 || v > m) throw parse_error("top label out of range in '" + text + "'");
          block.push_back(n + v - 1);
        } else {
          if (v < 1 || v > n) throw parse_error("bottom label out of range in '" + text + "'");
          block.push_back(v - 1);
        }
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        expect('}');
        break;
      }
      blocks.push_back(std::move(block));
    }
  }
  skip_ws();
  if (i != text.size()) throw parse_error("trailing input in diagram: '" + text + "'");
  return from_blocks(m, n, std::move(blocks));
}

ComposeResult compose(const PartitionDiagram& f, const PartitionDiagram& g) {
  if (f.n != g.m)
    throw precondition_error("compose arity mismatch: f is " + std::to_string(f.m) + "x" +
                             std::to_string(f.n) + ", g is " + std::to_string(g.m) + "x" +
                             std::to_string(g.n));
  const int n = g.n;      // bottoms of the result
  const int k = g.m;      // fused middle layer
  const int m = f.m;      // tops of the result
  // Node ids: 0..n-1 result bottoms, n..n+k-1 middle, n+k..n+k+m-1 result tops.
  Dsu dsu(n + k + m);
  for (const auto& b : g.blocks)
    for (size_t j = 1; j < b.size(); ++j) dsu.unite(b[0], b[j]);  // g ids == node ids
  for (const auto& b : f.blocks) {
    auto node = [&](int v) { return v < f.n ? n + v : n + k + (v - f.n); };
    for (size_t j = 1; j < b.size(); ++j) dsu.unite(node(b[0]), node(b[j]));
  }
  std::vector<std::vector<int>> comps(static_cast<size_t>(n + k + m));
  for (int v = 0; v < n + k + m; ++v) comps[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  int loops = 0;
  for (auto& comp : comps) {
    if (comp.empty()) continue;
    std::vector<int> boundary;
    for (int v : comp) {
      if (v < n) boundary.push_back(v);
      else if (v >= n + k) boundary.push_back(n + (v - n - k));  // top id in result
    }
    if (boundary.empty()) ++loops;
    else blocks.push_back(std::move(boundary));
  }
  ComposeResult out;
  out.diagram.m = m;
  out.diagram.n = n;
  out.diagram.blocks = canonicalize(std::move(blocks));
  out.loops = loops;
  return out;
}

PartitionDiagram tensor(const PartitionDiagram& f, const PartitionDiagram& g) {
  PartitionDiagram d;
  d.n = f.n + g.n;
  d.m = f.m + g.m;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(f.blocks.size() + g.blocks.size());
  for (const auto& b : g.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(v < g.n ? v : (v - g.n) + d.n);
    blocks.push_back(std::move(nb));
  }
  for (const auto& b : f.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(v < f.n ? v + g.n : (v - f.n) + g.m + d.n);
    blocks.push_back(std::move(nb));
  }
  d.blocks = canonicalize(std::move(blocks));
  return d;
}

PartitionDiagram flip_sigma(const PartitionDiagram& d) {
  PartitionDiagram out;
  out.n = d.m;
  out.m = d.n;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(d.blocks.size());
  for (const auto& b : d.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(v < d.n ? v + out.n : v - d.n);
    blocks.push_back(std::move(nb));
  }
  out.blocks = canonicalize(std::move(blocks));
  return out;
}

bool is_upward(const PartitionDiagram& d) {
  for (const auto& b : d.blocks) {
    int bottoms = 0, tops = 0;
    for (int v : b) (v < d.n ? bottoms : tops)++;
    if (bottoms > 1 || tops == 0) return false;
  }
  return true;
}

bool is_downward(const PartitionDiagram& d) {
  for (const auto& b : d.blocks) {
    int bottoms = 0, tops = 0;
    for (int v : b) (v < d.n ? bottoms : tops)++;
    if (tops > 1 || bottoms == 0) return false;
  }
  return true;
}

int propagating_rank(const PartitionDiagram& d) {
  int rank = 0;
  for (const auto& b : d.blocks) {
    bool bot = b.front() < d.n;
    bool top = b.back() >= d.n;
    if (bot && top) ++rank;
  }
  return rank;
}

DiagramClass classify(const PartitionDiagram& d) {
  DiagramClass out;
  out.propagating_rank = propagating_rank(d);
  bool perm = d.as_permutation();
  bool up = is_upward(d);
  bool down = is_downward(d);
  // "Strict" flags whether a non-propagating (one-sided) block occurs.
  bool has_bottomless = false, has_topless = false;
  for (const auto& b : d.blocks) {
    if (b.front() >= d.n) has_bottomless = true;
    if (b.back() < d.n) has_topless = true;
  }
  if (perm) out.kind = DiagramKind::Permutation;
  else if (up) out.kind = has_bottomless ? DiagramKind::StrictlyUpward : DiagramKind::Upward;
  else if (down) out.kind = has_topless ? DiagramKind::StrictlyDownward : DiagramKind::Downward;
  else out.kind = DiagramKind::General;
  return out;
}

std::vector<PartitionDiagram> enumerate_diagrams(int m, int n) {
  // Restricted-growth strings over the m+n vertices, lexicographic.
  std::vector<PartitionDiagram> out;
  int total = m + n;
  if (total == 0) {
    out.push_back(PartitionDiagram::empty());
    return out;
  }
  std::vector<int> rgs(total, 0);
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nblocks);
    for (int v = 0; v < total; ++v) blocks[rgs[v]].push_back(v);
    PartitionDiagram d;
    d.m = m;
    d.n = n;
    d.blocks = canonicalize(std::move(blocks));
    out.push_back(std::move(d));
    // next RGS
    int i = total - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
    }
    if (i == 0) break;
    rgs[i]++;
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

PartitionDiagram UpwardOrbit::representative(int m, int n) const {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(top_blocks.size());
  for (const auto& tb : top_blocks) {
    std::vector<int> b;
    b.reserve(tb.size() + 1);
    for (int label : tb) b.push_back(n + label - 1);
    blocks.push_back(std::move(b));
  }
  for (int j = 0; j < n; ++j) blocks[static_cast<size_t>(marked[j])].push_back(j);
  return PartitionDiagram::from_blocks(m, n, std::move(blocks));
}

std::vector<UpwardOrbit> enumerate_upward_orbits(int m, int n) {
  std::vector<UpwardOrbit> out;
  if (n < 0 || m < 0) throw precondition_error("negative arity");
  // Set partitions of the m tops via RGS; then choose n marked blocks.
  std::vector<int> rgs(std::max(m, 1), 0);
  auto emit = [&](const std::vector<std::vector<int>>& top_blocks) {
    int k = static_cast<int>(top_blocks.size());
    if (n > k) return;
    std::vector<int> comb(n);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      UpwardOrbit orb;
      orb.top_blocks = top_blocks;
      orb.marked = comb;
      out.push_back(std::move(orb));
      int i = n - 1;
      while (i >= 0 && comb[i] == k - n + i) --i;
      if (i < 0) break;
      comb[i]++;
      for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
    }
  };
  if (m == 0) {
    if (n == 0) out.push_back(UpwardOrbit{});
    return out;
  }
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nblocks);
    for (int v = 0; v < m; ++v) blocks[rgs[v]].push_back(v + 1);
    emit(blocks);  // RGS blocks are already in canonical (least-element) order
    int i = m - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
    }
    if (i == 0) break;
    rgs[i]++;
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

bool factor_upward(const PartitionDiagram& d, UpwardOrbit* orbit, std::vector<int>* perm) {
  if (!is_upward(d)) return false;
  UpwardOrbit orb;
  std::vector<int> bottom_block(d.n, -1);  // bottom j -> block index
  for (const auto& b : d.blocks) {
    std::vector<int> tops;
    int bottom = -1;
    for (int v : b) {
      if (v < d.n) bottom = v;
      else tops.push_back(v - d.n + 1);
    }
    if (bottom >= 0) bottom_block[bottom] = static_cast<int>(orb.top_blocks.size());
    orb.top_blocks.push_back(std::move(tops));
  }
  // Reorder blocks canonically by least top label.
  std::vector<int> order(orb.top_blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return orb.top_blocks[a].front() < orb.top_blocks[b].front();
  });
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> sorted_blocks(orb.top_blocks.size());
  for (size_t i = 0; i < order.size(); ++i) sorted_blocks[i] = orb.top_blocks[order[i]];
  orb.top_blocks = std::move(sorted_blocks);
  std::vector<int> marked_raw;
  for (int j = 0; j < d.n; ++j) marked_raw.push_back(rank[bottom_block[j]]);
  orb.marked = marked_raw;
  std::sort(orb.marked.begin(), orb.marked.end());
  // Permutation: bottom j sits in marked block #g(j) of the representative.
  std::vector<int> g(d.n);
  for (int j = 0; j < d.n; ++j) {
    auto it = std::lower_bound(orb.marked.begin(), orb.marked.end(), marked_raw[j]);
    g[j] = static_cast<int>(it - orb.marked.begin());
  }
  if (orbit) *orbit = std::move(orb);
  if (perm) *perm = std::move(g);
  return true;
}

PartitionDiagram crossing_at(int n, int i) {
  if (i < 1 || i >= n) throw precondition_error("crossing position out of range");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[i]);
  return PartitionDiagram::permutation(perm);
}

PartitionDiagram merge_at(int n, int i) {
  if (i < 1 || i >= n) throw precondition_error("merge position out of range");
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= n; ++j) {
    if (j == i) blocks.push_back({i - 1, i, n + i - 1});
    else if (j < i) blocks.push_back({j - 1, n + j - 1});
    else if (j > i + 1) blocks.push_back({j - 1, n + j - 2});
  }
  return PartitionDiagram::from_blocks(n - 1, n, std::move(blocks));
}

PartitionDiagram split_at(int n, int i) {
  if (i < 1 || i > n) throw precondition_error("split position out of range");
  return flip_sigma(merge_at(n + 1, i));
}

PartitionDiagram leaf_down_at(int n, int i) {
  if (i < 1 || i > n) throw precondition_error("leaf position out of range");
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= n; ++j) {
    if (j == i) blocks.push_back({i - 1});
    else if (j < i) blocks.push_back({j - 1, n + j - 1});
    else blocks.push_back({j - 1, n + j - 2});
  }
  return PartitionDiagram::from_blocks(n - 1, n, std::move(blocks));
}

PartitionDiagram leaf_up_at(int n, int i) {
  if (i < 1 || i > n + 1) throw precondition_error("leaf position out of range");
  return flip_sigma(leaf_down_at(n + 1, i));
}

PartitionDiagram splitmerge_at(int n, int i) {
  if (i < 1 || i >= n) throw precondition_error("splitmerge position out of range");
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= n; ++j) {
    if (j == i) blocks.push_back({i - 1, i, n + i - 1, n + i});
    else if (j != i + 1) blocks.push_back({j - 1, n + j - 1});
  }
  return PartitionDiagram::from_blocks(n, n, std::move(blocks));
}

PartitionDiagram leafleaf_at(int n, int i) {
  if (i < 1 || i > n) throw precondition_error("leafleaf position out of range");
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= n; ++j) {
    if (j == i) {
      blocks.push_back({i - 1});
      blocks.push_back({n + i - 1});
    } else {
      blocks.push_back({j - 1, n + j - 1});
    }
  }
  return PartitionDiagram::from_blocks(n, n, std::move(blocks));
}

}  // namespace parcat
