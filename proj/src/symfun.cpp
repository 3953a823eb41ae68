#include "parcat/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace parcat {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw precondition_error("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw precondition_error("partition parts must weakly decrease");
  }
}

long Partition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  bool paren = (i < s.size() && s[i] == '(');
  if (paren) ++i;
  std::vector<long> parts;
  while (true) {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) break;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    parts.push_back(std::stol(s.substr(start, i - start)));
    skip_ws();
    if (i < s.size() && s[i] == ',') ++i;
  }
  if (paren) {
    skip_ws();
    if (i >= s.size() || s[i] != ')') throw parse_error("bad partition: '" + s + "'");
    ++i;
  }
  skip_ws();
  if (i != s.size()) throw parse_error("bad partition: '" + s + "'");
  try {
    return Partition(std::move(parts));
  } catch (const precondition_error&) {
    throw parse_error("bad partition: '" + s + "'");
  }
}

std::vector<Partition> all_partitions(long n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long rest, long maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> partitions_up_to(long n) {
  std::vector<Partition> out;
  for (long k = 0; k <= n; ++k) {
    auto pk = all_partitions(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

mpz_class bell(int k) {
  if (k < 0) throw precondition_error("bell of negative argument");
  std::vector<mpz_class> row = {1};
  for (int i = 1; i <= k; ++i) {
    std::vector<mpz_class> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
    row = std::move(next);
  }
  return row.front();
}

mpz_class stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k > n) return 0;
  std::vector<std::vector<mpz_class>> s(static_cast<size_t>(n) + 1,
                                        std::vector<mpz_class>(static_cast<size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + mpz_class(j) * s[i - 1][j];
  return s[n][k];
}

AddRem add_rem(const Partition& lambda) {
  AddRem out;
  int len = lambda.length();
  for (int i = 1; i <= len + 1; ++i) {
    if (i == 1 || lambda.part(i) < lambda.part(i - 1)) out.add.insert(lambda.part(i) + 1 - i);
    if (i <= len && lambda.part(i) > lambda.part(i + 1)) out.rem.insert(lambda.part(i) - i);
  }
  return out;
}

Partition add_box(const Partition& lambda, long content) {
  std::vector<long> parts = lambda.parts();
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    bool addable = (i == 1 || lambda.part(i) < lambda.part(i - 1));
    if (addable && lambda.part(i) + 1 - i == content) {
      if (i <= lambda.length()) parts[static_cast<size_t>(i - 1)]++;
      else parts.push_back(1);
      return Partition(std::move(parts));
    }
  }
  throw precondition_error("no addable node of content " + std::to_string(content));
}

Partition remove_box(const Partition& lambda, long content) {
  std::vector<long> parts = lambda.parts();
  for (int i = 1; i <= lambda.length(); ++i) {
    bool removable = (lambda.part(i) > lambda.part(i + 1));
    if (removable && lambda.part(i) - i == content) {
      parts[static_cast<size_t>(i - 1)]--;
      if (parts[static_cast<size_t>(i - 1)] == 0) parts.erase(parts.begin() + (i - 1));
      return Partition(std::move(parts));
    }
  }
  throw precondition_error("no removable node of content " + std::to_string(content));
}

std::vector<long> all_contents(const Partition& lambda) {
  std::vector<long> out;
  for (int i = 1; i <= lambda.length(); ++i)
    for (long j = 1; j <= lambda.part(i); ++j) out.push_back(j - i);
  return out;
}

mpz_class specht_dim(const Partition& lambda) {
  long n = lambda.size();
  if (n == 0) return 1;
  mpz_class numer;
  mpz_fac_ui(numer.get_mpz_t(), static_cast<unsigned long>(n));
  std::vector<long> conj(static_cast<size_t>(lambda.first()), 0);
  for (int i = 1; i <= lambda.length(); ++i)
    for (long j = 0; j < lambda.part(i); ++j) conj[static_cast<size_t>(j)]++;
  mpz_class denom = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (long j = 1; j <= lambda.part(i); ++j) {
      long hook = (lambda.part(i) - j) + (conj[static_cast<size_t>(j - 1)] - i) + 1;
      denom *= hook;
    }
  return numer / denom;
}

mpz_class class_size_z(const Partition& mu) {
  std::map<long, long> mult;
  for (long p : mu.parts()) mult[p]++;
  mpz_class z = 1;
  for (const auto& [p, m] : mult) {
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
    z *= fac * pk;
  }
  return z;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via beta-sets, with a global memo table.
// ---------------------------------------------------------------------------

namespace {

struct CharMemo {
  std::mutex mu;
  std::map<std::pair<std::vector<long>, std::vector<long>>, long long> table;
};

CharMemo& char_memo() {
  static CharMemo m;
  return m;
}

long long mn_char(const std::vector<long>& lambda, const std::vector<long>& mu, size_t mu_at);

long long mn_char_memo(const std::vector<long>& lambda, const std::vector<long>& mu,
                       size_t mu_at) {
  if (lambda.empty()) return 1;
  std::vector<long> mu_rest(mu.begin() + static_cast<long>(mu_at), mu.end());
  auto key = std::make_pair(lambda, std::move(mu_rest));
  {
    std::lock_guard<std::mutex> lk(char_memo().mu);
    auto it = char_memo().table.find(key);
    if (it != char_memo().table.end()) return it->second;
  }
  long long v = mn_char(lambda, mu, mu_at);
  std::lock_guard<std::mutex> lk(char_memo().mu);
  char_memo().table.emplace(std::move(key), v);
  return v;
}

long long mn_char(const std::vector<long>& lambda, const std::vector<long>& mu, size_t mu_at) {
  long s = mu[mu_at];
  long L = static_cast<long>(lambda.size());
  // Beta-set: beta_i = lambda_i + (L - 1 - i) for 0-based i, strictly decreasing.
  std::vector<long> beta(lambda.size());
  for (long i = 0; i < L; ++i)
    beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (L - 1 - i);
  long long acc = 0;
  for (long i = 0; i < L; ++i) {
    long b = beta[static_cast<size_t>(i)];
    if (b < s) continue;
    long nb = b - s;
    bool clash = false;
    int height = 0;
    for (long j = 0; j < L; ++j) {
      if (j == i) continue;
      long bj = beta[static_cast<size_t>(j)];
      if (bj == nb) {
        clash = true;
        break;
      }
      if (bj > nb && bj < b) ++height;
    }
    if (clash) continue;
    std::vector<long> nbeta = beta;
    nbeta[static_cast<size_t>(i)] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<long> nlambda;
    for (long j = 0; j < L; ++j) {
      long part = nbeta[static_cast<size_t>(j)] - (L - 1 - j);
      if (part > 0) nlambda.push_back(part);
    }
    long long sub = mn_char_memo(nlambda, mu, mu_at + 1);
    acc += (height % 2 == 0) ? sub : -sub;
  }
  return acc;
}

}  // namespace

long long char_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw precondition_error("character: |lambda| != |class|");
  return mn_char_memo(lambda.parts(), mu.parts(), 0);
}

// ---------------------------------------------------------------------------
// LR / Kronecker coefficients through characters.
// ---------------------------------------------------------------------------

long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  Rational acc(0);
  for (const auto& rho : all_partitions(mu.size())) {
    long long cm = char_value(mu, rho);
    if (cm == 0) continue;
    for (const auto& tau : all_partitions(nu.size())) {
      long long cn = char_value(nu, tau);
      if (cn == 0) continue;
      std::vector<long> parts = rho.parts();
      parts.insert(parts.end(), tau.parts().begin(), tau.parts().end());
      std::sort(parts.rbegin(), parts.rend());
      long long cl = char_value(lambda, Partition(std::move(parts)));
      if (cl == 0) continue;
      acc += Rational(mpz_class(mpz_class(static_cast<long>(cm)) * static_cast<long>(cn) *
                                static_cast<long>(cl))) /
             Rational(mpz_class(class_size_z(rho) * class_size_z(tau)));
    }
  }
  if (!acc.is_integer()) throw precondition_error("LR coefficient not integral");
  return acc.to_long();
}

long lr_triple(const Partition& kappa, const Partition& lambda, const Partition& mu,
               const Partition& nu) {
  long total = lambda.size() + mu.size();
  if (kappa.size() != total + nu.size()) return 0;
  long acc = 0;
  for (const auto& gamma : all_partitions(total)) {
    long c1 = lr_coeff(gamma, lambda, mu);
    if (c1 == 0) continue;
    acc += c1 * lr_coeff(kappa, gamma, nu);
  }
  return acc;
}

long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw precondition_error("kronecker: sizes must agree");
  Rational acc(0);
  for (const auto& rho : all_partitions(lambda.size())) {
    long long a = char_value(lambda, rho);
    if (a == 0) continue;
    long long b = char_value(mu, rho);
    if (b == 0) continue;
    long long c = char_value(nu, rho);
    if (c == 0) continue;
    acc += Rational(mpz_class(mpz_class(static_cast<long>(a)) * static_cast<long>(b) *
                              static_cast<long>(c))) /
           Rational(class_size_z(rho));
  }
  if (!acc.is_integer()) throw precondition_error("Kronecker coefficient not integral");
  return acc.to_long();
}

namespace {

Partition pad_partition(const Partition& lambda, long n) {
  std::vector<long> parts;
  if (n - lambda.size() < lambda.first())
    throw precondition_error("padding row too short");
  if (n - lambda.size() > 0) parts.push_back(n - lambda.size());
  for (long p : lambda.parts()) parts.push_back(p);
  return Partition(std::move(parts));
}

long reduced_kronecker_stabilize(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
  long n0 = lambda.size() + mu.size() + nu.size() + lambda.first() + mu.first() + nu.first();
  long v1 = kronecker(pad_partition(lambda, n0), pad_partition(mu, n0), pad_partition(nu, n0));
  long v2 = kronecker(pad_partition(lambda, n0 + 1), pad_partition(mu, n0 + 1),
                      pad_partition(nu, n0 + 1));
  if (v1 != v2)
    throw precondition_error("reduced Kronecker stabilization disagreement at n0=" +
                             std::to_string(n0));
  return v1;
}

long reduced_kronecker_littlewood(const Partition& lambda, const Partition& mu,
                                  const Partition& nu) {
  long l = lambda.size(), m = mu.size(), n = nu.size();
  long acc = 0;
  long dmax = std::min({l + m - n, l + n - m, m + n - l});
  for (long d = 0; d <= dmax; ++d) {
    if ((l + m + n + d) % 2 != 0) continue;
    long a2 = m + n - l - d, b2 = l + n - m - d, c2 = l + m - n - d;
    if (a2 < 0 || b2 < 0 || c2 < 0 || a2 % 2 || b2 % 2 || c2 % 2) continue;
    long a = a2 / 2, b = b2 / 2, c = c2 / 2;
    for (const auto& alpha : all_partitions(a))
      for (const auto& beta : all_partitions(b))
        for (const auto& gamma : all_partitions(c))
          for (const auto& delta : all_partitions(d)) {
            long t1 = lr_triple(lambda, beta, gamma, delta);
            if (t1 == 0) continue;
            for (const auto& dp : all_partitions(d)) {
              long t2 = lr_triple(mu, alpha, gamma, dp);
              if (t2 == 0) continue;
              for (const auto& dpp : all_partitions(d)) {
                long t3 = lr_triple(nu, alpha, beta, dpp);
                if (t3 == 0) continue;
                long g = kronecker(delta, dp, dpp);
                if (g) acc += t1 * t2 * t3 * g;
              }
            }
          }
  }
  return acc;
}

}  // namespace

long reduced_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                       ReducedKroneckerMethod method) {
  switch (method) {
    case ReducedKroneckerMethod::Stabilize:
      return reduced_kronecker_stabilize(lambda, mu, nu);
    case ReducedKroneckerMethod::Littlewood:
      return reduced_kronecker_littlewood(lambda, mu, nu);
  }
  throw precondition_error("unreachable");
}

// ---------------------------------------------------------------------------
// Cartan matrix of the downward category by fixed-point counting.
// ---------------------------------------------------------------------------

namespace {

// Downward m x n diagram class: a set partition of the n bottoms plus an
// injection of the m tops into its blocks.
struct DownClass {
  std::vector<std::vector<int>> blocks;  // canonical order
  std::vector<int> tops;                 // tops[i] = block of top i+1
  friend auto operator<=>(const DownClass&, const DownClass&) = default;
};

std::vector<DownClass> enumerate_down_classes(int m, int n) {
  std::vector<DownClass> out;
  if (m > n) return out;
  if (n == 0) {
    if (m == 0) out.push_back(DownClass{});
    return out;
  }
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  auto emit = [&](const std::vector<std::vector<int>>& blocks) {
    int k = static_cast<int>(blocks.size());
    if (m > k) return;
    std::vector<int> sel;
    std::vector<char> used(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(sel.size()) == m) {
        out.push_back(DownClass{blocks, sel});
        return;
      }
      for (int b = 0; b < k; ++b) {
        if (used[static_cast<size_t>(b)]) continue;
        used[static_cast<size_t>(b)] = 1;
        sel.push_back(b);
        self(self);
        sel.pop_back();
        used[static_cast<size_t>(b)] = 0;
      }
    };
    rec(rec);
  };
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (int v = 0; v < n; ++v) blocks[static_cast<size_t>(rgs[v])].push_back(v);
    emit(blocks);
    int i = n - 1;
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

DownClass relabel(const DownClass& dc, const std::vector<int>& g_tops,
                  const std::vector<int>& h_bottoms) {
  DownClass out;
  out.blocks.reserve(dc.blocks.size());
  for (const auto& b : dc.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(h_bottoms[static_cast<size_t>(v)]);
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  std::vector<int> order(out.blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return out.blocks[static_cast<size_t>(a)].front() <
           out.blocks[static_cast<size_t>(b)].front();
  });
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < order.size(); ++i)
    rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> sorted;
  sorted.reserve(out.blocks.size());
  for (int idx : order) sorted.push_back(std::move(out.blocks[static_cast<size_t>(idx)]));
  out.blocks = std::move(sorted);
  out.tops.resize(dc.tops.size());
  for (size_t i = 0; i < dc.tops.size(); ++i)
    out.tops[static_cast<size_t>(g_tops[i])] = rank[static_cast<size_t>(dc.tops[i])];
  return out;
}

std::vector<int> perm_of_type(const Partition& rho) {
  std::vector<int> p;
  int start = 0;
  for (long part : rho.parts()) {
    for (long i = 0; i < part; ++i)
      p.push_back(start + static_cast<int>((i + 1) % part));
    start += static_cast<int>(part);
  }
  return p;
}

}  // namespace

long cartan_B(const Partition& lambda, const Partition& mu) {
  int n = static_cast<int>(lambda.size());
  int m = static_cast<int>(mu.size());
  if (m > n) return 0;
  auto classes = enumerate_down_classes(m, n);
  if (classes.empty()) return 0;
  Rational acc(0);
  for (const auto& rho : all_partitions(m)) {
    long long cm = char_value(mu, rho);
    if (cm == 0) continue;
    std::vector<int> g = perm_of_type(rho);
    for (const auto& tau : all_partitions(n)) {
      long long cl = char_value(lambda, tau);
      if (cl == 0) continue;
      std::vector<int> h = perm_of_type(tau);
      long fixed = 0;
      for (const auto& dc : classes)
        if (relabel(dc, g, h) == dc) ++fixed;
      if (fixed == 0) continue;
      acc += Rational(mpz_class(mpz_class(fixed) * static_cast<long>(cm) *
                                static_cast<long>(cl))) /
             Rational(mpz_class(class_size_z(rho) * class_size_z(tau)));
    }
  }
  if (!acc.is_integer()) throw precondition_error("Cartan entry not integral");
  return acc.to_long();
}

// ---------------------------------------------------------------------------
// Deformed Schur functions.
// ---------------------------------------------------------------------------

std::string SchurPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [p, c] = *it;
    bool neg = c < Rational(0);
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag.str() << "*";
    os << "s" << p.str();
  }
  return os.str();
}

SchurPoly schur_mul(const SchurPoly& a, const SchurPoly& b) {
  SchurPoly out;
  for (const auto& [p, cp] : a.terms)
    for (const auto& [q, cq] : b.terms)
      for (const auto& r : all_partitions(p.size() + q.size())) {
        long lr = lr_coeff(r, p, q);
        if (lr) out.add(r, cp * cq * Rational(lr));
      }
  return out;
}

namespace {

struct DeformedCache {
  std::mutex mu;
  std::map<Partition, SchurPoly> table;
};

DeformedCache& deformed_cache() {
  static DeformedCache c;
  return c;
}

}  // namespace

SchurPoly deformed_schur(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lk(deformed_cache().mu);
    auto it = deformed_cache().table.find(lambda);
    if (it != deformed_cache().table.end()) return it->second;
  }
  // s_lambda = sum_mu B_{lambda,mu} s~_mu with B unitriangular, so
  // s~_lambda = s_lambda - sum_{mu < lambda} B_{lambda,mu} s~_mu.
  SchurPoly out;
  out.add(lambda, Rational(1));
  for (long k = 0; k < lambda.size(); ++k)
    for (const auto& mu : all_partitions(k)) {
      long b = cartan_B(lambda, mu);
      if (b == 0) continue;
      SchurPoly sub = deformed_schur(mu);
      for (const auto& [p, c] : sub.terms) out.add(p, -Rational(b) * c);
    }
  std::lock_guard<std::mutex> lk(deformed_cache().mu);
  return deformed_cache().table.emplace(lambda, std::move(out)).first->second;
}

SchurPoly schur_to_deformed(const SchurPoly& p) {
  SchurPoly out;
  for (const auto& [lam, c] : p.terms)
    for (long k = 0; k <= lam.size(); ++k)
      for (const auto& mu : all_partitions(k)) {
        long b = cartan_B(lam, mu);
        if (b) out.add(mu, c * Rational(b));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Seminormal Specht modules.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::pair<int, int>>> standard_tableaux(const Partition& lambda) {
  std::vector<std::vector<std::pair<int, int>>> out;
  long n = lambda.size();
  std::vector<long> filled(static_cast<size_t>(lambda.length()), 0);
  std::vector<std::pair<int, int>> pos;
  auto rec = [&](auto&& self, long k) -> void {
    if (k == n) {
      out.push_back(pos);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      long c = filled[static_cast<size_t>(r)];
      if (c >= lambda.part(r + 1)) continue;
      if (r > 0 && filled[static_cast<size_t>(r - 1)] <= c) continue;
      filled[static_cast<size_t>(r)]++;
      pos.emplace_back(r, static_cast<int>(c));
      self(self, k + 1);
      pos.pop_back();
      filled[static_cast<size_t>(r)]--;
    }
  };
  rec(rec, 0);
  return out;
}

struct RepCache {
  std::mutex mu;
  std::map<Partition, SeminormalRep> table;
};

RepCache& rep_cache() {
  static RepCache c;
  return c;
}

SeminormalRep build_rep(const Partition& lambda) {
  SeminormalRep rep;
  rep.lambda = lambda;
  rep.tableaux = standard_tableaux(lambda);
  long n = lambda.size();
  int d = rep.dim();
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int a = 0; a < d; ++a) index.emplace(rep.tableaux[static_cast<size_t>(a)], a);
  rep.gens.assign(static_cast<size_t>(std::max<long>(n - 1, 0)),
                  std::vector<std::vector<Rational>>(
                      static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d), Rational(0))));
  for (long i = 1; i < n; ++i) {
    auto& M = rep.gens[static_cast<size_t>(i - 1)];
    for (int a = 0; a < d; ++a) {
      const auto& T = rep.tableaux[static_cast<size_t>(a)];
      auto [r1, c1] = T[static_cast<size_t>(i - 1)];
      auto [r2, c2] = T[static_cast<size_t>(i)];
      if (r1 == r2) {
        M[static_cast<size_t>(a)][static_cast<size_t>(a)] = Rational(1);
        continue;
      }
      if (c1 == c2) {
        M[static_cast<size_t>(a)][static_cast<size_t>(a)] = Rational(-1);
        continue;
      }
      long rho = (c2 - r2) - (c1 - r1);  // cont_{i+1}(T) - cont_i(T)
      auto Tp = T;
      std::swap(Tp[static_cast<size_t>(i - 1)], Tp[static_cast<size_t>(i)]);
      int b = index.at(Tp);
      Rational inv_rho = Rational(1) / Rational(rho);
      M[static_cast<size_t>(a)][static_cast<size_t>(a)] = inv_rho;
      // Coefficient 1 out of the tableau where i+1 sits strictly below i;
      // the partner carries 1 - 1/rho^2.
      bool lower = (r2 > r1);
      M[static_cast<size_t>(b)][static_cast<size_t>(a)] =
          lower ? Rational(1) : Rational(1) - inv_rho * inv_rho;
    }
  }
  rep.form_weights.assign(static_cast<size_t>(d), Rational(0));
  if (d > 0) {
    std::vector<std::pair<int, int>> dom;
    for (int r = 0; r < lambda.length(); ++r)
      for (long c = 0; c < lambda.part(r + 1); ++c) dom.emplace_back(r, static_cast<int>(c));
    int dom_idx = index.at(dom);
    std::vector<char> known(static_cast<size_t>(d), 0);
    rep.form_weights[static_cast<size_t>(dom_idx)] = Rational(1);
    known[static_cast<size_t>(dom_idx)] = 1;
    // gamma_{s_i T} = (1 - 1/rho^2) gamma_T from the lower tableau T.
    bool progress = true;
    while (progress) {
      progress = false;
      for (int a = 0; a < d; ++a) {
        if (!known[static_cast<size_t>(a)]) continue;
        const auto& T = rep.tableaux[static_cast<size_t>(a)];
        for (long i = 1; i < n; ++i) {
          auto [r1, c1] = T[static_cast<size_t>(i - 1)];
          auto [r2, c2] = T[static_cast<size_t>(i)];
          if (r1 == r2 || c1 == c2) continue;
          auto Tp = T;
          std::swap(Tp[static_cast<size_t>(i - 1)], Tp[static_cast<size_t>(i)]);
          int b = index.at(Tp);
          if (known[static_cast<size_t>(b)]) continue;
          long rho = (c2 - r2) - (c1 - r1);
          Rational inv_rho = Rational(1) / Rational(rho);
          Rational factor = Rational(1) - inv_rho * inv_rho;
          rep.form_weights[static_cast<size_t>(b)] =
              (r2 > r1) ? rep.form_weights[static_cast<size_t>(a)] * factor
                        : rep.form_weights[static_cast<size_t>(a)] / factor;
          known[static_cast<size_t>(b)] = 1;
          progress = true;
        }
      }
    }
  }
  return rep;
}

}  // namespace

long SeminormalRep::content_of(int tab_index, int entry) const {
  const auto& rc = tableaux.at(static_cast<size_t>(tab_index)).at(static_cast<size_t>(entry - 1));
  return rc.second - rc.first;
}

const std::vector<std::vector<Rational>>& SeminormalRep::matrix_of(
    const std::vector<int>& perm) const {
  std::lock_guard<std::mutex> lk(*cache_mu_);
  auto it = perm_cache_.find(perm);
  if (it != perm_cache_.end()) return it->second;
  int d = dim();
  std::vector<std::vector<Rational>> M(static_cast<size_t>(d),
                                       std::vector<Rational>(static_cast<size_t>(d), Rational(0)));
  for (int a = 0; a < d; ++a) M[static_cast<size_t>(a)][static_cast<size_t>(a)] = Rational(1);
  // Bubble-sort word: perm equals the product of the recorded adjacent
  // transpositions applied left to right onto the identity.
  std::vector<int> p = perm;
  std::vector<int> word;
  for (size_t pass = 0; pass + 1 < p.size() || pass == 0; ++pass) {
    bool swapped = false;
    for (size_t j = 0; j + 1 < p.size(); ++j) {
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        word.push_back(static_cast<int>(j + 1));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  // p . s_{w1} . s_{w2} ... = id, hence perm = s_{w_k} ... s_{w_1} and the
  // matrix is G_{w_k} ... G_{w_1}.
  for (int w : word) {
    const auto& G = gens[static_cast<size_t>(w - 1)];
    std::vector<std::vector<Rational>> R(static_cast<size_t>(d),
                                         std::vector<Rational>(static_cast<size_t>(d), Rational(0)));
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        const Rational& g = G[static_cast<size_t>(r)][static_cast<size_t>(k)];
        if (g.is_zero()) continue;
        for (int c = 0; c < d; ++c) {
          const Rational& mv = M[static_cast<size_t>(k)][static_cast<size_t>(c)];
          if (!mv.is_zero()) R[static_cast<size_t>(r)][static_cast<size_t>(c)] += g * mv;
        }
      }
    M = std::move(R);
  }
  return perm_cache_.emplace(perm, std::move(M)).first->second;
}

const SeminormalRep& specht_rep(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lk(rep_cache().mu);
    auto it = rep_cache().table.find(lambda);
    if (it != rep_cache().table.end()) return it->second;
  }
  SeminormalRep rep = build_rep(lambda);
  std::lock_guard<std::mutex> lk(rep_cache().mu);
  return rep_cache().table.emplace(lambda, std::move(rep)).first->second;
}

}  // namespace parcat
