#include "parcat/blocks.hpp"

#include <algorithm>
#include <set>

namespace parcat {

WeightKey weight_key(const Partition& lambda, const Rational& t, int window) {
  if (window < lambda.length()) throw precondition_error("weight window too small");
  WeightKey key;
  key.window = window;
  key.entries.push_back(t - Rational(lambda.size()));
  for (int i = 1; i <= window; ++i) key.entries.push_back(Rational(lambda.part(i) - i));
  std::sort(key.entries.begin(), key.entries.end());
  return key;
}

bool same_block(const Partition& lambda, const Partition& mu, const Rational& t) {
  int window = std::max(lambda.length(), mu.length());
  return weight_key(lambda, t, window) == weight_key(mu, t, window);
}

Partition kappa_shift(const Partition& kappa, int n) {
  // Positive and weakly decreasing by construction.
  std::vector<long> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(kappa.part(i) + 1);
  for (int i = n + 2; i <= kappa.length(); ++i) parts.push_back(kappa.part(i));
  return Partition(std::move(parts));
}

std::vector<Partition> kappa_orbit(const Partition& kappa, const Rational& t, int n_max) {
  if (!t.is_integer() || Rational(kappa.size()) != t)
    throw precondition_error("kappa_orbit needs t in N and |kappa| = t");
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(kappa_shift(kappa, n));
  return out;
}

std::optional<std::pair<Partition, int>> recover_kappa(const Partition& lambda, long t) {
  if (t < 0) return std::nullopt;
  // If lambda = kappa^(n) then kappa = (lambda_1 - 1, ..., lambda_n - 1, x,
  // lambda_{n+1}, ...) where x makes the size t.
  for (int n = 0; n <= lambda.length(); ++n) {
    long head_size = 0;
    for (int i = 1; i <= n; ++i) head_size += lambda.part(i) - 1;
    long tail_size = 0;
    for (int i = n + 1; i <= lambda.length(); ++i) tail_size += lambda.part(i);
    long x = t - head_size - tail_size;  // the deleted row of kappa
    if (x < 0) continue;
    std::vector<long> with_zeros;
    for (int i = 1; i <= n; ++i) with_zeros.push_back(lambda.part(i) - 1);
    with_zeros.push_back(x);
    for (int i = n + 1; i <= lambda.length(); ++i) with_zeros.push_back(lambda.part(i));
    bool ok = true;
    for (size_t i = 1; i < with_zeros.size(); ++i)
      if (with_zeros[i] > with_zeros[i - 1]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    while (!with_zeros.empty() && with_zeros.back() == 0) with_zeros.pop_back();
    Partition kappa(std::move(with_zeros));
    if (kappa.size() == t && kappa_shift(kappa, n) == lambda)
      return std::make_pair(kappa, n);
  }
  return std::nullopt;
}

bool is_typical(const Partition& lambda, const Rational& t) {
  if (!t.is_integer()) return true;
  long tv = t.to_long();
  long target = tv - lambda.size();
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - i == target) return true;
  // Rows beyond the length contribute lambda_i - i = -i.
  return target <= -(lambda.length() + 1);
}

Rational central_char_z(const Partition& lambda, int r, const Rational& t) {
  if (r < 1) throw precondition_error("central_char_z needs r >= 1");
  Rational acc(0);
  for (long c : all_contents(lambda)) acc += Rational(c).pow(r);
  for (long i = 1; i <= lambda.size(); ++i) acc -= (t - Rational(i - 1)).pow(r);
  return acc;
}

std::map<Rational, long> central_char_c(const Partition& lambda, const Rational& t) {
  std::map<Rational, long> div;
  auto bump = [&](const Rational& point, long mult) {
    auto [it, fresh] = div.emplace(point, mult);
    if (!fresh) {
      it->second += mult;
      if (it->second == 0) div.erase(it);
    } else if (it->second == 0) {
      div.erase(it);
    }
  };
  // alpha_c contributes a double pole at c and zeros at c - 1, c + 1.
  for (long c : all_contents(lambda)) {
    bump(Rational(c), 2);
    bump(Rational(c - 1), -1);
    bump(Rational(c + 1), -1);
  }
  for (long i = 1; i <= lambda.size(); ++i) {
    Rational s = t - Rational(i - 1);
    bump(s, -2);
    bump(s - Rational(1), 1);
    bump(s + Rational(1), 1);
  }
  return div;
}

namespace {

void bump(std::map<Partition, int>& layer, const Partition& p, int count = 1) {
  layer[p] += count;
}

}  // namespace

BranchLayers branch_hood(const Partition& lambda) {
  BranchLayers out;
  AddRem ar = add_rem(lambda);
  for (long a : ar.add) bump(out.top, add_box(lambda, a));
  bump(out.middle, lambda);
  for (long b : ar.rem) {
    Partition down = remove_box(lambda, b);
    bump(out.bottom, down);
    for (long a : add_rem(down).add) bump(out.middle, add_box(down, a));
  }
  return out;
}

BranchLayers branch_D(const Partition& lambda, const Rational& a, const Rational& b,
                      const Rational& t) {
  BranchLayers out;
  if (t.is_integer() && !(a.is_integer() && b.is_integer())) return out;
  AddRem ar = add_rem(lambda);
  Rational tminus = t - Rational(lambda.size());
  auto is_add = [&](const Rational& c) {
    return c.is_integer() && ar.add.count(c.to_long()) > 0;
  };
  auto is_rem = [&](const Rational& c) {
    return c.is_integer() && ar.rem.count(c.to_long()) > 0;
  };
  // Top layer: Delta(lambda + a) when a is addable and b = t - |lambda|.
  if (is_add(a) && b == tminus) bump(out.top, add_box(lambda, a.to_long()));
  // Middle layer.
  if (a == b) {
    if (tminus == a && is_rem(a)) bump(out.middle, lambda, 2);
    else if ((tminus != a && is_rem(a)) || (tminus == a && !is_rem(a)))
      bump(out.middle, lambda, 1);
  } else if (is_rem(b)) {
    Partition down = remove_box(lambda, b.to_long());
    AddRem ard = add_rem(down);
    if (a.is_integer() && ard.add.count(a.to_long()))
      bump(out.middle, add_box(down, a.to_long()));
  }
  // Bottom layer: Delta(lambda - b) when a = t - |lambda| + 1 and b removable.
  if (a == tminus + Rational(1) && is_rem(b))
    bump(out.bottom, remove_box(lambda, b.to_long()));
  return out;
}

std::vector<std::pair<Rational, Rational>> branch_support(const Partition& lambda,
                                                          const Rational& t) {
  AddRem ar = add_rem(lambda);
  Rational tminus = t - Rational(lambda.size());
  std::set<Rational> as, bs;
  for (long c : ar.add) as.insert(Rational(c));
  for (long c : ar.rem) {
    as.insert(Rational(c));
    bs.insert(Rational(c));
  }
  as.insert(tminus);
  as.insert(tminus + Rational(1));
  bs.insert(tminus);
  std::vector<std::pair<Rational, Rational>> grid;
  for (const auto& a : as)
    for (const auto& b : bs) grid.emplace_back(a, b);
  return grid;
}

}  // namespace parcat
