// parcat: batch command-line surface for the partition-category kernel.
//
// Exit codes: 0 success, 1 failed verification, 2 parse error,
// 3 precondition violation.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "parcat/algebra.hpp"
#include "parcat/blocks.hpp"
#include "parcat/diagram.hpp"
#include "parcat/schurweyl.hpp"
#include "parcat/stdmod.hpp"
#include "parcat/symfun.hpp"

using namespace parcat;

namespace {

struct CliConfig {
  std::string t_text = "generic";
  std::string format = "text";
  int max_size = 4;
  unsigned long seed = 812;

  bool generic() const { return t_text == "generic"; }
  Rational t() const {
    if (generic()) throw precondition_error("this command needs a numeric --t");
    return Rational::parse(t_text);
  }
};

std::string poly_or_value(const CliConfig& cfg, const Poly& p) {
  return cfg.generic() ? p.str() : p.eval(cfg.t()).str();
}

void print_element(const CliConfig& cfg, const PolyElement& e) {
  if (cfg.format == "json") {
    if (cfg.generic()) {
      std::cout << to_json_string(e) << "\n";
      return;
    }
    nlohmann::json j;
    j["m"] = e.m;
    j["n"] = e.n;
    j["t"] = cfg.t_text;
    j["terms"] = nlohmann::json::array();
    for (const auto& [d, c] : e.terms) {
      Rational v = c.eval(cfg.t());
      if (!v.is_zero()) j["terms"].push_back({{"coeff", v.str()}, {"diagram", d.str()}});
    }
    std::cout << j.dump() << "\n";
    return;
  }
  if (e.terms.empty()) {
    std::cout << "0\n";
    return;
  }
  bool printed = false;
  for (const auto& [d, c] : e.terms) {
    std::string coeff = poly_or_value(cfg, c);
    if (coeff == "0") continue;
    std::cout << d.str() << " * " << coeff << "\n";
    printed = true;
  }
  if (!printed) std::cout << "0\n";
}

int cmd_compose(const CliConfig& cfg, const std::vector<std::string>& texts) {
  std::vector<PartitionDiagram> ds;
  ds.reserve(texts.size());
  for (const auto& s : texts) ds.push_back(PartitionDiagram::parse(s));
  // Arguments are read as a bottom-to-top pipeline: the first diagram is
  // applied first, later ones are stacked on top.
  PartitionDiagram acc = ds.front();
  int loops = 0;
  for (size_t i = 1; i < ds.size(); ++i) {
    ComposeResult r = compose(ds[i], acc);
    acc = r.diagram;
    loops += r.loops;
  }
  if (cfg.format == "json") {
    nlohmann::json j{{"diagram", acc.str()}, {"loops", loops}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << acc.str() << ", loops=" << loops << "\n";
  }
  return 0;
}

int cmd_basis(const CliConfig& cfg, int m, int n) {
  auto all = enumerate_diagrams(m, n);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& d : all) j.push_back(d.str());
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& d : all) std::cout << d.str() << "\n";
  }
  return 0;
}

int cmd_jm(const CliConfig& cfg, int n, int j, const std::string& kind) {
  PolyElement e;
  if (kind == "left") e = jm_left(n, j);
  else if (kind == "right") e = jm_right(n, j);
  else if (kind == "cross-left") e = cross_left(n, j);
  else if (kind == "cross-right") e = cross_right(n, j);
  else throw precondition_error("unknown jm kind: " + kind);
  print_element(cfg, e);
  return 0;
}

int cmd_central(const CliConfig& cfg, int n, int r, const std::string& kind) {
  PolyElement e;
  if (kind == "z") e = central_z(n, r);
  else if (kind == "c") e = central_c(n, r);
  else throw precondition_error("unknown central kind: " + kind);
  print_element(cfg, e);
  return 0;
}

int cmd_hc(const CliConfig& cfg, const std::string& input) {
  std::string text = input;
  if (text == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }
  PolyElement e = element_from_json(text);
  auto img = hc_project(e);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["n"] = img.n;
    j["terms"] = nlohmann::json::array();
    for (const auto& [g, c] : img.terms) {
      nlohmann::json perm = nlohmann::json::array();
      for (int v : g) perm.push_back(v + 1);
      j["terms"].push_back({{"perm", perm}, {"coeff", poly_or_value(cfg, c)}});
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (img.terms.empty()) {
    std::cout << "0\n";
    return 0;
  }
  for (const auto& [g, c] : img.terms) {
    std::cout << "[";
    for (size_t i = 0; i < g.size(); ++i)
      std::cout << (i ? " " : "") << g[i] + 1;
    std::cout << "] * " << poly_or_value(cfg, c) << "\n";
  }
  return 0;
}

int cmd_blocks(const CliConfig& cfg, int max_size) {
  Rational t = cfg.t();
  std::cout << "partition\ttypical\tkappa\tn\twt-window\n";
  for (const auto& lam : partitions_up_to(max_size)) {
    bool typ = is_typical(lam, t);
    std::string kappa = "-", idx = "-";
    if (t.is_integer() && t >= Rational(0)) {
      auto rec = recover_kappa(lam, t.to_long());
      if (rec) {
        kappa = rec->first.str();
        idx = std::to_string(rec->second);
      }
    }
    WeightKey key = weight_key(lam, t, std::max(lam.length(), 1));
    std::ostringstream wt;
    wt << "{";
    for (size_t i = 0; i < key.entries.size(); ++i)
      wt << (i ? "," : "") << key.entries[i].str();
    wt << "}";
    std::cout << lam.str() << "\t" << (typ ? "yes" : "no") << "\t" << kappa << "\t" << idx
              << "\t" << wt.str() << "\n";
  }
  return 0;
}

int cmd_kron(const CliConfig& cfg, const std::string& ls, const std::string& ms,
             const std::string& ns, bool reduced, const std::string& method) {
  Partition lam = Partition::parse(ls), mu = Partition::parse(ms), nu = Partition::parse(ns);
  long value;
  if (reduced) {
    auto m = method == "littlewood" ? ReducedKroneckerMethod::Littlewood
                                    : ReducedKroneckerMethod::Stabilize;
    value = reduced_kronecker(lam, mu, nu, m);
  } else {
    value = kronecker(lam, mu, nu);
  }
  if (cfg.format == "json")
    std::cout << nlohmann::json{{"value", value}}.dump() << "\n";
  else
    std::cout << value << "\n";
  return 0;
}

int cmd_deformed(const CliConfig& cfg, const std::string& ls) {
  SchurPoly p = deformed_schur(Partition::parse(ls));
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [q, c] : p.terms) j.push_back({{"partition", q.str()}, {"coeff", c.str()}});
    std::cout << j.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int cmd_gram(const CliConfig& cfg, const std::string& ls, int m) {
  Partition lam = Partition::parse(ls);
  Rational t = cfg.t();
  GramMatrix g = gram_matrix(lam, m, t);
  if (cfg.format == "json") {
    nlohmann::json j{{"lambda", lam.str()},
                     {"m", m},
                     {"t", t.str()},
                     {"dim", delta_dim(lam, m)},
                     {"rank", g.rank}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "lambda\tm\tt\tdim\trank\n";
    std::cout << lam.str() << "\t" << m << "\t" << t.str() << "\t" << delta_dim(lam, m)
              << "\t" << g.rank << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Verification suites (sized-down variants of the acceptance criteria,
// selectable for CI).
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  std::function<bool()> body;
};

bool run_checks(const std::vector<Check>& checks) {
  bool all_ok = true;
  for (const auto& c : checks) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = c.body();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << " (" << timing << ")"
              << (err.empty() ? "" : "  error: " + err) << "\n";
    if (!ok) all_ok = false;
  }
  return all_ok;
}

std::vector<Check> relation_checks(int n_max) {
  std::vector<Check> out;
  out.push_back({"dots on all strands commute", [n_max] {
    for (int n = 1; n <= n_max; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (mul(jm_left(n, i), jm_left(n, j)) != mul(jm_left(n, j), jm_left(n, i)))
            return false;
          if (mul(jm_left(n, i), jm_right(n, j)) != mul(jm_right(n, j), jm_left(n, i)))
            return false;
        }
    return true;
  }});
  out.push_back({"dotted crossings: s^R = sigma s^L, (s^L)^2 = 1", [n_max] {
    for (int n = 2; n <= n_max; ++n)
      for (int k = 1; k < n; ++k) {
        PolyElement sig = PolyElement::from_diagram(crossing_at(n, k));
        if (cross_right(n, k) != mul(sig, cross_left(n, k))) return false;
        if (mul(cross_left(n, k), cross_left(n, k)) != PolyElement::identity(n)) return false;
      }
    return true;
  }});
  out.push_back({"right dots from left dots through a leaf", [n_max] {
    for (int n = 1; n <= n_max; ++n)
      for (int j = 1; j <= n; ++j) {
        PolyElement rhs =
            mul(mul(PolyElement::from_diagram(merge_at(n + 1, j)), jm_left(n + 1, j)),
                PolyElement::from_diagram(leaf_up_at(n, j)));
        if (jm_right(n, j) != rhs) return false;
      }
    return true;
  }});
  out.push_back({"sigma fixes the JM family", [n_max] {
    for (int n = 1; n <= n_max; ++n) {
      for (int j = 1; j <= n; ++j)
        if (sigma(jm_left(n, j)) != jm_left(n, j) || sigma(jm_right(n, j)) != jm_right(n, j))
          return false;
      for (int k = 1; k < n; ++k)
        if (sigma(cross_left(n, k)) != cross_left(n, k) ||
            sigma(cross_right(n, k)) != cross_right(n, k))
          return false;
    }
    return true;
  }});
  return out;
}

std::vector<Check> centrality_checks(int n_max) {
  std::vector<Check> out;
  out.push_back({"z^(r) central for r <= 3", [n_max] {
    for (int r = 1; r <= 3; ++r)
      if (!check_centrality([r](int n) { return central_z(n, r); }, n_max)) return false;
    return true;
  }});
  out.push_back({"c^(r) central for r <= 4, low coefficients match", [n_max] {
    for (int r = 3; r <= 4; ++r)
      if (!check_centrality([r](int n) { return central_c(n, r); }, n_max)) return false;
    for (int n = 0; n <= n_max; ++n) {
      if (central_c(n, 0) != PolyElement::identity(n)) return false;
      if (!central_c(n, 1).is_zero() || !central_c(n, 2).is_zero()) return false;
      if (central_c(n, 3) != central_z(n, 1).scaled(Poly(-2))) return false;
    }
    return true;
  }});
  return out;
}

std::vector<Check> oracle_checks(int n_max, unsigned long seed) {
  std::vector<Check> out;
  out.push_back({"psi functoriality on random pairs", [seed] {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      int m = static_cast<int>(rng() % 3), k = static_cast<int>(rng() % 3),
          n = static_cast<int>(rng() % 3);
      long t = 2 + static_cast<long>(rng() % 3);
      auto rand_diagram = [&rng](int mm, int nn) {
        int total = mm + nn;
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
        return PartitionDiagram::from_blocks(mm, nn, std::move(blocks));
      };
      PartitionDiagram f = rand_diagram(m, k), g = rand_diagram(k, n);
      ComposeResult fg = compose(f, g);
      if (psi_diagram(fg.diagram, t).scaled(Rational(t).pow(fg.loops)) !=
          psi_diagram(f, t) * psi_diagram(g, t))
        return false;
    }
    return true;
  }});
  out.push_back({"JM matrices match the dictionary", [n_max] {
    for (int n = 1; n <= std::min(n_max, 3); ++n)
      for (long t = n; t <= n + 2; ++t) {
        for (int j = 1; j <= n; ++j) {
          if (psi_element(jm_left(n, j), t) != jm_matrix_oracle(n, j, t, JmKind::LeftDot))
            return false;
          if (psi_element(jm_right(n, j), t) != jm_matrix_oracle(n, j, t, JmKind::RightDot))
            return false;
        }
        for (int k = 1; k < n; ++k)
          if (psi_element(cross_right(n, k), t) !=
              jm_matrix_oracle(n, k, t, JmKind::RightCross))
            return false;
      }
    return true;
  }});
  return out;
}

std::vector<Check> block_checks(int m_max) {
  std::vector<Check> out;
  out.push_back({"length-two block structure (t = 0, 1)", [m_max] {
    return verify_block_structure(Partition(std::vector<long>{}), m_max, 2).all_ok &&
           verify_block_structure(Partition(std::vector<long>{1}), m_max, 2).all_ok;
  }});
  out.push_back({"branching layers partition", [] {
    for (const Rational& t : {Rational(2), Rational(mpz_class(7), mpz_class(3))})
      for (const auto& lam : partitions_up_to(4)) {
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
  }});
  return out;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite, const std::string& bounds) {
  int n_max = bounds == "small" ? 2 : std::min(cfg.max_size, 3);
  int m_max = bounds == "small" ? 3 : cfg.max_size;
  std::vector<Check> checks;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (suite == "relations" || suite == "all") append(relation_checks(n_max + 1));
  if (suite == "centrality" || suite == "all") append(centrality_checks(n_max));
  if (suite == "oracle" || suite == "all") append(oracle_checks(n_max + 1, cfg.seed));
  if (suite == "block-structure" || suite == "all") append(block_checks(m_max));
  if (checks.empty()) throw precondition_error("unknown verify suite: " + suite);
  return run_checks(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the partition category"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--t", cfg.t_text, "parameter value: a rational p/q or 'generic'")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format: text, json or tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--max-size", cfg.max_size, "size bound for tables and verification")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized property suites")
      ->capture_default_str();

  std::vector<std::string> compose_args;
  auto* compose_cmd = app.add_subcommand("compose", "compose diagrams left to right");
  compose_cmd->add_option("diagrams", compose_args, "diagrams in the text format")
      ->required()
      ->expected(-1);

  int basis_m = 0, basis_n = 0;
  auto* basis_cmd = app.add_subcommand("basis", "list the diagram basis of Hom(n, m)");
  basis_cmd->add_option("m", basis_m)->required();
  basis_cmd->add_option("n", basis_n)->required();

  int jm_n = 1, jm_j = 1;
  bool jm_left_f = false, jm_right_f = false, jm_cl = false, jm_cr = false;
  auto* jm_cmd = app.add_subcommand("jm", "Jucys-Murphy elements and dotted crossings");
  jm_cmd->add_option("--n", jm_n, "number of strands")->required();
  jm_cmd->add_option("--j", jm_j, "strand position")->required();
  jm_cmd->add_flag("--left", jm_left_f, "left dot x_j^L");
  jm_cmd->add_flag("--right", jm_right_f, "right dot x_j^R");
  jm_cmd->add_flag("--cross-left", jm_cl, "dotted crossing s_k^L");
  jm_cmd->add_flag("--cross-right", jm_cr, "dotted crossing s_k^R");

  int central_n = 1, central_r = 1;
  std::string central_kind = "z";
  auto* central_cmd = app.add_subcommand("central", "central elements z^(r), c^(r)");
  central_cmd->add_option("--n", central_n)->required();
  central_cmd->add_option("--r", central_r)->required();
  central_cmd->add_option("--kind", central_kind)->check(CLI::IsMember({"z", "c"}));

  std::string hc_input;
  auto* hc_cmd = app.add_subcommand("hc", "Harish-Chandra projection of a JSON element");
  hc_cmd->add_option("element", hc_input, "element JSON ('-' reads stdin)")->required();

  int blocks_max = 5;
  auto* blocks_cmd = app.add_subcommand("blocks", "block table at a numeric --t");
  blocks_cmd->add_option("--max", blocks_max, "maximum partition size");

  std::string kron_l, kron_m, kron_n;
  bool kron_reduced = false;
  std::string kron_method = "stabilize";
  auto* kron_cmd = app.add_subcommand("kron", "Kronecker and reduced Kronecker coefficients");
  kron_cmd->add_option("lambda", kron_l)->required();
  kron_cmd->add_option("mu", kron_m)->required();
  kron_cmd->add_option("nu", kron_n)->required();
  kron_cmd->add_flag("--reduced", kron_reduced, "reduced (stable) coefficient");
  kron_cmd->add_option("--method", kron_method)
      ->check(CLI::IsMember({"stabilize", "littlewood"}));

  std::string deformed_l;
  auto* deformed_cmd = app.add_subcommand("deformed", "deformed Schur function in the Schur basis");
  deformed_cmd->add_option("lambda", deformed_l)->required();

  std::string gram_l;
  int gram_m = 0;
  auto* gram_cmd = app.add_subcommand("gram", "Gram rank of a standard-module weight space");
  gram_cmd->add_option("lambda", gram_l)->required();
  gram_cmd->add_option("m", gram_m)->required();

  std::string verify_suite = "all", verify_bounds = "small";
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("suite", verify_suite,
                         "relations, centrality, oracle, block-structure or all");
  verify_cmd->add_option("--bounds", verify_bounds)->check(CLI::IsMember({"small", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compose_cmd->parsed()) return cmd_compose(cfg, compose_args);
    if (basis_cmd->parsed()) return cmd_basis(cfg, basis_m, basis_n);
    if (jm_cmd->parsed()) {
      std::string kind = jm_left_f ? "left" : jm_right_f ? "right" : jm_cl ? "cross-left"
                         : jm_cr ? "cross-right" : "";
      if (kind.empty())
        throw precondition_error("jm needs one of --left --right --cross-left --cross-right");
      return cmd_jm(cfg, jm_n, jm_j, kind);
    }
    if (central_cmd->parsed()) return cmd_central(cfg, central_n, central_r, central_kind);
    if (hc_cmd->parsed()) return cmd_hc(cfg, hc_input);
    if (blocks_cmd->parsed()) return cmd_blocks(cfg, blocks_max);
    if (kron_cmd->parsed()) return cmd_kron(cfg, kron_l, kron_m, kron_n, kron_reduced, kron_method);
    if (deformed_cmd->parsed()) return cmd_deformed(cfg, deformed_l);
    if (gram_cmd->parsed()) return cmd_gram(cfg, gram_l, gram_m);
    if (verify_cmd->parsed()) return cmd_verify(cfg, verify_suite, verify_bounds);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
