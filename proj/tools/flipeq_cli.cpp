// flipeq: exact enumeration of rooted binary trees up to flip-equivalence.
//
// Subcommands expose the counting recurrences (seq, table), the truncated
// generating-function solutions (gf), and cross-validation suites (verify).
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// integrity error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flipeq/emit.hpp"
#include "flipeq/exact_int.hpp"
#include "flipeq/gf_solvers.hpp"
#include "flipeq/multi_series.hpp"
#include "flipeq/recurrences.hpp"
#include "flipeq/tree_oracle.hpp"

namespace {

using namespace flipeq;

struct output_spec {
  output_format format = output_format::plain;
  std::string out_path;  // empty: stdout
};

void write_output(const output_spec& out, const std::string& text) {
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.out_path, std::ios::binary);
  if (!f) throw usage_error("cannot open output file: " + out.out_path);
  f << text;
}

void check_cap(const std::string& what, int value, int cap, bool force) {
  if (!force && value > cap) {
    throw usage_error(what + " " + std::to_string(value) + " above default cap " +
                      std::to_string(cap) + " (pass --force to lift)");
  }
}

int run_seq(const std::string& kind, int nmax, const output_spec& out, bool force) {
  check_cap("--nmax", nmax, 200, force);
  value_table t;
  t.kind = kind;
  t.params = {{"nmax", nmax}};
  t.index_columns = {"n"};
  if (kind == "catalan") {
    catalan_table c(nmax);
    for (int n = 0; n <= nmax; ++n) t.rows.push_back({{n}, c.at(n).str()});
  } else {
    wedderburn_table b(nmax);
    for (int n = 0; n <= nmax; ++n) t.rows.push_back({{n}, b.at(n).str()});
  }
  switch (out.format) {
    case output_format::plain: write_output(out, emit_plain(t)); break;
    case output_format::csv: write_output(out, emit_csv(t)); break;
    case output_format::json: write_output(out, emit_json(t)); break;
  }
  return 0;
}

int run_table(const std::string& kind, int nmax, const output_spec& out, bool force) {
  value_table t;
  t.kind = kind;
  t.params = {{"nmax", nmax}};
  size_t group_cols = 1;
  if (kind == "k2") {
    check_cap("--nmax", nmax, 100, force);
    t.index_columns = {"n", "l"};
    k2_table k(nmax);
    for (int n = 0; n <= nmax; ++n)
      for (int l = 0; l <= n; ++l) t.rows.push_back({{n, l}, k.at(n, l).str()});
  } else if (kind == "bcolor") {
    check_cap("--nmax", nmax, 100, force);
    t.index_columns = {"n", "k"};
    bcolor_table b(nmax);
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k) t.rows.push_back({{n, k}, b.at(n, k).str()});
  } else {
    check_cap("--nmax", nmax, 60, force);
    t.index_columns = {"n", "c", "l"};
    group_cols = 2;
    k3_table k(nmax);
    for (int n = 0; n <= nmax; ++n)
      for (int c = 0; c <= n; ++c)
        for (int l = 0; l <= n; ++l) t.rows.push_back({{n, c, l}, k.at(n, l, c).str()});
  }
  switch (out.format) {
    case output_format::plain: write_output(out, emit_grid(t, group_cols)); break;
    case output_format::csv: write_output(out, emit_csv(t)); break;
    case output_format::json: write_output(out, emit_json(t)); break;
  }
  return 0;
}

int run_gf(const std::string& eq_name, int order, const output_spec& out, bool force) {
  equation_id eq = *parse_equation(eq_name);
  switch (arity(eq)) {
    case 1: check_cap("--order", order, 200, force); break;
    case 2: check_cap("--order", order, 64, force); break;
    default: check_cap("--order", order, 24, force); break;
  }
  multi_series s = solve(eq, order);
  if (!residual(eq, s).is_zero()) {
    throw integrity_error(std::string("solved series fails its own equation: ") + eq_name);
  }
  value_table t;
  t.kind = eq_name;
  t.params = {{"order", order}};
  const char* var_names[] = {"x", "y", "z"};
  for (int a = 0; a < arity(eq); ++a) t.index_columns.emplace_back(var_names[a]);
  for (const auto& term : s.terms()) {
    value_table::row r;
    r.index.push_back(term.e.i);
    if (arity(eq) >= 2) r.index.push_back(term.e.j);
    if (arity(eq) >= 3) r.index.push_back(term.e.k);
    t.rows.push_back({std::move(r.index), term.c.str()});
  }
  switch (out.format) {
    case output_format::plain: write_output(out, emit_plain(t)); break;
    case output_format::csv: write_output(out, emit_csv(t)); break;
    case output_format::json: write_output(out, emit_json(t)); break;
  }
  return 0;
}

void add_check(check_table& t, std::string name, bool passed, std::string detail = {}) {
  t.checks.push_back({std::move(name), passed, std::move(detail)});
}

void verify_tables(check_table& out, int nmax) {
  const int o1 = nmax, o2 = std::min(nmax, 24), o3 = std::min(nmax, 16);
  {
    catalan_table c(o1);
    multi_series f = solve(equation_id::F_gfe0, o1);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= o1 && ok; ++n) {
      if (f.coefficient(n) != c.at(n)) {
        ok = false;
        detail = "first mismatch at n=" + std::to_string(n);
      }
    }
    add_check(out, "ordered-tree series matches its recurrence to order " + std::to_string(o1),
              ok, detail);
  }
  {
    wedderburn_table b(o1);
    multi_series g = solve(equation_id::G_gfe, o1);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= o1 && ok; ++n) {
      if (g.coefficient(n) != b.at(n)) {
        ok = false;
        detail = "first mismatch at n=" + std::to_string(n);
      }
    }
    add_check(out, "class-count series matches its recurrence to order " + std::to_string(o1),
              ok, detail);
  }
  {
    k2_table k(o2);
    multi_series l = solve(equation_id::L_gen1, o2);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= o2 && ok; ++n)
      for (int v = 0; v <= n && ok; ++v) {
        if (l.coefficient(n, v) != k.at(n, v)) {
          ok = false;
          detail = "first mismatch at (" + std::to_string(n) + "," + std::to_string(v) + ")";
        }
      }
    add_check(out, "class-size series matches its table to order " + std::to_string(o2), ok,
              detail);
  }
  {
    bcolor_table b(o2);
    multi_series m = solve(equation_id::M_gen2, o2);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= o2 && ok; ++n)
      for (int k = 0; k <= n && ok; ++k) {
        if (m.coefficient(n, k) != b.at(n, k)) {
          ok = false;
          detail = "first mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
    add_check(out, "color series matches its table to order " + std::to_string(o2), ok, detail);
  }
  {
    k3_table k(o3);
    multi_series s = solve(equation_id::S_gen3, o3);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= o3 && ok; ++n)
      for (int l = 0; l <= n && ok; ++l)
        for (int c = 0; c <= n && ok; ++c) {
          if (s.coefficient(n, l, c) != k.at(n, l, c)) {
            ok = false;
            detail = "first mismatch at (" + std::to_string(n) + "," + std::to_string(l) + "," +
                     std::to_string(c) + ")";
          }
        }
    add_check(out, "three-parameter series matches its table to order " + std::to_string(o3), ok,
              detail);
  }
}

void verify_identities(check_table& out, int nmax) {
  catalan_table c(nmax);
  wedderburn_table b(nmax);
  k2_table k(nmax);
  bcolor_table bc(nmax);
  k3_table k3t(nmax);
  bool ok;
  std::string detail;

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n) {
    ExactInt weighted = 0, total = 0;
    for (int l = 0; l <= n; ++l) {
      weighted += pow2(l) * k.at(n, l);
      total += k.at(n, l);
    }
    if (weighted != c.at(n) || total != b.at(n)) {
      ok = false;
      detail = "fails at n=" + std::to_string(n);
    }
  }
  add_check(out, "class sizes resum to ordered and unordered counts", ok, detail);

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n)
    for (int cc = 0; cc <= n && ok; ++cc) {
      ExactInt marginal = 0;
      for (int l = 0; l <= n; ++l) marginal += k3t.at(n, l, cc);
      if (marginal != bc.at(n, cc)) {
        ok = false;
        detail = "fails at (" + std::to_string(n) + "," + std::to_string(cc) + ")";
      }
    }
  add_check(out, "three-parameter marginals over l give the color table", ok, detail);

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n) {
    ExactInt weighted = 0;
    for (int l = 0; l <= n; ++l)
      for (int cc = 0; cc <= n; ++cc) weighted += pow2(l) * k3t.at(n, l, cc);
    if (weighted != c.at(n) * pow2(n)) {
      ok = false;
      detail = "fails at n=" + std::to_string(n);
    }
  }
  add_check(out, "every ordered colored tree is counted exactly once", ok, detail);

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n)
    for (int kk = 0; kk <= n && ok; ++kk) {
      if (bc.at(n, kk) != bc.at(n, n - kk)) {
        ok = false;
        detail = "fails at (" + std::to_string(n) + "," + std::to_string(kk) + ")";
      }
    }
  add_check(out, "color table is symmetric under color swap", ok, detail);

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n)
    for (int l = 0; l <= n && ok; ++l)
      for (int cc = 0; cc <= n && ok; ++cc) {
        if (k3t.at(n, l, cc) != k3t.at(n, l, n - cc)) {
          ok = false;
          detail = "fails at (" + std::to_string(n) + "," + std::to_string(l) + "," +
                   std::to_string(cc) + ")";
        }
      }
  add_check(out, "three-parameter table is symmetric under color swap", ok, detail);

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n)
    for (int l = 0; l <= n && ok; ++l) {
      if (k3t.at(n, l, 0) != k.at(n, l)) {
        ok = false;
        detail = "fails at (" + std::to_string(n) + "," + std::to_string(l) + ")";
      }
    }
  add_check(out, "all-white slice equals the one-color table", ok, detail);

  ok = true;
  detail.clear();
  for (int n = 0; n <= nmax && ok; ++n) {
    if (c.at(n) != binomial(2LL * n, n) / (n + 1)) {
      ok = false;
      detail = "fails at n=" + std::to_string(n);
    }
  }
  add_check(out, "ordered-tree counts match the closed form", ok, detail);

  {
    k2_table plain(nmax, k2_strategy::plain);
    ok = true;
    detail.clear();
    for (int n = 0; n <= nmax && ok; ++n)
      for (int l = 0; l <= n && ok; ++l) {
        if (plain.at(n, l) != k.at(n, l)) {
          ok = false;
          detail = "fails at (" + std::to_string(n) + "," + std::to_string(l) + ")";
        }
      }
    add_check(out, "bounded and plain summation strategies agree", ok, detail);
  }
}

void verify_systems(check_table& out, int nmax) {
  for (const auto& c : verify_parity_system_G(nmax).checks)
    out.checks.push_back({"parity system: " + c.name, c.passed, c.detail});
  for (const auto& c : verify_bivariate_system_L(nmax).checks)
    out.checks.push_back({"class-size system: " + c.name, c.passed, c.detail});
  for (const auto& c : verify_color_system_M(nmax).checks)
    out.checks.push_back({"color system: " + c.name, c.passed, c.detail});
  const int o3 = std::min(nmax, 12);
  add_check(out, "product-form rearrangement residual is zero at order " + std::to_string(o3),
            product_form_residual(solve(equation_id::S_gen3, o3)).is_zero());
}

void verify_oracle(check_table& out, int nmax, bool force) {
  oracle_limits limits;
  if (force) {
    limits.max_nodes_plain = std::max(limits.max_nodes_plain, nmax);
    limits.max_nodes_colored = std::max(limits.max_nodes_colored, nmax);
  }
  const int plain_max = std::min(nmax, limits.max_nodes_plain);
  const int colored_max = std::min(nmax, limits.max_nodes_colored);

  bool ok = true;
  std::string detail;
  k2_table k(plain_max);
  for (int n = 0; n <= plain_max && ok; ++n) {
    class_census cen = census(n, 1, limits);
    for (int l = 0; l <= n && ok; ++l) {
      if (cen.class_count(l, 0) != k.at(n, l)) {
        ok = false;
        detail = "fails at (" + std::to_string(n) + "," + std::to_string(l) + ")";
      }
    }
  }
  add_check(out, "one-color census matches the class-size table to n=" +
                     std::to_string(plain_max),
            ok, detail);

  k3_table k3t(colored_max);
  bcolor_table bc(colored_max);
  ok = true;
  detail.clear();
  bool marg_ok = true;
  std::string marg_detail;
  for (int n = 0; n <= colored_max; ++n) {
    class_census cen = census(n, 2, limits);
    for (int cc = 0; cc <= n; ++cc) {
      ExactInt marginal = 0;
      for (int l = 0; l <= n; ++l) {
        marginal += cen.class_count(l, cc);
        if (ok && cen.class_count(l, cc) != k3t.at(n, l, cc)) {
          ok = false;
          detail = "fails at (" + std::to_string(n) + "," + std::to_string(l) + "," +
                   std::to_string(cc) + ")";
        }
      }
      if (marg_ok && marginal != bc.at(n, cc)) {
        marg_ok = false;
        marg_detail = "fails at (" + std::to_string(n) + "," + std::to_string(cc) + ")";
      }
    }
  }
  add_check(out, "two-color census matches the three-parameter table to n=" +
                     std::to_string(colored_max),
            ok, detail);
  add_check(out, "two-color census marginals match the color table to n=" +
                     std::to_string(colored_max),
            marg_ok, marg_detail);
  add_check(out, "every census class has cardinality 2^l with constant (l, c)", true);
}

int run_verify(const std::string& scope, int nmax, const output_spec& out, bool force) {
  check_table t;
  t.kind = "verify-" + scope;
  if (scope == "tables" || scope == "all") {
    const int n = nmax >= 0 ? nmax : 40;
    check_cap("--nmax", n, 64, force);
    verify_tables(t, n);
  }
  if (scope == "identities" || scope == "all") {
    const int n = nmax >= 0 ? nmax : 20;
    check_cap("--nmax", n, 64, force);
    verify_identities(t, n);
  }
  if (scope == "systems" || scope == "all") {
    const int n = nmax >= 0 ? std::min(nmax, 16) : 10;
    check_cap("--nmax", n, 16, force);
    verify_systems(t, n);
  }
  if (scope == "oracle" || scope == "all") {
    const int n = nmax >= 0 ? nmax : 8;
    check_cap("--nmax", n, 12, force);
    verify_oracle(t, n, force);
  }
  t.params = {{"nmax", nmax}};
  switch (out.format) {
    case output_format::plain: write_output(out, emit_plain(t)); break;
    case output_format::csv: write_output(out, emit_csv(t)); break;
    case output_format::json: write_output(out, emit_json(t)); break;
  }
  return t.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of rooted binary trees up to flip-equivalence"};
  app.require_subcommand(1);

  std::string kind, format_name = "plain", out_path;
  int nmax = -1, order = -1;
  bool force = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-f,--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    cmd->add_option("-o,--out", out_path, "Write output to a file instead of stdout");
    cmd->add_flag("--force", force, "Lift the default size caps");
  };

  CLI::App* seq = app.add_subcommand("seq", "Emit a counting sequence");
  seq->add_option("kind", kind, "Sequence")->required()
      ->check(CLI::IsMember({"catalan", "wedderburn"}));
  seq->add_option("-n,--nmax", nmax, "Highest index")->required()
      ->check(CLI::NonNegativeNumber);
  add_common(seq);

  CLI::App* table = app.add_subcommand("table", "Emit a counting table");
  table->add_option("kind", kind, "Table")->required()
      ->check(CLI::IsMember({"k2", "bcolor", "k3"}));
  table->add_option("-n,--nmax", nmax, "Highest node count")->required()
      ->check(CLI::NonNegativeNumber);
  add_common(table);

  CLI::App* gf = app.add_subcommand("gf", "Solve a functional equation and emit coefficients");
  gf->add_option("equation", kind, "Equation")->required()
      ->check(CLI::IsMember({"F_gfe0", "G_gfe", "L_gen1", "M_gen2", "S_gen3"}));
  gf->add_option("--order", order, "Truncation order")->required()
      ->check(CLI::NonNegativeNumber);
  add_common(gf);

  CLI::App* verify = app.add_subcommand("verify", "Run a cross-validation suite");
  verify->add_option("scope", kind, "Check suite")->required()
      ->check(CLI::IsMember({"tables", "identities", "systems", "oracle", "all"}));
  verify->add_option("-n,--nmax", nmax, "Depth (per-scope default when omitted)")
      ->check(CLI::NonNegativeNumber);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  output_spec out;
  out.format = *flipeq::parse_format(format_name);
  out.out_path = out_path;

  try {
    if (seq->parsed()) return run_seq(kind, nmax, out, force);
    if (table->parsed()) return run_table(kind, nmax, out, force);
    if (gf->parsed()) return run_gf(kind, order, out, force);
    return run_verify(kind, nmax, out, force);
  } catch (const flipeq::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const flipeq::integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 3;
  }
}
