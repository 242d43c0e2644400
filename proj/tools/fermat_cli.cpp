// fermat: degeneracy analysis of the Jacobians of y^2 = x^m - 1.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fermat/algebra/arith.hpp"
#include "fermat/app/analyze.hpp"
#include "fermat/app/trace_cache.hpp"
#include "fermat/cm/cm_type.hpp"

using namespace fermat;

namespace {

struct Output {
  bool json = false;
  void emit(const Json& j, const std::string& table) const {
    if (json) std::cout << j.dump(2) << '\n';
    else std::cout << table;
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int run_cm(const Output& out, int m) {
  const auto ledger = decompose_jacobian(m);
  Json factors = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : ledger.factors) {
    const CMType phi = prym_cm_type(f.cm_modulus);
    const CMType reflex = reflex_type(phi);
    factors.push_back({{"label", f.label},
                       {"cm_modulus", f.cm_modulus},
                       {"cm_type", phi.members},
                       {"reflex_type", reflex.members},
                       {"primitive", is_primitive(phi)},
                       {"stabilizer", stabilizer(phi)}});
    rows.push_back({f.label, std::to_string(f.cm_modulus), join_ints(phi.members), join_ints(reflex.members),
                    is_primitive(phi) ? "yes" : "no"});
  }
  Json j = to_json(ledger);
  j["cm_types"] = std::move(factors);
  out.emit(j, ledger_table(ledger) + "\n" + format_table({"factor", "d", "CM type", "reflex", "primitive"}, rows));
  return 0;
}

int run_mt(const Output& out, int m, const std::vector<std::string>& target, bool with_matrix) {
  const auto pm = build_projection_matrix(m);
  auto targets = default_verdict_targets(pm.ledger);
  if (!target.empty()) targets = {target};
  Json verdicts = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : targets) {
    const auto v = classify_projection(pm, t);
    verdicts.push_back(to_json(v));
    std::string name;
    for (const auto& s : t) name += (name.empty() ? "" : "+") + s;
    rows.push_back({name, v.describe()});
  }
  Json j = {{"m", m}, {"rank", mt_rank(pm)}};
  if (with_matrix) {
    j["column_offsets"] = pm.column_offsets;
    j["matrix"] = matrix_json(pm.M);
  }
  j["verdicts"] = std::move(verdicts);
  std::string table = "M (" + std::to_string(pm.M.rows()) + " x " + std::to_string(pm.M.cols()) + "), rank " + std::to_string(mt_rank(pm)) + "\n";
  for (std::size_t i = 0; i < pm.M.rows(); ++i) {
    for (std::size_t c = 0; c < pm.M.cols(); ++c) {
      for (std::size_t b = 1; b + 1 < pm.column_offsets.size(); ++b)
        if (pm.column_offsets[b] == c) table += " |";
      table += ' ' + pm.M(i, c).get_str();
    }
    table += '\n';
  }
  out.emit(j, table + "\n" + format_table({"target", "verdict"}, rows));
  return 0;
}

int run_hodge(const Output& out, int m, int d, bool embedding) {
  const auto census = exceptional_census(m);
  const auto torus = hodge_torus(m);
  const bool match = fixed_monomials_match(m, torus.parametrization);
  Json j = {{"m", m}, {"census", to_json(census)}};
  std::string table = census_table(census);
  if (d > 0) {
    const auto space = enumerate_hodge_cycles(m, d);
    Json exc = Json::array();
    table += "\nexceptional at d=" + std::to_string(d) + ":";
    for (const auto& h : space.exceptional) {
      exc.push_back(h.to_string());
      table += ' ' + h.to_string();
    }
    table += '\n';
    j["exceptional"] = {{"d", d}, {"cycles", std::move(exc)}, {"quotient_dim", space.quotient_dim}};
  }
  j["torus_rank"] = torus.free_rank;
  j["fixed_monomials_match"] = match;
  table += "\ntorus rank " + std::to_string(torus.free_rank) + (match ? " (fixed monomials match)\n" : " (fixed monomials DIFFER)\n");
  if (embedding) {
    j["embedding"] = to_json(torus);
    table += torus_table(torus);
  }
  out.emit(j, table);
  return 0;
}

ComponentRep read_gamma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  const Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_array()) throw Error(ErrorCode::FormatMismatch, path + ": expected a JSON array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::FormatMismatch, path + ": expected a JSON array of rows");
    std::vector<long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorCode::FormatMismatch, path + ": entries must be integers");
      r.push_back(x.get<long>());
    }
    if (r.size() != j.size()) throw Error(ErrorCode::FormatMismatch, path + ": matrix must be square");
    rows.push_back(std::move(r));
  }
  return ComponentRep::from_matrix(IntegerMatrix::from_rows(rows, rows.size()));
}

int run_st(const Output& out, int m, int max_n, bool with_gamma, const std::string& gamma_file) {
  const auto torus = sato_tate_torus(m);
  const auto id = identity_moments(torus, max_n);
  Json j = {{"m", m}, {"torus_rank", torus.free_rank}, {"identity", to_json(id)}};
  auto values = [](const MomentReport& r) {
    std::vector<std::string> v;
    for (const auto& x : r.moments) v.push_back(x.get_str());
    return v;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> rows{{"identity", values(id)}};
  std::optional<ComponentRep> rep;
  if (!gamma_file.empty()) {
    rep = read_gamma_file(gamma_file);
  } else if (with_gamma) {
    if (m != 9) throw Error(ErrorCode::InvalidConfig, "--with-gamma is only available for m = 9; use --gamma-file");
    rep = gamma_j9();
  }
  if (rep) {
    const auto group = group_moments(torus, *rep, max_n);
    Json cosets = Json::array();
    for (const auto& c : coset_moments(torus, *rep, max_n)) {
      cosets.push_back(to_json(c));
      rows.emplace_back(c.field, values(c));
    }
    j["cosets"] = std::move(cosets);
    j["group"] = to_json(group);
    j["group"]["model"] = "conjectural";
    rows.emplace_back("group", values(group));
  }
  out.emit(j, moments_table(rows, max_n, false));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degeneracy of the Jacobians of y^2 = x^m - 1"};
  app.require_subcommand(1);
  Output out;
  bool table = false;
  app.add_flag("--json", out.json, "JSON output");
  app.add_flag("--table", table, "aligned text output (default)");
  // output flags may also follow the subcommand
  app.fallthrough();

  int m = 0;
  std::uint64_t bound = 0;
  std::string selector = "all";
  std::string cache_dir;
  std::uint64_t range_size = SweepOptions{}.range_size;
  unsigned threads = 0;
  int max_n = 12;
  double tolerance = 2.0;
  int d = 2;
  std::vector<std::string> target;
  bool witnesses = false;
  bool with_matrix = false;
  bool embedding = false;
  bool with_gamma = false;
  std::string gamma_file;
  std::vector<std::string> inputs;
  std::string merged_path;

  auto add_sweep_opts = [&](CLI::App* s) {
    s->add_option("--cache-dir", cache_dir, "trace cache directory (default $FERMAT_CACHE_DIR)");
    s->add_option("--range-size", range_size, "prime range width for parallel sweeps")->check(CLI::PositiveNumber);
    s->add_option("--threads", threads, "worker threads, 0 for all cores");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one m");
  analyze_cmd->add_option("--m", m, "exponent")->required();
  analyze_cmd->add_option("--bound", bound, "prime bound for the Frobenius stage (0 skips it)");
  analyze_cmd->add_option("--selector", selector, "all | congruent | torsion-free");
  analyze_cmd->add_option("--tolerance", tolerance, "moment tolerance in percent");
  analyze_cmd->add_option("--max-moment,--max-n", max_n, "largest moment order");
  add_sweep_opts(analyze_cmd);

  auto* cm_cmd = app.add_subcommand("cm", "decomposition ledger and CM types");
  cm_cmd->add_option("--m", m, "exponent")->required();

  auto* mt_cmd = app.add_subcommand("mt", "projection matrix and verdicts");
  mt_cmd->add_option("--m", m, "exponent")->required();
  mt_cmd->add_option("--target", target, "factor labels, e.g. --target X J3");
  mt_cmd->add_flag("--matrix", with_matrix, "include the matrix in JSON output");

  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge census and torus");
  hodge_cmd->add_option("--m", m, "odd exponent")->required();
  hodge_cmd->add_option("--codim", d, "codimension whose exceptional cycles are listed (0 for none)");
  hodge_cmd->add_flag("--embedding", embedding, "include the torus parametrization");

  auto* st_cmd = app.add_subcommand("st-moments", "exact Sato-Tate moments");
  st_cmd->add_option("--m", m, "exponent")->required();
  st_cmd->add_option("--max-n", max_n, "largest moment order");
  st_cmd->add_flag("--with-gamma", with_gamma, "also average over the component group generated by gamma (m = 9)");
  st_cmd->add_option("--gamma-file", gamma_file, "JSON signed-permutation matrix used as component representative");

  auto* sweep_cmd = app.add_subcommand("sweep", "Frobenius traces into the cache");
  sweep_cmd->add_option("--m", m, "odd exponent")->required();
  sweep_cmd->add_option("--bound", bound, "primes below this bound")->required();
  add_sweep_opts(sweep_cmd);

  auto* num_cmd = app.add_subcommand("num-moments", "numerical a1 moments");
  num_cmd->add_option("--m", m, "odd exponent")->required();
  num_cmd->add_option("--bound", bound, "primes below this bound")->required();
  num_cmd->add_option("--selector", selector, "all | congruent | torsion-free");
  num_cmd->add_option("--max-n", max_n, "largest moment order");
  add_sweep_opts(num_cmd);

  auto* split_cmd = app.add_subcommand("split-density", "torsion-free fraction of p = 1 mod m");
  split_cmd->add_option("--m", m, "odd exponent")->required();
  split_cmd->add_option("--bound", bound, "primes below this bound")->required();
  split_cmd->add_flag("--witnesses", witnesses, "list every tested prime");
  add_sweep_opts(split_cmd);

  auto* merge_cmd = app.add_subcommand("cache-merge", "merge trace caches");
  merge_cmd->add_option("--out", merged_path, "merged cache file")->required();
  merge_cmd->add_option("inputs", inputs, "cache files")->required();

  CLI11_PARSE(app, argc, argv);
  if (table) out.json = false;

  SweepOptions sweep_opts{range_size, threads};
  const std::filesystem::path cache = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
  auto parse_sel = [&]() {
    auto s = parse_selector(selector);
    if (!s) throw Error(ErrorCode::InvalidConfig, "unknown selector '" + selector + "'");
    return *s;
  };

  try {
    if (*analyze_cmd) {
      AnalysisConfig config;
      config.m = m;
      config.prime_bound = bound;
      config.max_moment = max_n;
      // thousandths of a percent are kept exactly
      config.moment_tolerance_percent = Rational(std::lround(tolerance * 1000), 1000);
      config.moment_tolerance_percent.canonicalize();
      config.cache_path = cache;
      config.selector = parse_sel();
      config.sweep = sweep_opts;
      const auto report = analyze(config);
      out.emit(to_json(report), to_table(report));
      return exit_code(report);
    }
    if (*cm_cmd) return run_cm(out, m);
    if (*mt_cmd) return run_mt(out, m, target, with_matrix);
    if (*hodge_cmd) return run_hodge(out, m, d, embedding);
    if (*st_cmd) return run_st(out, m, max_n, with_gamma, gamma_file);
    if (*sweep_cmd) {
      const auto result = cached_sweep(m, bound, cache, sweep_opts);
      Json j = {{"m", m}, {"bound", bound}, {"traces", result.traces.size()}, {"reused", result.reused},
                {"computed", result.computed}, {"cache", cache_file(cache, m).string()}};
      out.emit(j, format_table({"m", "bound", "traces", "reused", "computed", "cache"},
                               {{std::to_string(m), std::to_string(bound), std::to_string(result.traces.size()),
                                 std::to_string(result.reused), std::to_string(result.computed), cache_file(cache, m).string()}}));
      return 0;
    }
    if (*num_cmd) {
      const auto sel = parse_sel();
      const auto traces = cached_sweep(m, bound, cache, sweep_opts);
      const auto r = numerical_moments(m, bound, sel, traces.traces, max_n, sweep_opts);
      out.emit(to_json(r), numerical_table(r));
      return 0;
    }
    if (*split_cmd) {
      const auto r = split_density(m, bound, sweep_opts);
      std::string t = "m=" + std::to_string(m) + " p<" + std::to_string(bound) + ": " + std::to_string(r.torsion_free()) + "/" +
                      std::to_string(r.results.size()) + " torsion-free, fraction " + format_float(r.fraction()) + "\n";
      if (witnesses)
        for (const auto& x : r.results) {
          t += std::to_string(x.p) + (x.torsion_free ? " torsion-free" : " torsion");
          if (x.witness_root) t += " root " + std::string(x.witness_root->first < 0 ? "-" : "") + "z^" + std::to_string(x.witness_root->second);
          t += '\n';
        }
      out.emit(to_json(r, witnesses), t);
      return 0;
    }
    if (*merge_cmd) {
      std::vector<TraceCache> caches;
      for (const auto& p : inputs) caches.push_back(read_trace_cache(p));
      const auto merged = merge_trace_caches(caches);
      write_trace_cache(merged_path, merged);
      out.emit({{"m", merged.m}, {"entries", merged.entries.size()}, {"out", merged_path}},
               "merged " + std::to_string(inputs.size()) + " caches: " + std::to_string(merged.entries.size()) + " entries -> " + merged_path + "\n");
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.module()) << "] " << e.what() << '\n';
    return error_exit_code(e.module());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
