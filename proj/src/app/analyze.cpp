#include "fermat/app/analyze.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "fermat/algebra/arith.hpp"
#include "fermat/app/trace_cache.hpp"
#include "fermat/cm/cm_type.hpp"

namespace fermat {
namespace {

void add_check(DegeneracyReport& r, std::string name, Module module, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), module, passed, std::move(detail)});
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "+") + s;
  return out;
}

// Exact values the analysis must reproduce for specific m.
struct Fixture {
  std::vector<std::pair<std::vector<std::string>, std::string>> verdicts;
  long exceptional_codim2 = -1;
  int free_rank = -1;
  std::vector<long> identity_even;  // M_2, M_4, ...
  std::vector<long> group_even;
};

const std::map<int, Fixture>& fixtures() {
  static const std::map<int, Fixture> table = {
      {9, {{{{"X"}, "ISOMORPHISM"}}, 2, 3, {8, 216, 8000, 343000, 16003008}, {2, 38, 1340, 57190, 2667252, 131481812}}},
      {15, {{{{"X"}, "ISOGENY(2)"}}, 12, 4, {14, 834, 78260}, {}}},
      {18, {{}, -1, -1, {32, 3456, 512000, 87808000, 16387080192L, 3231289442304L}, {}}},
      {21, {{{{"X"}, "NEITHER"}, {{"X", "J3"}, "ISOMORPHISM"}}, -1, 6, {}, {}}},
      {27, {{{{"X2"}, "ISOMORPHISM"}}, 8, 9, {}, {}}},
  };
  return table;
}

bool even_moments_match(const MomentReport& r, const std::vector<long>& expected, std::string& detail) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const std::size_t n = 2 * (i + 1);
    if (n >= r.moments.size()) return true;  // beyond the configured max moment
    if (r.moments[n] != Rational(expected[i])) {
      detail = "M" + std::to_string(n) + " = " + r.moments[n].get_str() + ", expected " + std::to_string(expected[i]);
      return false;
    }
  }
  return true;
}

void run_fixtures(DegeneracyReport& r) {
  auto it = fixtures().find(r.config.m);
  if (it == fixtures().end()) return;
  const Fixture& fx = it->second;
  const int m = r.config.m;
  for (const auto& [target, expected] : fx.verdicts) {
    std::string got = "missing";
    for (const auto& v : r.verdicts)
      if (v.target == target) got = v.describe();
    add_check(r, "fixture: verdict " + joined(target) + " for m=" + std::to_string(m), Module::Mt, got == expected,
              got + (got == expected ? "" : ", expected " + expected));
  }
  if (fx.exceptional_codim2 >= 0) {
    const long got = static_cast<long>(r.exceptional_codim2.size());
    add_check(r, "fixture: exceptional codim-2 count for m=" + std::to_string(m), Module::Hodge, got == fx.exceptional_codim2,
              std::to_string(got));
  }
  if (fx.free_rank >= 0)
    add_check(r, "fixture: torus rank for m=" + std::to_string(m), Module::Hodge, r.torus.free_rank == fx.free_rank,
              std::to_string(r.torus.free_rank));
  if (!fx.identity_even.empty()) {
    std::string detail;
    add_check(r, "fixture: identity-component moments for m=" + std::to_string(m), Module::SatoTate,
              even_moments_match(r.identity, fx.identity_even, detail), detail);
  }
  if (!fx.group_even.empty()) {
    std::string detail;
    const bool ok = r.group && even_moments_match(*r.group, fx.group_even, detail);
    add_check(r, "fixture: component-group moments for m=" + std::to_string(m), Module::SatoTate, ok, detail);
  }
}

void run_frobenius(DegeneracyReport& r) {
  const AnalysisConfig& c = r.config;
  const int m = c.m;
  const auto dir = c.cache_path.empty() ? default_cache_dir() : c.cache_path;
  const CachedSweep sweep = cached_sweep(m, c.prime_bound, dir, c.sweep);

  const int g = curve_genus(m);
  std::size_t violations = 0;
  for (const auto& e : sweep.traces) {
    // |t| <= 2g sqrt(p)  <=>  t^2 <= 4 g^2 p
    const Integer t = e.t;
    if (t * t > Integer(4L * g * g) * Integer(static_cast<unsigned long>(e.p))) ++violations;
  }
  add_check(r, "Weil bound on every trace", Module::Frobenius, violations == 0,
            std::to_string(sweep.traces.size()) + " traces, " + std::to_string(violations) + " violations");

  r.numerical = numerical_moments(m, c.prime_bound, c.selector, sweep.traces, c.max_moment, c.sweep);

  const MomentReport* model = nullptr;
  if (c.selector == Selector::All && r.group) {
    model = &*r.group;
    r.numerical_model = "conjectural component group";
  } else if (c.selector != Selector::All) {
    model = &r.identity;
    r.numerical_model = "identity component";
  } else {
    r.numerical_model = "none";
  }
  if (model) {
    const long double tol = c.moment_tolerance_percent.get_d();
    for (int n = 1; n <= c.max_moment; ++n) {
      MomentComparison cmp;
      cmp.n = n;
      cmp.observed = r.numerical->moments[static_cast<std::size_t>(n)];
      cmp.model = model->moments[static_cast<std::size_t>(n)];
      if (n % 2 == 0) {
        const long double exact = cmp.model.get_d();
        cmp.deviation_percent = std::fabs(cmp.observed - exact) / exact * 100.0L;
      } else if (n + 1 <= c.max_moment) {
        const long double next = model->moments[static_cast<std::size_t>(n + 1)].get_d();
        cmp.deviation_percent = std::fabs(cmp.observed) / next * 100.0L;
      } else {
        continue;
      }
      cmp.within_tolerance = cmp.deviation_percent <= tol;
      r.comparisons.push_back(cmp);
    }
  }
  r.split = split_density(m, std::min<std::uint64_t>(c.prime_bound, analyze_split_density_bound), c.sweep);
}

}  // namespace

std::vector<std::vector<std::string>> default_verdict_targets(const DecompositionLedger& ledger) {
  const auto& f = ledger.factors;
  std::vector<std::vector<std::string>> targets;
  for (const auto& x : f) targets.push_back({x.label});
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) targets.push_back({f[i].label, f[j].label});
  if (f.size() > 2) {
    std::vector<std::string> all;
    for (const auto& x : f) all.push_back(x.label);
    targets.push_back(std::move(all));
  }
  return targets;
}

bool DegeneracyReport::consistent() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int failure_exit_code(Module module) { return 10 + static_cast<int>(module); }
int error_exit_code(Module module) { return 20 + static_cast<int>(module); }

int exit_code(const DegeneracyReport& report) {
  for (const auto& c : report.checks)
    if (!c.passed) return failure_exit_code(c.module);
  return 0;
}

DegeneracyReport analyze(const AnalysisConfig& config) {
  config.validate();
  DegeneracyReport r;
  r.config = config;
  const int m = config.m;

  r.ledger = decompose_jacobian(m);
  r.odd_part = m % 2 == 0 ? m / 2 : m;
  add_check(r, "ledger dimensions sum to the genus", Module::Cm, r.ledger.genus() == curve_genus(m),
            std::to_string(r.ledger.genus()) + " vs " + std::to_string(curve_genus(m)));
  bool cm_ok = true;
  for (const auto& f : r.ledger.factors) {
    const CMType phi = prym_cm_type(f.cm_modulus);
    cm_ok = cm_ok && phi.satisfies_cm_axiom() && is_primitive(phi) && reflex_type(phi).satisfies_cm_axiom();
  }
  add_check(r, "factor CM types are primitive CM types", Module::Cm, cm_ok);

  const ProjectionMatrix pm = build_projection_matrix(m, r.ledger);
  r.mt_rank = mt_rank(pm);
  for (const auto& target : default_verdict_targets(r.ledger)) r.verdicts.push_back(classify_projection(pm, target));

  const int odd = r.odd_part;
  r.census = exceptional_census(odd);
  if (curve_genus(odd) >= 2) r.exceptional_codim2 = enumerate_hodge_cycles(odd, 2).exceptional;
  r.torus = hodge_torus(odd);
  r.fixed_monomials_match = fixed_monomials_match(odd, r.torus.parametrization);
  add_check(r, "torus fixes exactly the Hodge monomials", Module::Hodge, r.fixed_monomials_match);
  add_check(r, "torus rank + 1 = Mumford-Tate rank", Module::Hodge, static_cast<std::size_t>(r.torus.free_rank) + 1 == r.mt_rank,
            std::to_string(r.torus.free_rank) + " + 1 vs " + std::to_string(r.mt_rank));
  if (!arith::is_prime(static_cast<std::uint64_t>(odd)) && odd > 1) {
    long total = 0;
    for (const auto& row : r.census) total += row.exceptional;
    add_check(r, "odd composite m has exceptional Hodge cycles", Module::Hodge, total > 0, std::to_string(total) + " exceptional");
  }

  r.st_torus = sato_tate_torus(m);
  r.identity = identity_moments(r.st_torus, config.max_moment);
  if (m == 9) r.group = group_moments(r.st_torus, gamma_j9(), config.max_moment);
  bool st_ok = r.identity.moments.at(0) == 1;
  for (std::size_t n = 1; n < r.identity.moments.size(); n += 2) st_ok = st_ok && r.identity.moments[n] == 0;
  // repeated isogeny factors move together on the torus, so M2 picks up the multiplicity
  if (r.identity.moments.size() > 2) st_ok = st_ok && r.identity.moments[2] == 2 * curve_genus(m) * r.ledger.multiplicity;
  add_check(r, "identity moments: M0 = 1, odd moments 0, M2 = 2g times multiplicity", Module::SatoTate, st_ok);

  run_fixtures(r);
  if (config.prime_bound > 0 && m % 2 == 1) run_frobenius(r);
  return r;
}

Json to_json(const DegeneracyReport& r) {
  const AnalysisConfig& c = r.config;
  Json out;
  out["format_version"] = DegeneracyReport::format_version;
  out["m"] = c.m;
  out["config"] = {{"prime_bound", c.prime_bound},
                   {"max_moment", c.max_moment},
                   {"tolerance_percent", rational_json(c.moment_tolerance_percent)},
                   {"selector", std::string(to_string(c.selector))},
                   {"range_size", c.sweep.range_size}};
  out["ledger"] = to_json(r.ledger);

  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  out["mumford_tate"] = {{"rank", r.mt_rank}, {"verdicts", std::move(verdicts)}};

  Json exc = Json::array();
  for (const auto& h : r.exceptional_codim2) exc.push_back(h.to_string());
  out["hodge"] = {{"odd_part", r.odd_part},
                  {"census", to_json(r.census)},
                  {"exceptional_codim2", std::move(exc)},
                  {"torus", to_json(r.torus)},
                  {"fixed_monomials_match", r.fixed_monomials_match}};

  Json st = {{"torus_rank", r.st_torus.free_rank}, {"identity", to_json(r.identity)}};
  if (r.group) {
    st["group"] = to_json(*r.group);
    st["group"]["model"] = "conjectural";
  } else {
    st["group"] = nullptr;
  }
  out["sato_tate"] = std::move(st);

  if (r.numerical) {
    Json cmp = Json::array();
    for (const auto& x : r.comparisons)
      cmp.push_back({{"n", x.n},
                     {"observed", format_float(x.observed)},
                     {"model", rational_json(x.model)},
                     {"deviation_percent", format_float(x.deviation_percent, 4)},
                     {"within_tolerance", x.within_tolerance}});
    out["frobenius"] = {{"character_convention", "chi(g^k) = zeta_m^k, g the smallest primitive root mod p"},
                        {"root_convention", "lambda_a = -chi2(-1) J(chi^a, chi2)"},
                        {"numerical", to_json(*r.numerical)},
                        {"model", r.numerical_model},
                        {"comparisons", std::move(cmp)},
                        {"split_density", r.split ? to_json(*r.split, false) : Json(nullptr)}};
  } else {
    out["frobenius"] = nullptr;
  }

  Json checks = Json::array();
  for (const auto& ch : r.checks)
    checks.push_back({{"name", ch.name}, {"module", std::string(to_string(ch.module))}, {"passed", ch.passed}, {"detail", ch.detail}});
  out["checks"] = std::move(checks);
  out["consistent"] = r.consistent();
  return out;
}

std::string to_table(const DegeneracyReport& r) {
  std::ostringstream os;
  const int m = r.config.m;
  os << "J_" << m << "  genus " << r.ledger.genus() << "\n\n";
  os << ledger_table(r.ledger) << '\n';

  std::vector<std::vector<std::string>> vrows;
  for (const auto& v : r.verdicts) vrows.push_back({joined(v.target), v.describe()});
  os << "Mumford-Tate rank " << r.mt_rank << "\n" << format_table({"target", "verdict"}, vrows) << '\n';

  os << "Hodge census (J_" << r.odd_part << ")\n" << census_table(r.census);
  if (!r.exceptional_codim2.empty()) {
    os << "exceptional codim 2:";
    for (const auto& h : r.exceptional_codim2) os << ' ' << h.to_string();
    os << '\n';
  }
  os << "\ntorus rank " << r.torus.free_rank << (r.fixed_monomials_match ? " (fixed monomials match)" : " (fixed monomials DIFFER)") << '\n'
     << torus_table(r.torus) << '\n';

  auto values = [](const MomentReport& mr) {
    std::vector<std::string> v;
    for (const auto& x : mr.moments) v.push_back(x.get_str());
    return v;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> rows{{"identity", values(r.identity)}};
  if (r.group) rows.emplace_back("group", values(*r.group));
  if (r.numerical) {
    std::vector<std::string> v;
    for (auto x : r.numerical->moments) v.push_back(format_float(x));
    rows.emplace_back("a1", v);
  }
  os << "moments\n" << moments_table(rows, r.config.max_moment, r.numerical.has_value()) << '\n';
  if (r.numerical)
    os << "numerical: p<" << r.numerical->bound << " selector=" << to_string(r.numerical->selector) << " primes=" << r.numerical->primes
       << " model=" << r.numerical_model << '\n';
  if (r.split) os << "split density: " << r.split->torsion_free() << "/" << r.split->results.size() << " = " << format_float(r.split->fraction()) << " (p<" << r.split->bound << ")\n";
  if (!r.comparisons.empty()) {
    std::vector<std::vector<std::string>> crows;
    for (const auto& c : r.comparisons)
      crows.push_back({"M" + std::to_string(c.n), format_float(c.observed), c.model.get_str(), format_float(c.deviation_percent, 4) + "%",
                       c.within_tolerance ? "ok" : "outside"});
    os << format_table({"moment", "observed", "model", "deviation", ""}, crows) << '\n';
  }

  std::vector<std::vector<std::string>> krows;
  for (const auto& c : r.checks) krows.push_back({c.passed ? "PASS" : "FAIL", std::string(to_string(c.module)), c.name, c.detail});
  os << format_table({"status", "module", "check", "detail"}, krows);
  return os.str();
}

}  // namespace fermat
