#include "fermat/app/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace fermat {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json rational_json(const Rational& value) {
  Rational x = value;
  x.canonicalize();
  if (x.get_den() == 1) return integer_json(x.get_num());
  return x.get_str();
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const DecompositionLedger& ledger) {
  Json factors = Json::array();
  for (const auto& f : ledger.factors)
    factors.push_back({{"label", f.label}, {"dimension", f.dimension}, {"cm_modulus", f.cm_modulus}});
  return {{"m", ledger.m}, {"genus", ledger.genus()}, {"multiplicity", ledger.multiplicity}, {"factors", std::move(factors)}};
}

Json to_json(const ProjectionVerdict& v) {
  return {{"target", v.target}, {"verdict", to_string(v.kind)}, {"degree", integer_json(v.degree)}, {"summary", v.describe()}};
}

Json to_json(const std::vector<CensusRow>& census) {
  Json rows = Json::array();
  for (const auto& r : census) {
    Json row = {{"d", r.d}, {"hodge", r.hodge}, {"exceptional", r.exceptional}};
    row["quotient_dim"] = r.quotient_dim < 0 ? Json(nullptr) : Json(r.quotient_dim);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const TorusEmbedding& t) {
  return {{"kind", "monomial-cut"},
          {"g", t.g},
          {"free_rank", t.free_rank},
          {"free_coordinates", t.free_coordinates},
          {"parametrization", matrix_json(t.parametrization)},
          {"relations", matrix_json(t.relations.basis())}};
}

Json to_json(const MomentReport& r) {
  Json moments = Json::array();
  for (const auto& x : r.moments) moments.push_back(rational_json(x));
  return {{"field", r.field}, {"components", r.components}, {"moments", std::move(moments)}};
}

std::string format_float(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

Json to_json(const NumericalMoments& r) {
  Json moments = Json::array();
  for (auto x : r.moments) moments.push_back(format_float(x));
  Json sums = Json::array();
  for (const auto& s : r.power_sums) sums.push_back(integer_json(s));
  Json out = {{"m", r.m},
              {"bound", r.bound},
              {"selector", std::string(to_string(r.selector))},
              {"range_size", r.range_size},
              {"primes", r.primes},
              {"moments", std::move(moments)},
              {"power_sums", std::move(sums)}};
  if (r.selector == Selector::TorsionFree) out["note"] = "torsion-free primes stand in for primes split in the connectedness field";
  return out;
}

Json to_json(const SplitTestResult& r) {
  Json out = {{"p", r.p}, {"torsion_free", r.torsion_free}, {"relation_rank", r.relation_rank}};
  if (r.witness) {
    out["witness"] = *r.witness;
    out["witness_root"] = {{"sign", r.witness_root->first}, {"zeta_power", r.witness_root->second}};
  }
  return out;
}

Json to_json(const SplitDensity& d, bool with_results) {
  Json out = {{"m", d.m},
              {"bound", d.bound},
              {"primes", d.results.size()},
              {"torsion_free", d.torsion_free()},
              {"fraction", format_float(d.fraction())}};
  if (with_results) {
    Json rows = Json::array();
    for (const auto& r : d.results) rows.push_back(to_json(r));
    out["results"] = std::move(rows);
  }
  return out;
}

namespace {

bool numeric_cell(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '.' || ch == 'e' || ch == '%' || ch == '/'))
      return false;
  return true;
}

}  // namespace

std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  std::vector<bool> right(header.size(), true);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size() && j < right.size(); ++j)
      if (!r[j].empty() && !numeric_cell(r[j])) right[j] = false;
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size() && j < width.size(); ++j) width[j] = std::max(width[j], r[j].size());
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& r) {
    std::string line;
    for (std::size_t j = 0; j < width.size(); ++j) {
      const std::string cell = j < r.size() ? r[j] : "";
      const std::string pad(width[j] - cell.size(), ' ');
      if (j > 0) line += "  ";
      line += (j == 0 || !right[j]) ? cell + pad : pad + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& r : rows) emit(r);
  return os.str();
}

std::string ledger_table(const DecompositionLedger& ledger) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : ledger.factors) rows.push_back({f.label, std::to_string(f.dimension), std::to_string(f.cm_modulus)});
  std::string out = format_table({"factor", "dim", "CM field"}, rows);
  if (ledger.multiplicity > 1) out += "each factor appears " + std::to_string(ledger.multiplicity) + " times\n";
  return out;
}

std::string census_table(const std::vector<CensusRow>& census) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : census)
    rows.push_back({std::to_string(r.d), std::to_string(r.hodge), std::to_string(r.exceptional),
                    r.quotient_dim < 0 ? "-" : std::to_string(r.quotient_dim)});
  return format_table({"d", "hodge", "exceptional", "quotient"}, rows);
}

std::string torus_table(const TorusEmbedding& t) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < t.parametrization.rows(); ++i) {
    std::vector<std::string> row{"u" + std::to_string(i + 1)};
    for (std::size_t j = 0; j < t.parametrization.cols(); ++j) row.push_back(t.parametrization(i, j).get_str());
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"coord"};
  for (int j = 0; j < t.free_rank; ++j) header.push_back("t" + std::to_string(j + 1));
  return format_table(header, rows);
}

std::string moments_table(const std::vector<std::pair<std::string, std::vector<std::string>>>& rows, int max_n, bool odd) {
  std::vector<std::string> header{""};
  std::vector<int> ns;
  for (int n = 1; n <= max_n; ++n)
    if (odd || n % 2 == 0) {
      ns.push_back(n);
      header.push_back("M" + std::to_string(n));
    }
  std::vector<std::vector<std::string>> body;
  for (const auto& [label, values] : rows) {
    std::vector<std::string> row{label};
    for (int n : ns) row.push_back(static_cast<std::size_t>(n) < values.size() ? values[static_cast<std::size_t>(n)] : "");
    body.push_back(std::move(row));
  }
  return format_table(header, body);
}

std::string numerical_table(const NumericalMoments& r) {
  std::vector<std::string> values;
  for (auto x : r.moments) values.push_back(format_float(x));
  std::string out = "m=" + std::to_string(r.m) + " p<" + std::to_string(r.bound) + " selector=" + std::string(to_string(r.selector)) +
                    " primes=" + std::to_string(r.primes) + "\n";
  return out + moments_table({{"a1", values}}, static_cast<int>(r.moments.size()) - 1, true);
}

}  // namespace fermat
