#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fermat/cm/decomposition.hpp"
#include "fermat/frobenius/sweep.hpp"
#include "fermat/hodge/hodge_cycles.hpp"
#include "fermat/hodge/torus.hpp"
#include "fermat/mt/projection.hpp"
#include "fermat/st/moments.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, everything else a string.
Json integer_json(const Integer& x);
Json rational_json(const Rational& x);
Json matrix_json(const IntegerMatrix& m);

Json to_json(const DecompositionLedger& ledger);
Json to_json(const ProjectionVerdict& verdict);
Json to_json(const std::vector<CensusRow>& census);
Json to_json(const TorusEmbedding& torus);
Json to_json(const MomentReport& moments);
/// Floats are printed with 6 significant digits so that output is stable.
Json to_json(const NumericalMoments& moments);
Json to_json(const SplitTestResult& result);
Json to_json(const SplitDensity& density, bool with_results);

std::string format_float(long double x, int digits = 6);

/// First column and text columns left-aligned, numeric columns right-aligned.
std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

std::string ledger_table(const DecompositionLedger& ledger);
std::string census_table(const std::vector<CensusRow>& census);
std::string torus_table(const TorusEmbedding& torus);
/// One row per report, columns M_2, M_4, ... (odd columns too when nonzero).
std::string moments_table(const std::vector<std::pair<std::string, std::vector<std::string>>>& rows, int max_n, bool odd);
std::string numerical_table(const NumericalMoments& moments);

}  // namespace fermat
