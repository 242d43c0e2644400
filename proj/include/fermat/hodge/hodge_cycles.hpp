#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermat {

/// omega_{a_1} ^ ... ^ omega_{a_d} ^ conj(omega_{b_1}) ^ ... ^ conj(omega_{b_d}).
struct HodgeMonomial {
  int d = 0;
  std::vector<int> a;  // strictly increasing, in 1..g
  std::vector<int> b;

  bool is_divisor_type() const { return a == b; }
  std::string to_string() const;  // "(1,4|2,3)"
  friend auto operator<=>(const HodgeMonomial&, const HodgeMonomial&) = default;
};

struct HodgeSpaceReport {
  int m = 0;
  int d = 0;
  std::vector<HodgeMonomial> all;  // lexicographic
  std::vector<HodgeMonomial> divisor_generated;
  std::vector<HodgeMonomial> exceptional;
  long quotient_dim = 0;
};

struct CensusRow {
  int d = 0;
  long hodge = 0;
  long exceptional = 0;
  long quotient_dim = 0;  // -1 when skipped for size
};

/// Residue-sum signature s(a)_t = sum_i rho(t a_i) over the units t of Z/mZ, ascending.
std::vector<int> hodge_signature(int m, const std::vector<int>& indices);

/// sum_i rho(t a_i) + sum_j rho(-t b_j) = d m for every unit t.
bool is_hodge(int m, const HodgeMonomial& mono);

/// Wedge product; nullopt when the factors share an index.  The sign is that
/// of reordering into (a u a' | b u b') form.
std::optional<std::pair<int, HodgeMonomial>> wedge(const HodgeMonomial& x, const HodgeMonomial& y);

/// Odd m >= 3; CODIM_OUT_OF_RANGE unless 0 <= d <= g.
HodgeSpaceReport enumerate_hodge_cycles(int m, int d);

/// Rows for d = 1..g.  quotient_dim is computed only when the codimension
/// has at most max_pairs Hodge monomials.
std::vector<CensusRow> exceptional_census(int m, long max_pairs = 2'000'000);

/// dim of sum_{r=1}^{d-1} B^r . B^{d-r} inside B^d, by rank of the wedge products
/// written in the monomial basis.
std::size_t product_span_dim(int m, int d);

}  // namespace fermat
