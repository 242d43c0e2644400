#include "fermat/mt/projection.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "fermat/algebra/arith.hpp"
#include "fermat/algebra/lattice.hpp"
#include "fermat/algebra/normal_form.hpp"
#include "fermat/cm/cm_type.hpp"
#include "fermat/cm/galois.hpp"
#include "fermat/error.hpp"

namespace fermat {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Isomorphism: return "ISOMORPHISM";
    case VerdictKind::Isogeny: return "ISOGENY";
    case VerdictKind::Neither: return "NEITHER";
  }
  return "?";
}

std::string ProjectionVerdict::describe() const {
  if (kind == VerdictKind::Isogeny) return "ISOGENY(" + degree.get_str() + ")";
  return to_string(kind);
}

std::vector<int> projection_column(int m, int d, int b) {
  const CMType reflex = reflex_type(prym_cm_type(d));
  const long binv = arith::inverse_mod(b, d);
  std::vector<int> col;
  for (auto j : arith::units(m)) col.push_back(reflex.contains(arith::mod(j * binv, d)) ? 1 : 0);
  return col;
}

ProjectionMatrix build_projection_matrix(int m, const DecompositionLedger& ledger) {
  const int odd = m % 2 == 0 ? m / 2 : m;
  ProjectionMatrix p;
  p.m = odd;
  p.ledger = ledger;
  const GaloisData gal(odd);
  std::size_t offset = 0;
  for (const auto& f : ledger.factors) {
    if (f.cm_modulus < 3 || odd % f.cm_modulus != 0)
      throw Error(ErrorCode::LedgerMismatch, "factor " + f.label + " has CM modulus not dividing m");
    const auto chars = arith::units(f.cm_modulus);
    IntegerMatrix block(gal.size(), chars.size());
    for (std::size_t c = 0; c < chars.size(); ++c) {
      const auto col = projection_column(odd, f.cm_modulus, static_cast<int>(chars[c]));
      for (std::size_t r = 0; r < col.size(); ++r) block(r, c) = col[r];
    }
    p.column_offsets.push_back(offset);
    offset += chars.size();
    p.block_characters.emplace_back(chars.begin(), chars.end());
    p.blocks.push_back(std::move(block));
  }
  p.column_offsets.push_back(offset);
  p.M = IntegerMatrix::hconcat(p.blocks);
  return p;
}

ProjectionMatrix build_projection_matrix(int m) { return build_projection_matrix(m, decompose_jacobian(m)); }

namespace {

ProjectionVerdict verdict_from_index(const std::vector<std::string>& target, const std::optional<Integer>& index) {
  ProjectionVerdict v;
  v.target = target;
  if (!index) {
    v.kind = VerdictKind::Neither;
    v.degree = 0;
  } else if (*index == 1) {
    v.kind = VerdictKind::Isomorphism;
  } else {
    v.kind = VerdictKind::Isogeny;
    v.degree = *index;
  }
  return v;
}

std::vector<std::size_t> target_columns(const ProjectionMatrix& p, const std::vector<std::string>& target) {
  if (target.empty()) throw Error(ErrorCode::LedgerMismatch, "empty projection target");
  std::vector<std::size_t> cols;
  for (const auto& label : target) {
    const std::size_t b = p.block_of(label);
    for (std::size_t c = p.column_offsets[b]; c < p.column_offsets[b + 1]; ++c) cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

// For m an odd prime power, the column of character b in the block of
// Q(zeta_d) equals theta_m * b * (N_H - c(1 + [-1])) with c = (m/d - 1)/2,
// theta_m the reflex indicator of the top block.  Returns coefficients over
// the top block's columns, or nullopt when the identity does not verify.
std::optional<IntVector> top_block_certificate(const ProjectionMatrix& p, std::size_t top, std::size_t block,
                                               std::size_t c) {
  const int m = p.m;
  const int d = p.ledger.factors[block].cm_modulus;
  const auto& chars = p.block_characters[top];
  const GaloisData gal(m);
  IntVector x(chars.size());
  const long b = p.block_characters[block][c];
  long lift = b;
  while (std::gcd(lift, static_cast<long>(m)) != 1) lift += d;
  const long cst = (m / d - 1) / 2;
  for (int h : gal.subgroup_for(d)) x[static_cast<std::size_t>(gal.index_of(lift * h))] += 1;
  x[static_cast<std::size_t>(gal.index_of(lift))] -= cst;
  x[static_cast<std::size_t>(gal.index_of(-lift))] -= cst;

  const IntegerMatrix& mx = p.blocks[top];
  const IntegerMatrix& mb = p.blocks[block];
  for (std::size_t r = 0; r < mx.rows(); ++r) {
    Integer acc = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (sgn(x[k]) != 0 && sgn(mx(r, k)) != 0) acc += x[k] * mx(r, k);
    if (acc != mb(r, c)) return std::nullopt;
  }
  return x;
}

// Exact containment of every non-target column in the span of the top block,
// witnessed by verified integer combinations.
bool certified_isomorphism(const ProjectionMatrix& p, const std::vector<std::string>& target) {
  if (arith::prime_power(static_cast<std::uint64_t>(p.m)).first == 0) return false;
  std::optional<std::size_t> top;
  for (const auto& label : target) {
    const std::size_t b = p.block_of(label);
    if (p.ledger.factors[b].cm_modulus == p.m) top = b;
  }
  if (!top) return false;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (std::find(target.begin(), target.end(), p.ledger.factors[b].label) != target.end()) continue;
    for (std::size_t c = 0; c < p.blocks[b].cols(); ++c)
      if (!top_block_certificate(p, *top, b, c)) return false;
  }
  return true;
}

}  // namespace

ProjectionVerdict classify_projection(const ProjectionMatrix& p, const std::vector<std::string>& target) {
  const auto cols = target_columns(p, target);
  if (certified_isomorphism(p, target)) return verdict_from_index(target, Integer(1));
  const IntegerMatrix mt = p.M.transpose();
  const Lattice all = Lattice::from_generators(mt);
  const Lattice sub = Lattice::from_generators(mt.select_rows(cols));
  return verdict_from_index(target, sublattice_index(sub, all));
}

ProjectionVerdict classify_projection_via_kernel(const ProjectionMatrix& p, const std::vector<std::string>& target) {
  const auto cols = target_columns(p, target);
  const Lattice sum = lattice_sum(Lattice::coordinate(p.M.cols(), cols), integer_kernel(p.M));
  return verdict_from_index(target, sublattice_index(sum, Lattice::standard(p.M.cols())));
}

std::size_t mt_rank(const ProjectionMatrix& p) { return rank(p.M.transpose()); }

}  // namespace fermat
