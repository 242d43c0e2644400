#include "fermat/hodge/hodge_cycles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fermat/algebra/arith.hpp"
#include "fermat/algebra/normal_form.hpp"
#include "fermat/error.hpp"
#include "fermat/hodge/torus.hpp"

namespace fermat {
namespace {

using Mask = std::uint64_t;
using Signature = std::vector<int>;

void require_odd_modulus(int m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidModulus, "Hodge analysis needs an odd modulus >= 3");
  if ((m - 1) / 2 > 63) throw Error(ErrorCode::Unsupported, "genus above 63 is not supported");
}

std::vector<int> to_indices(Mask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i + 1);
  return out;
}

// Per-index signature rows: sig[i][k] = rho(u_k * i) for i in 1..g.
std::vector<Signature> index_signatures(int m) {
  const int g = (m - 1) / 2;
  const auto us = arith::units(m);
  std::vector<Signature> sig(static_cast<std::size_t>(g) + 1, Signature(us.size()));
  for (int i = 1; i <= g; ++i)
    for (std::size_t k = 0; k < us.size(); ++k) sig[static_cast<std::size_t>(i)][k] = static_cast<int>((us[k] * i) % m);
  return sig;
}

Signature mask_signature(const std::vector<Signature>& sig, Mask s) {
  Signature out(sig[1].size());
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += sig[static_cast<std::size_t>(i)][k];
  return out;
}

// d-subsets of {1..g} grouped by signature.
std::map<Signature, std::vector<Mask>> buckets(int m, int d) {
  const int g = (m - 1) / 2;
  const auto sig = index_signatures(m);
  std::map<Signature, std::vector<Mask>> out;
  if (d == 0) {
    out[Signature(sig[1].size())].push_back(0);
    return out;
  }
  Mask s = (Mask{1} << d) - 1;
  const Mask limit = Mask{1} << g;
  while (s < limit) {
    out[mask_signature(sig, s)].push_back(s);
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

// (a|b) contains a Hodge sub-pair of codimension strictly between 0 and d.
bool decomposable(const std::vector<Signature>& sig, Mask a, Mask b, int d) {
  if (d < 2) return false;
  if (a == b) return true;
  std::set<std::pair<int, Signature>> seen;
  for (Mask s = (a - 1) & a; s; s = (s - 1) & a) seen.emplace(__builtin_popcountll(s), mask_signature(sig, s));
  for (Mask s = (b - 1) & b; s; s = (s - 1) & b)
    if (seen.count({__builtin_popcountll(s), mask_signature(sig, s)})) return true;
  return false;
}

int merge_inversions(const std::vector<int>& x, const std::vector<int>& y) {
  int inv = 0;
  for (int u : x)
    for (int v : y)
      if (u > v) ++inv;
  return inv;
}

}  // namespace

std::string HodgeMonomial::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << '|';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ')';
  return os.str();
}

std::vector<int> hodge_signature(int m, const std::vector<int>& indices) {
  std::vector<int> out;
  for (auto t : arith::units(m)) {
    int s = 0;
    for (int i : indices) s += static_cast<int>(arith::mod(t * i, m));
    out.push_back(s);
  }
  return out;
}

bool is_hodge(int m, const HodgeMonomial& mono) {
  if (mono.a.size() != mono.b.size()) return false;
  for (auto t : arith::units(m)) {
    long s = 0;
    for (int i : mono.a) s += arith::mod(t * i, m);
    for (int j : mono.b) s += arith::mod(-t * j, m);
    if (s != static_cast<long>(mono.d) * m) return false;
  }
  return true;
}

std::optional<std::pair<int, HodgeMonomial>> wedge(const HodgeMonomial& x, const HodgeMonomial& y) {
  HodgeMonomial z;
  z.d = x.d + y.d;
  std::set_union(x.a.begin(), x.a.end(), y.a.begin(), y.a.end(), std::back_inserter(z.a));
  std::set_union(x.b.begin(), x.b.end(), y.b.begin(), y.b.end(), std::back_inserter(z.b));
  if (static_cast<int>(z.a.size()) != z.d || static_cast<int>(z.b.size()) != z.d) return std::nullopt;
  const int parity = merge_inversions(x.a, y.a) + merge_inversions(x.b, y.b) +
                     static_cast<int>(x.b.size() * y.a.size());
  return std::pair{parity % 2 ? -1 : 1, std::move(z)};
}

HodgeSpaceReport enumerate_hodge_cycles(int m, int d) {
  require_odd_modulus(m);
  const int g = (m - 1) / 2;
  if (d < 0 || d > g) throw Error(ErrorCode::CodimOutOfRange, "codimension " + std::to_string(d) + " outside 0.." + std::to_string(g));
  const auto sig = index_signatures(m);
  HodgeSpaceReport rep;
  rep.m = m;
  rep.d = d;
  std::vector<std::pair<Mask, Mask>> pairs;
  for (const auto& [key, masks] : buckets(m, d))
    for (Mask a : masks)
      for (Mask b : masks) pairs.emplace_back(a, b);
  for (const auto& [a, b] : pairs) {
    HodgeMonomial mono{d, to_indices(a), to_indices(b)};
    if (d == 0 || !decomposable(sig, a, b, d)) ++rep.quotient_dim;
    rep.all.push_back(std::move(mono));
  }
  std::sort(rep.all.begin(), rep.all.end());
  for (const auto& mono : rep.all) (mono.is_divisor_type() ? rep.divisor_generated : rep.exceptional).push_back(mono);
  return rep;
}

std::vector<CensusRow> exceptional_census(int m, long max_pairs) {
  require_odd_modulus(m);
  const int g = (m - 1) / 2;
  const auto sig = index_signatures(m);
  std::vector<CensusRow> rows;
  for (int d = 1; d <= g; ++d) {
    CensusRow row;
    row.d = d;
    const auto bs = buckets(m, d);
    for (const auto& [key, masks] : bs) {
      const long n = static_cast<long>(masks.size());
      row.hodge += n * n;
      row.exceptional += n * (n - 1);
    }
    if (row.hodge <= max_pairs) {
      for (const auto& [key, masks] : bs)
        for (Mask a : masks)
          for (Mask b : masks)
            if (!decomposable(sig, a, b, d)) ++row.quotient_dim;
    } else {
      row.quotient_dim = -1;
    }
    rows.push_back(row);
  }
  return rows;
}

std::size_t product_span_dim(int m, int d) {
  const HodgeSpaceReport top = enumerate_hodge_cycles(m, d);
  std::map<HodgeMonomial, std::size_t> index;
  for (std::size_t i = 0; i < top.all.size(); ++i) index.emplace(top.all[i], i);
  std::vector<HodgeSpaceReport> lower;
  for (int r = 0; r < d; ++r) lower.push_back(enumerate_hodge_cycles(m, r));
  IntegerMatrix rows(0, top.all.size());
  IntVector v(top.all.size());
  for (int r = 1; 2 * r <= d; ++r) {
    for (const auto& x : lower[static_cast<std::size_t>(r)].all) {
      for (const auto& y : lower[static_cast<std::size_t>(d - r)].all) {
        auto w = wedge(x, y);
        if (!w) continue;
        auto it = index.find(w->second);
        if (it == index.end()) throw Error(ErrorCode::DimensionMismatch, "product of Hodge monomials is not Hodge: " + w->second.to_string());
        std::fill(v.begin(), v.end(), 0);
        v[it->second] = w->first;
        rows.append_row(v);
      }
    }
  }
  if (rows.rows() == 0) return 0;
  return rank(rows);
}

}  // namespace fermat

// Torus-side entry points that share the subset machinery above.
namespace fermat {

bool fixed_monomials_match(int m, const IntegerMatrix& parametrization) {
  require_odd_modulus(m);
  const int g = (m - 1) / 2;
  if (parametrization.rows() != static_cast<std::size_t>(g))
    throw Error(ErrorCode::DimensionMismatch, "parametrization needs one row per coordinate");
  const auto sig = index_signatures(m);
  const std::size_t r = parametrization.cols();
  std::vector<std::vector<long>> chars(static_cast<std::size_t>(g) + 1, std::vector<long>(r));
  for (int i = 1; i <= g; ++i)
    for (std::size_t k = 0; k < r; ++k) chars[static_cast<std::size_t>(i)][k] = parametrization(static_cast<std::size_t>(i - 1), k).get_si();
  for (int d = 1; d <= g; ++d) {
    // Two pairs (a|b) are fixed resp. Hodge iff a, b share the torus character
    // resp. the signature, so the two partitions of d-subsets must coincide.
    std::map<Signature, std::vector<long>> sig_to_char;
    std::map<std::vector<long>, Signature> char_to_sig;
    Mask s = (Mask{1} << d) - 1;
    const Mask limit = Mask{1} << g;
    while (s < limit) {
      const Signature key = mask_signature(sig, s);
      std::vector<long> ch(r);
      for (int i = 1, t = 0; (s >> t) != 0; ++i, ++t)
        if ((s >> t) & 1)
          for (std::size_t k = 0; k < r; ++k) ch[k] += chars[static_cast<std::size_t>(i)][k];
      auto [it1, new1] = sig_to_char.emplace(key, ch);
      if (!new1 && it1->second != ch) return false;
      auto [it2, new2] = char_to_sig.emplace(ch, key);
      if (!new2 && it2->second != key) return false;
      const Mask c = s & (~s + 1);
      const Mask rr = s + c;
      s = (((rr ^ s) >> 2) / c) | rr;
    }
  }
  return true;
}

Lattice hodge_relation_lattice(int m) {
  require_odd_modulus(m);
  const int g = (m - 1) / 2;
  IntegerMatrix gens(0, static_cast<std::size_t>(g));
  IntVector v(static_cast<std::size_t>(g));
  for (int d = 1; d <= g / 2; ++d) {
    // Codimensions above g/2 mirror these by complement, adding no new relations.
    for (const auto& [key, masks] : buckets(m, d)) {
      for (std::size_t k = 1; k < masks.size(); ++k) {
        for (int i = 0; i < g; ++i) v[static_cast<std::size_t>(i)] = static_cast<long>((masks[k] >> i) & 1) - static_cast<long>((masks[0] >> i) & 1);
        gens.append_row(v);
      }
    }
  }
  return saturate(Lattice::from_generators(gens));
}

}  // namespace fermat
