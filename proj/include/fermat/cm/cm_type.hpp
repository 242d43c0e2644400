#pragma once

#include <vector>

namespace fermat {

/// A subset of (Z/dZ)^x viewed as a CM type of Q(zeta_d).
struct CMType {
  int modulus = 0;
  std::vector<int> members;  // ascending

  /// Exactly one of j, d - j present for every unit j.
  bool satisfies_cm_axiom() const;
  bool contains(long j) const;
  friend bool operator==(const CMType&, const CMType&) = default;
};

/// {j : gcd(j, m) = 1, 1 <= j <= (m - 1)/2}; INVALID_MODULUS unless m is odd and >= 3.
CMType prym_cm_type(int m);

/// Inverse set {j^{-1} mod d : j in phi}.
CMType reflex_type(const CMType& phi);

/// True iff a * phi = phi forces a = 1.
bool is_primitive(const CMType& phi);

/// Units a with a * phi = phi.
std::vector<int> stabilizer(const CMType& phi);

}  // namespace fermat
