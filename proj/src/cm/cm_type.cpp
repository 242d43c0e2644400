#include "fermat/cm/cm_type.hpp"

#include <algorithm>
#include <numeric>

#include "fermat/algebra/arith.hpp"
#include "fermat/error.hpp"

namespace fermat {

bool CMType::contains(long j) const {
  return std::binary_search(members.begin(), members.end(), static_cast<int>(arith::mod(j, modulus)));
}

bool CMType::satisfies_cm_axiom() const {
  if (modulus < 3) return modulus >= 1 && members.size() == 1 && members[0] == 1 % modulus;
  for (int j : members)
    if (std::gcd(j, modulus) != 1) return false;
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end())
    return false;
  for (auto u : arith::units(modulus))
    if (contains(u) == contains(modulus - u)) return false;
  return true;
}

CMType prym_cm_type(int m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidModulus, "CM type needs an odd modulus >= 3");
  CMType t{m, {}};
  for (int j = 1; j <= (m - 1) / 2; ++j)
    if (std::gcd(j, m) == 1) t.members.push_back(j);
  return t;
}

CMType reflex_type(const CMType& phi) {
  CMType r{phi.modulus, {}};
  for (int j : phi.members) r.members.push_back(static_cast<int>(arith::inverse_mod(j, phi.modulus)));
  std::sort(r.members.begin(), r.members.end());
  return r;
}

std::vector<int> stabilizer(const CMType& phi) {
  std::vector<int> out;
  for (auto a : arith::units(phi.modulus)) {
    bool fixed = true;
    for (int j : phi.members)
      if (!phi.contains(a * j)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(static_cast<int>(a));
  }
  return out;
}

bool is_primitive(const CMType& phi) { return stabilizer(phi).size() == 1; }

}  // namespace fermat
