#include "fermat/hodge/torus.hpp"

#include <algorithm>

#include "fermat/algebra/normal_form.hpp"
#include "fermat/error.hpp"

namespace fermat {

Lattice relation_lattice(const IntegerMatrix& parametrization) { return integer_kernel(parametrization.transpose()); }

namespace {

IntegerMatrix reverse_columns(const IntegerMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) order[j] = m.cols() - 1 - j;
  return m.select_columns(order);
}

// Characters of Z^g / R from a Smith form when no coordinate basis exists.
IntegerMatrix smith_parametrization(const Lattice& relations) {
  const std::size_t g = relations.ambient_rank();
  const std::size_t k = relations.rank();
  const SmithForm s = smith_normal_form(relations.basis());
  const IntegerMatrix tinv = hermite_normal_form(s.T).U;  // HNF of a unimodular T is I
  IntegerMatrix p(g, g - k);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t c = 0; c < g - k; ++c) p(i, c) = tinv(k + c, i);
  return p;
}

}  // namespace

TorusEmbedding torus_from_relations(const Lattice& relations) {
  TorusEmbedding t;
  t.g = static_cast<int>(relations.ambient_rank());
  t.relations = relations;
  const std::size_t g = relations.ambient_rank();
  const std::size_t k = relations.rank();
  t.free_rank = static_cast<int>(g - k);

  // HNF on reversed columns puts pivots at the highest coordinates.
  const IntegerMatrix h = reverse_columns(hermite_basis(reverse_columns(relations.basis())));
  std::vector<std::size_t> pivot(k);
  bool unit_pivots = true;
  std::vector<bool> dependent(g, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = g;
    while (j-- > 0 && sgn(h(i, j)) == 0) {
    }
    pivot[i] = j;
    dependent[j] = true;
    if (h(i, j) != 1) unit_pivots = false;
  }
  if (!unit_pivots) {
    t.parametrization = smith_parametrization(relations);
    return t;
  }
  std::vector<std::size_t> free_index(g, g);
  for (std::size_t j = 0, c = 0; j < g; ++j)
    if (!dependent[j]) {
      free_index[j] = c++;
      t.free_coordinates.push_back(static_cast<int>(j + 1));
    }
  t.parametrization = IntegerMatrix(g, g - k);
  for (std::size_t j = 0; j < g; ++j)
    if (!dependent[j]) t.parametrization(j, free_index[j]) = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (!dependent[j] && sgn(h(i, j)) != 0) t.parametrization(pivot[i], free_index[j]) = -h(i, j);
  return t;
}

TorusEmbedding hodge_torus(int m) { return torus_from_relations(hodge_relation_lattice(m)); }

}  // namespace fermat
