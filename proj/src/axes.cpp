#include "u35/axes.hpp"

#include "u35/errors.hpp"

namespace u35 {

int AxisTables::transport_inv(int inv, const Permutation& g) const {
  Permutation c = conjugate(inv_perm(inv), g);
  int32_t e = G->index_of(c);
  return e < 0 ? -1 : inv_id[e];
}

int AxisTables::transport_sub(int sub, const Permutation& g) const {
  Permutation c = conjugate(sub_gen(sub), g);
  int32_t e = G->index_of(c);
  return e < 0 ? -1 : sub_id[e];
}

AxisTables build_axis_tables(const EnumeratedGroup& G) {
  AxisTables t;
  t.G = &G;
  t.inv_id.assign(G.size(), -1);
  t.sub_id.assign(G.size(), -1);
  for (size_t i = 0; i < G.size(); ++i) {
    const Permutation& p = G.at(i);
    int o = perm_order(p);
    if (o == 2) {
      t.inv_id[i] = static_cast<int32_t>(t.inv_elem.size());
      t.inv_elem.push_back(static_cast<int32_t>(i));
    } else if (o == 3 && t.sub_id[i] < 0) {
      // partner p^2 has a larger index, otherwise it would be claimed already
      int32_t j = G.index_of(compose(p, p));
      int32_t id = static_cast<int32_t>(t.sub_elem.size());
      t.sub_id[i] = id;
      t.sub_id[j] = id;
      t.sub_elem.push_back(static_cast<int32_t>(i));
    }
  }
  return t;
}

BaseTransversals build_base_transversals(const EnumeratedGroup& G, const AxisTables& axes) {
  BaseTransversals tr;
  tr.base_inv = 0;
  tr.base_sub = 0;
  const Permutation t0 = axes.inv_perm(0);
  const Permutation r0 = axes.sub_gen(0);
  std::vector<char> have_inv(axes.involutions(), 0), have_sub(axes.subgroups3(), 0);
  tr.for_inv.resize(axes.involutions());
  tr.for_sub.resize(axes.subgroups3());
  int need = axes.involutions() + axes.subgroups3();
  // h^g = base iff h = base^{g^-1}; one sweep in enumeration order finds the
  // first conjugator for every class member.
  for (const Permutation& g : G.elements()) {
    Permutation gi = inverse(g);
    int inv = axes.inv_id[G.index_of(conjugate(t0, gi))];
    if (!have_inv[inv]) {
      have_inv[inv] = 1;
      tr.for_inv[inv] = g;
      --need;
    }
    int sub = axes.sub_id[G.index_of(conjugate(r0, gi))];
    if (!have_sub[sub]) {
      have_sub[sub] = 1;
      tr.for_sub[sub] = g;
      --need;
    }
    if (need == 0) break;
  }
  if (need != 0)
    throw ClassificationError("axis classes are not single conjugacy classes");
  return tr;
}

}  // namespace u35
