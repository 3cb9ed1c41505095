#include "u35/shapes.hpp"

#include <algorithm>

#include "u35/errors.hpp"
#include "u35/nortsak.hpp"

namespace u35 {

ContainmentFacts containment_facts(const std::vector<AlgebraSpec>& algebras) {
  ContainmentFacts f;
  auto find = [&](AlgebraType t) -> const AlgebraSpec& {
    for (const AlgebraSpec& a : algebras)
      if (a.type == t) return a;
    throw DataError("algebra missing from library");
  };
  auto inner = [&](AlgebraType t, const char* x, const char* y) {
    const AlgebraSpec& a = find(t);
    return a.gram[a.index_of(x)][a.index_of(y)];
  };
  f.pair_inner_2A = inner(AlgebraType::T2A, "a0", "a1");
  f.pair_inner_2B = inner(AlgebraType::T2B, "a0", "a1");
  f.pair_inner_3A = inner(AlgebraType::T3A, "a0", "a1");
  f.pair_inner_3C = inner(AlgebraType::T3C, "a0", "a1");
  f.pair_inner_4A = inner(AlgebraType::T4A, "a0", "a1");
  f.pair_inner_4B = inner(AlgebraType::T4B, "a0", "a1");
  f.pair_inner_5A = inner(AlgebraType::T5A, "a0", "a1");
  f.pair_inner_6A = inner(AlgebraType::T6A, "a0", "a1");
  f.six_dist2_inner = inner(AlgebraType::T6A, "a0", "a2");
  f.six_dist3_inner = inner(AlgebraType::T6A, "a0", "a3");
  f.four_a_dist2_inner = inner(AlgebraType::T4A, "a0", "a2");
  f.four_b_dist2_inner = inner(AlgebraType::T4B, "a0", "a2");
  return f;
}

int SuborbitTable::size_with_order(int ord) const {
  int total = 0;
  for (const Suborbit& s : rows)
    if (s.product_order == ord) total += s.size;
  return total;
}

std::vector<std::pair<int, int>> SuborbitTable::pairs() const {
  std::vector<std::pair<int, int>> v;
  for (const Suborbit& s : rows) v.push_back({s.size, s.product_order});
  std::sort(v.begin(), v.end());
  return v;
}

SuborbitTable suborbit_table(const EnumeratedGroup& G, const AxisTables& axes) {
  const int n = axes.involutions();
  const Permutation t0 = axes.inv_perm(0);
  if (static_cast<int>(conjugacy_class(t0, G).size()) != n)
    throw ClassificationError("multiple involution classes");
  SubgroupHandle c = centralizer(t0, G);

  SuborbitTable table;
  table.base_inv = 0;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = 1;
    for (size_t head = 0; head < orbit.size(); ++head) {
      const Permutation& s = axes.inv_perm(orbit[head]);
      for (const Permutation& g : c.elems) {
        int other = axes.inv_id[G.index_of(conjugate(s, g))];
        if (!seen[other]) {
          seen[other] = 1;
          orbit.push_back(other);
        }
      }
    }
    Suborbit row;
    row.size = static_cast<int>(orbit.size());
    row.min_member = *std::min_element(orbit.begin(), orbit.end());
    row.product_order = perm_order(compose(t0, axes.inv_perm(start)));
    for (int m : orbit) {
      int o = perm_order(compose(t0, axes.inv_perm(m)));
      if (o != row.product_order)
        throw ClassificationError("product order not constant on a suborbit");
    }
    table.rows.push_back(row);
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const Suborbit& a, const Suborbit& b) {
    return std::tie(a.product_order, a.size, a.min_member) <
           std::tie(b.product_order, b.size, b.min_member);
  });
  return table;
}

const char* t5_label(T5Row r) {
  switch (r) {
    case T5Row::C6: return "C6";
    case T5Row::S3: return "S3";
    case T5Row::A4: return "A4";
    case T5Row::S4: return "S4";
    case T5Row::GL23: return "GL2(3)";
    case T5Row::A5: return "A5";
    case T5Row::L27: return "L2(7)";
  }
  return "?";
}

const char* t6_label(T6Row r) {
  switch (r) {
    case T6Row::C3: return "C3";
    case T6Row::C3xC3: return "C3xC3";
    case T6Row::A4: return "A4";
    case T6Row::F21: return "F21";
    case T6Row::SL23: return "SL2(3)";
    case T6Row::C3xA4: return "C3xA4";
    case T6Row::A5: return "A5";
    case T6Row::SL25: return "SL2(5)";
    case T6Row::L27_NORM: return "L2(7)+";
    case T6Row::L27_GEN: return "L2(7)-";
    case T6Row::A6: return "A6";
    case T6Row::A7_PAIR: return "A7(3^2,3^2)";
    case T6Row::A7_MIX: return "A7(3,3^2)";
    case T6Row::U35: return "U3(5)";
  }
  return "?";
}

Rat t5_value(T5Row r) {
  switch (r) {
    case T5Row::C6: return Rat(0);
    case T5Row::S3: return Rat(1, 4);
    case T5Row::A4: return Rat(1, 9);
    case T5Row::S4: return Rat(1, 36);
    case T5Row::GL23: return Rat(1, 36);
    case T5Row::A5: return Rat(1, 18);
    case T5Row::L27: return Rat(1, 24);
  }
  return Rat(0);
}

Rat t6_value(T6Row r) {
  switch (r) {
    case T6Row::C3: return Rat(8, 5);
    case T6Row::C3xC3: return Rat(0);
    case T6Row::A4: return Rat(136, 405);
    case T6Row::F21: return Rat(4, 27);
    case T6Row::SL23: return Rat(8, 81);
    case T6Row::C3xA4: return Rat(64, 405);
    case T6Row::A5: return Rat(16, 405);
    case T6Row::SL25: return Rat(16, 405);
    case T6Row::L27_NORM: return Rat(32, 405);
    case T6Row::L27_GEN: return Rat(4, 81);
    case T6Row::A6: return Rat(32, 405);
    case T6Row::A7_PAIR: return Rat(8, 81);
    case T6Row::A7_MIX: return Rat(32, 405);
    case T6Row::U35: return Rat(0);  // symbolic; see t6_is_unknown
  }
  return Rat(0);
}

bool t6_is_unknown(T6Row r) { return r == T6Row::U35; }

namespace {

bool normalizes(const Permutation& h, const Permutation& gen3) {
  Permutation c = conjugate(gen3, h);
  return c == gen3 || c == compose(gen3, gen3);
}

int centralizer_order_in(const SubgroupHandle& H, const Permutation& x) {
  int count = 0;
  for (const Permutation& h : H.elems)
    if (compose(h, x) == compose(x, h)) ++count;
  return count;
}

}  // namespace

T5Row classify_pair_t_rho(const EnumeratedGroup& G, const AxisTables& axes, int inv, int sub) {
  const Permutation t = axes.inv_perm(inv);
  const Permutation r = axes.sub_gen(sub);
  SubgroupHandle H = subgroup_closure({t, r}, 2520, G);
  switch (H.order()) {
    case 6: {
      Permutation c = conjugate(r, t);
      if (c == r) return T5Row::C6;
      if (c == compose(r, r)) return T5Row::S3;
      break;
    }
    case 12: return T5Row::A4;
    case 24: return T5Row::S4;
    case 48: return T5Row::GL23;
    case 60: return T5Row::A5;
    case 168: return T5Row::L27;
  }
  throw ClassificationError("unexpected <t,rho> of order " + std::to_string(H.order()));
}

T6Row classify_pair_rho_sigma(const EnumeratedGroup& G, const AxisTables& axes, int s1, int s2) {
  if (s1 == s2) return T6Row::C3;
  const Permutation a = axes.sub_gen(s1);
  const Permutation b = axes.sub_gen(s2);
  SubgroupHandle H = subgroup_closure({a, b}, 2520, G);
  if (H.whole_group) return T6Row::U35;
  switch (H.order()) {
    case 9: return T6Row::C3xC3;
    case 12: return T6Row::A4;
    case 21: return T6Row::F21;
    case 24: return T6Row::SL23;
    case 36: return T6Row::C3xA4;
    case 60: return T6Row::A5;
    case 120: return T6Row::SL25;
    case 168: {
      for (const Permutation& h : H.elems)
        if (perm_order(h) == 2 && normalizes(h, a) && normalizes(h, b)) return T6Row::L27_NORM;
      return T6Row::L27_GEN;
    }
    case 360: return T6Row::A6;
    case 2520: {
      int ca = centralizer_order_in(H, a);
      int cb = centralizer_order_in(H, b);
      // the two generator types have distinct centralizer orders in H; the
      // smaller one is the type that occurs 140 times per copy of the group
      if ((ca != 9 && ca != 36) || (cb != 9 && cb != 36))
        throw ClassificationError("unexpected centralizer orders " + std::to_string(ca) + "," +
                                  std::to_string(cb) + " in order-2520 subgroup");
      if (ca == 9 && cb == 9) return T6Row::A7_PAIR;
      if (ca == 36 && cb == 36)
        throw ClassificationError("order-2520 subgroup generated by two small-support elements");
      return T6Row::A7_MIX;
    }
  }
  throw ClassificationError("unexpected <rho,sigma> of order " + std::to_string(H.order()));
}

std::array<int, kT5Rows> table5_census(const EnumeratedGroup& G, const AxisTables& axes,
                                       int sub) {
  std::array<int, kT5Rows> census{};
  for (int inv = 0; inv < axes.involutions(); ++inv)
    ++census[static_cast<int>(classify_pair_t_rho(G, axes, inv, sub))];
  return census;
}

std::array<int, kT6Rows> table6_census(const EnumeratedGroup& G, const AxisTables& axes,
                                       int sub) {
  std::array<int, kT6Rows> census{};
  for (int s2 = 0; s2 < axes.subgroups3(); ++s2)
    ++census[static_cast<int>(classify_pair_rho_sigma(G, axes, sub, s2))];
  return census;
}

T5Row Classification::row_t_rho(int inv, int sub) const {
  const Permutation& g = tr.for_sub[sub];
  return static_cast<T5Row>(t_row[axes->transport_inv(inv, g)]);
}

T6Row Classification::row_rho_sigma(int s1, int s2) const {
  if (s1 == s2) return T6Row::C3;
  const Permutation& g = tr.for_sub[s1];
  return static_cast<T6Row>(s_row[axes->transport_sub(s2, g)]);
}

Classification classify_all(const EnumeratedGroup& G, const AxisTables& axes) {
  Classification c;
  c.G = &G;
  c.axes = &axes;
  c.tr = build_base_transversals(G, axes);
  c.t_row.resize(axes.involutions());
  c.s_row.resize(axes.subgroups3());
  for (int inv = 0; inv < axes.involutions(); ++inv)
    c.t_row[inv] = static_cast<uint8_t>(classify_pair_t_rho(G, axes, inv, c.tr.base_sub));
  for (int sub = 0; sub < axes.subgroups3(); ++sub)
    c.s_row[sub] = static_cast<uint8_t>(classify_pair_rho_sigma(G, axes, c.tr.base_sub, sub));
  return c;
}

GroupFacts group_facts(const EnumeratedGroup& G, const AxisTables& axes,
                       const SuborbitTable& sub) {
  (void)G;
  GroupFacts f;
  const Permutation t0 = axes.inv_perm(sub.base_inv);
  // All pairs of a given product order are conjugate (single suborbit), so a
  // representative decides the containment for the whole class.
  auto rep_with_order = [&](int ord) -> int {
    for (const Suborbit& row : sub.rows)
      if (row.product_order == ord) return row.min_member;
    return -1;
  };
  int rep3 = rep_with_order(3), rep2 = rep_with_order(2);
  std::vector<int> order6_partners;
  for (int inv = 0; inv < axes.involutions(); ++inv)
    if (perm_order(compose(t0, axes.inv_perm(inv))) == 6) order6_partners.push_back(inv);

  if (rep3 >= 0) {
    Permutation rho = compose(t0, axes.inv_perm(rep3));
    Permutation rho2 = compose(rho, rho);
    for (int r : order6_partners) {
      Permutation z = compose(t0, axes.inv_perm(r));
      Permutation z2 = compose(z, z);
      if (z2 == rho || z2 == rho2) {
        f.d6_in_d12 = true;
        break;
      }
    }
  }
  if (rep2 >= 0) {
    Permutation s = axes.inv_perm(rep2);
    Permutation prod = compose(t0, s);
    for (int r : order6_partners) {
      Permutation z = compose(t0, axes.inv_perm(r));
      if (compose(z, compose(z, z)) == prod) {
        f.d4_in_d12 = true;
        break;
      }
    }
  }
  return f;
}

ShapeMap solve_shape(const SuborbitTable& sub, const ContainmentFacts& facts,
                     const GroupFacts& group) {
  ShapeMap shape;
  std::map<int, std::vector<std::string>> cand;
  for (const Suborbit& row : sub.rows) {
    int o = row.product_order;
    if (o < 1 || o > 6) {
      shape.issue = "no consistent shape";
      return shape;
    }
    if (o == 1 || cand.count(o)) continue;
    switch (o) {
      case 2: cand[2] = {"2A", "2B"}; break;
      case 3: cand[3] = {"3A", "3C"}; break;
      case 4: cand[4] = {"4A", "4B"}; break;
      case 5: cand[5] = {"5A"}; break;
      case 6: cand[6] = {"6A"}; break;
    }
  }

  auto restrict_to_inner = [&](int order, const Rat& inner) {
    if (!cand.count(order)) return;
    auto pair_inner = [&](const std::string& tag) {
      if (tag == "2A") return facts.pair_inner_2A;
      if (tag == "2B") return facts.pair_inner_2B;
      if (tag == "3A") return facts.pair_inner_3A;
      if (tag == "3C") return facts.pair_inner_3C;
      if (tag == "4A") return facts.pair_inner_4A;
      if (tag == "4B") return facts.pair_inner_4B;
      if (tag == "5A") return facts.pair_inner_5A;
      return facts.pair_inner_6A;
    };
    std::vector<std::string> keep;
    for (const std::string& tag : cand[order])
      if (pair_inner(tag) == inner) keep.push_back(tag);
    cand[order] = keep;
  };

  // A dihedral pair inside a larger dihedral pair carries the subalgebra of
  // the larger algebra, so its type is pinned by the subalgebra inner product.
  if (cand.count(6)) {
    if (group.d6_in_d12) restrict_to_inner(3, facts.six_dist2_inner);
    if (group.d4_in_d12) restrict_to_inner(2, facts.six_dist3_inner);
  }
  // The distance-2 pair inside a D8 has product order 2, and its type must
  // match the resolved order-2 assignment.
  if (cand.count(4) && cand.count(2) && cand[2].size() == 1) {
    const Rat want = cand[2][0] == "2A" ? facts.pair_inner_2A : facts.pair_inner_2B;
    std::vector<std::string> keep;
    for (const std::string& tag : cand[4]) {
      Rat dist2 = (tag == "4A") ? facts.four_a_dist2_inner : facts.four_b_dist2_inner;
      if (dist2 == want) keep.push_back(tag);
    }
    cand[4] = keep;
  }

  shape.unique = true;
  for (auto& [order, tags] : cand) {
    if (tags.empty()) {
      shape.unique = false;
      shape.issue = "no consistent shape";
      return shape;
    }
    if (tags.size() > 1) {
      shape.unique = false;
      shape.issue = "ambiguous shape";
    }
    shape.assignment[order] = tags[0];
  }
  if (!shape.unique) shape.assignment.clear();
  return shape;
}

Rat majorana_inner_product(const ShapeMap& shape, const ContainmentFacts& facts, int order) {
  if (order < 1 || order > 6) throw std::invalid_argument("product order outside 1..6");
  if (order == 1) return Rat(1);
  if (!shape.unique) throw ClassificationError("shape not solved");
  const std::string& tag = shape.assignment.at(order);
  if (tag == "2A") return facts.pair_inner_2A;
  if (tag == "2B") return facts.pair_inner_2B;
  if (tag == "3A") return facts.pair_inner_3A;
  if (tag == "3C") return facts.pair_inner_3C;
  if (tag == "4A") return facts.pair_inner_4A;
  if (tag == "4B") return facts.pair_inner_4B;
  if (tag == "5A") return facts.pair_inner_5A;
  return facts.pair_inner_6A;
}

}  // namespace u35
