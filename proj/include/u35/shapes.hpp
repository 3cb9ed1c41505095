#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "u35/axes.hpp"
#include "u35/group.hpp"
#include "u35/rational.hpp"

namespace u35 {

// One C(t0)-orbit on the involution class.
struct Suborbit {
  int size = 0;
  int product_order = 0;  // order of t0*s for s in the orbit
  int min_member = 0;     // least involution id
};

struct SuborbitTable {
  int base_inv = 0;
  std::vector<Suborbit> rows;  // sorted by (product_order, size, min_member)

  int size_with_order(int ord) const;           // 0 when absent
  std::vector<std::pair<int, int>> pairs() const;  // (size, order) multiset
};

SuborbitTable suborbit_table(const EnumeratedGroup& G, const AxisTables& axes);

// Rows of the (a_t, u_rho) pair table, discriminated by |<t,rho>| with the
// C6/S3 split by whether t centralizes rho.
enum class T5Row : uint8_t { C6, S3, A4, S4, GL23, A5, L27 };
inline constexpr int kT5Rows = 7;

// Rows of the (u_rho, u_sigma) pair table, discriminated by |<rho,sigma>|.
// Order 168 splits by the existence of an involution in H normalizing both
// subgroups; order 2520 splits by the centralizer orders of the generators
// inside H (both small / mixed). The last row is the one with the symbolic
// unknown inner product.
enum class T6Row : uint8_t {
  C3, C3xC3, A4, F21, SL23, C3xA4, A5, SL25, L27_NORM, L27_GEN, A6, A7_PAIR, A7_MIX, U35
};
inline constexpr int kT6Rows = 14;

const char* t5_label(T5Row r);
const char* t6_label(T6Row r);
Rat t5_value(T5Row r);          // (a_t, u_rho)
Rat t6_value(T6Row r);          // (u_rho, u_sigma); 0 for the U35 row
bool t6_is_unknown(T6Row r);    // true exactly for the U35 row

// Closure-based classification of a single pair (no transport).
T5Row classify_pair_t_rho(const EnumeratedGroup& G, const AxisTables& axes, int inv, int sub);
T6Row classify_pair_rho_sigma(const EnumeratedGroup& G, const AxisTables& axes, int s1, int s2);

// Censuses over all partners of a fixed base subgroup, by row.
std::array<int, kT5Rows> table5_census(const EnumeratedGroup& G, const AxisTables& axes, int sub);
std::array<int, kT6Rows> table6_census(const EnumeratedGroup& G, const AxisTables& axes, int sub);

// Classification of every pair against the fixed bases, transported
// G-equivariantly to arbitrary pairs.
struct Classification {
  const EnumeratedGroup* G = nullptr;
  const AxisTables* axes = nullptr;
  BaseTransversals tr;
  std::vector<uint8_t> t_row;  // involution id -> T5Row of (t, rho0)
  std::vector<uint8_t> s_row;  // subgroup id -> T6Row of (rho0, sigma)

  T5Row row_t_rho(int inv, int sub) const;
  T6Row row_rho_sigma(int s1, int s2) const;
};

Classification classify_all(const EnumeratedGroup& G, const AxisTables& axes);

// Group-level containment facts feeding the shape solver, each verified on a
// representative pair and valid for all by transitivity on the suborbit.
struct GroupFacts {
  bool d4_in_d12 = false;  // every product-order-2 pair embeds in a D12
  bool d6_in_d12 = false;  // every product-order-3 pair embeds in a D12
};

GroupFacts group_facts(const EnumeratedGroup& G, const AxisTables& axes,
                       const SuborbitTable& sub);

// Inner products (a_0, a_1) and subalgebra inner products read off the eight
// algebras; used to discriminate candidate types during shape solving.
struct ContainmentFacts {
  Rat pair_inner_2A, pair_inner_2B, pair_inner_3A, pair_inner_3C, pair_inner_4A,
      pair_inner_4B, pair_inner_5A, pair_inner_6A;
  Rat six_dist2_inner;   // (a_0,a_2) in the order-6 algebra
  Rat six_dist3_inner;   // (a_0,a_3) in the order-6 algebra
  Rat four_a_dist2_inner;  // (a_0,a_2) in 4A
  Rat four_b_dist2_inner;  // (a_0,a_2) in 4B
};

// Reads the discriminating inner products off built algebra tables.
struct AlgebraSpec;
ContainmentFacts containment_facts(const std::vector<AlgebraSpec>& algebras);

struct ShapeMap {
  std::map<int, std::string> assignment;  // product order -> algebra tag
  bool unique = false;
  std::string issue;  // "ambiguous shape" / "no consistent shape" when not unique
};

ShapeMap solve_shape(const SuborbitTable& sub, const ContainmentFacts& facts,
                     const GroupFacts& group);

// (a_0, a_1) of the algebra the solved shape assigns to this product order.
Rat majorana_inner_product(const ShapeMap& shape, const ContainmentFacts& facts, int order);

}  // namespace u35
