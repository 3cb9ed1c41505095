#pragma once

#include <cstdint>
#include <vector>

#include "u35/group.hpp"
#include "u35/permutation.hpp"

namespace u35 {

// Index tables for the two axis families of a group with a unique involution
// class: Majorana axes indexed by involutions (in enumeration order) and
// 3A-axes indexed by subgroups of order 3 (by least generator index, which
// identifies u_rho with u_{rho^-1}).
struct AxisTables {
  const EnumeratedGroup* G = nullptr;

  std::vector<int32_t> inv_elem;   // involution id -> element index
  std::vector<int32_t> inv_id;     // element index -> involution id or -1
  std::vector<int32_t> sub_elem;   // subgroup id -> least generator element index
  std::vector<int32_t> sub_id;     // element index -> subgroup id or -1

  int involutions() const { return static_cast<int>(inv_elem.size()); }
  int subgroups3() const { return static_cast<int>(sub_elem.size()); }

  const Permutation& inv_perm(int inv) const { return G->at(inv_elem[inv]); }
  const Permutation& sub_gen(int sub) const { return G->at(sub_elem[sub]); }

  int transport_inv(int inv, const Permutation& g) const;
  int transport_sub(int sub, const Permutation& g) const;
};

AxisTables build_axis_tables(const EnumeratedGroup& G);

// For fixed bases t0 (involution 0) and rho0 (subgroup 0), the first group
// element (in enumeration order) conjugating each class member onto the base.
struct BaseTransversals {
  int base_inv = 0;
  int base_sub = 0;
  std::vector<Permutation> for_inv;  // involution id -> g with t^g = t0
  std::vector<Permutation> for_sub;  // subgroup id -> g with rho^g = rho0
};

BaseTransversals build_base_transversals(const EnumeratedGroup& G, const AxisTables& axes);

}  // namespace u35
