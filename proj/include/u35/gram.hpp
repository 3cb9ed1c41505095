#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "u35/axes.hpp"
#include "u35/formal.hpp"
#include "u35/group.hpp"
#include "u35/rational.hpp"
#include "u35/shapes.hpp"

namespace u35 {

// Gram matrix over the axis list [Majorana 0..524 | 3A 525..2274]. Entries
// take one of ~27 exact values determined by the pair class, so the matrix
// stores one byte per entry plus a class table. Entries of the generating
// 3A/3A class carry the symbolic unknown x instead of a constant.
class GramMatrix {
 public:
  // 2^8 * 3^4 * 5 clears every entry denominator (and 4/81 at this scale).
  static constexpr int64_t kScale = 103680;

  struct EntryClass {
    std::string label;
    Rat value;
    int64_t scaled = 0;
    bool x = false;
  };

  int n = 0;
  int n_major = 0;
  bool with_3a = false;
  std::vector<EntryClass> classes;
  std::vector<uint8_t> code;

  uint8_t code_at(int i, int j) const { return code[size_t(i) * n + j]; }
  Rat constant(int i, int j) const {
    const EntryClass& c = classes[code_at(i, j)];
    return c.x ? Rat(0) : c.value;
  }
  bool indicator(int i, int j) const { return classes[code_at(i, j)].x; }
  Rat value_at(int i, int j, const Rat& x) const {
    const EntryClass& c = classes[code_at(i, j)];
    return c.x ? x : c.value;
  }
  int64_t scaled_at(int i, int j, int64_t x_scaled) const {
    const EntryClass& c = classes[code_at(i, j)];
    return c.x ? x_scaled : c.scaled;
  }
  int sub_of_key(int key) const { return key - n_major; }
  int key_of_sub(int sub) const { return n_major + sub; }
};

// mm_inner[d] is (a_t,a_s) for product order d (index 0 unused, 1..6 used);
// it comes from the solved shape.
GramMatrix assemble_gram(const EnumeratedGroup& G, const AxisTables& axes,
                         const Classification& cls, const std::array<Rat, 7>& mm_inner,
                         bool include_3a);

inline constexpr std::array<uint64_t, 3> kDefaultPrimes = {1048583ull, 1048589ull, 1048601ull};

// Rank of the integer matrix mod p by Gaussian elimination with delayed
// reduction (p must stay below 2^21 so products accumulate in 64 bits).
// This lower-bounds the rational rank.
int modular_rank(int nrows, int ncols, uint64_t p,
                 const std::function<int64_t(int, int)>& entry);

int rank_mod_p(const GramMatrix& M, const Rat& x, uint64_t p);
int rank_mod_p_subset(const GramMatrix& M, const Rat& x, uint64_t p,
                      const std::vector<int>& keys);

// Fraction-free (Bareiss) elimination over the integers; exact.
int bareiss_rank(int nrows, int ncols, const std::function<Int(int, int)>& entry,
                 int threads);

struct PdResult {
  bool pd = false;
  int pivots_done = 0;  // leading minors certified positive
};
// Symmetric fraction-free elimination without pivoting: the k-th pivot is the
// k-th leading principal minor, so completing with all pivots positive
// certifies positive definiteness (and full rank).
PdResult bareiss_positive_definite(int n, const std::function<Int(int, int)>& entry,
                                   int threads);

int rank_exact_subset(const GramMatrix& M, const Rat& x, const std::vector<int>& keys,
                      int threads);

// One 3^2 subgroup together with the involutions inverting all of it.
struct SylowInfo {
  std::array<int, 4> subs;
  std::vector<int> inverting;  // involution ids; size 0 or 9
};

std::vector<SylowInfo> sylow3_subgroups(const EnumeratedGroup& G, const AxisTables& axes,
                                        const Classification& cls);

// 45(u_1+u_2+u_3+u_4) - 32(b_1+...+b_9), one per 3^2 subgroup possessing an
// inverting involution.
struct RelationVector {
  std::array<int, 4> subs;
  std::array<int, 9> invs;

  template <typename F>
  void for_each_term(const GramMatrix& M, F&& f) const {
    for (int s : subs) f(M.key_of_sub(s), int64_t(45));
    for (int t : invs) f(t, int64_t(-32));
  }
};

std::vector<RelationVector> pasechnik_vectors(const EnumeratedGroup& G, const AxisTables& axes,
                                              const Classification& cls);

// The unique x making every relation Gram-orthogonal to every axis column.
// Throws DataError on an inconsistent system or when x is unconstrained.
Rat solve_x(const GramMatrix& M, const std::vector<RelationVector>& rels);

// r^T M r for one relation, at fixed x (scaled by kScale^1; exact integer).
int64_t relation_norm_scaled(const GramMatrix& M, int64_t x_scaled, const RelationVector& r);

// True iff every relation has zero norm and zero pairing with all columns.
bool relations_vanish(const GramMatrix& M, const Rat& x,
                      const std::vector<RelationVector>& rels);

struct OrbitDecomposition {
  int base_sub = 0;
  int normalizer_order = 0;
  std::array<std::vector<int>, 6> orbits;  // ordered by least member; each sorted
  std::vector<int> members() const;
};

// The 432 subgroups generating the whole group with the base, split into the
// six regular normalizer orbits. Throws if the orbit structure differs.
OrbitDecomposition gamma_minus_orbits(const EnumeratedGroup& G, const AxisTables& axes,
                                      const Classification& cls, int base_sub);

struct CommonInvolutionReport {
  int involutions_in_normalizer = 0;
  int pairs_checked = 0;
  bool none_found = false;
};
// No involution normalizes both the base and any member of Gamma^-.
CommonInvolutionReport no_common_normalizing_involution(const EnumeratedGroup& G,
                                                        const AxisTables& axes,
                                                        const OrbitDecomposition& orb);

struct VDecomposition {
  std::array<int, 3> vplus_ranks{};  // mod each default prime
  int vplus_dim = 0;
  std::array<int, 3> complement_dims{};  // full rank minus V+ rank, per prime

  // the pairing search over indicator-sum combinations, as specified
  bool pairing_found = false;
  std::array<std::array<int, 2>, 3> pairing{};  // orbit index pairs
  int valid_pairings = 0;
  int f_rank = 0;       // Gram rank of the three combination rows (found pairing)
  bool f_sum_zero = false;

  // computed structure of the complement, independent of the search: the
  // space of suborbit-constant vectors orthogonal to V+ is one-dimensional
  // and consists of exact kernel vectors, so the complement carries no
  // orbit-indicator combination at all.
  int orbit_constant_perp_dim = -1;
  bool orbit_constant_perp_in_kernel = false;
};

VDecomposition v_decomposition(const EnumeratedGroup& G, const AxisTables& axes,
                               const GramMatrix& M, const Rat& x,
                               const OrbitDecomposition& orb,
                               const std::array<int, 3>& full_ranks, int threads);

struct S3S4Result {
  int inv = -1;   // first linking involution in enumeration order
  int count = 0;  // number of valid choices
};
// First involution t with <rho,t> = S3 and <sigma,t> of order 24.
S3S4Result find_s3_s4_involution(const EnumeratedGroup& G, const AxisTables& axes,
                                 int base_sub, int sigma_sub);

struct ResurrectionResult {
  Rat root;
  Rat x_coefficient;
  int inv_t = -1;
  bool zero_at_root = false;
};
// Expands (alpha_1, beta_2) = 0 with symbolic x inside the S4 = <sigma,t> and
// the S3 = <rho,t>, and returns the unique root.
ResurrectionResult resurrection_inner_check(const EnumeratedGroup& G, const AxisTables& axes,
                                            const GramMatrix& M, int base_sub, int sigma_sub,
                                            int inv_t);

struct A7Restriction {
  int stabilizer_order = 0;
  int majorana_count = 0;       // expected 105
  int type32_count = 0;         // expected 140
  int type3_count = 0;          // expected 35
  bool x_free = false;          // no symbolic entry inside the restriction
  std::array<int, 3> rank245_modp{};
  int rank245_exact = 0;        // expected 196
  int kernel245 = 0;            // expected 49
  std::array<int, 3> rank105_modp{};  // expected 105
  int relation_count = 0;        // internal Pasechnik vectors (as vectors: independent)
  int relation_rank = 0;         // rank of the vector family over the 280 keys
  int pasechnik_kernel_dim = 0;  // combinations supported on the 245 keys; expected 35
  bool relations_in_kernel = false;
  int rank280_exact = 0;        // 105+140+35 restriction, reported
};

// Restriction to the point stabilizer fixing vertex 0 of the graph action.
A7Restriction a7_restriction(const EnumeratedGroup& G, const AxisTables& axes,
                             const GramMatrix& M, const Rat& x,
                             const std::vector<RelationVector>& rels, int threads);

// Line-based integral export "i j value" (upper triangle) after denominator
// clearing, plus a JSON manifest.
void export_gram(const GramMatrix& M, const Rat& x, const std::string& matrix_path,
                 const std::string& manifest_path);

}  // namespace u35
