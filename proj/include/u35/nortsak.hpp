#pragma once

#include <array>
#include <string>
#include <vector>

#include "u35/formal.hpp"
#include "u35/rational.hpp"

namespace u35 {

enum class AlgebraType { T2A, T2B, T3A, T3C, T4A, T4B, T5A, T6A };
inline constexpr std::array<AlgebraType, 8> kAllAlgebras = {
    AlgebraType::T2A, AlgebraType::T2B, AlgebraType::T3A, AlgebraType::T3C,
    AlgebraType::T4A, AlgebraType::T4B, AlgebraType::T5A, AlgebraType::T6A};

const char* algebra_tag(AlgebraType t);
AlgebraType algebra_from_tag(const std::string& tag);

// One of the eight dihedral algebras, with the full multiplication and inner
// product tables. Built from a seed data file: the printed identities plus the
// handful of entries forced by the 2A/3A subalgebra structure; everything else
// is filled in by the dihedral index symmetry, and any entry reachable two
// ways must agree.
struct AlgebraSpec {
  AlgebraType type;
  int dim = 0;
  int cycle = 0;  // number of cyclic axes a_i, indices mod cycle
  std::vector<std::string> labels;
  std::vector<bool> majorana;
  std::vector<std::vector<FormalVector>> table;  // products, dim x dim
  std::vector<std::vector<Rat>> gram;            // inner products

  int index_of(const std::string& label) const;     // -1 when absent
  int cyclic_index(int k) const;                    // basis position of a_{k mod cycle}
  std::vector<int> majorana_axes() const;

  FormalVector mul(const FormalVector& x, const FormalVector& y) const;
  Rat inner(const FormalVector& x, const FormalVector& y) const;
};

AlgebraSpec build_algebra(AlgebraType t, const std::string& data_dir);
std::vector<AlgebraSpec> build_all_algebras(const std::string& data_dir);

// Default data directory: $U35_DATA if set, else the compiled-in source path.
std::string default_data_dir();

// Adjoint spectrum of a Majorana axis, in the fixed order 1, 0, 1/4, 1/32.
const std::array<Rat, 4>& majorana_spectrum();

struct Eigenspaces {
  std::array<std::vector<FormalVector>, 4> vecs;  // per spectrum slot
  int total_dim() const {
    int n = 0;
    for (const auto& v : vecs) n += static_cast<int>(v.size());
    return n;
  }
  // v is in the span of slot s's vectors
  bool contains(int slot, const FormalVector& v) const;
};

// Exact kernels of ad(axis) - lambda, for the four eigenvalues. Throws
// SpectrumError when the eigenspaces do not fill the algebra (M4) or the
// 1-eigenspace is not the line through the axis (M5).
Eigenspaces ad_eigenspaces(const AlgebraSpec& alg, int axis);

struct FusionTable {
  // allowed[i][j] is a bitmask over spectrum slots
  std::array<std::array<uint8_t, 4>, 4> allowed{};
  static FusionTable standard();
  bool ok(int i, int j, int slot) const { return (allowed[i][j] >> slot) & 1; }
};

struct FusionReport {
  bool pass = true;
  struct Violation {
    int slot_x, slot_y, bad_slot;
    int x_index, y_index;  // positions in the eigenbasis lists
  };
  std::vector<Violation> violations;
};

FusionReport verify_fusion(const AlgebraSpec& alg, int axis, const FusionTable& table);

struct TauSigmaReport {
  bool tau_ok = false;
  bool sigma_ok = false;
  std::string detail;
  bool pass() const { return tau_ok && sigma_ok; }
};

// tau negates the 1/32-eigenspace; sigma negates the 1/4-part of the
// tau-fixed subalgebra. Both must preserve the product on their domains.
TauSigmaReport verify_tau_sigma(const AlgebraSpec& alg, int axis);

// (u.u, v.v) >= (u.v, u.v), exactly.
bool norton_inequality_check(const AlgebraSpec& alg, const FormalVector& u,
                             const FormalVector& v);

// All leading principal minors of the basis Gram matrix are positive.
bool gram_positive_definite(const AlgebraSpec& alg);

// (x, y*z) == (x*y, z) over all basis triples.
bool associativity_holds(const AlgebraSpec& alg);

// The tau image of v under the axis' eigenspace decomposition.
FormalVector tau_image(const AlgebraSpec& alg, int axis, const FormalVector& v);

// The classical eigenvector list for ad(a0), as (spectrum slot, vector)
// pairs. The two long 6A rows are typeset inconsistently in the source
// table; for 6A this returns the computationally verified forms (the
// distance-2 subalgebra vectors), so every returned vector is an exact
// eigenvector of the stated eigenvalue.
std::vector<std::pair<int, FormalVector>> table4_vectors(const AlgebraSpec& alg);

}  // namespace u35
