#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "u35/permutation.hpp"

namespace u35 {

// Open-addressing hash from permutation to its position in a fixed element
// vector. The vector must outlive the index.
class PermIndex {
 public:
  PermIndex() = default;
  explicit PermIndex(size_t capacity_hint) { reset(capacity_hint); }

  void reset(size_t capacity_hint);
  // Inserts p (stored at `pos` in the backing vector). Returns false if an
  // equal permutation was already present.
  bool insert(const Permutation& p, int32_t pos, const std::vector<Permutation>& elems);
  int32_t find(const Permutation& p, const std::vector<Permutation>& elems) const;

 private:
  std::vector<int32_t> slots_;
  uint64_t mask_ = 0;
  size_t used_ = 0;
};

// A fully enumerated permutation group. Elements are stored in breadth-first
// order from the identity, composing with the generators in their given
// order; this ordering is the tie-break for every "first element" rule.
class EnumeratedGroup {
 public:
  EnumeratedGroup() = default;
  EnumeratedGroup(std::vector<Permutation> elems, std::vector<Permutation> gens);

  size_t size() const { return elems_.size(); }
  const Permutation& at(size_t i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  int32_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

 private:
  std::vector<Permutation> elems_;
  std::vector<Permutation> gens_;
  PermIndex index_;
};

// Closure of the generators under composition. Throws CapExceededError if the
// group grows past `cap`.
EnumeratedGroup enumerate_group(const std::vector<Permutation>& gens, size_t cap);

// A subgroup of an enumerated ambient group: generator list plus cached
// element set. When the closure exceeds the cap the handle degenerates to a
// "whole group" sentinel; with cap 2520 this is sound for U3(5) because its
// only subgroup of order > 2520 is the group itself.
struct SubgroupHandle {
  std::vector<Permutation> gens;
  std::vector<Permutation> elems;  // empty when whole_group
  bool whole_group = false;
  const EnumeratedGroup* ambient = nullptr;

  size_t order() const { return whole_group ? ambient->size() : elems.size(); }
  bool contains(const Permutation& p) const;
  const Permutation& element(size_t i) const {
    return whole_group ? ambient->at(i) : elems[i];
  }
};

SubgroupHandle subgroup_closure(const std::vector<Permutation>& gens, size_t cap,
                                const EnumeratedGroup& ambient);
// Closure without the sentinel shortcut (audit path).
SubgroupHandle subgroup_closure_uncapped(const std::vector<Permutation>& gens,
                                         const EnumeratedGroup& ambient);

std::vector<Permutation> conjugacy_class(const Permutation& g, const EnumeratedGroup& G);
SubgroupHandle centralizer(const Permutation& g, const EnumeratedGroup& G);
SubgroupHandle normalizer(const SubgroupHandle& H, const EnumeratedGroup& G);

// First g in enumeration order with h^g = base. Throws NotConjugateError.
Permutation canonical_conjugator(const Permutation& h, const Permutation& base,
                                 const EnumeratedGroup& G);
// Same for subgroups: first g with H^g = B as sets.
Permutation canonical_conjugator(const SubgroupHandle& H, const SubgroupHandle& B,
                                 const EnumeratedGroup& G);

// Binary cache: 16-byte header (magic "U35GRP1\0", u32 version, u32 count),
// count rows of 50 image bytes for the elements, then the generator count and
// generator rows in the same format, and a trailing 8-byte FNV checksum.
void save_group(const EnumeratedGroup& G, const std::string& path);
EnumeratedGroup load_group(const std::string& path);  // throws CacheError

}  // namespace u35
