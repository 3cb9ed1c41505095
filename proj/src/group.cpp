#include "u35/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <deque>
#include <fstream>

#include "u35/errors.hpp"

namespace u35 {

void PermIndex::reset(size_t capacity_hint) {
  size_t want = std::bit_ceil(std::max<size_t>(16, capacity_hint * 2));
  slots_.assign(want, -1);
  mask_ = want - 1;
  used_ = 0;
}

bool PermIndex::insert(const Permutation& p, int32_t pos,
                       const std::vector<Permutation>& elems) {
  if (slots_.empty() || used_ * 3 > slots_.size() * 2) {
    // rehash
    std::vector<int32_t> old = std::move(slots_);
    reset(std::max<size_t>(used_ * 2, 1024));
    for (int32_t s : old)
      if (s >= 0) insert(elems[s], s, elems);
  }
  uint64_t h = perm_hash(p) & mask_;
  while (slots_[h] >= 0) {
    if (elems[slots_[h]] == p) return false;
    h = (h + 1) & mask_;
  }
  slots_[h] = pos;
  ++used_;
  return true;
}

int32_t PermIndex::find(const Permutation& p, const std::vector<Permutation>& elems) const {
  if (slots_.empty()) return -1;
  uint64_t h = perm_hash(p) & mask_;
  while (slots_[h] >= 0) {
    if (elems[slots_[h]] == p) return slots_[h];
    h = (h + 1) & mask_;
  }
  return -1;
}

EnumeratedGroup::EnumeratedGroup(std::vector<Permutation> elems, std::vector<Permutation> gens)
    : elems_(std::move(elems)), gens_(std::move(gens)) {
  index_.reset(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i)
    index_.insert(elems_[i], static_cast<int32_t>(i), elems_);
}

int32_t EnumeratedGroup::index_of(const Permutation& p) const {
  return index_.find(p, elems_);
}

namespace {

// Breadth-first closure from the identity. Right-multiplies by generators in
// order, so the element ordering is reproducible.
std::vector<Permutation> bfs_closure(const std::vector<Permutation>& gens, size_t cap,
                                     bool* exceeded) {
  std::vector<Permutation> elems;
  PermIndex idx(std::min<size_t>(cap, 1 << 18));
  elems.push_back(Permutation::identity());
  idx.insert(elems[0], 0, elems);
  if (exceeded) *exceeded = false;
  for (size_t head = 0; head < elems.size(); ++head) {
    Permutation cur = elems[head];  // copy: elems may reallocate
    for (const Permutation& g : gens) {
      Permutation next = compose(cur, g);
      int32_t pos = static_cast<int32_t>(elems.size());
      elems.push_back(next);
      if (!idx.insert(next, pos, elems)) {
        elems.pop_back();
        continue;
      }
      if (elems.size() > cap) {
        if (exceeded) {
          *exceeded = true;
          return elems;
        }
        throw CapExceededError("group closure exceeded cap " + std::to_string(cap));
      }
    }
  }
  return elems;
}

}  // namespace

EnumeratedGroup enumerate_group(const std::vector<Permutation>& gens, size_t cap) {
  for (const Permutation& g : gens)
    if (!g.is_bijection()) throw std::invalid_argument("generator is not a permutation");
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  std::vector<Permutation> elems = bfs_closure(gens, cap, nullptr);
  return EnumeratedGroup(std::move(elems), gens);
}

bool SubgroupHandle::contains(const Permutation& p) const {
  if (whole_group) return ambient->contains(p);
  for (const Permutation& e : elems)
    if (e == p) return true;
  return false;
}

SubgroupHandle subgroup_closure(const std::vector<Permutation>& gens, size_t cap,
                                const EnumeratedGroup& ambient) {
  for (const Permutation& g : gens)
    if (!ambient.contains(g))
      throw MembershipError("subgroup generator not in ambient group");
  bool exceeded = false;
  std::vector<Permutation> elems = bfs_closure(gens, cap, &exceeded);
  SubgroupHandle h;
  h.gens = gens;
  h.ambient = &ambient;
  if (exceeded) {
    h.whole_group = true;
  } else {
    h.elems = std::move(elems);
  }
  return h;
}

SubgroupHandle subgroup_closure_uncapped(const std::vector<Permutation>& gens,
                                         const EnumeratedGroup& ambient) {
  return subgroup_closure(gens, ambient.size(), ambient);
}

std::vector<Permutation> conjugacy_class(const Permutation& g, const EnumeratedGroup& G) {
  if (!G.contains(g)) throw MembershipError("element not in group");
  // Orbit under conjugation by the generators.
  std::vector<Permutation> orbit{g};
  PermIndex idx(1024);
  idx.insert(g, 0, orbit);
  for (size_t head = 0; head < orbit.size(); ++head) {
    Permutation cur = orbit[head];
    for (const Permutation& s : G.generators()) {
      Permutation c = conjugate(cur, s);
      int32_t pos = static_cast<int32_t>(orbit.size());
      orbit.push_back(c);
      if (!idx.insert(c, pos, orbit)) orbit.pop_back();
    }
  }
  return orbit;
}

SubgroupHandle centralizer(const Permutation& g, const EnumeratedGroup& G) {
  if (!G.contains(g)) throw MembershipError("element not in group");
  SubgroupHandle h;
  h.ambient = &G;
  for (const Permutation& e : G.elements())
    if (compose(e, g) == compose(g, e)) h.elems.push_back(e);
  h.gens = h.elems;
  return h;
}

SubgroupHandle normalizer(const SubgroupHandle& H, const EnumeratedGroup& G) {
  SubgroupHandle n;
  n.ambient = &G;
  if (H.whole_group) {
    n.whole_group = true;
    n.gens = G.generators();
    return n;
  }
  for (const Permutation& e : G.elements()) {
    bool ok = true;
    for (const Permutation& g : H.gens)
      if (!H.contains(conjugate(g, e))) {
        ok = false;
        break;
      }
    if (ok) n.elems.push_back(e);
  }
  n.gens = n.elems;
  return n;
}

Permutation canonical_conjugator(const Permutation& h, const Permutation& base,
                                 const EnumeratedGroup& G) {
  for (const Permutation& g : G.elements())
    if (conjugate(h, g) == base) return g;
  throw NotConjugateError("elements are not conjugate in the group");
}

Permutation canonical_conjugator(const SubgroupHandle& H, const SubgroupHandle& B,
                                 const EnumeratedGroup& G) {
  if (H.whole_group || B.whole_group) {
    if (H.whole_group && B.whole_group) return Permutation::identity();
    throw NotConjugateError("subgroups are not conjugate");
  }
  if (H.elems.size() != B.elems.size())
    throw NotConjugateError("subgroups are not conjugate (orders differ)");
  for (const Permutation& g : G.elements()) {
    bool ok = true;
    for (const Permutation& x : H.gens)
      if (!B.contains(conjugate(x, g))) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw NotConjugateError("subgroups are not conjugate");
}

namespace {

constexpr char kMagic[8] = {'U', '3', '5', 'G', 'R', 'P', '1', '\0'};

uint64_t fnv64(const uint8_t* data, size_t n, uint64_t h = 1469598103934665603ull) {
  for (size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

void write_rows(std::ofstream& f, const std::vector<Permutation>& v, uint64_t& h) {
  for (const Permutation& p : v) {
    f.write(reinterpret_cast<const char*>(p.im.data()), kPoints);
    h = fnv64(p.im.data(), kPoints, h);
  }
}

}  // namespace

void save_group(const EnumeratedGroup& G, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CacheError("cannot open cache file for writing: " + path);
  uint32_t version = 1;
  uint32_t count = static_cast<uint32_t>(G.size());
  f.write(kMagic, 8);
  f.write(reinterpret_cast<const char*>(&version), 4);
  f.write(reinterpret_cast<const char*>(&count), 4);
  uint64_t h = 1469598103934665603ull;
  write_rows(f, G.elements(), h);
  uint32_t gcount = static_cast<uint32_t>(G.generators().size());
  f.write(reinterpret_cast<const char*>(&gcount), 4);
  h = fnv64(reinterpret_cast<const uint8_t*>(&gcount), 4, h);
  write_rows(f, G.generators(), h);
  f.write(reinterpret_cast<const char*>(&h), 8);
  if (!f) throw CacheError("write failure on cache file: " + path);
}

EnumeratedGroup load_group(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheError("cannot open cache file: " + path);
  char magic[8];
  uint32_t version = 0, count = 0;
  f.read(magic, 8);
  f.read(reinterpret_cast<char*>(&version), 4);
  f.read(reinterpret_cast<char*>(&count), 4);
  if (!f || std::memcmp(magic, kMagic, 8) != 0)
    throw CacheError("bad magic in cache file: " + path);
  if (version != 1) throw CacheError("unsupported cache version");
  uint64_t h = 1469598103934665603ull;
  auto read_rows = [&](uint32_t n) {
    std::vector<Permutation> v(n);
    for (uint32_t i = 0; i < n; ++i) {
      f.read(reinterpret_cast<char*>(v[i].im.data()), kPoints);
      if (!f) throw CacheError("truncated cache file: " + path);
      h = fnv64(v[i].im.data(), kPoints, h);
      if (!v[i].is_bijection()) throw CacheError("checksum error: corrupt row in " + path);
    }
    return v;
  };
  std::vector<Permutation> elems = read_rows(count);
  uint32_t gcount = 0;
  f.read(reinterpret_cast<char*>(&gcount), 4);
  if (!f) throw CacheError("truncated cache file: " + path);
  h = fnv64(reinterpret_cast<const uint8_t*>(&gcount), 4, h);
  std::vector<Permutation> gens = read_rows(gcount);
  uint64_t stored = 0;
  f.read(reinterpret_cast<char*>(&stored), 8);
  if (!f || stored != h) throw CacheError("checksum error in cache file: " + path);
  return EnumeratedGroup(std::move(elems), std::move(gens));
}

}  // namespace u35
