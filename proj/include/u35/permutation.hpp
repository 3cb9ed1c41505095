#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace u35 {

// All permutations act on a fixed domain of 50 points (the Hoffman-Singleton
// vertices). Smaller structures are embedded by fixing the unused points.
inline constexpr int kPoints = 50;

// Right action: x^p = im[x]. compose(p,q) applies p first, then q.
struct Permutation {
  std::array<uint8_t, kPoints> im;

  static Permutation identity() {
    Permutation p;
    for (int i = 0; i < kPoints; ++i) p.im[i] = static_cast<uint8_t>(i);
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < kPoints; ++i)
      if (im[i] != i) return false;
    return true;
  }

  bool is_bijection() const {
    uint64_t seen = 0;
    for (int i = 0; i < kPoints; ++i) {
      if (im[i] >= kPoints) return false;
      seen |= uint64_t(1) << im[i];
    }
    return seen == (uint64_t(1) << kPoints) - 1;
  }

  int operator()(int x) const { return im[x]; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.im == b.im; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.im <=> b.im; }
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r;
  for (int i = 0; i < kPoints; ++i) r.im[i] = q.im[p.im[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  for (int i = 0; i < kPoints; ++i) r.im[p.im[i]] = static_cast<uint8_t>(i);
  return r;
}

// g^{-1} p g, computed without forming g^{-1}: h satisfies h[g[x]] = g[p[x]].
inline Permutation conjugate(const Permutation& p, const Permutation& g) {
  Permutation r;
  for (int i = 0; i < kPoints; ++i) r.im[g.im[i]] = g.im[p.im[i]];
  return r;
}

inline int perm_order(const Permutation& p) {
  std::array<bool, kPoints> done{};
  int64_t ord = 1;
  for (int i = 0; i < kPoints; ++i) {
    if (done[i]) continue;
    int len = 0, j = i;
    do {
      done[j] = true;
      j = p.im[j];
      ++len;
    } while (j != i);
    ord = std::lcm<int64_t>(ord, len);
  }
  return static_cast<int>(ord);
}

inline int fixed_point_count(const Permutation& p) {
  int c = 0;
  for (int i = 0; i < kPoints; ++i)
    if (p.im[i] == i) ++c;
  return c;
}

inline uint64_t perm_hash(const Permutation& p) {
  // FNV-1a over the image bytes.
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < kPoints; ++i) {
    h ^= p.im[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Cycle notation on moved points, e.g. "(0 1 2)(4 7)"; "()" for the identity.
std::string cycle_string(const Permutation& p);

// Builds a permutation from explicit cycles; points absent from all cycles
// are fixed. Throws on repeated or out-of-range points.
Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles);

}  // namespace u35
