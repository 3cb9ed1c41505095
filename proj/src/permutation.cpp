#include "u35/permutation.hpp"

#include <stdexcept>

namespace u35 {

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::array<bool, kPoints> done{};
  for (int i = 0; i < kPoints; ++i) {
    if (done[i] || p.im[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      done[j] = true;
      j = p.im[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
  Permutation p = Permutation::identity();
  std::array<bool, kPoints> used{};
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= kPoints || b < 0 || b >= kPoints)
        throw std::invalid_argument("cycle point out of range");
      if (used[a]) throw std::invalid_argument("repeated point in cycles");
      used[a] = true;
      p.im[a] = static_cast<uint8_t>(b);
    }
  }
  return p;
}

}  // namespace u35
