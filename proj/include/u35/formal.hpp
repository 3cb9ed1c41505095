#pragma once

#include <map>

#include "u35/rational.hpp"

namespace u35 {

// Sparse rational vector over integer keys. Keys name algebra basis elements
// or global axis ids depending on context; zero coefficients are never stored.
class FormalVector {
 public:
  FormalVector() = default;

  static FormalVector unit(int key) {
    FormalVector v;
    v.c_[key] = 1;
    return v;
  }

  void add(int key, const Rat& value) {
    if (value == 0) return;
    Rat& slot = c_[key];
    slot += value;
    if (slot == 0) c_.erase(key);
  }

  Rat coeff(int key) const {
    auto it = c_.find(key);
    return it == c_.end() ? Rat(0) : it->second;
  }

  bool zero() const { return c_.empty(); }
  size_t terms() const { return c_.size(); }
  const std::map<int, Rat>& entries() const { return c_; }

  FormalVector& operator+=(const FormalVector& o) {
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
  }
  FormalVector& operator-=(const FormalVector& o) {
    for (const auto& [k, v] : o.c_) add(k, -v);
    return *this;
  }
  FormalVector& operator*=(const Rat& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& [k, v] : c_) v *= s;
    return *this;
  }

  friend FormalVector operator+(FormalVector a, const FormalVector& b) { return a += b; }
  friend FormalVector operator-(FormalVector a, const FormalVector& b) { return a -= b; }
  friend FormalVector operator*(const Rat& s, FormalVector a) { return a *= s; }
  friend bool operator==(const FormalVector& a, const FormalVector& b) { return a.c_ == b.c_; }

 private:
  std::map<int, Rat> c_;
};

}  // namespace u35
