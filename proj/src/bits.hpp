#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace tgp::detail {

// Small dynamic bitset over vertex indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool all() const { return count() == n_; }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  Bits complement() const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    if (n_ & 63) r.w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    return r;
  }
  // Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(k * 64 + b));
        x &= x - 1;
      }
    }
  }
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }
  bool operator==(const Bits& o) const { return w_ == o.w_; }
  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto x : w_) h = (h ^ x) * 1099511628211ull;
    return h;
  }
  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace tgp::detail
