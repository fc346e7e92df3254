#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cdkit {

// Fixed-size bit vector over element indices 0..n-1. Subgroup membership
// sets use this as their canonical identity: element indexing is fixed per
// Group, so equal bit vectors mean equal subgroups.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r(a.n_);
    for (std::size_t k = 0; k < r.w_.size(); ++k) r.w_[k] = a.w_[k] & b.w_[k];
    return r;
  }

  friend Bitset operator|(const Bitset& a, const Bitset& b) {
    Bitset r(a.n_);
    for (std::size_t k = 0; k < r.w_.size(); ++k) r.w_[k] = a.w_[k] | b.w_[k];
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // Lexicographic order on the bit sequence b_0 b_1 ... b_{n-1} with 0 < 1.
  bool lex_less(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] != o.w_[k]) {
        int low = std::countr_zero(w_[k] ^ o.w_[k]);
        return !((w_[k] >> low) & 1);
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  // Ascending list of set bit positions.
  std::vector<int> bits() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        out.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace cdkit
