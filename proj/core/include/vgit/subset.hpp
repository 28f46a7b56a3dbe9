#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace vgit {

// A subset of the marked points {1..n}, stored as a bitmask (mark i <-> bit i-1).
// n is carried along so complements are well-defined. n <= 63.
class MarkedSubset {
 public:
  MarkedSubset() : mask_(0), n_(0) {}
  MarkedSubset(std::uint64_t mask, int n) : mask_(mask), n_(n) {
    assert(n >= 0 && n <= 63);
    assert(mask <= full_mask(n));
  }

  static MarkedSubset empty(int n) { return {0, n}; }
  static MarkedSubset full(int n) { return {full_mask(n), n}; }
  static MarkedSubset of_marks(const std::vector<int>& marks, int n);
  // The prefix subset {1..k}; handy for symmetric-weight examples.
  static MarkedSubset prefix(int k, int n) { return {full_mask(k), n}; }

  std::uint64_t mask() const { return mask_; }
  int n() const { return n_; }
  int card() const { return std::popcount(mask_); }
  bool empty_set() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full_mask(n_); }
  bool proper_nonempty() const { return mask_ != 0 && !is_full(); }
  bool contains(int mark) const { return (mask_ >> (mark - 1)) & 1; }

  MarkedSubset complement() const { return {full_mask(n_) & ~mask_, n_}; }
  MarkedSubset unite(const MarkedSubset& o) const { return {mask_ | o.mask_, n_}; }
  MarkedSubset intersect(const MarkedSubset& o) const { return {mask_ & o.mask_, n_}; }
  bool disjoint(const MarkedSubset& o) const { return (mask_ & o.mask_) == 0; }
  bool subset_of(const MarkedSubset& o) const { return (mask_ & ~o.mask_) == 0; }

  // Canonical representative under complement identification: the side whose
  // sorted index list is lexicographically smaller, i.e. the side containing
  // mark 1. Only meaningful for nonempty proper subsets.
  MarkedSubset canonical() const { return contains(1) ? *this : complement(); }
  bool is_canonical() const { return contains(1); }

  std::vector<int> marks() const;
  std::string str() const;  // "{1,2,7}"

  friend bool operator==(const MarkedSubset&, const MarkedSubset&) = default;
  friend std::strong_ordering operator<=>(const MarkedSubset& a, const MarkedSubset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

  static std::uint64_t full_mask(int n) {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  }

 private:
  std::uint64_t mask_;
  int n_;
};

}  // namespace vgit
