#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vgit/errors.hpp"
#include "vgit/linearization.hpp"

namespace vgit {

// Caps for the exponential enumerations. Exceeding a cap raises
// CapExceededError instead of silently grinding; callers can raise the caps
// explicitly or through the environment:
//   VGIT_ENUM_CAP       max n for full 2^n subset enumeration   (default 20)
//   VGIT_PARTITION_CAP  max ground-set size for partition search (default 16)
//   VGIT_TREE_CAP       max n for exhaustive dual-tree sets      (default 7)
struct EnumLimits {
  int subset_bits = 20;
  int partition_elems = 16;
  int tree_legs = 7;

  static EnumLimits from_env();
};

void require_subset_cap(int n, const EnumLimits& lim, const char* what);
void require_partition_cap(int elems, const EnumLimits& lim, const char* what);
void require_tree_cap(int n, const EnumLimits& lim, const char* what);

// Visits every canonical (mark-1-containing) nonempty proper subset of {1..n}
// exactly once. Masks arrive in Gray-code order so consecutive subsets differ
// by one element; `weight` is maintained incrementally as c_I.
void for_each_canonical_subset(const Linearization& L,
                               const std::function<void(std::uint64_t, const Rational&)>& fn);

// Mask-only variant (no weights), same visit set, ascending mask order.
void for_each_canonical_mask(int n, const std::function<void(std::uint64_t)>& fn);

// Two-linearization variant maintaining c_I under both weight vectors.
void for_each_canonical_subset2(
    const Linearization& A, const Linearization& B,
    const std::function<void(std::uint64_t, const Rational&, const Rational&)>& fn);

// Set partitions of `ground` (a compact list of marks) into at least
// `min_blocks` nonempty blocks, via restricted-growth strings. Intended for
// small ground sets (test oracles); the production search uses the subset DP
// in wallcross.cpp.
void for_each_partition(const std::vector<int>& ground, int min_blocks,
                        const std::function<bool(const std::vector<std::vector<int>>&)>& fn);

}  // namespace vgit
