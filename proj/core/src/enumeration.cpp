#include "vgit/enumeration.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace vgit {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 1 || parsed > 62) return fallback;
  return static_cast<int>(parsed);
}

}  // namespace

EnumLimits EnumLimits::from_env() {
  EnumLimits lim;
  lim.subset_bits = env_int("VGIT_ENUM_CAP", lim.subset_bits);
  lim.partition_elems = env_int("VGIT_PARTITION_CAP", lim.partition_elems);
  lim.tree_legs = env_int("VGIT_TREE_CAP", lim.tree_legs);
  return lim;
}

void require_subset_cap(int n, const EnumLimits& lim, const char* what) {
  if (n > lim.subset_bits)
    throw CapExceededError(std::string(what) + " needs full enumeration of 2^" +
                               std::to_string(n) +
                               " subsets; cap is n <= " + std::to_string(lim.subset_bits) +
                               " (raise VGIT_ENUM_CAP to override)",
                           lim.subset_bits);
}

void require_partition_cap(int elems, const EnumLimits& lim, const char* what) {
  if (elems > lim.partition_elems)
    throw CapExceededError(std::string(what) + " needs partition search over " +
                               std::to_string(elems) + " elements; cap is " +
                               std::to_string(lim.partition_elems) +
                               " (raise VGIT_PARTITION_CAP to override)",
                           lim.partition_elems);
}

void require_tree_cap(int n, const EnumLimits& lim, const char* what) {
  if (n > lim.tree_legs)
    throw CapExceededError(std::string(what) + " enumerates all dual trees on " +
                               std::to_string(n) + " legs; cap is n <= " +
                               std::to_string(lim.tree_legs) +
                               " (raise VGIT_TREE_CAP to override)",
                           lim.tree_legs);
}

void for_each_canonical_subset(
    const Linearization& L, const std::function<void(std::uint64_t, const Rational&)>& fn) {
  const int n = L.n();
  const std::uint64_t full = MarkedSubset::full_mask(n);
  std::uint64_t mask = 1;  // {1}
  Rational weight = L.weight(1);
  fn(mask, weight);
  // Gray code over bits 1..n-1; bit 0 stays set throughout.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::uint64_t gray = 0;
  for (std::uint64_t g = 1; g < count; ++g) {
    std::uint64_t next = g ^ (g >> 1);
    int bit = std::countr_zero(gray ^ next) + 1;  // toggled mark bit
    gray = next;
    if (gray & (std::uint64_t{1} << (bit - 1))) {
      mask |= std::uint64_t{1} << bit;
      weight += L.weight(bit + 1);
    } else {
      mask &= ~(std::uint64_t{1} << bit);
      weight -= L.weight(bit + 1);
    }
    if (mask == full) continue;
    fn(mask, weight);
  }
}

void for_each_canonical_mask(int n, const std::function<void(std::uint64_t)>& fn) {
  const std::uint64_t full = MarkedSubset::full_mask(n);
  for (std::uint64_t m = 1; m < full; m += 2) fn(m);
}

void for_each_canonical_subset2(
    const Linearization& A, const Linearization& B,
    const std::function<void(std::uint64_t, const Rational&, const Rational&)>& fn) {
  const int n = A.n();
  const std::uint64_t full = MarkedSubset::full_mask(n);
  std::uint64_t mask = 1;
  Rational wa = A.weight(1), wb = B.weight(1);
  fn(mask, wa, wb);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::uint64_t gray = 0;
  for (std::uint64_t g = 1; g < count; ++g) {
    std::uint64_t next = g ^ (g >> 1);
    int bit = std::countr_zero(gray ^ next) + 1;
    gray = next;
    if (gray & (std::uint64_t{1} << (bit - 1))) {
      mask |= std::uint64_t{1} << bit;
      wa += A.weight(bit + 1);
      wb += B.weight(bit + 1);
    } else {
      mask &= ~(std::uint64_t{1} << bit);
      wa -= A.weight(bit + 1);
      wb -= B.weight(bit + 1);
    }
    if (mask == full) continue;
    fn(mask, wa, wb);
  }
}

namespace {

bool partitions_rec(const std::vector<int>& ground, std::vector<int>& block_of, size_t i,
                    int num_blocks, int min_blocks,
                    const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
  if (i == ground.size()) {
    if (num_blocks < min_blocks) return true;
    std::vector<std::vector<int>> blocks(num_blocks);
    for (size_t j = 0; j < ground.size(); ++j) blocks[block_of[j]].push_back(ground[j]);
    return fn(blocks);
  }
  for (int b = 0; b <= num_blocks; ++b) {
    block_of[i] = b;
    int nb = (b == num_blocks) ? num_blocks + 1 : num_blocks;
    if (!partitions_rec(ground, block_of, i + 1, nb, min_blocks, fn)) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(const std::vector<int>& ground, int min_blocks,
                        const std::function<bool(const std::vector<std::vector<int>>&)>& fn) {
  if (ground.empty()) return;
  std::vector<int> block_of(ground.size(), 0);
  partitions_rec(ground, block_of, 0, 0, min_blocks, fn);
}

}  // namespace vgit
