#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace minkdec {

// Subset of the ground set [n] = {1,...,n}, element i stored at bit i-1.
using Subset = std::uint32_t;

// Hard cap on the ground-set size; every subset loop is O(2^n).
inline constexpr int kMaxGroundSet = 24;

inline Subset full_set(int n) { return (Subset{1} << n) - 1; }

inline bool contains(Subset s, int element) {
  return (s >> (element - 1)) & 1u;
}

inline Subset with_element(Subset s, int element) {
  return s | (Subset{1} << (element - 1));
}

inline int set_size(Subset s) { return std::popcount(s); }

inline int min_element(Subset s) { return std::countr_zero(s) + 1; }

inline int max_element(Subset s) {
  return 32 - std::countl_zero(s);
}

// Ascending element list.
std::vector<int> elements(Subset s);

// Builds a subset from element values; throws if any lies outside [1, n].
Subset subset_from(const std::vector<int>& elems, int n);

// All non-empty subsets of [n] ordered by (size, lexicographic element list).
// This is the canonical order used for every serialized table.
std::vector<Subset> canonical_subsets(int n);

}  // namespace minkdec
