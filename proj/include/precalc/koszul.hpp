#pragma once

#include <cstdint>
#include <vector>

#include "precalc/error.hpp"

namespace precalc {

/// Sign accumulated when reordering graded objects: bubble-sorts the
/// permutation and flips the sign once per adjacent swap of two
/// odd-degree entries.  `perm[i]` is the source position of the object
/// that ends up in slot i; `degrees` are the degrees in source order.
inline int koszul_sign(std::vector<std::size_t> perm, const std::vector<long>& degrees) {
  require(perm.size() == degrees.size(), "koszul_sign: length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    require(p < perm.size() && !seen[p], "koszul_sign: not a permutation");
    seen[p] = true;
  }
  int sign = 1;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i)
    for (std::size_t j = 0; j + 1 < perm.size() - i; ++j)
      if (perm[j] > perm[j + 1]) {
        if ((degrees[perm[j]] & 1) && (degrees[perm[j + 1]] & 1)) sign = -sign;
        std::swap(perm[j], perm[j + 1]);
      }
  return sign;
}

/// Sign of merging two disjoint sets of odd generators (bitmask form):
/// each generator of `b` moves past the generators of `a` above it.
inline int merge_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  for (std::uint64_t bb = b; bb; bb &= bb - 1) {
    std::uint64_t bit = bb & (~bb + 1);
    std::uint64_t above = a & ~((bit << 1) - 1);
    swaps += __builtin_popcountll(above);
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign picked up by an odd left derivative for generator `g` acting on a
/// term whose generator mask is `mask`: one flip per generator below g.
inline int left_derivative_sign(std::uint64_t mask, unsigned g) {
  std::uint64_t below = mask & ((std::uint64_t(1) << g) - 1);
  return (__builtin_popcountll(below) & 1) ? -1 : 1;
}

inline int parity_sign(long a, long b) { return ((a & 1) && (b & 1)) ? -1 : 1; }

inline int pow_sign(long e) { return (e & 1) ? -1 : 1; }

}  // namespace precalc
