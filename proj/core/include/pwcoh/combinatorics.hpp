#pragma once

// Bitmask utilities for exterior-algebra index sets. A Mask encodes a
// strictly increasing set of generator indices, bit b standing for index b.
// All signs follow from the convention that generators anticommute and a
// stored monomial lists its generators in ascending index order.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace pwcoh {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_bits(Mask m) {
  std::vector<int> out;
  for (int b = 0; m != 0; ++b, m >>= 1)
    if (m & 1u) out.push_back(b);
  return out;
}

struct MaskInsert {
  Mask mask;
  int sign;
};

// theta_bit ^ theta_m = sign * theta_{m with bit}; nullopt if bit repeats.
inline std::optional<MaskInsert> front_insert(Mask m, int bit) {
  const Mask b = Mask{1} << bit;
  if (m & b) return std::nullopt;
  const int below = popcount(m & (b - 1));
  return MaskInsert{m | b, (below % 2 == 0) ? 1 : -1};
}

// theta_a ^ theta_b = sign * theta_{a|b} for disjoint ascending sets a, b.
inline int shuffle_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    inversions += popcount(b & ((Mask{1} << bit) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// All j-element subsets of {0,...,n-1} in lexicographic order of the sorted
// index tuples. This is the basis order used for exterior powers.
inline std::vector<Mask> subsets_of_size(int n, int j) {
  std::vector<Mask> out;
  if (j < 0 || j > n) return out;
  std::vector<int> idx(j);
  for (int i = 0; i < j; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= Mask{1} << v;
    out.push_back(m);
    if (j == 0) break;
    int i = j - 1;
    while (i >= 0 && idx[i] == n - j + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

}  // namespace pwcoh
