#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace matrealize {

// Subsets of the ground set {1,...,m} as bitmasks: element e <-> bit (e-1).
// Ground sets stay small (m <= 31 with the CLI guard at 7), so one 32-bit
// word is plenty.
using Mask = std::uint32_t;

inline int subset_size(Mask s) { return std::popcount(s); }
inline bool subset_contains(Mask s, int e) { return (s >> (e - 1)) & 1u; }
inline Mask subset_add(Mask s, int e) { return s | (Mask{1} << (e - 1)); }
inline Mask subset_remove(Mask s, int e) { return s & ~(Mask{1} << (e - 1)); }
inline Mask full_set(int m) { return (Mask{1} << m) - 1; }

std::vector<int> subset_elements(Mask s);  // ascending, 1-based
Mask subset_from_elements(std::span<const int> elems);
std::string subset_to_string(Mask s);  // "{1,2,4}"

// Reverse-lexicographic order on equal-size subsets: compare the sorted
// tuples from their largest elements downward; the first differing element
// decides, smaller wins. On equal-popcount masks this coincides with the
// numeric order (the highest differing bit is exactly that element).
inline bool revlex_less(Mask a, Mask b) { return a < b; }

// Lexicographic order on the ascending tuples; a strict prefix sorts first.
bool tuple_less(Mask a, Mask b);

// All d-subsets of {1,...,m}, in revlex order.
std::vector<Mask> subsets_of_size(int m, int d);

// All d-subsets of {1,...,m}, in tuple-lex order.
std::vector<Mask> subsets_of_size_lex(int m, int d);

}  // namespace matrealize
