#include "matrealize/subset.hpp"

#include <algorithm>

namespace matrealize {

std::vector<int> subset_elements(Mask s) {
  std::vector<int> out;
  out.reserve(subset_size(s));
  while (s != 0) {
    int bit = std::countr_zero(s);
    out.push_back(bit + 1);
    s &= s - 1;
  }
  return out;
}

Mask subset_from_elements(std::span<const int> elems) {
  Mask s = 0;
  for (int e : elems) s = subset_add(s, e);
  return s;
}

std::string subset_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

bool tuple_less(Mask a, Mask b) {
  if (a == b) return false;
  if (subset_size(a) == subset_size(b)) {
    // Equal sizes: the smallest element where membership differs belongs to
    // the smaller tuple.
    Mask low = (a ^ b) & -(a ^ b);
    return (a & low) != 0;
  }
  std::vector<int> ea = subset_elements(a);
  std::vector<int> eb = subset_elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::vector<Mask> subsets_of_size(int m, int d) {
  std::vector<Mask> out;
  Mask limit = full_set(m);
  for (Mask s = 0; s <= limit; ++s) {
    if (subset_size(s) == d) out.push_back(s);
    if (s == limit) break;
  }
  return out;
}

std::vector<Mask> subsets_of_size_lex(int m, int d) {
  std::vector<Mask> out = subsets_of_size(m, d);
  std::sort(out.begin(), out.end(), tuple_less);
  return out;
}

}  // namespace matrealize
