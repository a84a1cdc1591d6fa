#include "minkdec/subsets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minkdec {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s != 0) {
    int e = min_element(s);
    out.push_back(e);
    s &= s - 1;
  }
  return out;
}

Subset subset_from(const std::vector<int>& elems, int n) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside ground set [1," +
                                  std::to_string(n) + "]");
    }
    s = with_element(s, e);
  }
  return s;
}

std::vector<Subset> canonical_subsets(int n) {
  std::vector<Subset> all;
  all.reserve((std::size_t{1} << n) - 1);
  for (Subset s = 1; s <= full_set(n); ++s) all.push_back(s);
  std::sort(all.begin(), all.end(), [](Subset a, Subset b) {
    int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    return elements(a) < elements(b);
  });
  return all;
}

}  // namespace minkdec
