#pragma once

#include <initializer_list>
#include <vector>

#include "minkdec/coxeter.hpp"
#include "minkdec/rational.hpp"
#include "minkdec/subsets.hpp"

namespace testutil {

inline minkdec::Subset S(std::initializer_list<int> elems) {
  minkdec::Subset s = 0;
  for (int e : elems) s = minkdec::with_element(s, e);
  return s;
}

inline minkdec::CoxeterPartition part(int n, std::initializer_list<int> up) {
  return minkdec::CoxeterPartition::from_elements(n, std::vector<int>(up));
}

inline std::vector<minkdec::Rat> point(std::initializer_list<long> coords) {
  std::vector<minkdec::Rat> v;
  for (long c : coords) v.emplace_back(c);
  return v;
}

}  // namespace testutil
