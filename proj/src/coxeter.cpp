#include "minkdec/coxeter.hpp"

#include <stdexcept>
#include <string>

namespace minkdec {

CoxeterPartition::CoxeterPartition(int n, Subset up_set) : n_(n), up_(up_set) {
  if (n < 2) {
    throw std::invalid_argument("ground set must have at least 2 elements");
  }
  if (n > kMaxGroundSet) {
    throw std::invalid_argument("ground set larger than " +
                                std::to_string(kMaxGroundSet));
  }
  // The up set lives strictly between 1 and n.
  Subset interior = full_set(n) & ~Subset{1} & ~(Subset{1} << (n - 1));
  if ((up_set & ~interior) != 0) {
    throw std::invalid_argument("up set must be contained in the open range (1, n)");
  }
  down_ = full_set(n) & ~up_;
  down_elems_ = elements(down_);
  up_elems_ = elements(up_);
}

CoxeterPartition CoxeterPartition::from_elements(int n,
                                                 const std::vector<int>& up) {
  return CoxeterPartition(n, subset_from(up, n));
}

int CoxeterPartition::down_successor(int label) const {
  for (int d : down_elems_) {
    if (d > label) return d;
  }
  return n_ + 1;
}

int CoxeterPartition::down_predecessor(int label) const {
  int best = 0;
  for (int d : down_elems_) {
    if (d < label) best = d;
  }
  return best;
}

std::vector<CoxeterPartition> all_partitions(int n) {
  std::vector<CoxeterPartition> out;
  if (n < 2) return out;
  Subset interior = full_set(n) & ~Subset{1} & ~(Subset{1} << (n - 1));
  // Iterate the subsets of the interior mask in ascending order.
  Subset up = 0;
  while (true) {
    out.emplace_back(n, up);
    if (up == interior) break;
    up = (up - interior) & interior;  // next subset of `interior`
  }
  return out;
}

}  // namespace minkdec
