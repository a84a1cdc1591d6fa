#pragma once

#include <vector>

#include "minkdec/subsets.hpp"

namespace minkdec {

// Splitting of [n] into a down set and an up set. The up set is any subset of
// the open range (1, n); the down set is the complement and therefore always
// contains 1 and n. Immutable after construction.
class CoxeterPartition {
 public:
  CoxeterPartition(int n, Subset up_set);

  static CoxeterPartition from_elements(int n, const std::vector<int>& up);

  int n() const { return n_; }
  Subset up_set() const { return up_; }
  Subset down_set() const { return down_; }

  bool is_up(int element) const { return contains(up_, element); }
  bool is_down(int element) const { return contains(down_, element); }

  // d_1 < ... < d_ell with d_1 = 1 and d_ell = n.
  const std::vector<int>& down_elements() const { return down_elems_; }
  // u_1 < ... < u_m.
  const std::vector<int>& up_elements() const { return up_elems_; }

  // Next down element strictly above `label`, or n+1 if none. `label` may be
  // 0. Symmetrically for the predecessor, which may return 0.
  int down_successor(int label) const;
  int down_predecessor(int label) const;

  bool operator==(const CoxeterPartition& other) const {
    return n_ == other.n_ && up_ == other.up_;
  }

 private:
  int n_;
  Subset up_;
  Subset down_;
  std::vector<int> down_elems_;
  std::vector<int> up_elems_;
};

// All 2^(n-2) partitions of [n], ordered by ascending up-set mask.
std::vector<CoxeterPartition> all_partitions(int n);

}  // namespace minkdec
