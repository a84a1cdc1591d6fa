#pragma once

#include <vector>

#include "minkdec/coxeter.hpp"
#include "minkdec/subsets.hpp"

namespace minkdec {

enum class DiagonalKind { proper, non_proper_boundary, degenerate };

// Unordered label pair {x, y} with x <= y, classified against a polygon.
struct Diagonal {
  int x = 0;
  int y = 0;
  DiagonalKind kind = DiagonalKind::degenerate;

  bool is_proper() const { return kind == DiagonalKind::proper; }
  bool operator==(const Diagonal& other) const {
    return x == other.x && y == other.y;
  }
  bool operator<(const Diagonal& other) const {
    return x != other.x ? x < other.x : y < other.y;
  }
};

// Convex (n+2)-gon with labels {0,...,n+1}. The stored cycle starts at label 0
// and runs through the down path first: (0, d_1, ..., d_ell, n+1, u_m, ..., u_1).
// Increasing cycle index plays the role of counter-clockwise traversal.
class LabeledPolygon {
 public:
  explicit LabeledPolygon(const CoxeterPartition& partition);

  const CoxeterPartition& partition() const { return partition_; }
  const std::vector<int>& cycle() const { return cycle_; }
  int size() const { return static_cast<int>(cycle_.size()); }

  // Cycle index of a label; throws std::out_of_range for labels outside
  // {0,...,n+1}.
  int position(int label) const;

  bool boundary_adjacent(int x, int y) const;

  // Classifies the pair {x, y} relative to this polygon.
  Diagonal diagonal(int x, int y) const;

 private:
  CoxeterPartition partition_;
  std::vector<int> cycle_;
  std::vector<int> pos_;
};

LabeledPolygon build_polygon(const CoxeterPartition& partition);

// All C(n+2, 2) distinct label pairs with kind classified, sorted by (x, y).
// Exactly (n+2)(n-1)/2 of them are proper.
std::vector<Diagonal> all_diagonals(const LabeledPolygon& polygon);

// The subset of [n] read off the strict right-hand side of the diagonal
// oriented from its smaller to its larger label, with 0 and n+1 replaced by
// the smaller respectively larger endpoint lying in the up set. Non-proper
// and degenerate diagonals follow the extended conventions:
//   {0, n+1} with empty up set      -> [n]
//   both endpoints in Do u {0,n+1}  -> {}
//   otherwise                       -> [n]
Subset right_set(const LabeledPolygon& polygon, const Diagonal& diagonal);

// Strict interleaving of the endpoints in the cyclic vertex order. Both
// diagonals must be proper; shared endpoints do not cross.
bool diagonals_cross(const LabeledPolygon& polygon, const Diagonal& d1,
                     const Diagonal& d2);

}  // namespace minkdec
