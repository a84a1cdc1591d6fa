#pragma once

#include <array>
#include <string>
#include <vector>

#include "minkdec/coxeter.hpp"
#include "minkdec/polygon.hpp"
#include "minkdec/subsets.hpp"

namespace minkdec {

// Open down interval (lo, hi): the down-set elements strictly between lo and
// hi, both of which lie in Do u {0, n+1}. Empty intervals keep the index r of
// the consecutive down pair (d_r, d_{r+1}) that defines them, so two empty
// intervals at different positions stay distinct.
struct DownInterval {
  int lo = 0;
  int hi = 0;
  Subset elems = 0;
  int empty_index = 0;  // r >= 1 when elems is empty, 0 otherwise

  bool empty() const { return elems == 0; }
};

// Closed up interval [alpha, beta]: the up-set elements between alpha and
// beta inclusive. Never empty.
struct UpInterval {
  int alpha = 0;
  int beta = 0;
  Subset elems = 0;
};

// One nested component: a down interval together with the up intervals it
// hosts, plus the associated non-crossing diagonals and the index set W of
// the proper ones (1-based positions into `diagonals`).
struct NestedComponent {
  DownInterval down;
  std::vector<UpInterval> ups;
  std::vector<Diagonal> diagonals;
  std::vector<int> proper_indices;  // W, ascending
  int rightmost = 0;                // max W, 0 when W is empty

  Subset members() const;
};

struct UpDownDecomposition {
  Subset subject = 0;
  int type_v = 0;  // number of components
  int type_w = 0;  // total number of up intervals
  std::vector<NestedComponent> components;
};

// Up-and-down interval decomposition of a non-empty I, components ordered
// left to right. Throws std::invalid_argument for empty I.
UpDownDecomposition decompose(const CoxeterPartition& partition, Subset I);

// Same decomposition with per-component diagonals, W and rightmost index
// filled in. For proper subsets I the reconstruction identity
//   I = union_i ( R_{delta_{i,m_i}} \ union_{j in W_i \ {m_i}} ([n] \ R_{delta_{i,j}}) )
// is verified; a failure throws std::logic_error.
UpDownDecomposition associated_diagonals(const CoxeterPartition& partition,
                                         Subset I);

// The four distinguished diagonals of a nested subset: with gamma = min I,
// Gamma = max I and (a, b) the bounds of the unique down interval,
//   delta1 = {a, b}, delta2 = {a, Gamma}, delta3 = {gamma, b},
//   delta4 = {gamma, Gamma}.
// For I = [n] the decomposition (0, n+1) with the full up interval is used.
struct FourDiagonalFrame {
  int gamma = 0;
  int Gamma = 0;
  int a = 0;
  int b = 0;
  std::array<Diagonal, 4> deltas;

  bool proper(int i) const { return deltas[i - 1].is_proper(); }
  // Bitmask of proper deltas: bit i-1 set iff delta_i is proper.
  unsigned proper_mask() const;
};

// Throws std::invalid_argument when I has more than one nested component.
FourDiagonalFrame four_diagonal_frame(const CoxeterPartition& partition,
                                      Subset I);

// Shape of the proper-diagonal set among {delta1..delta4}, with sub-case
// letters for the shapes that split. `ground_set` labels I = [n], which the
// proper-subset classification below does not cover.
enum class FrameCase {
  d1,
  d1d4_a,
  d1d4_b,
  d2d3_a,
  d2d3_b,
  d1d2d3_a,
  d1d2d3_b,
  d1d2d4_a,
  d1d2d4_b,
  d1d2d4_c,
  d1d3d4_a,
  d1d3d4_b,
  d1d3d4_c,
  d2d3d4,
  full,
  ground_set,
};

std::string frame_case_name(FrameCase c);

// Classifies the frame of a nested proper subset. Every admissible shape is
// re-verified against the structural conditions that characterise it; a
// contradiction throws std::logic_error rather than defaulting. Inadmissible
// shapes (the eight excluded ones) also throw std::logic_error.
FrameCase classify_frame(const CoxeterPartition& partition, Subset I);

}  // namespace minkdec
