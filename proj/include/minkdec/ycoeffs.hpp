#pragma once

#include <map>
#include <string>

#include "minkdec/coxeter.hpp"
#include "minkdec/rational.hpp"
#include "minkdec/subsets.hpp"
#include "minkdec/zvalues.hpp"

namespace minkdec {

enum class YMethod { moebius, four_term, product };

std::string y_method_name(YMethod m);

// Minkowski coefficients y_I of the decomposition P = sum_I y_I * Delta_I
// into dilated faces of the standard simplex.
struct YTable {
  CoxeterPartition partition;
  std::map<Subset, Rat> coefficients;
  YMethod method = YMethod::moebius;

  const Rat& at(Subset I) const;
};

// Moebius inversion over the boolean lattice:
//   y_I = sum_{J subseteq I} (-1)^{|I \ J|} z_J  (with z_empty = 0).
// This is the designated oracle; it shares nothing with the other routes
// beyond the z-table itself.
Rat y_moebius(const CoxeterPartition& partition, Subset I,
              const ZTable& ztable);

// Four-term route: 0 when I splits into several nested components, otherwise
//   (-1)^{|I \ R_delta1|} (z_{R_delta1} - z_{R_delta2} - z_{R_delta3} + z_{R_delta4})
// where the right sets of non-proper and degenerate frame diagonals follow
// the extended conventions (z_empty = 0, z_[n] = total).
Rat y_four_term(const CoxeterPartition& partition, Subset I,
                const ZTable& ztable);

// Signed boundary path lengths of a nested subset: |k_Gamma| is the number of
// edges of the boundary path from b to Gamma avoiding the vertex labeled a,
// negative exactly when Gamma lies in the down set; k_gamma symmetrically for
// the path from a to gamma avoiding b. Throws for multi-component I.
struct SignedLengths {
  int k_gamma = 0;
  int k_Gamma = 0;
};

SignedLengths signed_lengths(const CoxeterPartition& partition, Subset I);

// Product route, valid for the default facet values only:
//   0 when I has several components;
//   (-1)^{|I \ (a,b)_Do|} (k_gamma * k_Gamma - (n+1)) when I = {u} is a
//   single up element;
//   (-1)^{|I \ (a,b)_Do|} k_gamma * k_Gamma otherwise.
Rat y_product(const CoxeterPartition& partition, Subset I);

// y_[n] = (-1)^{|Up|}.
Rat y_top(const CoxeterPartition& partition);

// Under the default facet values, y_I = 0 iff I has more than one nested
// component, or n = 3 and I = Up = {2}.
bool is_zero_coefficient(const CoxeterPartition& partition, Subset I);

// Applies the chosen method to every non-empty I. The product route refuses
// custom z-tables (std::invalid_argument); the other methods accept any
// complete table.
YTable full_y_table(const CoxeterPartition& partition, const ZTable& ztable,
                    YMethod method);

}  // namespace minkdec
