#pragma once

#include <cstdint>
#include <map>

#include "minkdec/coxeter.hpp"
#include "minkdec/rational.hpp"
#include "minkdec/subsets.hpp"

namespace minkdec {

enum class Provenance { default_spec, custom };

// Right-hand sides for the facet rows only: one value per right set of a
// proper diagonal, plus the level of the equality sum_{i in [n]} x_i = total.
struct FacetZSpec {
  CoxeterPartition partition;
  std::map<Subset, Rat> values;
  Rat total;
  Provenance provenance = Provenance::default_spec;
};

// Throws std::invalid_argument unless the domain of `values` is exactly the
// set of right sets of proper diagonals.
void validate_facet_spec(const FacetZSpec& spec);

// values[R] = |R|(|R|+1)/2 and total = n(n+1)/2.
FacetZSpec default_facet_spec(const CoxeterPartition& partition);

// Tight right-hand side for any non-empty I: per nested component, the sum of
// facet values over its proper associated diagonals minus (|W|-1) times the
// total, summed over components. For I = [n] this is the total itself.
Rat tight_z(const CoxeterPartition& partition, Subset I,
            const FacetZSpec& spec);

// Tight right-hand sides for all 2^n - 1 non-empty subsets.
struct ZTable {
  CoxeterPartition partition;
  std::map<Subset, Rat> entries;
  Provenance provenance = Provenance::default_spec;

  const Rat& at(Subset I) const;
  const Rat& total() const { return at(full_set(partition.n())); }
};

ZTable full_z_table(const CoxeterPartition& partition, const FacetZSpec& spec);

// Perturbs each default facet value by an independent rational in
// [-magnitude, +magnitude] drawn from a deterministic generator, then
// validates through vertex enumeration that the perturbed polytope keeps the
// default facet count (n+2)(n-1)/2 and vertex count Catalan(n). On failure
// the magnitude is halved and the draw repeated, up to 8 attempts; exhausting
// them throws std::runtime_error. magnitude = 0 returns the default spec.
FacetZSpec sample_deformation_spec(const CoxeterPartition& partition,
                                   std::uint64_t seed,
                                   const Rat& magnitude = Rat(1, 10));

// Catalan number C_n (n <= 16).
long long catalan(int n);

}  // namespace minkdec
