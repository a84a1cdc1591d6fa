#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minkdec/coxeter.hpp"
#include "minkdec/rational.hpp"
#include "minkdec/subsets.hpp"
#include "minkdec/ycoeffs.hpp"
#include "minkdec/zvalues.hpp"

namespace minkdec {

struct PolytopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyPolytope : PolytopeError {
  EmptyPolytope() : PolytopeError("polytope is empty") {}
};
struct UnboundedPolytope : PolytopeError {
  UnboundedPolytope() : PolytopeError("polyhedron is unbounded") {}
};

// { x in R^n : sum_[n] x_i = equality_level, sum_{i in I} x_i >= z_I }.
// Rows carry proper non-empty index sets and are unique per set.
struct HPolytope {
  int dim = 0;
  Rat equality_level;
  std::vector<std::pair<Subset, Rat>> rows;
};

// Vertex list, lexicographically sorted, duplicate-free.
struct VPolytope {
  int dim = 0;
  std::vector<std::vector<Rat>> vertices;
};

// Rows from a complete z-table; with only_facets, just the rows indexed by
// right sets of proper diagonals.
HPolytope hrep_from_ztable(const ZTable& ztable, bool only_facets);

// Facet rows straight from a facet spec.
HPolytope hrep_from_spec(const FacetZSpec& spec);

// Exact vertex enumeration by exhaustive (n-1)-row basis selection against
// the equality row. Guarded to dim <= 8. Throws EmptyPolytope or
// UnboundedPolytope when the feasible set has no vertices or recedes.
VPolytope enumerate_vertices(const HPolytope& P);

// Basic feasible points only, without the emptiness/boundedness analysis.
std::vector<std::vector<Rat>> basic_solutions(const HPolytope& P);

// Number of irredundant rows: a row counts as a facet iff removing it changes
// the set of basic feasible points.
std::size_t facet_count(const HPolytope& P);

// coefficient * conv{ e_i : i in J } as a vertex set in R^dim.
VPolytope dilated_face(const Rat& coefficient, Subset J, int dim);

// Extreme points of the pairwise vertex sums.
VPolytope minkowski_sum_v(const VPolytope& P, const VPolytope& Q);

// Points p with p not in conv(points \ {p}), decided by exact feasibility of
// the convex-combination system.
std::vector<std::vector<Rat>> extreme_points(
    std::vector<std::vector<Rat>> points);

// Moebius-pair identity sum_{J subseteq I} y_J = z_I for every I, plus the
// polytope identity: vertices(P) + sum of |y_I|-dilated faces over negative
// coefficients equals the sum over positive coefficients, vertex set against
// vertex set.
bool decomposition_check(const CoxeterPartition& partition,
                         const ZTable& ztable, const YTable& ytable);

// Fixed n = 4, up set {2} instance whose two inequality levels raised to 5
// leave the deformation cone. Carries the altered z-table, its Moebius
// y-table and both sides of the would-be decomposition identity.
struct CyclohedronReport {
  ZTable ztable;
  YTable ytable;
  VPolytope left;
  VPolytope right;
};

CyclohedronReport cyclohedron_report();

// (left vertex count, right vertex count) of the report above; (27, 20).
std::pair<std::size_t, std::size_t> cyclohedron_counterexample();

}  // namespace minkdec
