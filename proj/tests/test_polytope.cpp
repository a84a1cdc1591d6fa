#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "minkdec/polytope.hpp"

using namespace minkdec;
using testutil::S;
using testutil::part;
using testutil::point;

namespace {

ZTable default_table(const CoxeterPartition& p) {
  return full_z_table(p, default_facet_spec(p));
}

Rat vertex_min(const VPolytope& V, Subset I) {
  Rat best;
  bool first = true;
  for (const auto& v : V.vertices) {
    Rat s = 0;
    for (int e : elements(I)) s += v[static_cast<std::size_t>(e - 1)];
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("H-representation construction") {
  ZTable pentagon = default_table(part(3, {}));
  HPolytope full = hrep_from_ztable(pentagon, false);
  CHECK(full.dim == 3);
  CHECK(full.equality_level == 6);
  CHECK(full.rows.size() == 6);  // all proper subsets of [3]

  HPolytope facets = hrep_from_ztable(default_table(part(4, {2})), true);
  CHECK(facets.rows.size() == 9);

  ZTable segment = default_table(part(2, {}));
  VPolytope V = enumerate_vertices(hrep_from_ztable(segment, false));
  CHECK(V.vertices == std::vector<std::vector<Rat>>{point({1, 2}), point({2, 1})});
}

TEST_CASE("vertex enumeration") {
  SUBCASE("pentagon coordinates") {
    VPolytope V = enumerate_vertices(hrep_from_ztable(default_table(part(3, {})), false));
    std::vector<std::vector<Rat>> expected = {point({1, 2, 3}), point({1, 4, 1}),
                                              point({2, 1, 3}), point({3, 1, 2}),
                                              point({3, 2, 1})};
    CHECK(V.vertices == expected);
  }
  SUBCASE("twisted pentagon contains (3,0,3)") {
    VPolytope V = enumerate_vertices(hrep_from_ztable(default_table(part(3, {2})), false));
    std::vector<std::vector<Rat>> expected = {point({1, 2, 3}), point({1, 3, 2}),
                                              point({2, 3, 1}), point({3, 0, 3}),
                                              point({3, 2, 1})};
    CHECK(V.vertices == expected);
  }
  SUBCASE("hexagon realisation has 14 vertices") {
    VPolytope V = enumerate_vertices(hrep_from_ztable(default_table(part(4, {2})), true));
    CHECK(V.vertices.size() == 14);
  }
  SUBCASE("empty and unbounded sets are reported distinctly") {
    HPolytope empty;
    empty.dim = 2;
    empty.equality_level = 3;
    empty.rows = {{S({1}), Rat(5)}, {S({2}), Rat(5)}};
    CHECK_THROWS_AS(enumerate_vertices(empty), EmptyPolytope);

    HPolytope unbounded;
    unbounded.dim = 3;
    unbounded.equality_level = 6;
    unbounded.rows = {{S({1}), Rat(1)}};
    CHECK_THROWS_AS(enumerate_vertices(unbounded), UnboundedPolytope);
  }
  SUBCASE("dimension guard") {
    HPolytope big;
    big.dim = 9;
    CHECK_THROWS_AS(enumerate_vertices(big), std::invalid_argument);
  }
}

TEST_CASE("dilated faces") {
  VPolytope simplex = dilated_face(Rat(1), S({1, 2, 3}), 3);
  CHECK(simplex.vertices == std::vector<std::vector<Rat>>{
                                point({0, 0, 1}), point({0, 1, 0}), point({1, 0, 0})});
  VPolytope edge = dilated_face(Rat(2), S({1, 2}), 3);
  CHECK(edge.vertices == std::vector<std::vector<Rat>>{point({0, 2, 0}),
                                                       point({2, 0, 0})});
  VPolytope origin = dilated_face(Rat(0), S({1, 3}), 3);
  CHECK(origin.vertices == std::vector<std::vector<Rat>>{point({0, 0, 0})});
  CHECK_THROWS_AS(dilated_face(Rat(-1), S({1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(dilated_face(Rat(1), 0, 3), std::invalid_argument);
}

TEST_CASE("extreme point filtering") {
  std::vector<std::vector<Rat>> collinear = {point({0, 0}), point({1, 1}),
                                             point({2, 2})};
  CHECK(extreme_points(collinear) ==
        std::vector<std::vector<Rat>>{point({0, 0}), point({2, 2})});

  std::vector<std::vector<Rat>> square_and_center = {
      point({0, 0}), point({0, 2}), point({2, 0}), point({2, 2}), point({1, 1})};
  CHECK(extreme_points(square_and_center).size() == 4);

  // Duplicates collapse before the test.
  std::vector<std::vector<Rat>> dupes = {point({0, 0}), point({0, 0}),
                                         point({1, 0})};
  CHECK(extreme_points(dupes).size() == 2);
}

TEST_CASE("Minkowski sums of vertex sets") {
  SUBCASE("translation by a single point") {
    VPolytope P = enumerate_vertices(hrep_from_ztable(default_table(part(3, {})), false));
    VPolytope shift{3, {point({1, 1, 1})}};
    VPolytope moved = minkowski_sum_v(P, shift);
    REQUIRE(moved.vertices.size() == P.vertices.size());
    for (std::size_t i = 0; i < P.vertices.size(); ++i) {
      for (int d = 0; d < 3; ++d) {
        CHECK(moved.vertices[i][static_cast<std::size_t>(d)] ==
              P.vertices[i][static_cast<std::size_t>(d)] + 1);
      }
    }
  }
  SUBCASE("two edges sum to a quadrilateral") {
    VPolytope a = dilated_face(Rat(1), S({1, 2}), 3);
    VPolytope b = dilated_face(Rat(1), S({2, 3}), 3);
    VPolytope sum = minkowski_sum_v(a, b);
    std::vector<std::vector<Rat>> expected = {point({0, 1, 1}), point({0, 2, 0}),
                                              point({1, 0, 1}), point({1, 1, 0})};
    CHECK(sum.vertices == expected);
  }
  SUBCASE("dimension mismatch") {
    VPolytope a = dilated_face(Rat(1), S({1}), 2);
    VPolytope b = dilated_face(Rat(1), S({1}), 3);
    CHECK_THROWS_AS(minkowski_sum_v(a, b), std::invalid_argument);
  }
}

TEST_CASE("vertex sets add under table addition") {
  for (int n : {3, 4}) {
    for (const CoxeterPartition& p : all_partitions(n)) {
      ZTable base = default_table(p);
      for (std::uint64_t seed = 1; seed <= (n == 3 ? 3u : 2u); ++seed) {
        ZTable other =
            full_z_table(p, sample_deformation_spec(p, seed, rat_parse("1/10")));
        ZTable combined = base;
        for (auto& [set, z] : combined.entries) z += other.at(set);
        combined.provenance = Provenance::custom;
        VPolytope direct = enumerate_vertices(hrep_from_ztable(combined, false));
        VPolytope summed =
            minkowski_sum_v(enumerate_vertices(hrep_from_ztable(base, false)),
                            enumerate_vertices(hrep_from_ztable(other, false)));
        REQUIRE(direct.vertices == summed.vertices);
      }
    }
  }
}

TEST_CASE("decomposition check") {
  CoxeterPartition c1 = part(3, {});
  ZTable z1 = default_table(c1);
  YTable y1 = full_y_table(c1, z1, YMethod::moebius);
  CHECK(decomposition_check(c1, z1, y1));

  CoxeterPartition c2 = part(3, {2});
  ZTable z2 = default_table(c2);
  YTable y2 = full_y_table(c2, z2, YMethod::four_term);
  CHECK(decomposition_check(c2, z2, y2));

  YTable tampered = y1;
  tampered.coefficients[S({1, 2})] += 1;
  CHECK_FALSE(decomposition_check(c1, z1, tampered));
}

TEST_CASE("facet count identifies redundant rows") {
  ZTable z = default_table(part(3, {}));
  HPolytope full = hrep_from_ztable(z, false);
  // The full table carries one redundant row; five rows support facets.
  CHECK(full.rows.size() == 6);
  CHECK(facet_count(full) == 5);
}

TEST_CASE("cyclohedron instance breaks the decomposition identity") {
  CyclohedronReport rep = cyclohedron_report();

  std::vector<Rat> expected_z = {1, -1, 1, 1, 3, 3, 5, 5, 0, 3, 6, 4, 6, 6, 10};
  std::vector<Rat> expected_y = {1, -1, 1, 1, 3, 1, 3, 5, 0, 1, -4, -3, -2, -1, 5};
  std::vector<Subset> order = canonical_subsets(4);
  for (std::size_t i = 0; i < order.size(); ++i) {
    CHECK(rep.ztable.at(order[i]) == expected_z[i]);
    CHECK(rep.ytable.at(order[i]) == expected_y[i]);
  }

  CHECK(rep.left.vertices.size() == 27);
  CHECK(rep.right.vertices.size() == 20);
  CHECK(cyclohedron_counterexample() == std::pair<std::size_t, std::size_t>{27, 20});
  CHECK_FALSE(decomposition_check(CoxeterPartition(4, S({2})), rep.ztable,
                                  rep.ytable));
}
