#include "minkdec/polytope.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "minkdec/lp.hpp"

namespace minkdec {

namespace {

// Exact solve of a square system; nullopt when singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> M,
                                             std::vector<Rat> rhs) {
  std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && M[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rat f = M[row][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
  return x;
}

Rat row_sum(const std::vector<Rat>& x, Subset I) {
  Rat s = 0;
  for (int e : elements(I)) s += x[static_cast<std::size_t>(e - 1)];
  return s;
}

bool satisfies(const HPolytope& P, const std::vector<Rat>& x) {
  for (const auto& [set, z] : P.rows) {
    if (row_sum(x, set) < z) return false;
  }
  return true;
}

// Standard-form system for P with variables (p_1..p_n, q_1..q_n, s_1..s_m):
// x = p - q and one slack per inequality row.
void standard_form(const HPolytope& P, std::vector<std::vector<Rat>>& A,
                   std::vector<Rat>& b) {
  std::size_t n = static_cast<std::size_t>(P.dim);
  std::size_t m = P.rows.size();
  std::size_t cols = 2 * n + m;
  A.assign(m + 1, std::vector<Rat>(cols, Rat(0)));
  b.assign(m + 1, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    A[0][i] = 1;
    A[0][n + i] = -1;
  }
  b[0] = P.equality_level;
  for (std::size_t r = 0; r < m; ++r) {
    for (int e : elements(P.rows[r].first)) {
      A[r + 1][static_cast<std::size_t>(e - 1)] = 1;
      A[r + 1][n + static_cast<std::size_t>(e - 1)] = -1;
    }
    A[r + 1][2 * n + r] = -1;
    b[r + 1] = P.rows[r].second;
  }
}

bool h_feasible(const HPolytope& P) {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  standard_form(P, A, b);
  return lp::feasible(A, b);
}

bool h_bounded(const HPolytope& P) {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  standard_form(P, A, b);
  std::size_t n = static_cast<std::size_t>(P.dim);
  std::vector<Rat> c(A[0].size(), Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (int sign : {1, -1}) {
      std::fill(c.begin(), c.end(), Rat(0));
      c[i] = sign;
      c[n + i] = -sign;
      if (lp::maximize(A, b, c).status == lp::Status::unbounded) return false;
    }
  }
  return true;
}

void check_rows(const HPolytope& P) {
  Subset full = full_set(P.dim);
  std::set<Subset> seen;
  for (const auto& [set, z] : P.rows) {
    (void)z;
    if (set == 0 || set == full || (set & ~full) != 0) {
      throw std::invalid_argument(
          "inequality rows must be indexed by proper non-empty subsets");
    }
    if (!seen.insert(set).second) {
      throw std::invalid_argument("duplicate inequality row");
    }
  }
}

}  // namespace

HPolytope hrep_from_ztable(const ZTable& ztable, bool only_facets) {
  int n = ztable.partition.n();
  HPolytope P;
  P.dim = n;
  P.equality_level = ztable.total();
  if (only_facets) {
    FacetZSpec base = default_facet_spec(ztable.partition);
    for (const auto& [set, unused] : base.values) {
      (void)unused;
      P.rows.emplace_back(set, ztable.at(set));
    }
  } else {
    for (const auto& [set, z] : ztable.entries) {
      if (set == full_set(n)) continue;
      P.rows.emplace_back(set, z);
    }
  }
  check_rows(P);
  return P;
}

HPolytope hrep_from_spec(const FacetZSpec& spec) {
  HPolytope P;
  P.dim = spec.partition.n();
  P.equality_level = spec.total;
  for (const auto& [set, z] : spec.values) P.rows.emplace_back(set, z);
  check_rows(P);
  return P;
}

std::vector<std::vector<Rat>> basic_solutions(const HPolytope& P) {
  std::size_t n = static_cast<std::size_t>(P.dim);
  std::size_t m = P.rows.size();
  std::size_t pick = n - 1;
  std::set<std::vector<Rat>> found;
  if (m >= pick) {
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
      std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
      std::vector<Rat> rhs(n);
      for (std::size_t j = 0; j < n; ++j) M[0][j] = 1;
      rhs[0] = P.equality_level;
      for (std::size_t r = 0; r < pick; ++r) {
        for (int e : elements(P.rows[idx[r]].first)) {
          M[r + 1][static_cast<std::size_t>(e - 1)] = 1;
        }
        rhs[r + 1] = P.rows[idx[r]].second;
      }
      if (auto x = solve_square(std::move(M), std::move(rhs))) {
        if (satisfies(P, *x)) found.insert(std::move(*x));
      }
      // Next combination in lexicographic order.
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == m - pick + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {found.begin(), found.end()};
}

VPolytope enumerate_vertices(const HPolytope& P) {
  if (P.dim < 1 || P.dim > 8) {
    throw std::invalid_argument("vertex enumeration supports 1 <= n <= 8");
  }
  std::vector<std::vector<Rat>> verts = basic_solutions(P);
  if (verts.empty()) {
    if (h_feasible(P)) throw UnboundedPolytope();
    throw EmptyPolytope();
  }
  if (!h_bounded(P)) throw UnboundedPolytope();
  return {P.dim, std::move(verts)};
}

std::size_t facet_count(const HPolytope& P) {
  std::vector<std::vector<Rat>> base = basic_solutions(P);
  std::size_t facets = 0;
  for (std::size_t r = 0; r < P.rows.size(); ++r) {
    HPolytope Q;
    Q.dim = P.dim;
    Q.equality_level = P.equality_level;
    for (std::size_t s = 0; s < P.rows.size(); ++s) {
      if (s != r) Q.rows.push_back(P.rows[s]);
    }
    if (basic_solutions(Q) != base) ++facets;
  }
  return facets;
}

VPolytope dilated_face(const Rat& coefficient, Subset J, int dim) {
  if (coefficient < 0) {
    throw std::invalid_argument("dilated face needs a non-negative coefficient");
  }
  if (J == 0 || (J & ~full_set(dim)) != 0) {
    throw std::invalid_argument("dilated face needs a non-empty subset of [n]");
  }
  std::set<std::vector<Rat>> pts;
  for (int e : elements(J)) {
    std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
    v[static_cast<std::size_t>(e - 1)] = coefficient;
    pts.insert(std::move(v));
  }
  return {dim, {pts.begin(), pts.end()}};
}

std::vector<std::vector<Rat>> extreme_points(
    std::vector<std::vector<Rat>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return points;

  std::size_t dim = points[0].size();
  std::vector<std::vector<Rat>> keep;
  for (std::size_t p = 0; p < points.size(); ++p) {
    // p is extreme iff no convex combination of the others reproduces it.
    std::vector<std::vector<Rat>> A(dim + 1);
    std::vector<Rat> b(dim + 1);
    for (std::size_t d = 0; d < dim; ++d) {
      A[d].reserve(points.size() - 1);
      for (std::size_t q = 0; q < points.size(); ++q) {
        if (q != p) A[d].push_back(points[q][d]);
      }
      b[d] = points[p][d];
    }
    A[dim].assign(points.size() - 1, Rat(1));
    b[dim] = 1;
    if (!lp::feasible(A, b)) keep.push_back(points[p]);
  }
  return keep;
}

VPolytope minkowski_sum_v(const VPolytope& P, const VPolytope& Q) {
  if (P.dim != Q.dim) {
    throw std::invalid_argument("Minkowski sum needs equal ambient dimensions");
  }
  std::vector<std::vector<Rat>> sums;
  sums.reserve(P.vertices.size() * Q.vertices.size());
  for (const auto& p : P.vertices) {
    for (const auto& q : Q.vertices) {
      std::vector<Rat> s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      sums.push_back(std::move(s));
    }
  }
  return {P.dim, extreme_points(std::move(sums))};
}

bool decomposition_check(const CoxeterPartition& partition,
                         const ZTable& ztable, const YTable& ytable) {
  int n = partition.n();
  // Inverse-pair identity.
  for (Subset I = 1; I <= full_set(n); ++I) {
    Rat sum = 0;
    Subset J = I;
    while (J != 0) {
      sum += ytable.at(J);
      J = (J - 1) & I;
    }
    if (sum != ztable.at(I)) return false;
  }
  // Polytope identity: P + negative parts = positive parts.
  VPolytope left = enumerate_vertices(hrep_from_ztable(ztable, false));
  VPolytope right{n, {std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))}};
  for (Subset I = 1; I <= full_set(n); ++I) {
    const Rat& y = ytable.at(I);
    if (y > 0) {
      right = minkowski_sum_v(right, dilated_face(y, I, n));
    } else if (y < 0) {
      left = minkowski_sum_v(left, dilated_face(-y, I, n));
    }
  }
  return left.vertices == right.vertices;
}

CyclohedronReport cyclohedron_report() {
  CoxeterPartition partition(4, with_element(0, 2));
  ZTable z = full_z_table(partition, default_facet_spec(partition));
  // Raising the two redundant levels to 5 moves past four vertices and leaves
  // the deformation cone.
  Subset s14 = with_element(with_element(0, 1), 4);
  Subset s23 = with_element(with_element(0, 2), 3);
  z.entries[s14] = 5;
  z.entries[s23] = 5;
  z.provenance = Provenance::custom;

  CyclohedronReport report{z, full_y_table(partition, z, YMethod::moebius),
                           {}, {}};

  VPolytope left = enumerate_vertices(hrep_from_ztable(z, false));
  VPolytope right{4, {std::vector<Rat>(4, Rat(0))}};
  for (Subset I = 1; I <= full_set(4); ++I) {
    const Rat& y = report.ytable.at(I);
    if (y > 0) {
      right = minkowski_sum_v(right, dilated_face(y, I, 4));
    } else if (y < 0) {
      left = minkowski_sum_v(left, dilated_face(-y, I, 4));
    }
  }
  report.left = std::move(left);
  report.right = std::move(right);
  return report;
}

std::pair<std::size_t, std::size_t> cyclohedron_counterexample() {
  CyclohedronReport report = cyclohedron_report();
  return {report.left.vertices.size(), report.right.vertices.size()};
}

}  // namespace minkdec
