#include "minkdec/zvalues.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "minkdec/intervals.hpp"
#include "minkdec/polygon.hpp"
#include "minkdec/polytope.hpp"

namespace minkdec {

namespace {

Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string set_text(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::map<Subset, Rat> facet_domain(const CoxeterPartition& partition) {
  LabeledPolygon polygon = build_polygon(partition);
  std::map<Subset, Rat> values;
  for (const Diagonal& d : all_diagonals(polygon)) {
    if (!d.is_proper()) continue;
    values.emplace(right_set(polygon, d), Rat(0));
  }
  return values;
}

}  // namespace

void validate_facet_spec(const FacetZSpec& spec) {
  std::map<Subset, Rat> domain = facet_domain(spec.partition);
  if (spec.values.size() != domain.size()) {
    throw std::invalid_argument(
        "facet spec must carry exactly one value per facet set");
  }
  for (const auto& [set, value] : spec.values) {
    (void)value;
    if (domain.find(set) == domain.end()) {
      throw std::invalid_argument("facet spec names the non-facet set " +
                                  set_text(set));
    }
  }
}

FacetZSpec default_facet_spec(const CoxeterPartition& partition) {
  FacetZSpec spec{partition, facet_domain(partition),
                  Rat(partition.n() * (partition.n() + 1) / 2),
                  Provenance::default_spec};
  for (auto& [set, value] : spec.values) {
    int k = set_size(set);
    value = Rat(k * (k + 1) / 2);
  }
  return spec;
}

Rat tight_z(const CoxeterPartition& partition, Subset I,
            const FacetZSpec& spec) {
  if (I == full_set(partition.n())) return spec.total;
  UpDownDecomposition dec = associated_diagonals(partition, I);
  LabeledPolygon polygon = build_polygon(partition);
  Rat z = 0;
  for (const NestedComponent& comp : dec.components) {
    for (int j : comp.proper_indices) {
      Subset r = right_set(
          polygon, comp.diagonals[static_cast<std::size_t>(j - 1)]);
      auto it = spec.values.find(r);
      if (it == spec.values.end()) {
        throw std::invalid_argument("facet spec misses the set " + set_text(r));
      }
      z += it->second;
    }
    z -= Rat(static_cast<long>(comp.proper_indices.size()) - 1) * spec.total;
  }
  return z;
}

const Rat& ZTable::at(Subset I) const {
  auto it = entries.find(I);
  if (it == entries.end()) {
    throw std::invalid_argument("z-table misses the set " + set_text(I));
  }
  return it->second;
}

ZTable full_z_table(const CoxeterPartition& partition, const FacetZSpec& spec) {
  ZTable table{partition, {}, spec.provenance};
  for (Subset I = 1; I <= full_set(partition.n()); ++I) {
    table.entries.emplace(I, tight_z(partition, I, spec));
  }
  return table;
}

long long catalan(int n) {
  if (n < 0 || n > 16) throw std::invalid_argument("catalan index out of range");
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

FacetZSpec sample_deformation_spec(const CoxeterPartition& partition,
                                   std::uint64_t seed, const Rat& magnitude) {
  if (magnitude < 0) throw std::invalid_argument("magnitude must be >= 0");
  FacetZSpec base = default_facet_spec(partition);
  if (magnitude == 0) return base;

  int n = partition.n();
  std::size_t expected_facets = static_cast<std::size_t>((n + 2) * (n - 1) / 2);
  std::size_t expected_vertices = static_cast<std::size_t>(catalan(n));

  std::mt19937_64 gen(seed);
  Rat mag = magnitude;
  for (int attempt = 0; attempt < 8; ++attempt) {
    FacetZSpec candidate = base;
    candidate.provenance = Provenance::custom;
    for (auto& [set, value] : candidate.values) {
      (void)set;
      // Steps of mag/32 over [-mag, +mag]; raw mt19937_64 output keeps the
      // draw reproducible across platforms.
      long k = static_cast<long>(gen() % 65) - 32;
      value += mag * frac(k, 32);
    }
    HPolytope P = hrep_from_spec(candidate);
    std::vector<std::vector<Rat>> verts = basic_solutions(P);
    if (verts.size() == expected_vertices &&
        facet_count(P) == expected_facets) {
      return candidate;
    }
    mag /= 2;
  }
  throw std::runtime_error(
      "no validated deformation sample after 8 attempts (seed " +
      std::to_string(seed) + ")");
}

}  // namespace minkdec
