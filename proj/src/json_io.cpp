#include "minkdec/json_io.hpp"

#include <stdexcept>

namespace minkdec {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json set_to_json(Subset s) { return ordered_json(elements(s)); }

CoxeterPartition partition_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<int> up = j.at("up").get<std::vector<int>>();
  return CoxeterPartition::from_elements(n, up);
}

}  // namespace

ordered_json to_json(const ZTable& table) {
  ordered_json j;
  j["n"] = table.partition.n();
  j["up"] = ordered_json(elements(table.partition.up_set()));
  j["total"] = rat_str(table.total());
  ordered_json entries = ordered_json::array();
  for (Subset s : canonical_subsets(table.partition.n())) {
    ordered_json entry;
    entry["set"] = set_to_json(s);
    entry["z"] = rat_str(table.at(s));
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

ZTable ztable_from_json(const json& j) {
  CoxeterPartition part = partition_from_json(j);
  ZTable table{part, {}, Provenance::custom};
  for (const auto& entry : j.at("entries")) {
    Subset s = subset_from(entry.at("set").get<std::vector<int>>(), part.n());
    if (s == 0) throw std::invalid_argument("z-table entry with empty set");
    table.entries[s] = rat_parse(entry.at("z").get<std::string>());
  }
  Subset full = full_set(part.n());
  Rat total = rat_parse(j.at("total").get<std::string>());
  auto it = table.entries.find(full);
  if (it == table.entries.end()) {
    table.entries[full] = total;
  } else if (it->second != total) {
    throw std::invalid_argument("z-table total disagrees with its [n] entry");
  }
  if (table.entries.size() != (std::size_t{1} << part.n()) - 1) {
    throw std::invalid_argument("z-table must cover every non-empty subset");
  }
  return table;
}

ordered_json to_json(const YTable& table) {
  ordered_json j;
  j["n"] = table.partition.n();
  j["up"] = ordered_json(elements(table.partition.up_set()));
  j["method"] = y_method_name(table.method);
  ordered_json entries = ordered_json::array();
  for (Subset s : canonical_subsets(table.partition.n())) {
    ordered_json entry;
    entry["set"] = set_to_json(s);
    entry["y"] = rat_str(table.at(s));
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json to_json(const FacetZSpec& spec) {
  ordered_json j;
  j["n"] = spec.partition.n();
  j["up"] = ordered_json(elements(spec.partition.up_set()));
  j["total"] = rat_str(spec.total);
  ordered_json entries = ordered_json::array();
  for (Subset s : canonical_subsets(spec.partition.n())) {
    auto it = spec.values.find(s);
    if (it == spec.values.end()) continue;
    ordered_json entry;
    entry["set"] = set_to_json(s);
    entry["z"] = rat_str(it->second);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

FacetZSpec facet_spec_from_json(const json& j) {
  CoxeterPartition part = partition_from_json(j);
  FacetZSpec spec{part, {}, rat_parse(j.at("total").get<std::string>()),
                  Provenance::custom};
  for (const auto& entry : j.at("entries")) {
    Subset s = subset_from(entry.at("set").get<std::vector<int>>(), part.n());
    if (!spec.values.emplace(s, rat_parse(entry.at("z").get<std::string>()))
             .second) {
      throw std::invalid_argument("duplicate facet entry");
    }
  }
  validate_facet_spec(spec);
  return spec;
}

ordered_json vertices_to_json(const VPolytope& P) {
  ordered_json verts = ordered_json::array();
  for (const auto& v : P.vertices) {
    ordered_json coords = ordered_json::array();
    for (const Rat& x : v) coords.push_back(rat_str(x));
    verts.push_back(std::move(coords));
  }
  return verts;
}

}  // namespace minkdec
