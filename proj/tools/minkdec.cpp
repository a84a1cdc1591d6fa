#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "minkdec/checks.hpp"
#include "minkdec/intervals.hpp"
#include "minkdec/json_io.hpp"
#include "minkdec/polytope.hpp"
#include "minkdec/ycoeffs.hpp"
#include "minkdec/zvalues.hpp"

namespace {

using minkdec::Subset;
using nlohmann::ordered_json;

constexpr int kCliMaxN = 16;  // every command loops over all 2^n subsets

struct Options {
  int n = 0;
  std::vector<int> up;
  std::string z_file;
  std::string method;
  std::string format = "json";
  bool have_seed = false;
  std::uint64_t seed = 0;
  std::string magnitude = "1/10";
  bool facets_only = false;
  int max_n = 6;
};

std::string set_text(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : minkdec::elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void emit(const ordered_json& j, const Options& opt,
          const std::function<void()>& table_printer) {
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    table_printer();
  }
}

minkdec::CoxeterPartition make_partition(const Options& opt) {
  if (opt.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (opt.n > kCliMaxN) {
    throw std::invalid_argument("--n larger than " + std::to_string(kCliMaxN));
  }
  return minkdec::CoxeterPartition::from_elements(opt.n, opt.up);
}

minkdec::FacetZSpec make_spec(const Options& opt,
                              const minkdec::CoxeterPartition& part) {
  if (!opt.z_file.empty() && opt.have_seed) {
    throw std::invalid_argument("--z-file and --seed are mutually exclusive");
  }
  if (!opt.z_file.empty()) {
    std::ifstream in(opt.z_file);
    if (!in) throw std::invalid_argument("cannot open " + opt.z_file);
    nlohmann::json j = nlohmann::json::parse(in);
    minkdec::FacetZSpec spec = minkdec::facet_spec_from_json(j);
    if (!(spec.partition == part)) {
      throw std::invalid_argument("--z-file disagrees with --n/--up");
    }
    return spec;
  }
  if (opt.have_seed) {
    return minkdec::sample_deformation_spec(part, opt.seed,
                                            minkdec::rat_parse(opt.magnitude));
  }
  return minkdec::default_facet_spec(part);
}

int run_zvalues(const Options& opt) {
  minkdec::CoxeterPartition part = make_partition(opt);
  minkdec::FacetZSpec spec = make_spec(opt, part);
  if (opt.facets_only) {
    ordered_json j = minkdec::to_json(spec);
    emit(j, opt, [&] {
      std::cout << "set\tz\n";
      for (Subset s : minkdec::canonical_subsets(part.n())) {
        auto it = spec.values.find(s);
        if (it == spec.values.end()) continue;
        std::cout << set_text(s) << "\t" << minkdec::rat_str(it->second)
                  << "\n";
      }
    });
    return 0;
  }
  minkdec::ZTable table = minkdec::full_z_table(part, spec);
  ordered_json j = minkdec::to_json(table);
  emit(j, opt, [&] {
    std::cout << "set\tz\n";
    for (Subset s : minkdec::canonical_subsets(part.n())) {
      std::cout << set_text(s) << "\t" << minkdec::rat_str(table.at(s)) << "\n";
    }
  });
  return 0;
}

int run_decompose(const Options& opt) {
  minkdec::CoxeterPartition part = make_partition(opt);
  minkdec::FacetZSpec spec = make_spec(opt, part);
  minkdec::ZTable ztable = minkdec::full_z_table(part, spec);

  std::vector<minkdec::YMethod> methods;
  if (!opt.method.empty()) {
    if (opt.method == "moebius") {
      methods = {minkdec::YMethod::moebius};
    } else if (opt.method == "four-term") {
      methods = {minkdec::YMethod::four_term};
    } else if (opt.method == "product") {
      methods = {minkdec::YMethod::product};
    } else {
      throw std::invalid_argument("unknown method " + opt.method);
    }
  } else if (spec.provenance == minkdec::Provenance::default_spec) {
    methods = {minkdec::YMethod::moebius, minkdec::YMethod::four_term,
               minkdec::YMethod::product};
  } else {
    methods = {minkdec::YMethod::moebius, minkdec::YMethod::four_term};
  }

  std::vector<minkdec::YTable> tables;
  for (minkdec::YMethod m : methods) {
    tables.push_back(minkdec::full_y_table(part, ztable, m));
  }

  bool all_agree = true;
  ordered_json entries = ordered_json::array();
  for (Subset s : minkdec::canonical_subsets(part.n())) {
    ordered_json e;
    e["set"] = ordered_json(minkdec::elements(s));
    bool agree = true;
    for (std::size_t i = 0; i < methods.size(); ++i) {
      e[minkdec::y_method_name(methods[i])] =
          minkdec::rat_str(tables[i].at(s));
      if (tables[i].at(s) != tables[0].at(s)) agree = false;
    }
    if (methods.size() > 1) e["agree"] = agree;
    all_agree = all_agree && agree;
    entries.push_back(std::move(e));
  }

  ordered_json j;
  j["n"] = part.n();
  j["up"] = ordered_json(minkdec::elements(part.up_set()));
  ordered_json ms = ordered_json::array();
  for (minkdec::YMethod m : methods) ms.push_back(minkdec::y_method_name(m));
  j["methods"] = std::move(ms);
  j["entries"] = std::move(entries);
  if (methods.size() > 1) j["all_agree"] = all_agree;

  emit(j, opt, [&] {
    std::cout << "set";
    for (minkdec::YMethod m : methods) {
      std::cout << "\ty(" << minkdec::y_method_name(m) << ")";
    }
    if (methods.size() > 1) std::cout << "\tagree";
    std::cout << "\n";
    for (Subset s : minkdec::canonical_subsets(part.n())) {
      std::cout << set_text(s);
      bool agree = true;
      for (const auto& t : tables) {
        std::cout << "\t" << minkdec::rat_str(t.at(s));
        if (t.at(s) != tables[0].at(s)) agree = false;
      }
      if (methods.size() > 1) std::cout << "\t" << (agree ? "yes" : "NO");
      std::cout << "\n";
    }
  });
  if (!all_agree) {
    std::cerr << ordered_json{{"error", "method disagreement"}}.dump() << "\n";
    return 1;
  }
  return 0;
}

int run_vertices(const Options& opt) {
  minkdec::CoxeterPartition part = make_partition(opt);
  minkdec::ZTable table = minkdec::full_z_table(part, make_spec(opt, part));
  minkdec::HPolytope P = minkdec::hrep_from_ztable(table, true);
  minkdec::VPolytope V = minkdec::enumerate_vertices(P);
  ordered_json j;
  j["n"] = part.n();
  j["up"] = ordered_json(minkdec::elements(part.up_set()));
  j["vertex_count"] = V.vertices.size();
  j["facet_count"] = minkdec::facet_count(P);
  j["vertices"] = minkdec::vertices_to_json(V);
  emit(j, opt, [&] {
    std::cout << "vertices: " << V.vertices.size()
              << "  facets: " << minkdec::facet_count(P) << "\n";
    for (const auto& v : V.vertices) {
      std::cout << "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << minkdec::rat_str(v[i]);
      }
      std::cout << ")\n";
    }
  });
  return 0;
}

int run_classify(const Options& opt) {
  minkdec::CoxeterPartition part = make_partition(opt);
  ordered_json entries = ordered_json::array();
  for (Subset s : minkdec::canonical_subsets(part.n())) {
    ordered_json e;
    e["set"] = ordered_json(minkdec::elements(s));
    if (minkdec::decompose(part, s).type_v > 1) {
      e["case"] = "multi";
    } else {
      e["case"] = minkdec::frame_case_name(minkdec::classify_frame(part, s));
    }
    entries.push_back(std::move(e));
  }
  ordered_json j;
  j["n"] = part.n();
  j["up"] = ordered_json(minkdec::elements(part.up_set()));
  j["entries"] = std::move(entries);
  emit(j, opt, [&] {
    std::cout << "set\tcase\n";
    for (const auto& e : j["entries"]) {
      std::string set = "{";
      bool first = true;
      for (const auto& v : e["set"]) {
        if (!first) set += ",";
        set += std::to_string(v.get<int>());
        first = false;
      }
      set += "}";
      std::cout << set << "\t" << e["case"].get<std::string>() << "\n";
    }
  });
  return 0;
}

int run_cyclo(const Options& opt) {
  auto [left, right] = minkdec::cyclohedron_counterexample();
  ordered_json j;
  j["left"] = left;
  j["right"] = right;
  j["prop_2_3_holds"] = (left == right);
  emit(j, opt, [&] {
    std::cout << "left: " << left << "  right: " << right
              << "  decomposition holds: " << (left == right ? "yes" : "no")
              << "\n";
  });
  return 0;
}

int run_verify(const Options& opt) {
  if (opt.max_n < 2 || opt.max_n > 8) {
    throw std::invalid_argument("--max-n must lie in [2, 8]");
  }
  int poly_n = std::min(opt.max_n, 5);
  std::vector<minkdec::CheckResult> results =
      minkdec::run_verification(opt.max_n, poly_n);
  bool ok = true;
  ordered_json checks = ordered_json::array();
  for (const auto& r : results) {
    ordered_json c;
    c["check"] = r.name;
    c["pass"] = r.pass;
    c["fail"] = r.fail;
    checks.push_back(std::move(c));
    ok = ok && r.fail == 0;
  }
  ordered_json j;
  j["max_n"] = opt.max_n;
  j["checks"] = std::move(checks);
  j["ok"] = ok;
  emit(j, opt, [&] {
    for (const auto& r : results) {
      std::cout << std::left << std::setw(36) << r.name << " pass=" << r.pass
                << " fail=" << r.fail << "\n";
    }
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Minkowski decompositions of associahedra realised as generalised "
      "permutahedra"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_n) {
    if (needs_n) {
      sub->add_option("--n", opt.n, "ground-set size")->required();
      sub->add_option("--up", opt.up, "up-set elements")->delimiter(',');
      sub->add_option("--z-file", opt.z_file,
                      "JSON file with custom facet right-hand sides");
      sub->add_option("--seed", opt.seed,
                      "sample a validated deformation of the default values")
          ->check(CLI::NonNegativeNumber)
          ->each([&](const std::string&) { opt.have_seed = true; });
      sub->add_option("--magnitude", opt.magnitude,
                      "perturbation magnitude for --seed (rational)");
    }
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* dec = app.add_subcommand(
      "decompose", "Minkowski coefficients y_I, cross-checked across methods");
  add_common(dec, true);
  dec->add_option("--method", opt.method, "single method to run")
      ->check(CLI::IsMember({"moebius", "four-term", "product"}));

  CLI::App* zv = app.add_subcommand("zvalues", "tight right-hand sides z_I");
  add_common(zv, true);
  zv->add_flag("--facets-only", opt.facets_only,
               "emit only the facet rows, in the --z-file schema");

  CLI::App* vx = app.add_subcommand("vertices",
                                    "exact vertex enumeration of the polytope");
  add_common(vx, true);

  CLI::App* cl = app.add_subcommand("classify",
                                    "frame case label for every subset");
  add_common(cl, true);

  CLI::App* cy = app.add_subcommand("cyclo-check",
                                    "vertex counts of the cyclohedron identity");
  add_common(cy, false);

  CLI::App* ve = app.add_subcommand("verify", "run the exhaustive check suites");
  ve->add_option("--max-n", opt.max_n, "largest ground-set size checked");
  add_common(ve, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(dec)) return run_decompose(opt);
    if (app.got_subcommand(zv)) return run_zvalues(opt);
    if (app.got_subcommand(vx)) return run_vertices(opt);
    if (app.got_subcommand(cl)) return run_classify(opt);
    if (app.got_subcommand(cy)) return run_cyclo(opt);
    if (app.got_subcommand(ve)) return run_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
