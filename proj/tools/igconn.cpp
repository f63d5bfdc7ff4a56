#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "igconn/catalog.hpp"
#include "igconn/classify.hpp"
#include "igconn/error.hpp"
#include "igconn/graph.hpp"
#include "igconn/group_io.hpp"
#include "igconn/lattice.hpp"
#include "igconn/presentation.hpp"

namespace fs = std::filesystem;
using namespace igconn;

namespace {

enum ExitCode { ok = 0, disagreement = 1, input_error = 2, cap_exceeded = 3 };

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::input:
    case ErrorKind::precondition:
      return input_error;
    case ErrorKind::resource_cap:
    case ErrorKind::budget:
      return cap_exceeded;
  }
  return input_error;
}

FiniteGroup check_order(FiniteGroup g, const Limits& limits) {
  if (g.order() > limits.max_order) {
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(limits.max_order));
  }
  return g;
}

// Catalog label first, then a file chosen by extension. An argument that is both
// a label and an existing path is rejected.
FiniteGroup resolve_group(const std::string& group_arg, const Limits& limits) {
  const auto entries = standard_families(true);
  const auto entry = find_entry(entries, group_arg);
  std::error_code ec;
  const bool is_file = fs::is_regular_file(group_arg, ec);
  if (entry && is_file) {
    throw InputError("'" + group_arg + "' is both a catalog label and a file; rename the file");
  }
  if (entry) return build_entry(*entry, entries, limits);
  if (!is_file) throw InputError("'" + group_arg + "' is neither a catalog label nor a readable file");

  const fs::path path(group_arg);
  const std::string ext = path.extension().string();
  const std::string stem = path.stem().string();
  if (ext == ".json") {
    auto groups = ingest_tables(path, limits);
    if (groups.size() != 1) {
      throw InputError(group_arg + ": holds " + std::to_string(groups.size()) +
                       " groups, expected one (use audit --tables for sweeps)");
    }
    return std::move(groups.front());
  }
  if (ext == ".perm") {
    const auto set = read_permutation_file(path);
    return from_permutation_generators(set.degree, set.generators, limits.max_order, stem);
  }
  if (ext == ".pres") {
    auto g = todd_coxeter(read_presentation_file(path), limits.max_cosets).group;
    return check_order(g.set_label(stem), limits);
  }
  throw InputError(group_arg + ": unknown file extension '" + ext + "' (expected .json, .perm or .pres)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_info(const std::string& group_arg, bool json, const Limits& limits) {
  const auto g = resolve_group(group_arg, limits);
  const auto l = SubgroupLattice::build(g, limits.max_lattice);
  const auto graph = IntersectionGraph::build(l);
  const bool solvable = is_solvable(g);
  const bool simple = g.order() > 1 && !has_proper_normal_subgroup(l);
  nlohmann::json j;
  j["label"] = g.label();
  j["order"] = g.order();
  j["order_length"] = order_length(g);
  j["solvable"] = solvable;
  j["nilpotent"] = is_nilpotent(l);
  j["supersolvable"] = solvable && is_supersolvable(l);
  j["simple"] = simple;
  j["subgroups"] = l.size();
  j["vertices"] = graph.vertex_count();
  j["edges"] = graph.edge_count();
  j["kappa"] = kappa(l, graph).value;
  j["minimal_subgroups"] = l.minimal_indices().size();
  j["maximal_subgroups"] = l.maximal_indices().size();
  j["frattini_order"] = frattini(l).count();
  j["center_order"] = center(g).count();
  if (json) {
    std::cout << j.dump(2) << '\n';
    return ok;
  }
  std::cout << "label              " << g.label() << '\n'
            << "order              " << g.order() << '\n'
            << "order length       " << order_length(g) << '\n'
            << "solvable           " << yes_no(solvable) << '\n'
            << "nilpotent          " << yes_no(j["nilpotent"].get<bool>()) << '\n'
            << "supersolvable      " << yes_no(j["supersolvable"].get<bool>()) << '\n'
            << "simple             " << yes_no(simple) << '\n'
            << "subgroups          " << l.size() << '\n'
            << "vertices           " << graph.vertex_count() << '\n'
            << "edges              " << graph.edge_count() << '\n'
            << "kappa              " << j["kappa"].get<int>() << '\n'
            << "minimal subgroups  " << l.minimal_indices().size() << '\n'
            << "maximal subgroups  " << l.maximal_indices().size() << '\n'
            << "frattini order     " << frattini(l).count() << '\n'
            << "center order       " << center(g).count() << '\n';
  return ok;
}

int cmd_kappa(const std::string& group_arg, bool witness, bool json, const Limits& limits) {
  const auto g = resolve_group(group_arg, limits);
  const auto l = SubgroupLattice::build(g, limits.max_lattice);
  const auto graph = IntersectionGraph::build(l);
  const auto k = kappa(l, graph);
  std::vector<std::size_t> sep;
  if (witness) sep = kappa_witness(l, graph, k);
  if (json) {
    nlohmann::json j{{"label", g.label()}, {"kappa", k.value}, {"complete", k.complete}};
    if (witness) {
      nlohmann::json w = nlohmann::json::array();
      for (auto v : sep) {
        const auto i = IntersectionGraph::lattice_index(v);
        w.push_back({{"vertex", v}, {"order", l[i].order}, {"members", l[i].members.members()}});
      }
      j["witness"] = w;
    }
    std::cout << j.dump() << '\n';
    return ok;
  }
  std::cout << "kappa " << k.value << (k.complete ? " (complete graph)" : "") << '\n';
  if (witness) {
    std::cout << "witness size " << sep.size() << '\n';
    for (auto v : sep) {
      const auto i = IntersectionGraph::lattice_index(v);
      std::cout << "  vertex=" << v << " order=" << l[i].order << '\n';
    }
  }
  return ok;
}

int cmd_graph(const std::string& group_arg, const std::string& format, const Limits& limits) {
  const auto g = resolve_group(group_arg, limits);
  const auto l = SubgroupLattice::build(g, limits.max_lattice);
  const auto graph = IntersectionGraph::build(l);
  if (format == "dot") {
    std::cout << graph_to_dot(l, graph, g.label().empty() ? "G" : g.label());
  } else {
    std::cout << graph_to_json(l, graph).dump() << '\n';
  }
  return ok;
}

int cmd_lattice(const std::string& group_arg, const Limits& limits) {
  const auto g = resolve_group(group_arg, limits);
  std::cout << lattice_to_json(SubgroupLattice::build(g, limits.max_lattice)).dump() << '\n';
  return ok;
}

// One unit of sweep work: a group to build (catalog entry or an already
// ingested table) and its outcome.
struct AuditJob {
  std::optional<CatalogEntry> entry;
  std::optional<FiniteGroup> group;
  std::optional<ClassificationReport> report;
  std::string error;
  int error_code = ok;
};

void run_job(AuditJob& job, const std::vector<CatalogEntry>& entries, const Limits& limits) {
  try {
    if (job.entry) job.group = build_entry(*job.entry, entries, limits);
    job.report = audit(*job.group, limits);
  } catch (const Error& e) {
    job.error = e.what();
    job.error_code = exit_code_for(e);
  }
}

nlohmann::json diff_record(const ClassificationReport& r) {
  nlohmann::json d{{"label", r.label}, {"order", r.order}, {"kappa", r.kappa},
                   {"components", r.components}};
  nlohmann::json mismatches = nlohmann::json::array();
  auto add = [&](const char* name, const TheoremVerdict& v, const std::string& computed) {
    if (!v.applicable || v.agrees) return;
    mismatches.push_back({{"check", name},
                          {"case", v.case_tag ? nlohmann::json(*v.case_tag) : nlohmann::json(nullptr)},
                          {"computed", computed}});
  };
  add("A", r.theorem_a, r.components > 1 ? "disconnected" : "connected");
  add("B", r.theorem_b, r.kappa < 2 ? "kappa < 2" : "kappa >= 2");
  add("C", r.theorem_c, r.kappa < 3 ? "kappa < 3" : "kappa >= 3");
  d["mismatches"] = mismatches;
  return d;
}

struct AuditOptions {
  bool catalog = false;
  std::string tables;
  std::string manifest;
  std::string csv;
  unsigned jobs = 1;
  bool include_opt_in = false;
  bool json = false;
};

int cmd_audit(const AuditOptions& opt, const Limits& limits) {
  const int sources = int(opt.catalog) + int(!opt.tables.empty()) + int(!opt.manifest.empty());
  if (sources != 1) throw InputError("audit needs exactly one of --catalog, --tables, --manifest");

  std::vector<CatalogEntry> entries;
  std::vector<AuditJob> jobs;
  if (!opt.tables.empty()) {
    for (auto& g : ingest_tables(opt.tables, limits)) jobs.push_back({std::nullopt, std::move(g), {}, {}, ok});
  } else {
    entries = opt.catalog ? standard_families(opt.include_opt_in) : read_manifest(opt.manifest);
    for (const auto& e : entries) {
      if (e.opt_in && !opt.include_opt_in) continue;
      jobs.push_back({e, std::nullopt, {}, {}, ok});
    }
  }

  const unsigned workers = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(jobs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) run_job(jobs[i], entries, limits);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::ofstream csv;
  if (!opt.csv.empty()) {
    csv.open(opt.csv);
    if (!csv) throw InputError("cannot write " + opt.csv);
    csv << report_csv_header();
  }

  if (!opt.json) std::cout << report_csv_header();
  std::size_t disagreements = 0;
  std::size_t failures = 0;
  int worst = ok;
  for (const auto& job : jobs) {
    const std::string label = job.entry ? job.entry->label : (job.group ? job.group->label() : "?");
    if (!job.report) {
      ++failures;
      std::cerr << "error: " << label << ": " << job.error << '\n';
      if (worst == ok || job.error_code == input_error) worst = job.error_code;
      continue;
    }
    const auto& r = *job.report;
    if (csv.is_open()) csv << report_csv_row(r);
    if (opt.json) {
      std::cout << report_to_json(r).dump() << '\n';
    } else {
      std::cout << report_csv_row(r);
    }
    if (!r.all_agree()) {
      ++disagreements;
      std::cout << "DISAGREEMENT " << diff_record(r).dump() << '\n';
    }
  }
  std::cerr << "audited " << jobs.size() - failures << " groups, " << disagreements
            << " disagreements, " << failures << " errors\n";
  if (worst != ok) return worst;
  return disagreements > 0 ? disagreement : ok;
}

int cmd_catalog(bool manifest, bool include_opt_in) {
  const auto entries = standard_families(include_opt_in);
  if (manifest) {
    std::cout << manifest_text(entries);
    return ok;
  }
  for (const auto& e : entries) {
    std::cout << e.label << '\t' << e.order << '\t' << e.constructor;
    for (const auto& p : e.params) std::cout << ' ' << p;
    if (e.opt_in) std::cout << "\t(opt-in)";
    std::cout << '\n';
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"igconn: intersection graphs of finite groups and their connectivity"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits limits;
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> max_lattice;
  app.add_option("--max-order", max_order, "largest group order to construct");
  app.add_option("--max-lattice", max_lattice, "largest number of subgroups to enumerate");

  std::string group_arg;
  bool json = false;

  auto* info = app.add_subcommand("info", "summary of a group and its intersection graph");
  info->add_option("group", group_arg, "catalog label or .json/.perm/.pres file")->required();
  info->add_flag("--json", json, "print JSON");

  bool witness = false;
  auto* kap = app.add_subcommand("kappa", "vertex connectivity of the intersection graph");
  kap->add_option("group", group_arg, "catalog label or .json/.perm/.pres file")->required();
  kap->add_flag("--witness", witness, "also print a minimum separating set");
  kap->add_flag("--json", json, "print JSON");

  std::string format = "dot";
  auto* graph = app.add_subcommand("graph", "print the intersection graph");
  graph->add_option("group", group_arg, "catalog label or .json/.perm/.pres file")->required();
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* lattice = app.add_subcommand("lattice", "print the subgroup lattice as JSON");
  lattice->add_option("group", group_arg, "catalog label or .json/.perm/.pres file")->required();

  AuditOptions audit_opt;
  auto* aud = app.add_subcommand("audit", "compare classification cases with computed connectivity");
  aud->add_flag("--catalog", audit_opt.catalog, "audit the built-in catalog");
  aud->add_option("--tables", audit_opt.tables, "audit every group in a table file");
  aud->add_option("--manifest", audit_opt.manifest, "audit the entries of a manifest file");
  aud->add_option("--csv", audit_opt.csv, "also write the reports as CSV to this file");
  aud->add_option("--jobs", audit_opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  aud->add_flag("--include-opt-in", audit_opt.include_opt_in, "include opt-in catalog entries");
  aud->add_flag("--json", audit_opt.json, "one JSON report per line");

  bool manifest = false;
  bool include_opt_in = false;
  auto* cat = app.add_subcommand("catalog", "list the catalog");
  cat->add_flag("--manifest", manifest, "print as a manifest file");
  cat->add_flag("--include-opt-in", include_opt_in, "include opt-in entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }
  try {
    limits = Limits::from_environment();
    if (max_order) limits.max_order = *max_order;
    if (max_lattice) limits.max_lattice = *max_lattice;
    if (*info) return cmd_info(group_arg, json, limits);
    if (*kap) return cmd_kappa(group_arg, witness, json, limits);
    if (*graph) return cmd_graph(group_arg, format, limits);
    if (*lattice) return cmd_lattice(group_arg, limits);
    if (*aud) return cmd_audit(audit_opt, limits);
    if (*cat) return cmd_catalog(manifest, include_opt_in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  }
  return ok;
}
