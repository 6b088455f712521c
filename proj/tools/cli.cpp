#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"
#include "turan/packing.hpp"
#include "turan/result_cache.hpp"
#include "turan/verification.hpp"

namespace turan::cli {

namespace {

enum class Provenance { formula, construction, oracle, identity, detector };

std::string_view tag(Provenance p) {
  switch (p) {
    case Provenance::formula:
      return "[formula]";
    case Provenance::construction:
      return "[construction]";
    case Provenance::oracle:
      return "[oracle]";
    case Provenance::identity:
      return "[identity]";
    case Provenance::detector:
      return "[detector]";
  }
  return "[?]";
}

// What one command reports. Every line carries the provenance of its number.
struct RunRecord {
  struct Line {
    std::string text;
    Provenance provenance;
  };

  std::string command;
  std::string spec;
  std::vector<Line> lines;

  void add(std::string text, Provenance p) { lines.push_back({std::move(text), p}); }

  void print(std::ostream& out) const {
    for (const auto& line : lines) out << line.text << ' ' << tag(line.provenance) << '\n';
  }
};

struct SpecArgs {
  std::string parts;
  int k = 1;
  int r = 0;  // 0: number of parts

  Instance instance() const {
    auto sizes = PartSizes::parse(parts);
    return Instance(sizes, r == 0 ? sizes.count() : r, k);
  }
};

void add_spec_options(CLI::App& cmd, SpecArgs& spec) {
  cmd.add_option("--parts", spec.parts, "comma-separated part sizes, e.g. 2,2,3")->required();
  cmd.add_option("--k", spec.k, "number of disjoint cliques forbidden")->check(CLI::PositiveNumber);
  cmd.add_option("--r", spec.r, "clique size (default: number of parts)");
}

struct OracleArgs {
  std::uint64_t max_nodes = OracleBudget{}.max_nodes;
  double max_seconds = 60.0;
  int threads = 1;
  std::string cache_path;
  bool no_cache = false;
  bool recompute = false;

  OracleOptions options() const {
    OracleOptions o;
    o.budget.max_nodes = max_nodes;
    o.budget.max_time = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000.0));
    o.threads = threads;
    return o;
  }
};

void add_oracle_options(CLI::App& cmd, OracleArgs& args) {
  cmd.add_option("--max-nodes", args.max_nodes, "node budget per instance");
  cmd.add_option("--max-seconds", args.max_seconds, "time budget per instance");
  cmd.add_option("--threads", args.threads, "branch-and-bound worker threads")->check(CLI::PositiveNumber);
  cmd.add_option("--cache", args.cache_path, "result cache file (default $TURAN_CACHE or ./turan-cache.jsonl)");
  cmd.add_flag("--no-cache", args.no_cache, "neither read nor write the cache");
  cmd.add_flag("--recompute", args.recompute, "ignore cached results (still appends new ones)");
}

// Oracle front-end with the JSONL cache. Cache hits are re-validated: the
// witness must be a kK_r-free subgraph of the host with max_edges edges.
class InvalidCacheRecord : public Error {
 public:
  using Error::Error;
};

class CachedSolver {
 public:
  struct Outcome {
    ExtremalResult result;
    bool hit = false;
  };

  explicit CachedSolver(const OracleArgs& args) : options_(args.options()), recompute_(args.recompute) {
    if (!args.no_cache) {
      cache_ = std::make_unique<ResultCache>(args.cache_path.empty() ? ResultCache::default_path()
                                                                      : std::filesystem::path(args.cache_path));
    }
  }

  Outcome solve(const Instance& instance) {
    if (cache_ && !recompute_) {
      if (auto hit = cache_->lookup(instance)) {
        validate(*hit);
        return {std::move(*hit), true};
      }
    }
    auto result = solve_instance(instance, options_);
    if (cache_) cache_->store(result);
    return {std::move(result), false};
  }

 private:
  static void validate(const ExtremalResult& r) {
    const auto host = complete_multipartite(r.instance.parts);
    const bool ok = r.witness.part_sizes() == host.part_sizes() && is_subgraph_of(r.witness, host) &&
                    r.witness.edge_count() == r.max_edges && !contains_packing(r.witness, r.instance.k, r.instance.r);
    if (!ok) throw InvalidCacheRecord("cached record for " + r.instance.to_string() + " failed re-validation");
  }

  OracleOptions options_;
  bool recompute_;
  std::unique_ptr<ResultCache> cache_;
};

std::string qualifier(const FormulaResult& f) {
  std::string q(to_string(f.validity));
  if (f.note == "bipartite") q += ", bipartite";
  return q;
}

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

// ---------------------------------------------------------------------------

int cmd_formula(const SpecArgs& spec, std::ostream& out, std::ostream& err) {
  const auto inst = spec.instance();
  FormulaResult f;
  if (!formula_for(inst, f)) {
    err << "no closed formula covers " << inst.to_string() << '\n';
    return kUsageError;
  }
  RunRecord rec{"formula", inst.to_string(), {}};
  rec.add(std::to_string(f.value) + " (" + qualifier(f) + ")", Provenance::formula);
  rec.add("canonical: " + f.canonical_spec.to_string(), Provenance::formula);
  if (!f.note.empty() && f.note != "bipartite") rec.add("note: " + f.note, Provenance::formula);
  rec.print(out);
  return kOk;
}

int cmd_construct(const SpecArgs& spec, bool four_partite, const std::string& output, bool probe, std::ostream& out) {
  const auto sizes = PartSizes::parse(spec.parts);
  ConstructionCertificate cert;
  FormulaResult bound;
  if (four_partite) {
    cert = four_partite_triangle_construction(sizes, spec.k);
    bound = four_partite_triangle_lower_bound(sizes, spec.k);
  } else {
    const HostSpec host(sizes, spec.k);
    cert = extremal_construction(host);
    bound = turan_number(host);
  }
  verify_freeness(cert);

  RunRecord rec{"construct", spec.parts, {}};
  rec.add("construction: parts=" + PartSizes(cert.graph.part_sizes()).to_string() + " k=" + std::to_string(cert.k) +
              " r=" + std::to_string(cert.r),
          Provenance::construction);
  rec.add("edges: " + std::to_string(cert.claimed_edges), Provenance::construction);
  rec.add(std::string(four_partite ? "bound: " : "h_k: ") + std::to_string(bound.value), Provenance::formula);
  rec.add(std::string("free: ") + (*cert.free_verified ? "true" : "false"), Provenance::detector);
  if (probe) {
    const auto entries = maximality_probe(cert);
    std::size_t creating = 0;
    for (const auto& e : entries) creating += e.creates_packing;
    rec.add("saturation: " + std::to_string(creating) + "/" + std::to_string(entries.size()) +
                " missing edges create a packing",
            Provenance::detector);
  }
  rec.print(out);
  if (output.empty()) {
    out << to_text(cert.graph);
  } else {
    write_graph_file(output, cert.graph);
    out << "wrote " << output << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path, int k, int r, bool witness, std::ostream& out) {
  const auto g = read_graph_file(path);
  const int clique = r == 0 ? g.part_count() : r;
  const auto packing = find_packing(g, k, clique);
  RunRecord rec{"check", path, {}};
  rec.add("contains " + std::to_string(k) + "K_" + std::to_string(clique) + ": " + (packing ? "yes" : "no"),
          Provenance::detector);
  rec.print(out);
  if (witness && packing) out << to_text(*packing);
  return kOk;
}

int cmd_oracle(const SpecArgs& spec, const OracleArgs& args, std::ostream& out, std::ostream& err) {
  const auto inst = spec.instance().canonical();
  CachedSolver solver(args);
  CachedSolver::Outcome outcome;
  try {
    outcome = solver.solve(inst);
  } catch (const BudgetExhausted& e) {
    out << "budget exhausted: " << e.lower_bound() << " <= ex <= " << e.upper_bound() << " after " << e.nodes()
        << " nodes " << tag(Provenance::oracle) << '\n';
    return kBudgetExhausted;
  } catch (const InvalidCacheRecord& e) {
    err << e.what() << '\n';
    return kVerificationFailed;
  }
  const auto& res = outcome.result;

  int code = kOk;
  std::string verdict;
  FormulaResult f;
  if (!formula_for(inst, f)) {
    verdict = "no formula";
  } else if (f.validity == Validity::lower_bound_only) {
    if (res.max_edges >= f.value) {
      verdict = "no formula; lower bound " + std::to_string(f.value);
    } else {
      verdict = "VIOLATES lower bound " + std::to_string(f.value);
      code = kVerificationFailed;
    }
  } else if (res.max_edges == f.value) {
    verdict = f.note == "bipartite" ? "matches bipartite formula"
              : f.note.starts_with("matching") ? "matches matching formula"
                                               : "matches formula";
  } else {
    verdict = "MISMATCH: formula says " + std::to_string(f.value);
    code = kVerificationFailed;
  }

  RunRecord rec{"oracle", inst.to_string(), {}};
  rec.add(std::to_string(res.max_edges) + " (" + verdict + ")", Provenance::oracle);
  rec.add("instance: " + inst.to_string(), Provenance::oracle);
  rec.add(std::string("cache: ") + (outcome.hit ? "hit" : "miss"), Provenance::oracle);
  rec.add("nodes: " + std::to_string(res.nodes_explored), Provenance::oracle);
  rec.add("elapsed_ms: " + fixed3(res.elapsed.count()), Provenance::oracle);
  rec.print(out);
  return code;
}

int cmd_verify(std::uint64_t seed, std::size_t samples, int max_part, int jobs, const OracleArgs& args,
               std::ostream& out) {
  const auto identities = run_identity_suite(seed, samples);
  const auto inequalities = run_inequality_suite(seed, samples);

  std::vector<Instance> grid = theorem_grid(3, max_part);
  for (auto& inst : matching_grid(2, 4)) grid.push_back(inst);
  for (auto& inst : matching_grid(3, 3)) grid.push_back(inst);
  CachedSolver solver(args);
  const auto rows = verify_formula_grid(grid, [&](const Instance& i) { return solver.solve(i).result; }, jobs);
  const auto grid_summary = grid_report(rows);

  const std::size_t total = identities.checks + inequalities.checks + grid_summary.checks;
  const std::size_t failed = identities.failures + inequalities.failures + grid_summary.failures;

  out << "verify seed=" << seed << " samples=" << samples << " max-part=" << max_part << '\n';
  out << "identity: " << identities.checks - identities.failures << '/' << identities.checks << " passed "
      << tag(Provenance::identity) << '\n';
  out << "inequality: " << inequalities.checks - inequalities.failures << '/' << inequalities.checks << " passed "
      << tag(Provenance::identity) << '\n';
  out << "formula grid: " << grid_summary.checks - grid_summary.failures << '/' << grid_summary.checks
      << " matched " << tag(Provenance::oracle) << '\n';

  if (failed == 0) {
    out << "all " << total << " checks passed\n";
    return kOk;
  }
  auto dump = [&](const SuiteReport& report) {
    std::istringstream lines(report.text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find("FAIL") != std::string::npos || line.find("MISMATCH") != std::string::npos) {
        out << line << '\n';
      }
    }
    for (const auto& instance : report.failing_instances) out << "instance:\n" << instance;
  };
  dump(identities);
  dump(inequalities);
  dump(grid_summary);
  out << failed << " of " << total << " checks failed\n";
  return kVerificationFailed;
}

struct TableArgs {
  int r = 3;
  int part_count = 0;
  int min_part = 1;
  int max_part = 3;
  int k_max = 0;
  bool ordered = false;
  bool explore = false;
  bool no_oracle = false;
  std::string format = "csv";
  std::string output;
  int jobs = 1;
};

struct TableRow {
  std::vector<int> parts;
  int k = 0;
  int r = 0;
  std::optional<std::int64_t> formula;
  std::string validity = "none";
  std::string oracle;
  std::optional<std::int64_t> oracle_value;
  std::optional<std::int64_t> construction_edges;
  std::optional<std::int64_t> gap;
  std::optional<std::uint64_t> nodes;
  std::optional<double> elapsed_ms;
};

std::vector<Instance> table_grid(const TableArgs& t) {
  const int count = t.part_count > 0 ? t.part_count : t.r;
  std::vector<Instance> grid;
  if (t.min_part < 1 || t.max_part < t.min_part || count < 2 || t.r < 2 || t.r > count) return grid;
  std::vector<int> tuple;
  std::function<void()> rec = [&] {
    if (static_cast<int>(tuple.size()) == count) {
      const int smallest = *std::min_element(tuple.begin(), tuple.end());
      const int k_top = t.k_max > 0 ? t.k_max : smallest;
      for (int k = 1; k <= k_top; ++k) grid.emplace_back(PartSizes(tuple), t.r, k);
      return;
    }
    const int lo = (t.ordered || tuple.empty()) ? t.min_part : tuple.back();
    for (int n = lo; n <= t.max_part; ++n) {
      tuple.push_back(n);
      rec();
      tuple.pop_back();
    }
  };
  rec();
  return grid;
}

TableRow table_row(const Instance& inst, bool with_oracle, CachedSolver& solver) {
  TableRow row;
  row.parts = inst.parts.sizes();
  row.k = inst.k;
  row.r = inst.r;
  FormulaResult f;
  if (formula_for(inst, f)) {
    row.formula = f.value;
    row.validity = std::string(to_string(f.validity));
  }
  const auto canon = inst.parts.canonical();
  if (inst.spans_all_parts() && inst.r >= 3 && inst.k <= canon[0]) {
    row.construction_edges = extremal_construction(HostSpec(canon, inst.k)).claimed_edges;
  } else if (inst.r == 3 && canon.count() == 4 && inst.k <= canon[0] + canon[1] + 1) {
    row.construction_edges = four_partite_triangle_construction(canon, inst.k).claimed_edges;
  }
  if (with_oracle) {
    try {
      const auto res = solver.solve(inst).result;
      row.oracle = std::to_string(res.max_edges);
      row.oracle_value = res.max_edges;
      row.nodes = res.nodes_explored;
      row.elapsed_ms = res.elapsed.count();
    } catch (const BudgetExhausted& e) {
      row.oracle = "budget:" + std::to_string(e.lower_bound()) + ".." + std::to_string(e.upper_bound());
      row.nodes = e.nodes();
    } catch (const Error& e) {
      row.oracle = "error";
    }
  }
  if (row.formula && row.oracle_value) {
    row.gap = *row.oracle_value - *row.formula;
  } else if (row.formula && row.construction_edges) {
    row.gap = *row.formula - *row.construction_edges;
  }
  return row;
}

std::string parts_text(const std::vector<int>& parts) { return PartSizes(parts).to_string(); }

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return fixed3(*v);
  } else {
    return std::to_string(*v);
  }
}

int cmd_table(TableArgs t, const OracleArgs& args, std::ostream& out, std::ostream& err) {
  if (t.format != "csv" && t.format != "jsonl") {
    err << "unknown format '" << t.format << "' (csv or jsonl)\n";
    return kUsageError;
  }
  if (t.explore) {
    t.r = 3;
    t.part_count = 4;
  }
  const auto grid = table_grid(t);
  CachedSolver solver(args);
  std::vector<TableRow> rows(grid.size());
  parallel_for(grid.size(), t.jobs, [&](std::size_t i) { rows[i] = table_row(grid[i], !t.no_oracle, solver); });

  std::ofstream file;
  std::ostream* sink = &out;
  if (!t.output.empty()) {
    file.open(t.output);
    if (!file) {
      err << "cannot write " << t.output << '\n';
      return kUsageError;
    }
    sink = &file;
  }
  if (t.format == "csv") {
    *sink << "parts;k;r;formula;validity;oracle;construction_edges;gap;nodes;elapsed_ms\n";
    for (const auto& row : rows) {
      *sink << parts_text(row.parts) << ';' << row.k << ';' << row.r << ';' << opt_text(row.formula) << ';'
            << row.validity << ';' << row.oracle << ';' << opt_text(row.construction_edges) << ';'
            << opt_text(row.gap) << ';' << opt_text(row.nodes) << ';' << opt_text(row.elapsed_ms) << '\n';
    }
  } else {
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      auto put = [&](const char* key, const auto& v) {
        if (v) {
          j[key] = *v;
        } else {
          j[key] = nullptr;
        }
      };
      j["parts"] = row.parts;
      j["k"] = row.k;
      j["r"] = row.r;
      put("formula", row.formula);
      j["validity"] = row.validity;
      if (row.oracle_value) {
        j["oracle"] = *row.oracle_value;
      } else if (!row.oracle.empty()) {
        j["oracle"] = row.oracle;
      } else {
        j["oracle"] = nullptr;
      }
      put("construction_edges", row.construction_edges);
      put("gap", row.gap);
      put("nodes", row.nodes);
      put("elapsed_ms", row.elapsed_ms);
      *sink << j.dump() << '\n';
    }
  }
  if (!t.output.empty()) out << "wrote " << rows.size() << " rows to " << t.output << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turán numbers ex(K_{n_1..n_r}, kK_r): formulas, constructions, detector, exact oracle", "turan"};
  app.require_subcommand(1);

  SpecArgs spec;
  OracleArgs oracle_args;

  auto* formula = app.add_subcommand("formula", "closed-form Turán number");
  add_spec_options(*formula, spec);

  bool four_partite = false;
  bool probe = false;
  std::string output;
  auto* construct = app.add_subcommand("construct", "build and certify the extremal construction");
  add_spec_options(*construct, spec);
  construct->add_flag("--four-partite-triangle", four_partite, "4-partite kK_3 lower-bound construction");
  construct->add_flag("--probe", probe, "add each missing host edge and test for a packing");
  construct->add_option("-o,--output", output, "write the graph to this file");

  std::string graph_path;
  int check_k = 1;
  int check_r = 0;
  bool witness = false;
  auto* check = app.add_subcommand("check", "test a graph file for k disjoint K_r");
  check->add_option("graph", graph_path, "graph file")->required();
  check->add_option("--k", check_k, "multiplicity")->check(CLI::PositiveNumber);
  check->add_option("--r", check_r, "clique size (default: number of parts)");
  check->add_flag("--witness", witness, "print the packing when one exists");

  auto* oracle = app.add_subcommand("oracle", "exact extremal number by branch-and-bound");
  add_spec_options(*oracle, spec);
  add_oracle_options(*oracle, oracle_args);

  std::uint64_t seed = 1;
  std::size_t samples = 500;
  int max_part = 3;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "identity suites and the formula-vs-oracle grid");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--samples", samples, "random subgraphs per suite");
  verify->add_option("--max-part", max_part, "largest part size of the r=3 theorem grid");
  verify->add_option("--jobs", jobs, "grid points solved in parallel")->check(CLI::PositiveNumber);
  add_oracle_options(*verify, oracle_args);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "sweep table over a parameter grid");
  table->add_option("--r", table_args.r, "clique size");
  table->add_option("--part-count", table_args.part_count, "number of parts (default: r)");
  table->add_option("--min-part", table_args.min_part, "smallest part size");
  table->add_option("--max-part", table_args.max_part, "largest part size");
  table->add_option("--k-max", table_args.k_max, "k runs over 1..k-max (default: 1..n_1)");
  table->add_flag("--ordered", table_args.ordered, "all ordered tuples instead of sorted ones");
  table->add_flag("--explore-r3-in-4parts", table_args.explore, "r = 3 in 4-part hosts against the lower bound");
  table->add_flag("--no-oracle", table_args.no_oracle, "skip the oracle column");
  table->add_option("--format", table_args.format, "csv or jsonl");
  table->add_option("-o,--output", table_args.output, "write rows to this file");
  table->add_option("--jobs", table_args.jobs, "grid points solved in parallel")->check(CLI::PositiveNumber);
  add_oracle_options(*table, oracle_args);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("turan");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*formula) return cmd_formula(spec, out, err);
    if (*construct) return cmd_construct(spec, four_partite, output, probe, out);
    if (*check) return cmd_check(graph_path, check_k, check_r, witness, out);
    if (*oracle) return cmd_oracle(spec, oracle_args, out, err);
    if (*verify) return cmd_verify(seed, samples, max_part, jobs, oracle_args, out);
    if (*table) return cmd_table(table_args, oracle_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace turan::cli
