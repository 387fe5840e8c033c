// Command-line surface: enumeration, counting, verification, clique search
// and Sudoku generation, with deterministic machine-readable reports.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spm/bipartite_graph.hpp"
#include "spm/disjointness.hpp"
#include "spm/formulas.hpp"
#include "spm/io.hpp"
#include "spm/pi_matrix.hpp"
#include "spm/sudoku.hpp"
#include "spm/types.hpp"
#include "spm/version.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInternalError = 1;
constexpr int kUsageError = 2;
constexpr int kFeasibilityError = 3;
constexpr int kVerificationError = 4;
constexpr int kIoError = 5;
constexpr int kSamplingError = 6;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  int k = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::string out;
  std::string report;
  std::string family_out;
  std::string check;
  std::string format = "text";
  bool allow_n5 = false;
  bool allow_n3_graph = false;
  std::uint64_t node_budget = 1'000'000;
  int max_restarts = 64;
};

void emit_failure_record(const std::string& category,
                         const std::string& message) {
  const ordered_json record{{"tool", spm::kToolName},
                            {"version", spm::kVersion},
                            {"status", "error"},
                            {"category", category},
                            {"message", message}};
  std::cerr << record.dump() << "\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path);
  out << content;
  if (!out.good()) throw io_error("failed writing output file: " + path);
}

// The envelope carries the semantic configuration only: the parallelism
// degree and file paths are execution details and must not change report
// bytes.
ordered_json envelope(const std::string& subcommand,
                      const ordered_json& config) {
  ordered_json j;
  j["tool"] = spm::kToolName;
  j["version"] = spm::kVersion;
  ordered_json full_config;
  full_config["subcommand"] = subcommand;
  for (const auto& [key, value] : config.items()) {
    full_config[key] = value;
  }
  j["config"] = full_config;
  return j;
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- enumerate

int run_enumerate_graphs(const Options& opt) {
  spm::EnumerationLimits limits{opt.allow_n5};
  const auto reps = spm::enumerate_class_reps(opt.n, opt.k, limits);

  if (!opt.out.empty()) {
    std::ostringstream file;
    spm::write_graph_class_file(file, opt.n, opt.k, reps);
    write_output(opt.out, file.str());
  }

  std::string check_status;
  if (!opt.check.empty()) {
    std::ifstream in(opt.check);
    if (!in) throw io_error("cannot open graph-class file: " + opt.check);
    const spm::GraphClassFile file = spm::read_graph_class_file(in);
    if (file.n == opt.n && file.k == opt.k && file.reps == reps) {
      check_status = "match";
    } else {
      check_status = "mismatch";
    }
  }

  ordered_json j = envelope("enumerate-graphs",
                            {{"n", opt.n},
                             {"k", opt.k},
                             {"format", opt.format},
                             {"allow_n5", opt.allow_n5}});
  ordered_json result;
  result["n"] = opt.n;
  result["k"] = opt.k;
  result["count"] = reps.size();
  ordered_json rows = ordered_json::array();
  for (const auto& g : reps) {
    const auto profile = spm::degree_profile(g);
    const auto classes = spm::neighborhood_classes(g);
    rows.push_back({{"mask", spm::mask_to_hex(opt.n, g.edges)},
                    {"psi", profile.psi},
                    {"deltas", classes.deltas},
                    {"omega", spm::rational_to_string(spm::omega(g))}});
  }
  result["graphs"] = rows;
  if (!check_status.empty()) result["file_check"] = check_status;
  j["result"] = result;

  std::string rendered;
  if (opt.format == "json") {
    rendered = j.dump(2) + "\n";
  } else if (opt.format == "csv") {
    std::string csv = "index,mask,psi,deltas,omega\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto profile = spm::degree_profile(reps[i]);
      const auto classes = spm::neighborhood_classes(reps[i]);
      csv += std::to_string(i) + "," + spm::mask_to_hex(opt.n, reps[i].edges) +
             "," + join_ints(profile.psi, ';') + "," +
             join_ints(classes.deltas, ';') + "," +
             spm::rational_to_string(spm::omega(reps[i])) + "\n";
    }
    rendered = csv;
  } else {
    std::string text = "n=" + std::to_string(opt.n) +
                       " k=" + std::to_string(opt.k) +
                       " count=" + std::to_string(reps.size()) + "\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto profile = spm::degree_profile(reps[i]);
      const auto classes = spm::neighborhood_classes(reps[i]);
      text += std::to_string(i) + "  mask=" +
              spm::mask_to_hex(opt.n, reps[i].edges) + "  psi=" +
              join_ints(profile.psi, ';') + "  deltas=" +
              join_ints(classes.deltas, ';') + "  omega=" +
              spm::rational_to_string(spm::omega(reps[i])) + "\n";
    }
    if (!check_status.empty()) text += "file check: " + check_status + "\n";
    rendered = text;
  }
  write_output(opt.report, rendered);
  return check_status == "mismatch" ? kVerificationError : kOk;
}

// -------------------------------------------------------------------- theta

int run_theta(const Options& opt) {
  spm::EnumerationLimits limits{opt.allow_n5};
  const auto rows = spm::theta_table(opt.n, limits);

  ordered_json j = envelope("theta", {{"n", opt.n},
                                      {"format", opt.format},
                                      {"allow_n5", opt.allow_n5}});
  ordered_json table = ordered_json::array();
  for (const auto& row : rows) {
    table.push_back({{"k", row.k},
                     {"classes", row.class_count},
                     {"theta", spm::rational_to_string(row.theta)}});
  }
  j["result"] = {{"n", opt.n}, {"per_k", table}};

  std::string rendered;
  if (opt.format == "json") {
    rendered = j.dump(2) + "\n";
  } else if (opt.format == "csv") {
    std::string csv = "k,classes,theta\n";
    for (const auto& row : rows) {
      csv += std::to_string(row.k) + "," + std::to_string(row.class_count) +
             "," + spm::rational_to_string(row.theta) + "\n";
    }
    rendered = csv;
  } else {
    std::string text = "theta table for n=" + std::to_string(opt.n) + "\n";
    for (const auto& row : rows) {
      text += "k=" + std::to_string(row.k) +
              "  classes=" + std::to_string(row.class_count) +
              "  theta=" + spm::rational_to_string(row.theta) + "\n";
    }
    rendered = text;
  }
  write_output(opt.out, rendered);
  return kOk;
}

// -------------------------------------------------------------------- count

int run_count(const Options& opt) {
  spm::EnumerationLimits limits{opt.allow_n5};
  const spm::CountReport report = spm::count_report(opt.n, limits);

  ordered_json j = envelope("count", {{"n", opt.n},
                                      {"format", opt.format},
                                      {"allow_n5", opt.allow_n5}});
  j["result"] = ordered_json::parse(spm::count_report_to_json(report));

  std::string rendered;
  if (opt.format == "json") {
    rendered = j.dump(2) + "\n";
  } else if (opt.format == "csv") {
    std::string csv = "k,classes,theta,q,D,d\n";
    for (const auto& row : report.per_k) {
      csv += std::to_string(row.k) + "," + std::to_string(row.class_count) +
             "," + spm::rational_to_string(row.theta) + "," + row.q.str() +
             "," + report.ordered_pairs.str() + "," +
             report.unordered_pairs.str() + "\n";
    }
    rendered = csv;
  } else {
    std::string text = "disjoint pairs for n=" + std::to_string(opt.n) + "\n";
    for (const auto& row : report.per_k) {
      text += "k=" + std::to_string(row.k) +
              "  classes=" + std::to_string(row.class_count) +
              "  theta=" + spm::rational_to_string(row.theta) +
              "  q=" + row.q.str() + "\n";
    }
    text += "ordered pairs D = " + report.ordered_pairs.str() + "\n";
    text += "unordered pairs d = " + report.unordered_pairs.str() + "\n";
    text += std::string("dual-path check: ") +
            (report.dual_path_ok ? "ok" : "mismatch") + "\n";
    rendered = text;
  }
  write_output(opt.out, rendered);
  return kOk;
}

// ------------------------------------------------------------------- verify

struct CheckRow {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string detail;
};

std::vector<CheckRow> run_verifications(const Options& opt) {
  std::vector<CheckRow> checks;
  spm::EnumerationLimits limits{opt.allow_n5};
  const int n = opt.n;
  auto add = [&checks](const std::string& name, bool ok,
                       const std::string& detail) {
    checks.push_back(CheckRow{name, ok ? "pass" : "fail", detail});
  };
  auto skip = [&checks](const std::string& name, const std::string& why) {
    checks.push_back(CheckRow{name, "skipped", why});
  };

  const spm::BigInt via_gamma = spm::disjoint_ordered_by_neighborhoods(n,
                                                                       limits);
  const spm::BigInt via_psi = spm::disjoint_ordered_by_profile(n, limits);
  add("dual_route_agreement", via_gamma == via_psi,
      "D=" + via_psi.str());

  const spm::BigInt ordered = spm::disjoint_ordered(n, limits);
  const spm::BigInt unordered = spm::disjoint_unordered(n, limits);
  add("unordered_is_half", ordered % 2 == 0 && unordered * 2 == ordered,
      "d=" + unordered.str());

  add("binomial_identity", spm::binomial_identity_check(n, limits),
      "b(n,k) = C(n^2,k) for all k");

  add("q_zero_is_squared_count",
      spm::q_count(n, 0, limits) == spm::s_perm_count(n) * spm::s_perm_count(n),
      "q(n,0) = |Sigma|^2");

  spm::BigInt alternating = 0;
  for (int k = 0; k <= n * n; ++k) {
    const spm::BigInt term = spm::q_count(n, k, limits);
    alternating += (k % 2 == 0) ? term : -term;
  }
  add("inclusion_exclusion", alternating == ordered,
      "sum (-1)^k q(n,k) = D");

  if (n <= 3) {
    const spm::BigInt oracle = spm::brute_force_disjoint_count(n, opt.jobs);
    add("oracle_disjoint_pairs", oracle == ordered,
        "brute force " + oracle.str());

    const auto hist = spm::agreement_histogram(n, opt.jobs);
    spm::BigInt total = 0;
    for (const auto& h : hist) total += h;
    bool hist_ok = total == spm::ipow(spm::factorial(n), 4 * n) &&
                   hist[0] == oracle && hist[n * n] == spm::s_perm_count(n);
    for (int k = 0; k <= n * n && hist_ok; ++k) {
      hist_ok = spm::q_from_histogram(hist, k) == spm::q_count(n, k, limits);
    }
    add("oracle_agreement_histogram", hist_ok,
        "histogram sums and q(n,k) equivalence");

    bool round_trip = true;
    for (const spm::PiMatrix& p : spm::enumerate_pi(n)) {
      round_trip = round_trip && spm::sperm_to_pi(spm::pi_to_sperm(p)) == p;
    }
    add("bijection_round_trip", round_trip, "over all (n!)^{2n} elements");
  } else {
    skip("oracle_disjoint_pairs", "exhaustive oracle needs n <= 3");
    skip("oracle_agreement_histogram", "exhaustive oracle needs n <= 3");
    skip("bijection_round_trip", "exhaustive oracle needs n <= 3");
  }

  if (n == 2 || (n == 3 && opt.allow_n3_graph)) {
    const spm::DisjointnessGraph graph = spm::build_disjointness_graph(
        n, spm::OracleLimits{opt.allow_n3_graph}, opt.jobs);
    add("graph_edge_count", graph.edge_count == unordered,
        "edges=" + graph.edge_count.str());
  } else {
    skip("graph_edge_count",
         n == 3 ? "pass --allow-n3-graph to build the 272 MB graph"
                : "graph build needs n <= 3");
  }

  if (n == 2) {
    const spm::DisjointnessGraph graph = spm::build_disjointness_graph(2);
    const spm::BigInt cliques = spm::count_cliques(graph, 4);
    add("clique_count",
        cliques == 12 && cliques * spm::factorial(4) == 288,
        "z_2=" + cliques.str() + ", 12*4! = 288");
  } else {
    skip("clique_count", "clique counting is defined for n=2 only");
  }

  return checks;
}

int run_verify(const Options& opt) {
  const auto checks = run_verifications(opt);

  ordered_json j = envelope("verify", {{"n", opt.n},
                                       {"format", opt.format},
                                       {"allow_n3_graph", opt.allow_n3_graph}});
  ordered_json rows = ordered_json::array();
  bool all_ok = true;
  for (const auto& check : checks) {
    rows.push_back({{"check", check.name},
                    {"status", check.status},
                    {"detail", check.detail}});
    all_ok = all_ok && check.status != "fail";
  }
  j["result"] = {{"n", opt.n}, {"checks", rows},
                 {"status", all_ok ? "pass" : "fail"}};

  std::string rendered;
  if (opt.format == "json") {
    rendered = j.dump(2) + "\n";
  } else if (opt.format == "csv") {
    std::string csv = "check,status,detail\n";
    for (const auto& check : checks) {
      csv += check.name + "," + check.status + ",\"" + check.detail + "\"\n";
    }
    rendered = csv;
  } else {
    std::string text = "verification for n=" + std::to_string(opt.n) + "\n";
    for (const auto& check : checks) {
      text += "[" + check.status + "] " + check.name + ": " + check.detail +
              "\n";
    }
    text += all_ok ? "all checks passed\n" : "verification FAILED\n";
    rendered = text;
  }
  write_output(opt.out, rendered);
  return all_ok ? kOk : kVerificationError;
}

// ------------------------------------------------------------------ cliques

int run_cliques(const Options& opt) {
  const spm::DisjointnessGraph graph = spm::build_disjointness_graph(
      opt.n, spm::OracleLimits{opt.allow_n3_graph}, opt.jobs);
  const int size = opt.n * opt.n;
  const auto cliques = spm::list_cliques(graph, size);
  const spm::BigInt z(cliques.size());
  const spm::BigInt sigma =
      z * spm::factorial(static_cast<unsigned>(size));

  if (!opt.out.empty()) {
    std::ostringstream file;
    spm::write_clique_list(file, cliques);
    write_output(opt.out, file.str());
  }

  ordered_json j = envelope("cliques", {{"n", opt.n},
                                        {"format", opt.format}});
  ordered_json list = ordered_json::array();
  for (const auto& clique : cliques) list.push_back(clique);
  j["result"] = {{"n", opt.n},
                 {"vertices", graph.vertices.size()},
                 {"edges", graph.edge_count.str()},
                 {"clique_size", size},
                 {"clique_count", z.str()},
                 {"z", z.str()},
                 {"sigma", sigma.str()},
                 {"cliques", list}};

  std::string rendered;
  if (opt.format == "json") {
    rendered = j.dump(2) + "\n";
  } else if (opt.format == "csv") {
    std::string csv = "index,vertices\n";
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      std::string joined;
      for (std::size_t v = 0; v < cliques[i].size(); ++v) {
        if (v != 0) joined += ';';
        joined += std::to_string(cliques[i][v]);
      }
      csv += std::to_string(i) + "," + joined + "\n";
    }
    rendered = csv;
  } else {
    std::string text = "disjointness graph n=" + std::to_string(opt.n) +
                       ": " + std::to_string(graph.vertices.size()) +
                       " vertices, " + graph.edge_count.str() + " edges\n";
    text += "complete subgraphs on " + std::to_string(size) +
            " vertices: " + z.str() + "\n";
    text += "z = " + z.str() + ", z * (n^2)! = " + sigma.str() + "\n";
    for (const auto& clique : cliques) {
      std::string joined;
      for (std::size_t v = 0; v < clique.size(); ++v) {
        if (v != 0) joined += ' ';
        joined += std::to_string(clique[v]);
      }
      text += joined + "\n";
    }
    rendered = text;
  }
  write_output(opt.report, rendered);
  return kOk;
}

// --------------------------------------------------------------- sudoku-gen

int run_sudoku_gen(const Options& opt) {
  spm::SamplerOptions sampler;
  sampler.node_budget = opt.node_budget;
  sampler.max_restarts = opt.max_restarts;
  const auto family = spm::sample_disjoint_family(opt.n, opt.seed, sampler);
  std::vector<int> labeling(static_cast<std::size_t>(opt.n) * opt.n);
  std::iota(labeling.begin(), labeling.end(), 1);
  const spm::SudokuMatrix matrix = spm::compose_sudoku(family, labeling);

  std::ostringstream text;
  spm::write_sudoku(text, matrix);
  write_output(opt.out, text.str());

  if (!opt.family_out.empty()) {
    std::ostringstream family_text;
    spm::write_family(family_text, family);
    write_output(opt.family_out, family_text.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of disjoint pairs of S-permutation matrices"};
  app.set_version_flag("--version",
                       std::string(spm::kToolName) + " " + spm::kVersion);
  app.require_subcommand(1);

  Options opt;
  const auto format_check = CLI::IsMember({"json", "csv", "text"});

  auto* enum_cmd = app.add_subcommand(
      "enumerate-graphs", "Bipartite graph classes with psi/delta/omega rows");
  enum_cmd->add_option("--n", opt.n, "side size")->required();
  enum_cmd->add_option("--k", opt.k, "edge count")->required();
  enum_cmd->add_option("--out", opt.out, "write the graph-class file here");
  enum_cmd->add_option("--report", opt.report,
                       "report destination (default stdout)");
  enum_cmd->add_option("--format", opt.format, "report format")
      ->check(format_check);
  enum_cmd->add_flag("--allow-n5", opt.allow_n5,
                     "opt in to the heavy n=5 enumeration");
  enum_cmd->add_option("--check", opt.check,
                       "compare an existing graph-class file against a fresh "
                       "enumeration");

  auto* theta_cmd = app.add_subcommand("theta", "Per-k theta table");
  theta_cmd->add_option("--n", opt.n, "side size")->required();
  theta_cmd->add_option("--out", opt.out, "report destination");
  theta_cmd->add_option("--format", opt.format, "report format")
      ->check(format_check);
  theta_cmd->add_flag("--allow-n5", opt.allow_n5,
                      "opt in to the heavy n=5 enumeration");

  auto* count_cmd = app.add_subcommand(
      "count", "Ordered/unordered disjoint pair counts with the theta table");
  count_cmd->add_option("--n", opt.n, "side size")->required();
  count_cmd->add_option("--out", opt.out, "report destination");
  count_cmd->add_option("--format", opt.format, "report format")
      ->check(format_check);
  count_cmd->add_flag("--allow-n5", opt.allow_n5,
                      "opt in to the heavy n=5 enumeration");
  count_cmd->add_option("--jobs", opt.jobs,
                        "worker threads (0 = SPM_JOBS env or all cores); "
                        "never changes the numbers");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Oracle-vs-formula equivalences, pass/fail per check");
  verify_cmd->add_option("--n", opt.n, "side size")->required();
  verify_cmd->add_option("--out", opt.out, "report destination");
  verify_cmd->add_option("--format", opt.format, "report format")
      ->check(format_check);
  verify_cmd->add_option("--jobs", opt.jobs, "worker threads for the oracles");
  verify_cmd->add_flag("--allow-n3-graph", opt.allow_n3_graph,
                       "also build the 272 MB n=3 disjointness graph");

  auto* cliques_cmd = app.add_subcommand(
      "cliques", "Complete n^2-vertex subgraphs of the disjointness graph");
  cliques_cmd->add_option("--n", opt.n, "side size (2)")->required();
  cliques_cmd->add_option("--out", opt.out, "write the clique list here");
  cliques_cmd->add_option("--report", opt.report,
                          "report destination (default stdout)");
  cliques_cmd->add_option("--format", opt.format, "report format")
      ->check(format_check);
  cliques_cmd->add_option("--jobs", opt.jobs, "worker threads");
  cliques_cmd->add_flag("--allow-n3-graph", opt.allow_n3_graph,
                        "opt in to the n=3 graph build");

  auto* sudoku_cmd = app.add_subcommand(
      "sudoku-gen", "Seeded random Sudoku matrix via a disjoint family");
  sudoku_cmd->add_option("--n", opt.n, "side size")->required();
  sudoku_cmd->add_option("--seed", opt.seed, "RNG seed")->required();
  sudoku_cmd->add_option("--out", opt.out,
                         "matrix destination (default stdout)");
  sudoku_cmd->add_option("--family-out", opt.family_out,
                         "also write the disjoint family file");
  sudoku_cmd->add_option("--node-budget", opt.node_budget,
                         "backtracking nodes per attempt");
  sudoku_cmd->add_option("--max-restarts", opt.max_restarts,
                         "restarts before giving up");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    emit_failure_record("usage", e.what());
    return kUsageError;
  }

  try {
    if (enum_cmd->parsed()) return run_enumerate_graphs(opt);
    if (theta_cmd->parsed()) return run_theta(opt);
    if (count_cmd->parsed()) return run_count(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (cliques_cmd->parsed()) return run_cliques(opt);
    if (sudoku_cmd->parsed()) return run_sudoku_gen(opt);
    emit_failure_record("usage", "no subcommand given");
    return kUsageError;
  } catch (const spm::feasibility_error& e) {
    emit_failure_record("feasibility", e.what());
    return kFeasibilityError;
  } catch (const spm::verification_error& e) {
    emit_failure_record("verification", e.what());
    return kVerificationError;
  } catch (const spm::sampling_error& e) {
    emit_failure_record("sampling", e.what());
    return kSamplingError;
  } catch (const spm::validation_error& e) {
    emit_failure_record("validation", e.what());
    return kUsageError;
  } catch (const io_error& e) {
    emit_failure_record("io", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    emit_failure_record("internal", e.what());
    return kInternalError;
  }
}
