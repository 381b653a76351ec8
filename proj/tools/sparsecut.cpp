#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sparsecut/census.hpp"
#include "sparsecut/connectivity.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/families.hpp"
#include "sparsecut/io.hpp"
#include "sparsecut/report_json.hpp"
#include "sparsecut/witness.hpp"

namespace sc = sparsecut;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;

// Raised for command-line mistakes the parser itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool text = false;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_edge_list(const std::string& body) {
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream words(line);
    long a = 0;
    long b = 0;
    std::string extra;
    return static_cast<bool>(words >> a >> b) && !(words >> extra);
  }
  return false;
}

// An existing file path wins; anything else is read as a graph6 literal.
// '/' and '.' never occur in graph6, so such arguments must name a file.
sc::Graph load_graph(const std::string& arg) {
  std::error_code ec;
  const bool path_like = arg.find_first_of("/.") != std::string::npos;
  if (path_like && !std::filesystem::exists(arg, ec)) throw UsageError("no such file: " + arg);
  if (std::filesystem::is_regular_file(arg, ec)) {
    const std::string body = read_file(arg);
    if (looks_like_edge_list(body)) return sc::from_edge_list(body);
    std::istringstream in(body);
    auto graphs = sc::read_graph6_stream(in);
    if (graphs.empty()) throw UsageError(arg + " contains no graph");
    return std::move(graphs.front().graph);
  }
  return sc::from_graph6(arg, 1);
}

std::string label(int v) { return "v" + std::to_string(v + 1); }

std::string labels(sc::VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ", ";
    out += label(v);
    first = false;
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const sc::Json& j) { std::cout << j.dump(2) << '\n'; }

void print_cut_text(const sc::CutReport& r) {
  std::cout << "  cut " << labels(r.cut) << "  independent=" << yes_no(r.independent)
            << " foresty=" << yes_no(r.foresty) << "  parts:";
  for (const auto& p : r.parts) std::cout << ' ' << labels(p);
  std::cout << '\n';
}

void print_census_text(const sc::CensusReport& r) {
  std::cout << "checked: " << r.checked << "\nskipped: " << r.skipped << "\nfailures: " << r.failures
            << '\n';
  for (const auto& c : r.counterexamples) std::cout << "  counterexample " << c.g6 << "  " << c.reason << '\n';
  std::cout << "kappa histogram:\n";
  for (auto [k, v] : r.kappa_hist) std::cout << "  " << k << ": " << v << '\n';
  std::cout << "witness kinds:\n";
  for (const auto& [k, v] : r.kind_hist) std::cout << "  " << k << ": " << v << '\n';
  std::cout << "traces:\n";
  for (const auto& [k, v] : r.trace_hist) std::cout << "  " << k << ": " << v << '\n';
  if (r.frontier)
    std::cout << "family " << r.frontier->family << " (" << r.frontier->family_canonical << ") present: "
              << yes_no(r.frontier->family_present) << '\n';
}

int run_kappa(const std::string& graph_arg, Output out) {
  const auto g = load_graph(graph_arg);
  const auto r = sc::vertex_connectivity(g);
  if (!out.text) {
    print_json(sc::to_json(r));
  } else {
    std::cout << "kappa: " << r.kappa << '\n';
    if (r.complete)
      std::cout << "complete graph, no vertex cut\n";
    else
      std::cout << "cut: " << labels(*r.witness_cut) << '\n';
  }
  return kExitOk;
}

int run_mincuts(const std::string& graph_arg, Output out) {
  const auto g = load_graph(graph_arg);
  const auto cuts = sc::enumerate_minimum_cuts(g);
  const int kappa = cuts.front().cut.size();
  if (!out.text) {
    print_json(sc::minimum_cuts_json(kappa, cuts));
  } else {
    std::cout << "kappa: " << kappa << "\nminimum cuts: " << cuts.size() << '\n';
    for (const auto& c : cuts) print_cut_text(c);
  }
  return kExitOk;
}

sc::WitnessCertificate find_witness(const sc::Graph& g, sc::CutKind kind) {
  const int n = g.order();
  const bool connected = sc::is_connected(g);
  if (kind == sc::CutKind::Independent) {
    if (connected && n >= 7 && g.size() <= sc::independent_size_bound(n))
      return sc::independent_min_cut_sparse(g);
    if (connected && n >= 8 && sc::is_regular(g, 3)) return sc::independent_min_cut_cubic(g);
  } else {
    if (connected && n >= 7 && g.size() <= sc::foresty_size_bound(n)) return sc::foresty_min_cut_sparse(g);
    if (connected && n >= 7 && sc::is_regular(g, 4)) return sc::foresty_min_cut_4regular(g);
  }
  std::cerr << "sparsecut: warning: graph outside the constructive algorithm's range, using the exhaustive oracle\n";
  return sc::oracle_min_cut_with_property(g, kind);
}

int run_witness(const std::string& graph_arg, const std::string& kind_arg, Output out) {
  const auto g = load_graph(graph_arg);
  const auto cert = find_witness(g, sc::parse_cut_kind(kind_arg));
  if (!out.text) {
    print_json(sc::to_json(cert));
  } else {
    std::cout << "kind: " << sc::to_string(cert.kind) << "\ncut: " << labels(cert.cut)
              << "\ntrace: " << cert.trace.joined() << "\nvalidated: " << yes_no(cert.validated) << '\n';
  }
  return kExitOk;
}

int run_gen(const std::string& family, std::optional<int> n, const std::string& format) {
  const auto f = sc::parse_family(family);
  if ((f == sc::Family::Gn || f == sc::Family::Fn) && !n) throw UsageError("--n is required for " + family);
  const auto g = sc::gen_family({f, n.value_or(0)});
  if (format == "edges")
    std::cout << sc::to_edge_list(g);
  else
    std::cout << sc::to_graph6(g) << '\n';
  return kExitOk;
}

int run_sharpness(const std::string& family, std::optional<int> n, Output out) {
  const auto f = sc::parse_family(family);
  if ((f == sc::Family::Gn || f == sc::Family::Fn) && !n) throw UsageError("--n is required for " + family);
  const auto r = sc::evaluate_sharpness({f, n.value_or(0)});
  if (!out.text) {
    print_json(sc::to_json(r));
  } else {
    std::cout << "order: " << r.order << "\nsize: " << r.size << "\nkappa: " << r.kappa
              << "\nminimum cuts: " << r.minimum_cuts.size() << '\n';
    for (const auto& c : r.minimum_cuts) print_cut_text(c);
    for (const auto& [name, ok] : r.claim_verdicts) std::cout << "claim " << name << ": " << (ok ? "holds" : "FAILS") << '\n';
  }
  return r.all_hold() ? kExitOk : kExitProperty;
}

struct VerifyArgs {
  std::string theorem;
  std::string lemma;
  std::optional<int> order;
  std::optional<int> max_size;
  std::string input;
  std::string mode = "both";
  int workers = 1;
};

int default_max_size(const VerifyArgs& a, int n) {
  if (!a.theorem.empty())
    return sc::parse_theorem(a.theorem) == sc::Theorem::T3 ? sc::independent_size_bound(n) : sc::foresty_size_bound(n);
  switch (sc::parse_lemma(a.lemma)) {
    case sc::Lemma::L6: return sc::independent_size_bound(n);
    case sc::Lemma::L9: return sc::foresty_size_bound(n);
    default: return n * (n - 1) / 2;
  }
}

int run_verify(const VerifyArgs& a, Output out) {
  if (a.theorem.empty() == a.lemma.empty()) throw UsageError("give exactly one of --theorem and --lemma");
  if (a.input.empty() == !a.order) throw UsageError("give exactly one of --order and --input");
  sc::CensusSource source;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot open " + a.input);
    source = sc::graph6_source(in);
  } else {
    const int n = *a.order;
    const int max = a.max_size.value_or(default_max_size(a, n));
    // Regular-graph lemmas only need graphs of exactly n*k/2 edges.
    int min = 0;
    if (!a.lemma.empty() && a.lemma != "l5" && a.lemma != "l8" && a.lemma != "L5" && a.lemma != "L8") min = max;
    source = sc::builtin_source(n, max, min);
  }
  const sc::SweepOptions opt{a.workers};
  const auto report = a.theorem.empty()
                          ? sc::verify_lemma(source, sc::parse_lemma(a.lemma), opt)
                          : sc::verify_theorem(source, sc::parse_theorem(a.theorem), sc::parse_mode(a.mode), opt);
  if (!out.text)
    print_json(sc::to_json(report));
  else
    print_census_text(report);
  return report.failures == 0 ? kExitOk : kExitProperty;
}

int run_frontier(const std::string& theorem, int order, int workers, Output out) {
  const auto report = sc::evaluate_sharp_frontier(order, sc::parse_theorem(theorem), {workers});
  if (!out.text)
    print_json(sc::to_json(report));
  else
    print_census_text(report);
  const bool holds = report.failures > 0 && report.frontier && report.frontier->family_present;
  return holds ? kExitOk : kExitProperty;
}

int exit_code_for(sc::ErrorCode code) {
  switch (code) {
    case sc::ErrorCode::NoWitness:
    case sc::ErrorCode::ClaimFailed:
    case sc::ErrorCode::AlgorithmBug:
      return kExitProperty;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex connectivity, minimum cuts and sparse-graph witness search"};
  app.name("sparsecut");
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  std::string graph_arg;
  std::string kappa_fmt = "json";
  auto* kappa = app.add_subcommand("kappa", "Vertex connectivity and one minimum cut");
  kappa->add_option("graph", graph_arg, "graph6 literal or file (graph6 or edge list)")->required();
  add_format(kappa, kappa_fmt);

  std::string mincuts_fmt = "json";
  auto* mincuts = app.add_subcommand("mincuts", "All minimum vertex cuts, classified");
  mincuts->add_option("graph", graph_arg, "graph6 literal or file")->required();
  add_format(mincuts, mincuts_fmt);

  std::string witness_fmt = "json";
  std::string kind;
  auto* witness = app.add_subcommand("witness", "Independent or foresty minimum vertex cut");
  witness->add_option("--kind", kind, "independent | foresty")->required()->check(CLI::IsMember({"independent", "foresty"}));
  witness->add_option("graph", graph_arg, "graph6 literal or file")->required();
  add_format(witness, witness_fmt);

  std::string gen_family;
  std::optional<int> gen_n;
  std::string gen_fmt = "g6";
  auto* gen = app.add_subcommand("gen", "Generate an extremal family member or fixture");
  gen->add_option("--family", gen_family, "Gn | Fn | prism | octahedron | q3 | petersen")->required();
  gen->add_option("--n", gen_n, "Order for Gn and Fn");
  gen->add_option("--format", gen_fmt, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));

  std::string sharp_family;
  std::optional<int> sharp_n;
  std::string sharp_fmt = "json";
  auto* sharp = app.add_subcommand("sharpness", "Check the stated claims about a family member");
  sharp->add_option("--family", sharp_family, "Gn | Fn | prism | octahedron | q3 | petersen")->required();
  sharp->add_option("--n", sharp_n, "Order for Gn and Fn");
  add_format(sharp, sharp_fmt);

  VerifyArgs va;
  std::string verify_fmt = "json";
  auto* verify = app.add_subcommand("verify", "Exhaustive census verification");
  verify->add_option("--theorem", va.theorem, "t3 | t4")->check(CLI::IsMember({"t3", "t4", "T3", "T4"}));
  verify->add_option("--lemma", va.lemma, "l5 | l6 | l8 | l9")->check(CLI::IsMember({"l5", "l6", "l8", "l9", "L5", "L6", "L8", "L9"}));
  verify->add_option("--order", va.order, "Order of the builtin census")->check(CLI::Range(1, sc::kMaxBuiltinOrder));
  verify->add_option("--max-size", va.max_size, "Largest size scanned (defaults to the theorem's bound)")->check(CLI::NonNegativeNumber);
  verify->add_option("--input", va.input, "graph6 census file instead of the builtin enumeration");
  verify->add_option("--mode", va.mode, "constructive | oracle | both")->check(CLI::IsMember({"constructive", "oracle", "both"}));
  verify->add_option("--workers", va.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify, verify_fmt);

  std::string frontier_theorem;
  int frontier_order = 0;
  int frontier_workers = 1;
  std::string frontier_fmt = "json";
  auto* frontier = app.add_subcommand("frontier", "Graphs one edge past the size bound");
  frontier->add_option("--theorem", frontier_theorem, "t3 | t4")->required()->check(CLI::IsMember({"t3", "t4", "T3", "T4"}));
  frontier->add_option("--order", frontier_order, "7 or 8")->required()->check(CLI::Range(7, sc::kMaxBuiltinOrder));
  frontier->add_option("--workers", frontier_workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(frontier, frontier_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sparsecut: error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto as_output = [](const std::string& fmt) { return Output{fmt == "text"}; };
  try {
    if (*kappa) return run_kappa(graph_arg, as_output(kappa_fmt));
    if (*mincuts) return run_mincuts(graph_arg, as_output(mincuts_fmt));
    if (*witness) return run_witness(graph_arg, kind, as_output(witness_fmt));
    if (*gen) return run_gen(gen_family, gen_n, gen_fmt);
    if (*sharp) return run_sharpness(sharp_family, sharp_n, as_output(sharp_fmt));
    if (*verify) return run_verify(va, as_output(verify_fmt));
    if (*frontier) return run_frontier(frontier_theorem, frontier_order, frontier_workers, as_output(frontier_fmt));
  } catch (const sc::Error& e) {
    std::cerr << "sparsecut: error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    std::cerr << "sparsecut: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
