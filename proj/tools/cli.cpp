#include "cli.hpp"

#include <CLI/CLI.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "contrast/enchained.hpp"
#include "contrast/error.hpp"
#include "contrast/formats.hpp"
#include "contrast/graph.hpp"
#include "contrast/greyscale.hpp"
#include "contrast/rmacg.hpp"
#include "contrast/solver.hpp"

namespace contrast::cli {

namespace {

constexpr const char* kFooter = R"(Exit codes:
  0  success
  1  usage error
  2  file not found or not writable
  3  parse error in an input file
  4  invalid input (disconnected graph, bad greyscale, failed precondition, ...)
  5  node budget exceeded
  6  verification found violated conditions
Errors are written to stderr as "error[<code>]: <message>".)";

struct Failure {
  int exit_code;
  std::string name;
  std::string message;
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDenominator:
    case ErrorCode::kMalformedInput:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kSelfLoop:
      return kExitParse;
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitInvalidInput;
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitFileNotFound, "file_not_found", "cannot open " + path};
  return in;
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

Greyscale load_greyscale(const std::string& path, const Graph& g) {
  auto in = open_input(path);
  return parse_greyscale(in, g.vertex_count());
}

// JSON goes to --out when given, the text summary to `out` otherwise.
void emit(const std::string& out_path, const std::string& json, const std::string& text,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Failure{kExitFileNotFound, "file_not_writable", "cannot write " + out_path};
  file << json;
  if (!file) throw Failure{kExitFileNotFound, "file_not_writable", "cannot write " + out_path};
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + std::to_string(vs[i]);
  return s + "}";
}

Rational component_sum(const ContrastVector& v) {
  Rational sum(0);
  for (const Rational& t : v.tones) sum += t;
  return sum;
}

struct Options {
  std::string graph;
  std::string greyscale;
  std::string fixed;
  std::string out;
  std::string values = "auto";
  std::string method = "auto";
  bool gradation = false;
  bool oracle = false;
  bool no_pruning = false;
  bool strata = false;
  int k = 0;
  std::int64_t budget = 0;
  int jobs = 1;
};

int cmd_contrast(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const Greyscale f = load_greyscale(o.greyscale, g);
  const auto tones = o.gradation ? gradation_vector(g, f).tones : contrast_vector(g, f).tones;
  emit(o.out, vector_json(o.gradation ? "gradation" : "contrast", tones),
       format_tuple(tones) + "\n", out);
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  const int chi = chromatic_number(g);
  SearchConfig cfg;
  if (o.values != "auto") {
    auto in = open_input(o.values);
    cfg.values = parse_value_set(in);
  }
  cfg.pruning = !o.no_pruning;
  if (o.budget > 0) cfg.budget = o.budget;
  cfg.jobs = o.jobs;
  try {
    MacgResult r = [&] {
      if (!o.oracle) return solve_macg(g, cfg);
      std::vector<Rational> values;
      if (cfg.values) {
        values = *cfg.values;
      } else if (chi == 2) {
        values = {Rational(0), Rational(1)};
      } else {
        values = mes(chi - 1).values;
      }
      return oracle_macg(g, values, cfg.budget, cfg.jobs);
    }();
    std::ostringstream text;
    text << "chromatic_number: " << chi << "\n"
         << "vector: " << format_tuple(r.vector.tones) << "\n"
         << "sum: " << component_sum(r.vector) << "\n"
         << "witness: " << format_tuple(r.witness.tones()) << "\n"
         << "value_set: " << r.value_set.size() << " values\n"
         << "nodes: " << r.nodes << "\n";
    emit(o.out, macg_json(r, chi), text.str(), out);
  } catch (const BudgetExceededError& ex) {
    if (ex.best()) err << "best so far: " << format_tuple(ex.best()->vector.tones) << "\n";
    throw;
  }
  return kExitOk;
}

int cmd_fk(const Options& o, std::ostream& out) {
  MesOptions opts;
  opts.strata = o.strata;
  opts.jobs = o.jobs;
  const EnchainedSet set = mes(o.k, opts);
  std::ostringstream text;
  text << format_set(set.values) << "\n";
  if (set.strata) {
    for (std::size_t i = 0; i < set.strata->size(); ++i) {
      text << "A_" << i << " (min step " << set.stratum_min_step[i] << "): "
           << format_set((*set.strata)[i]) << "\n";
    }
  }
  emit(o.out, fk_json(set), text.str(), out);
  return kExitOk;
}

int cmd_rmacg(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  auto in = open_input(o.fixed);
  const IncompleteGreyscale inc = parse_fixed_tones(in, g);
  RmacgMethod method = RmacgMethod::kAuto;
  if (o.method == "oracle") method = RmacgMethod::kOracle;
  if (o.method == "constructive") method = RmacgMethod::kConstructive;
  RmacgOracleOptions oracle;
  if (o.budget > 0) oracle.budget = o.budget;
  oracle.jobs = o.jobs;
  const RmacgResult r = solve_rmacg(g, inc, method, oracle);
  std::ostringstream text;
  text << "method: " << r.method << "\n"
       << "vector: " << format_tuple(r.vector.tones) << "\n"
       << "witness: " << format_tuple(r.witness.tones()) << "\n"
       << "vc_partition: phi0 " << vertex_list(r.partition.match_phi0) << ", phi1 "
       << vertex_list(r.partition.match_phi1) << "\n"
       << "nodes: " << r.nodes << "\n";
  emit(o.out, rmacg_json(r), text.str(), out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const Greyscale f = load_greyscale(o.greyscale, g);
  const VerificationReport report = verify_max_conditions(g, f);
  std::ostringstream text;
  text << (report.passed ? "passed" : "failed") << " (" << VerificationReport::kScope << ")\n";
  for (const Violation& v : report.violations) {
    text << "  " << v.condition;
    if (v.vertex) text << " vertex " << *v.vertex;
    if (v.edge) text << " edge {" << v.edge->u << ", " << v.edge->v << "}";
    text << ": " << v.detail << "\n";
  }
  emit(o.out, verification_json(report), text.str(), out);
  return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_chromatic(const Options& o, std::ostream& out) {
  out << chromatic_number(load_graph(o.graph)) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum-contrast greyscales of graphs", "contrast"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Options o;

  auto* contrast = app.add_subcommand("contrast", "Contrast (or gradation) vector of a greyscale");
  contrast->add_option("--graph", o.graph, "Edge-list file")->required();
  contrast->add_option("--greyscale", o.greyscale, "Greyscale file")->required();
  contrast->add_flag("--gradation", o.gradation, "Print the gradation vector instead");
  contrast->add_option("--out", o.out, "Write JSON here");

  auto* solve = app.add_subcommand("solve", "Maximum contrast vector and a canonical witness");
  solve->add_option("--graph", o.graph, "Edge-list file")->required();
  solve->add_option("--values", o.values, "auto (F_k with k = chi - 1) or a value-set file");
  solve->add_flag("--oracle", o.oracle, "Enumerate every assignment instead of branch and bound");
  solve->add_flag("--no-pruning", o.no_pruning, "Disable the lightest-tone and mirror cuts");
  solve->add_option("--budget", o.budget, "Node limit")->check(CLI::PositiveNumber);
  solve->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_option("--out", o.out, "Write JSON here");

  auto* fk = app.add_subcommand("fk", "Maximal enchained set F_k");
  fk->add_option("--k", o.k, "Minimum step 1/k, k >= 2")->required()->check(CLI::Range(2, 64));
  fk->add_flag("--strata", o.strata, "Also compute the strata A_i");
  fk->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  fk->add_option("--out", o.out, "Write JSON here");

  auto* rmacg = app.add_subcommand("rmacg", "{0,1}-restricted maximum contrast on a bipartite graph");
  rmacg->add_option("--graph", o.graph, "Edge-list file")->required();
  rmacg->add_option("--fixed", o.fixed, "Fixed-tone file")->required();
  rmacg->add_option("--method", o.method, "auto, oracle or constructive")
      ->check(CLI::IsMember({"auto", "oracle", "constructive"}));
  rmacg->add_option("--budget", o.budget, "Node limit for the oracle")->check(CLI::PositiveNumber);
  rmacg->add_option("--jobs", o.jobs, "Worker threads for the oracle")->check(CLI::PositiveNumber);
  rmacg->add_option("--out", o.out, "Write JSON here");

  auto* verify = app.add_subcommand("verify", "Check necessary conditions for maximum contrast");
  verify->add_option("--graph", o.graph, "Edge-list file")->required();
  verify->add_option("--greyscale", o.greyscale, "Greyscale file")->required();
  verify->add_option("--out", o.out, "Write JSON here");

  auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number");
  chromatic->add_option("--graph", o.graph, "Edge-list file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (contrast->parsed()) return cmd_contrast(o, out);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (fk->parsed()) return cmd_fk(o, out);
    if (rmacg->parsed()) return cmd_rmacg(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (chromatic->parsed()) return cmd_chromatic(o, out);
  } catch (const Failure& f) {
    err << "error[" << f.name << "]: " << f.message << "\n";
    return f.exit_code;
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kExitUsage;
}

}  // namespace contrast::cli
