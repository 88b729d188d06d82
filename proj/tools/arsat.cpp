// Command-line front end: saturate, query, verify, oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arsat/io.hpp"
#include "arsat/oracle.hpp"
#include "arsat/query.hpp"
#include "arsat/saturation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitLimit = 2;
constexpr int kExitParse = 3;
constexpr int kExitViolations = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct SaturateArgs {
  std::string file;
  std::optional<std::size_t> max_clauses;
  std::optional<std::size_t> max_steps;
  std::string out;
  bool stats = false;
};

int run_saturate(const SaturateArgs& args) {
  arsat::Problem problem = arsat::parse_problem(read_file(args.file));
  arsat::Limits limits{args.max_clauses, args.max_steps};
  arsat::SaturationState state = arsat::saturate(arsat::context_for(problem), problem.clauses, limits);
  std::string text = arsat::serialize_state(state);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + args.out);
    out << text;
  }
  if (args.stats) {
    const auto& s = state.stats;
    std::cerr << "status: " << arsat::to_string(state.status) << "\n"
              << "clauses: " << state.clauses.size() << "\n"
              << "rules: " << state.rules.size() << "\n"
              << "inferences: " << s.inferences << " (non-maximality " << s.non_maximality
              << ", redundancy " << s.redundancy << ", discovery " << s.discovery << ")\n";
  }
  return state.status == arsat::SaturationStatus::Saturated ? kExitOk : kExitLimit;
}

struct QueryArgs {
  std::string state_file;
  std::string clause;
  std::string from;
  bool certificate = false;
  bool unsound_ok = false;
};

int run_query(const QueryArgs& args) {
  arsat::SaturationState state = arsat::parse_state(read_file(args.state_file));
  arsat::SymbolTable symbols = arsat::SymbolTable::of(state.clauses);
  std::vector<arsat::Clause> queries;
  if (!args.from.empty()) {
    arsat::Problem batch = arsat::parse_problem(read_file(args.from));
    queries = batch.queries;
  }
  if (!args.clause.empty()) queries.push_back(arsat::parse_clause(args.clause, symbols));
  if (queries.empty()) throw CLI::ValidationError("query", "no query given");

  arsat::QueryOptions options{args.unsound_ok};
  for (const auto& q : queries) {
    arsat::QueryResult result = arsat::entails(state, q, options);
    std::cout << arsat::to_string(result.verdict) << "\n";
    if (args.certificate && result.certificate) {
      std::cout << arsat::serialize_certificate(*result.certificate);
    }
  }
  return kExitOk;
}

int run_verify(const std::string& state_file) {
  arsat::SaturationState state = arsat::parse_state(read_file(state_file));
  arsat::VerificationReport report =
      arsat::verify_saturated(state.ordering, state.clauses, state.rules);
  if (report.ok()) {
    std::cout << "ok (" << report.inferences_checked << " inferences checked)\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    std::cout << "violation (" << v.condition << "): " << v.detail << "\n";
  }
  return kExitViolations;
}

struct OracleArgs {
  std::string file;
  std::size_t depth = 2;
  std::string clause;
  std::size_t budget = arsat::kDefaultOracleBudget;
};

int run_oracle(const OracleArgs& args) {
  arsat::Problem problem = arsat::parse_problem(read_file(args.file));
  arsat::SymbolTable symbols = arsat::SymbolTable::of(problem.clauses);
  arsat::Clause query = arsat::parse_clause(args.clause, symbols);
  arsat::OracleResult result =
      arsat::oracle_entails(problem.clauses, query, {args.depth, {}}, args.budget);
  std::cout << arsat::to_string(result.verdict);
  if (result.verdict == arsat::OracleVerdict::Unknown && result.exhaustive) {
    std::cout << " (herbrand universe exhausted: not entailed)";
  }
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered-resolution saturation with atom rewriting and ground entailment queries", "arsat"};
  app.require_subcommand(1);

  SaturateArgs sat;
  auto* saturate = app.add_subcommand("saturate", "Saturate a problem file");
  saturate->add_option("FILE", sat.file, "Problem file")->required();
  saturate->add_option("--max-clauses", sat.max_clauses, "Stop once this many clauses exist");
  saturate->add_option("--max-steps", sat.max_steps, "Stop after this many inferences");
  saturate->add_option("--out", sat.out, "Write the state here instead of stdout");
  saturate->add_flag("--stats", sat.stats, "Print counters to stderr");

  QueryArgs qry;
  auto* query = app.add_subcommand("query", "Decide ground entailment against a saturated state");
  query->add_option("STATE", qry.state_file, "Saturated state file")->required();
  query->add_option("CLAUSE", qry.clause, "Ground clause, e.g. \"q(f(a),a) ->\"");
  query->add_option("--from", qry.from, "Read `query:` lines from this file");
  query->add_flag("--certificate", qry.certificate, "Print the local proof certificate");
  query->add_flag("--unsound-ok", qry.unsound_ok, "Answer even if the state hit a limit");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Check the saturation conditions of a state");
  verify->add_option("STATE", verify_file, "State file")->required();

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Bounded Herbrand-instantiation entailment check");
  oracle->add_option("FILE", orc.file, "Problem file")->required();
  oracle->add_option("CLAUSE", orc.clause, "Ground clause")->required();
  oracle->add_option("--depth", orc.depth, "Maximum term height")->required();
  oracle->add_option("--budget", orc.budget, "Maximum number of ground instances");

  // Clauses with an empty antecedent start with "->", which would otherwise be
  // read as an option; pass them as positionals after "--".
  std::vector<std::string> args;
  std::vector<std::string> arrows;
  bool separator_seen = false;
  for (int i = argc - 1; i >= 1; --i) {
    std::string arg = argv[i];
    if (arg == "--") separator_seen = true;
    if (!separator_seen && arg.rfind("->", 0) == 0) {
      arrows.push_back(std::move(arg));
    } else {
      args.push_back(std::move(arg));
    }
  }
  if (!arrows.empty()) {
    if (!separator_seen) args.insert(args.begin(), "--");
    args.insert(args.begin(), arrows.begin(), arrows.end());
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*saturate) return run_saturate(sat);
    if (*query) return run_query(qry);
    if (*verify) return run_verify(verify_file);
    if (*oracle) return run_oracle(orc);
  } catch (const arsat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const arsat::QueryRefused& e) {
    std::cerr << "refused: " << e.what() << " (use --unsound-ok to run the local check anyway)\n";
    return kExitError;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
