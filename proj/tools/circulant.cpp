// Command-line front end: aut, classify, ci, iso and batch verbs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "circulant/autsolver.hpp"
#include "circulant/classify.hpp"
#include "circulant/errors.hpp"
#include "circulant/oracle.hpp"
#include "circulant/serialize.hpp"

namespace {

using namespace circulant;
using nlohmann::ordered_json;

enum ExitCode { Ok = 0, InputError = 1, Mismatch = 2, OverBudget = 3 };

struct Common {
  Int n = 0;
  std::string set;
  std::string method = "auto";
  bool verify = false;
  bool json = false;
  bool timing = false;
  bool seed_less = false;
  int budget_vertices = 32;
  std::string budget_order = "1000000";

  SearchBudget budget() const {
    SearchBudget b;
    b.max_vertices = budget_vertices;
    b.max_group_order_for_enumeration = order_from_string(budget_order);
    return b;
  }
};

struct Failure {
  std::string type;
  std::string message;
  int code;
};

Failure describe_failure() {
  try {
    throw;
  } catch (const ParseError& e) {
    return {"ParseError", e.what(), InputError};
  } catch (const SymmetryViolation& e) {
    return {"SymmetryViolation", e.what(), InputError};
  } catch (const RangeViolation& e) {
    return {"RangeViolation", e.what(), InputError};
  } catch (const NotAUnit& e) {
    return {"NotAUnit", e.what(), InputError};
  } catch (const DegreeMismatch& e) {
    return {"DegreeMismatch", e.what(), InputError};
  } catch (const InvalidArgument& e) {
    return {"InvalidArgument", e.what(), InputError};
  } catch (const BudgetExceeded& e) {
    return {"BudgetExceeded", e.what(), OverBudget};
  } catch (const UnsupportedOrder& e) {
    return {"UnsupportedOrder", e.what(), OverBudget};
  } catch (const ClassificationViolation& e) {
    return {"ClassificationViolation", e.what(), Mismatch};
  } catch (const DichotomyViolation& e) {
    return {"DichotomyViolation", e.what(), Mismatch};
  } catch (const std::logic_error& e) {
    return {"InternalMismatch", e.what(), Mismatch};
  } catch (const std::exception& e) {
    return {"Error", e.what(), InputError};
  }
}

ordered_json failure_json(const Failure& f) {
  return {{"type", f.type}, {"message", f.message}};
}

CirculantGraph graph_from(const Common& c) {
  const std::vector<Int> set = parse_int_list(c.set);
  return new_circulant(c.n, set);
}

void emit(const ordered_json& j, bool json, const std::string& text) {
  if (json)
    std::cout << j.dump() << '\n';
  else
    std::cout << text;
}

struct AutResult {
  ordered_json report;
  std::string text;
  int code = Ok;
};

AutResult solve_one(const CirculantGraph& x, const Common& c) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  SolveOptions options;
  options.method = parse_method(c.method);
  options.budget = c.budget();
  options.oracle_vertex_bound = c.budget_vertices;
  const Solution solution = aut(x, options);
  const PermGroup group = realize(solution.description);

  std::optional<bool> verified;
  if (c.verify && x.order() <= c.budget_vertices)
    verified = same_group(group, brute_force_aut(x, options.budget));
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  AutResult out;
  out.report["n"] = x.order();
  out.report["set"] = to_json(x.set());
  out.report["method"] = to_string(solution.method);
  out.report["group"] = to_json(solution.description);
  out.report["description"] = to_string(solution.description);
  out.report["order"] = group.order().str();
  out.report["generators"] = to_json(group.generators());
  out.report["verified"] = verified ? ordered_json(*verified) : ordered_json(nullptr);
  out.report["ms"] = c.timing ? ordered_json(ms) : ordered_json(nullptr);
  if (verified == false) out.code = Mismatch;

  std::string text = format_graph(x) + "\n";
  text += "group: " + to_string(solution.description) + "\n";
  text += "order: " + group.order().str() + "\n";
  text += "method: " + to_string(solution.method) + "\n";
  text += "generators:\n";
  for (const auto& g : group.generators()) text += "  " + to_cycle_string(g) + "\n";
  if (c.verify)
    text += std::string("verified: ") +
            (verified ? (*verified ? "yes" : "NO") : "skipped (over vertex budget)") + "\n";
  if (c.timing) text += "time: " + std::to_string(ms) + " ms\n";
  out.text = std::move(text);
  return out;
}

int report_failure(const Failure& f, bool json) {
  if (json)
    std::cout << ordered_json{{"error", failure_json(f)}}.dump() << '\n';
  else
    std::cerr << f.type << ": " << f.message << '\n';
  return f.code;
}

int cmd_aut(const Common& c) {
  const CirculantGraph x = graph_from(c);
  AutResult r = solve_one(x, c);
  emit(r.report, c.json, r.text);
  return r.code;
}

/// Runs a predicate and records "n/a" when it does not apply or is out of
/// budget.
template <class F>
ordered_json or_na(F&& f) {
  try {
    return f();
  } catch (const InvalidArgument&) {
    return "n/a";
  } catch (const BudgetExceeded&) {
    return "n/a";
  } catch (const UnsupportedOrder&) {
    return "n/a";
  }
}

int cmd_classify(const Common& c) {
  const CirculantGraph x = graph_from(c);
  const SearchBudget budget = c.budget();
  ordered_json j;
  j["n"] = x.order();
  j["set"] = to_json(x.set());
  j["edge_transitive"] = or_na([&] { return ordered_json(edge_transitive_prime(x)); });
  const TwoArcClass two_arc = two_arc_classify(x);
  j["two_arc"] = {{"label", to_string(two_arc.label)}, {"detail", two_arc.detail}};
  j["both_edge_transitive"] = or_na([&] {
    const auto label = both_edge_transitive_classify(x, budget);
    return label ? ordered_json(to_string(*label)) : ordered_json(nullptr);
  });
  j["normal"] = or_na([&] { return ordered_json(is_normal_circulant(x, budget)); });
  const auto prime = noncyclic_regular_sufficient(x);
  j["regular_subgroup"] = {
      {"sufficient_prime", prime ? ordered_json(*prime) : ordered_json(nullptr)},
      {"noncyclic", or_na([&] {
         const auto h = find_noncyclic_regular_subgroup(x, budget);
         return h ? to_json(h->generators()) : ordered_json(nullptr);
       })}};
  j["dichotomy"] = or_na([&] {
    const Dichotomy d = prime_power_dichotomy(x, budget);
    return ordered_json{
        {"wreath", d.wreath},
        {"normal_sylow", d.normal_sylow ? ordered_json(*d.normal_sylow) : ordered_json(nullptr)}};
  });

  std::string text = format_graph(x) + "\n";
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "set") text += key + ": " + value.dump() + "\n";
  emit(j, c.json, text);
  return Ok;
}

int cmd_ci(const Common& c, const std::string& mode) {
  const CiGroupStatus status = is_ci_group(c.n);
  ordered_json j;
  j["n"] = c.n;
  j["mode"] = mode;
  int code = Ok;
  std::string text;
  if (mode == "lookup") {
    j["dci"] = status.dci;
    j["ci"] = status.ci;
    text = "Z_" + std::to_string(c.n) + ": " + (status.dci ? "DCI" : "not DCI") + ", " +
           (status.ci ? "CI" : "not CI") + "\n";
  } else {
    const SearchBudget budget = c.budget();
    if (c.n > budget.max_vertices)
      throw BudgetExceeded("order " + std::to_string(c.n) + " exceeds the vertex budget");
    bool ci = true;
    std::size_t checked = 0;
    ordered_json witness = nullptr;
    for (const auto& s : symmetric_connection_sets(c.n)) {
      const CirculantGraph x = new_circulant(c.n, s);
      ++checked;
      if (mode == "exhaustive") {
        const CiReport report = is_ci_graph(x, budget);
        if (!report.ci) {
          ci = false;
          witness = {{"set", to_json(s)}, {"isomorphic_set", to_json(*report.witness)}};
          break;
        }
      } else if (!ci_via_conjugacy(x, budget)) {
        ci = false;
        witness = {{"set", to_json(s)}};
        break;
      }
    }
    j["ci"] = ci;
    j["graphs_checked"] = checked;
    j["witness"] = witness;
    j["expected"] = status.ci;
    if (ci != status.ci) code = Mismatch;
    text = "Z_" + std::to_string(c.n) + ": " + (ci ? "CI confirmed" : "not CI") + " after " +
           std::to_string(checked) + " graphs\n";
    if (!witness.is_null()) text += "witness: " + witness.dump() + "\n";
  }
  emit(j, c.json, text);
  return code;
}

int cmd_iso(const Common& c, const std::string& other) {
  const CirculantGraph x = graph_from(c);
  const std::vector<Int> other_set = parse_int_list(other);
  const CirculantGraph y = new_circulant(c.n, other_set);
  const auto map = are_isomorphic(x, y, c.budget());
  ordered_json j;
  j["n"] = c.n;
  j["set"] = to_json(x.set());
  j["other"] = to_json(y.set());
  j["isomorphic"] = map.has_value();
  j["map"] = map ? to_json(*map) : ordered_json(nullptr);
  std::string text = format_graph(x) + (map ? " ≅ " : " ≇ ") + format_graph(y) + "\n";
  if (map) text += "map: " + to_json(*map).dump() + "\n";
  emit(j, c.json, text);
  return Ok;
}

int cmd_batch(const Common& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open batch file '" + path + "'");
  int worst = Ok;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(first, last - first + 1);
    ordered_json record;
    record["line"] = number;
    record["input"] = text;
    try {
      const AutResult r = solve_one(parse_graph(text), c);
      for (const auto& [key, value] : r.report.items()) record[key] = value;
      worst = std::max(worst, r.code);
    } catch (...) {
      const Failure f = describe_failure();
      record["error"] = failure_json(f);
      worst = std::max(worst, f.code);
    }
    std::cout << record.dump() << '\n';
  }
  return worst;
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-vertices", c.budget_vertices, "Largest order handed to the oracle")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-order", c.budget_order,
                  "Largest group order enumerated element by element");
  cmd->add_flag("--seed-less", c.seed_less, "Reserved; rejected");
  cmd->add_flag("--json", c.json, "Emit JSON");
}

void add_graph(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--set", c.set, "Connection set as a comma list; empty string for none")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups and classification of circulant graphs"};
  app.require_subcommand(1);
  Common c;
  std::string mode = "lookup";
  std::string other;
  std::string path;

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of X(n;S)");
  add_graph(aut_cmd, c);
  add_budget(aut_cmd, c);
  aut_cmd->add_option("--method", c.method, "auto, prime, pq, squarefree or oracle");
  aut_cmd->add_flag("--verify", c.verify, "Compare with the brute-force oracle");
  aut_cmd->add_flag("--timing", c.timing, "Report wall time in ms");

  auto* classify_cmd = app.add_subcommand("classify", "Classification predicates for X(n;S)");
  add_graph(classify_cmd, c);
  add_budget(classify_cmd, c);

  auto* ci_cmd = app.add_subcommand("ci", "CI status of Z_n");
  ci_cmd->add_option("--n", c.n, "Group order")->required()->check(CLI::PositiveNumber);
  ci_cmd->add_option("--mode", mode, "lookup, exhaustive or conjugacy")
      ->check(CLI::IsMember({"lookup", "exhaustive", "conjugacy"}));
  add_budget(ci_cmd, c);

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism of X(n;S) and X(n;T)");
  add_graph(iso_cmd, c);
  iso_cmd->add_option("--other", other, "Second connection set")->required();
  add_budget(iso_cmd, c);

  auto* batch_cmd = app.add_subcommand("batch", "Solve every 'n;s1,s2,...' line of a file");
  batch_cmd->add_option("path", path, "Batch file")->required();
  batch_cmd->add_option("--method", c.method, "auto, prime, pq, squarefree or oracle");
  batch_cmd->add_flag("--verify", c.verify, "Compare with the brute-force oracle");
  batch_cmd->add_flag("--timing", c.timing, "Report wall time in ms");
  add_budget(batch_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (c.seed_less)
      throw InvalidArgument("--seed-less is reserved: every computation is already deterministic");
    if (*aut_cmd) return cmd_aut(c);
    if (*classify_cmd) return cmd_classify(c);
    if (*ci_cmd) return cmd_ci(c, mode);
    if (*iso_cmd) return cmd_iso(c, other);
    if (*batch_cmd) return cmd_batch(c, path);
  } catch (...) {
    return report_failure(describe_failure(), c.json);
  }
  return Ok;
}
