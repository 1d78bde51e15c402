// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "circulant/autsolver.hpp"
#include "circulant/classify.hpp"
#include "circulant/errors.hpp"
#include "circulant/oracle.hpp"

using namespace circulant;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (out.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": "
       << out.detail << " (" << secs << " s)";
  std::cout << line.str() << std::endl;
}

CirculantGraph circ(Int n, const ResidueSet& s) { return new_circulant(n, s); }

ResidueSet random_symmetric_set(Int n, std::mt19937& rng) {
  ResidueSet s;
  for (Int a = 1; 2 * a <= n; ++a)
    if (rng() & 1U) {
      s.push_back(a);
      if (2 * a != n) s.push_back(n - a);
    }
  std::sort(s.begin(), s.end());
  return s;
}

std::string show(const ResidueSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

BigInt power_of_two(int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= 2;
  return out;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  pclose(pipe);
  return out;
}

bool has_order_n_element(const PermGroup& g, Int n) {
  bool found = false;
  g.chain().for_each_element([&](const Permutation& x) { found = found || x.order() == n; });
  return found;
}

}  // namespace

int main() {
  run(1, "prime-order exactness", [] {
    int graphs = 0;
    int bad = 0;
    for (Int p : {3, 5, 7, 11, 13})
      for (const auto& s : symmetric_connection_sets(p)) {
        const auto x = circ(p, s);
        ++graphs;
        if (!same_group(realize(aut_prime(x)), brute_force_aut(x))) ++bad;
      }
    return Outcome{bad == 0 && graphs == 110,
                   std::to_string(graphs) + " graphs, " + std::to_string(bad) + " mismatches"};
  });

  run(2, "pq exactness and agreement with the square-free solver", [] {
    int graphs = 0;
    int bad = 0;
    int disagree = 0;
    for (Int n : {6, 10, 15})
      for (const auto& s : symmetric_connection_sets(n)) {
        const auto x = circ(n, s);
        ++graphs;
        const PermGroup pq = realize(aut_pq(x));
        if (!same_group(pq, brute_force_aut(x))) ++bad;
        if (!same_group(pq, realize(aut_squarefree(x)))) ++disagree;
      }
    return Outcome{bad == 0 && disagree == 0 && graphs == 168,
                   std::to_string(graphs) + " graphs, " + std::to_string(bad) +
                       " oracle mismatches, " + std::to_string(disagree) + " solver disagreements"};
  });

  run(3, "square-free exactness at n = 30", [] {
    std::mt19937 rng(20260101);
    std::vector<ResidueSet> cases{{15}, {10, 20}, {6, 12, 18, 24}};
    ResidueSet all;
    for (Int s = 1; s < 30; ++s) all.push_back(s);
    cases.push_back(all);
    for (int i = 0; i < 200; ++i) cases.push_back(random_symmetric_set(30, rng));
    int bad = 0;
    std::string first;
    for (const auto& s : cases) {
      const auto x = circ(30, s);
      if (!same_group(realize(aut_squarefree(x)), brute_force_aut(x))) {
        if (bad++ == 0) first = " first " + show(s);
      }
    }
    return Outcome{bad == 0, std::to_string(cases.size()) + " graphs (4 structured, 200 random), " +
                                 std::to_string(bad) + " mismatches" + first};
  });

  run(4, "named automorphism group orders", [] {
    const BigInt big = power_of_two(15) * factorial(15);
    const std::vector<std::pair<CirculantGraph, BigInt>> named{
        {circ(5, {1, 4}), 10},
        {circ(13, {1, 3, 4, 9, 10, 12}), 78},
        {circ(6, {2, 4}), 72},
        {circ(10, {5}), 3840},
        {circ(30, {15}), big},
    };
    std::string detail;
    bool ok = true;
    for (const auto& [x, expected] : named) {
      const BigInt oracle = brute_force_aut(x).order();
      const BigInt solver = realize(aut(x).description).order();
      ok = ok && oracle == expected && solver == expected;
      detail += format_graph(x) + "=" + solver.str() + (oracle == expected ? "" : "(oracle differs)") +
                " ";
    }
    return Outcome{ok, detail};
  });

  run(5, "imprimitivity of composite-order answers", [] {
    int graphs = 0;
    int bad = 0;
    for (Int n = 4; n <= 16; ++n) {
      if (Modulus(n).is_prime()) continue;
      for (const auto& s : symmetric_connection_sets(n)) {
        const auto x = circ(n, s);
        const PermGroup g = realize(aut(x).description);
        ++graphs;
        bool imprimitive = false;
        for (const auto& b : cyclic_block_systems(g)) imprimitive = imprimitive || !b.is_trivial();
        if (!imprimitive && g.order() != factorial(n)) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " violations"};
  });

  run(6, "wreath containment", [] {
    std::mt19937 rng(6);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Int a = 0;
      Int b = 0;
      do {
        a = 1 + static_cast<Int>(rng() % 12);
        b = 1 + static_cast<Int>(rng() % 12);
      } while (a * b > 24);
      const auto x = circ(a, random_symmetric_set(a, rng));
      const auto y = circ(b, random_symmetric_set(b, rng));
      const PermGroup w =
          wreath_group(realize(aut(x).description), realize(aut(y).description));
      const DenseGraph graph = wreath_graph(to_dense(x), to_dense(y));
      for (const auto& g : w.generators())
        if (!preserves_adjacency(graph, g.images())) ++bad;
    }
    return Outcome{bad == 0, "100 pairs, " + std::to_string(bad) + " non-automorphism generators"};
  });

  run(7, "CI suite", [] {
    int bad = 0;
    for (Int n = 4; n <= 9; ++n)
      for (const auto& s : symmetric_connection_sets(n))
        if (!is_ci_graph(circ(n, s)).ci) ++bad;
    std::string witness = "none";
    for (const auto& s : symmetric_connection_sets(16)) {
      const CiReport r = is_ci_graph(circ(16, s));
      if (!r.ci && r.witness && are_isomorphic(circ(16, s), circ(16, *r.witness))) {
        witness = show(s) + " ~ " + show(*r.witness);
        break;
      }
    }
    int disagree = 0;
    for (Int n = 1; n <= 8; ++n)
      for (const auto& s : symmetric_connection_sets(n)) {
        const auto x = circ(n, s);
        if (ci_via_conjugacy(x) != is_ci_graph(x).ci) ++disagree;
      }
    return Outcome{bad == 0 && witness != "none" && disagree == 0,
                   std::to_string(bad) + " non-CI graphs for n in 4..9; n = 16 witness " + witness +
                       "; " + std::to_string(disagree) + " conjugacy disagreements for n <= 8"};
  });

  run(8, "edge transitivity at prime order", [] {
    int graphs = 0;
    int bad = 0;
    for (Int p : {3, 5, 7, 11, 13})
      for (const auto& s : symmetric_connection_sets(p)) {
        const auto x = circ(p, s);
        ++graphs;
        if (edge_transitive_prime(x) != (edge_orbit_count(x) <= 1)) ++bad;
      }
    return Outcome{bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " violations"};
  });

  run(9, "2-arc-transitive families", [] {
    int families = 0;
    int bad = 0;
    auto confirm = [&](const CirculantGraph& x, TwoArcLabel expected) {
      ++families;
      const bool transitive = two_arc_orbit_count(x, brute_force_aut(x)) == 1;
      if (!transitive || two_arc_classify(x).label != expected) ++bad;
    };
    for (Int n = 3; n <= 12; ++n) {
      ResidueSet all;
      ResidueSet odd;
      for (Int s = 1; s < n; ++s) {
        all.push_back(s);
        if (s % 2) odd.push_back(s);
      }
      confirm(circ(n, all), TwoArcLabel::Complete);
      if (n % 2 == 0 && n >= 6) confirm(circ(n, odd), TwoArcLabel::CompleteBipartite);
      if (n >= 5) confirm(circ(n, {1, n - 1}), TwoArcLabel::Cycle);
    }
    confirm(circ(10, {1, 3, 7, 9}), TwoArcLabel::CompleteBipartiteMinusFactor);

    std::mt19937 rng(9);
    std::set<std::pair<Int, ResidueSet>> seen;
    int negatives_bad = 0;
    while (seen.size() < 50) {
      const Int n = 4 + static_cast<Int>(rng() % 9);
      const auto s = random_symmetric_set(n, rng);
      const auto x = circ(n, s);
      if (!is_connected(x) || two_arc_classify(x).label != TwoArcLabel::NotTwoArcTransitive) continue;
      if (!seen.insert({n, s}).second) continue;
      if (two_arc_orbit_count(x, brute_force_aut(x)) <= 1) ++negatives_bad;
    }
    return Outcome{bad == 0 && negatives_bad == 0,
                   std::to_string(families) + " family members, " + std::to_string(bad) +
                       " unconfirmed; 50 non-family graphs, " + std::to_string(negatives_bad) +
                       " 2-arc-transitive"};
  });

  run(10, "noncyclic regular subgroups and the prime-power dichotomy", [] {
    int predicted = 0;
    int missing = 0;
    for (Int n = 1; n <= 12; ++n)
      for (const auto& s : symmetric_connection_sets(n)) {
        const auto x = circ(n, s);
        if (!noncyclic_regular_sufficient(x)) continue;
        ++predicted;
        const auto h = find_noncyclic_regular_subgroup(x);
        const PermGroup aut = brute_force_aut(x);
        bool ok = h && h->order() == n && h->is_transitive() && !has_order_n_element(*h, n);
        if (ok)
          for (const auto& g : h->generators()) ok = ok && aut.contains(g);
        if (!ok) ++missing;
      }
    int wreath_bad = 0;
    int with_regular = 0;
    std::string counterexamples;
    for (Int n : {4, 8, 9})
      for (const auto& s : symmetric_connection_sets(n)) {
        const auto x = circ(n, s);
        if (!find_noncyclic_regular_subgroup(x)) continue;
        ++with_regular;
        if (!is_wreath_decomposable(x)) {
          ++wreath_bad;
          counterexamples += " " + format_graph(x);
        }
      }
    int dichotomy_bad = 0;
    for (Int n : {8, 9})
      for (const auto& s : symmetric_connection_sets(n)) {
        try {
          prime_power_dichotomy(circ(n, s));
        } catch (const DichotomyViolation&) {
          ++dichotomy_bad;
        }
      }
    return Outcome{missing == 0 && wreath_bad == 0 && dichotomy_bad == 0,
                   std::to_string(predicted) + " predicted, " + std::to_string(missing) +
                       " without a noncyclic regular subgroup; " + std::to_string(with_regular) +
                       " prime-power graphs with one, " + std::to_string(wreath_bad) +
                       " not wreath" + (counterexamples.empty() ? "" : " (" + counterexamples + " )") +
                       "; " + std::to_string(dichotomy_bad) + " dichotomy violations"};
  });

  run(11, "CLI determinism", [] {
    const std::string cli = CIRCULANT_CLI;
    const auto batch = std::filesystem::temp_directory_path() / "circulant_acceptance_batch.txt";
    {
      std::ofstream out(batch);
      out << "# acceptance batch\n5;1,4\n4;1\n15;1,14\n30;15\n16;1,15\n";
    }
    const std::vector<std::string> commands{
        "aut --n 5 --set 1,4 --verify --json",
        "aut --n 6 --set \"\" --json",
        "aut --n 30 --set 15 --json",
        "aut --n 30 --set 1,10,20,29 --verify --json",
        "aut --n 16 --set 1,6,10,15 --json",
        "aut --n 15 --set 1,14 --method pq --json",
        "classify --n 13 --set 1,3,4,9,10,12 --json",
        "classify --n 10 --set 1,3,7,9 --json",
        "ci --n 8 --mode exhaustive --json",
        "ci --n 16 --mode exhaustive --json",
        "ci --n 30 --mode lookup --json",
        "iso --n 8 --set 1,7 --other 3,5 --json",
        "batch " + batch.string() + " --json",
    };
    int unstable = 0;
    int empty = 0;
    for (const auto& args : commands) {
      const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
      const std::string first = capture(command);
      if (first.empty()) ++empty;
      for (int i = 0; i < 2; ++i)
        if (capture(command) != first) ++unstable;
    }
    std::filesystem::remove(batch);
    return Outcome{unstable == 0 && empty == 0,
                   std::to_string(commands.size()) + " invocations x3, " + std::to_string(unstable) +
                       " differing reruns, " + std::to_string(empty) + " empty outputs"};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
