#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"
#include "turan/packing.hpp"
#include "turan/verification.hpp"

using namespace turan;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << detail << ")\n";
  if (!ok) ++failures;
}

std::vector<std::vector<int>> sorted_tuples(int parts, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(parts), 1);
  while (true) {
    if (std::is_sorted(t.begin(), t.end())) out.push_back(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == max_part) t[i++] = 1;
    if (i == t.size()) break;
    ++t[i];
  }
  return out;
}

void criterion_1() {
  const auto grid = theorem_grid(3, 3);
  const auto rows = verify_formula_grid(grid, OracleOptions{}, 4);
  std::size_t matched = 0;
  for (const auto& row : rows) matched += row.match && row.oracle && row.oracle->max_edges == h_k(row.instance.parts, row.instance.k);
  report(1, "r=3 oracle equals h_k for n_i <= 3, k <= n_1", matched == rows.size() && !rows.empty(),
         std::to_string(matched) + "/" + std::to_string(rows.size()));
}

void criterion_2() {
  const std::vector<std::pair<std::vector<int>, int>> spots{
      {{1, 1, 1, 1}, 1}, {{1, 2, 2, 2}, 1}, {{2, 2, 2, 2}, 1}, {{2, 2, 2, 2}, 2}, {{1, 1, 2, 2}, 1}, {{2, 2, 2, 3}, 2}};
  std::size_t ok = 0;
  for (const auto& [t, k] : spots) {
    const HostSpec spec(PartSizes(t), k);
    ok += extremal_number(spec).max_edges == h_k(PartSizes(t), k);
  }
  report(2, "r=4 spot checks equal h_k", ok == spots.size(), std::to_string(ok) + "/" + std::to_string(spots.size()));
}

void criteria_3_4() {
  std::size_t built = 0;
  std::size_t good = 0;
  std::size_t probed = 0;
  std::size_t saturated = 0;
  for (int r = 3; r <= 5; ++r) {
    for (const auto& t : sorted_tuples(r, 5)) {
      for (int k = 1; k <= t[0]; ++k) {
        auto cert = extremal_construction(HostSpec(PartSizes(t), k));
        ++built;
        good += cert.graph.edge_count() == h_k(PartSizes(t), k) && verify_freeness(cert);
        if (r != 3) continue;
        ++probed;
        const auto probe = maximality_probe(cert);
        saturated += std::all_of(probe.begin(), probe.end(), [](const ProbeEntry& e) { return e.creates_packing; });
      }
    }
  }
  report(3, "constructions for r in {3,4,5}, n_i <= 5 have h_k edges and no kK_r", good == built,
         std::to_string(good) + "/" + std::to_string(built));
  report(4, "r=3 constructions are saturated", saturated == probed,
         std::to_string(saturated) + "/" + std::to_string(probed));
}

void criterion_5() {
  const auto suite = run_identity_suite(1, 500);
  report(5, "weight and deletion identities on 500 random subgraphs", suite.passed() && suite.checks == 1000,
         std::to_string(suite.checks - suite.failures) + "/" + std::to_string(suite.checks));
}

void criterion_6() {
  const auto suite = run_inequality_suite(1, 200);
  report(6, "clique-count and K_r-free weight bounds on 200 samples each", suite.passed() && suite.checks == 400,
         std::to_string(suite.checks - suite.failures) + "/" + std::to_string(suite.checks));
}

void criterion_7() {
  std::size_t ok = 0;
  std::size_t total = 0;
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n)
      for (int k = 1; k <= m; ++k) {
        ++total;
        const auto oracle = extremal_number_general(PartSizes{m, n}, 2, k).max_edges;
        ok += oracle == bipartite_matching_number(m, n, k).value && oracle == brute::extremal_number({m, n}, 2, k);
      }
  for (const auto& t : sorted_tuples(3, 3))
    for (int k = 1; k <= t[0]; ++k) {
      ++total;
      ok += extremal_number_general(PartSizes(t), 2, k).max_edges == multipartite_matching_number(PartSizes(t), k).value;
    }
  report(7, "matching formulas: bipartite m,n <= 4 and 3-part n_i <= 3", ok == total,
         std::to_string(ok) + "/" + std::to_string(total));
}

void criterion_8() {
  const PartSizes parts{2, 2, 2, 2};
  const auto k1 = extremal_number_general(parts, 3, 1).max_edges;
  const auto k2 = extremal_number_general(parts, 3, 2).max_edges;
  const auto bound1 = four_partite_triangle_lower_bound(parts, 1).value;
  const auto bound2 = four_partite_triangle_lower_bound(parts, 2).value;
  const bool ok = k1 >= 16 && k1 > bound1 && bound1 == 12 && bound2 == 14 && k2 >= bound2;
  report(8, "K_{2,2,2,2} triangles: k=1 beats 12, k=2 at least 14", ok,
         "k=1: " + std::to_string(k1) + " vs " + std::to_string(bound1) + ", k=2: " + std::to_string(k2) + " vs " +
             std::to_string(bound2) + ", gap " + std::to_string(k2 - bound2));
}

std::string max_edges_column(const std::vector<GridRow>& rows) {
  std::string column;
  for (const auto& row : rows) column += (row.oracle ? std::to_string(row.oracle->max_edges) : "-") + "\n";
  return column;
}

void criterion_9() {
  const auto grid = theorem_grid(3, 3);
  const auto first = grid_report(verify_formula_grid(grid, OracleOptions{}, 1)).text;
  const auto second = grid_report(verify_formula_grid(grid, OracleOptions{}, 1)).text;
  const bool identities_same = run_identity_suite(1, 500).text == run_identity_suite(1, 500).text;

  OracleOptions eight_threads;
  eight_threads.threads = 8;
  const auto serial = max_edges_column(verify_formula_grid(grid, OracleOptions{}, 1));
  const auto jobs = max_edges_column(verify_formula_grid(grid, OracleOptions{}, 8));
  const auto threaded = max_edges_column(verify_formula_grid(grid, eight_threads, 1));

  const bool ok = first == second && identities_same && serial == jobs && serial == threaded;
  report(9, "criteria 1 and 5 rerun byte-identical, parallelism 1 and 8 agree", ok,
         std::to_string(first.size() + run_identity_suite(1, 500).text.size()) + " report bytes");
}

}  // namespace

int main() {
  try {
    criterion_1();
    criterion_2();
    criteria_3_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
  } catch (const std::exception& e) {
    std::cout << "FAIL unexpected error: " << e.what() << '\n';
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
