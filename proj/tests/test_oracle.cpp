#include <filesystem>
#include <fstream>

#include "brute_force.hpp"
#include "doctest.h"
#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"
#include "turan/packing.hpp"
#include "turan/result_cache.hpp"

using namespace turan;

namespace {

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

std::int64_t edges_of(const std::vector<int>& t) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) e += static_cast<std::int64_t>(t[i]) * t[j];
  return e;
}

}  // namespace

TEST_CASE("oracle examples") {
  auto a = extremal_number(HostSpec(PartSizes{2, 2, 2}, 1));
  CHECK(a.max_edges == 8);
  CHECK_FALSE(contains_packing(a.witness, 1));
  CHECK(a.witness.edge_count() == 8);
  CHECK(extremal_number(HostSpec(PartSizes{2, 2, 2}, 2)).max_edges == 10);
  CHECK(extremal_number(HostSpec(PartSizes{3, 3, 3}, 3)).max_edges == 24);
  CHECK(extremal_number(HostSpec(PartSizes{2, 2, 2, 2}, 2)).max_edges == 22);
  CHECK(extremal_number_general(PartSizes{4, 4}, 2, 3).max_edges == 8);
  CHECK(extremal_number_general(PartSizes{4, 4}, 2, 4).max_edges == 12);
  CHECK(extremal_number_general(PartSizes{2, 2, 2, 2}, 3, 2).max_edges == 18);
  CHECK(extremal_number(HostSpec(PartSizes{2, 2, 2}, 3)).max_edges == 12);

  auto sorted = extremal_number(HostSpec(PartSizes{3, 2, 2}, 2));
  CHECK(sorted.instance.parts.sizes() == std::vector<int>{2, 2, 3});
  CHECK(sorted.witness.part_sizes() == std::vector<int>{2, 2, 3});
}

TEST_CASE("oracle agrees with exhaustive enumeration on small hosts") {
  for (int parts = 2; parts <= 4; ++parts) {
    for (const auto& t : sorted_tuples(parts, 4)) {
      if (edges_of(t) > 9) continue;
      for (int r = 2; r <= parts; ++r) {
        for (int k = 1; k <= 3; ++k) {
          const int truth = brute::extremal_number(t, r, k);
          OracleOptions plain;
          plain.seed_incumbent = false;
          plain.symmetry = false;
          CAPTURE(PartSizes(t).to_string());
          CAPTURE(r);
          CAPTURE(k);
          CHECK(extremal_number_general(PartSizes(t), r, k).max_edges == truth);
          CHECK(extremal_number_general(PartSizes(t), r, k, plain).max_edges == truth);
        }
      }
    }
  }
}

TEST_CASE("larger instances checked by enumeration") {
  CHECK(brute::extremal_number({2, 2, 3}, 3, 2) == 14);
  CHECK(extremal_number(HostSpec(PartSizes{2, 2, 3}, 2)).max_edges == 14);
  CHECK(brute::extremal_number({2, 2, 2, 2}, 3, 1) == 16);
  CHECK(extremal_number_general(PartSizes{2, 2, 2, 2}, 3, 1).max_edges == 16);
}

TEST_CASE("oracle is sandwiched between construction and host") {
  for (const auto& t : sorted_tuples(3, 3)) {
    const PartSizes parts(t);
    for (int k = 1; k <= t[0] + 1; ++k) {
      auto result = extremal_number(HostSpec(parts, k));
      CHECK(result.max_edges <= host_edge_count(parts));
      if (k <= t[0]) CHECK(result.max_edges >= extremal_construction(HostSpec(parts, k)).claimed_edges);
      CHECK(result.max_edges == turan_number(HostSpec(parts, k)).value);
    }
  }
}

TEST_CASE("witnesses are free and saturated") {
  for (int k = 1; k <= 3; ++k) {
    auto result = extremal_number(HostSpec(PartSizes{3, 3, 3}, k));
    CHECK_FALSE(contains_packing(result.witness, k));
    CHECK(result.witness.edge_count() == result.max_edges);
    for (const auto& e : complete_multipartite(PartSizes{3, 3, 3}).edges()) {
      if (result.witness.adjacent(e.first, e.second)) continue;
      CHECK(contains_packing(result.witness.with_edge(e.first, e.second), k));
    }
  }
}

TEST_CASE("oracle is deterministic across threads and runs") {
  const std::vector<std::pair<PartSizes, int>> cases{{PartSizes{3, 3, 3}, 2}, {PartSizes{2, 2, 2, 2}, 2}};
  for (const auto& [parts, k] : cases) {
    auto base = extremal_number(HostSpec(parts, k));
    for (int threads : {1, 2, 8}) {
      OracleOptions options;
      options.threads = threads;
      auto a = extremal_number(HostSpec(parts, k), options);
      auto b = extremal_number(HostSpec(parts, k), options);
      CHECK(a.max_edges == base.max_edges);
      CHECK(to_text(a.witness) == to_text(b.witness));
      if (threads == 1) CHECK(a.nodes_explored == b.nodes_explored);
    }
    OracleOptions no_symmetry;
    no_symmetry.symmetry = false;
    CHECK(extremal_number(HostSpec(parts, k), no_symmetry).max_edges == base.max_edges);
  }
}

TEST_CASE("budget exhaustion reports valid bounds") {
  OracleOptions tiny;
  tiny.budget.max_nodes = 3;
  tiny.seed_incumbent = false;
  try {
    (void)extremal_number(HostSpec(PartSizes{3, 3, 3}, 2), tiny);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExhausted& e) {
    CHECK(e.lower_bound() <= 21);
    CHECK(e.upper_bound() >= 21);
    CHECK(e.instance().k == 2);
    CHECK(e.nodes() >= 3);
  }
}

TEST_CASE("oracle rejects hosts beyond its capacity") {
  CHECK_THROWS_AS((void)extremal_number(HostSpec(PartSizes{5, 5, 5}, 2)), ParameterError);
  CHECK_THROWS_AS((void)extremal_number_general(PartSizes{2, 2}, 3, 1), ParameterError);
}

TEST_CASE("formula grid verification") {
  auto grid = theorem_grid(3, 3);
  CHECK(grid.size() == 15);
  auto rows = verify_formula_grid(grid, OracleOptions{}, 4);
  REQUIRE(rows.size() == grid.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].instance.to_string() == grid[i].to_string());
    CHECK(rows[i].match);
  }
  CHECK(verify_formula_grid(std::vector<Instance>{}, OracleOptions{}).empty());

  auto failing = verify_formula_grid(grid, [](const Instance& i) -> ExtremalResult {
    throw BudgetExhausted(i, 0, 1, 1);
  });
  CHECK_FALSE(failing.front().match);
  CHECK_FALSE(failing.front().error.empty());

  for (const auto& row : verify_formula_grid(matching_grid(3, 3), OracleOptions{}, 2)) CHECK(row.match);
}

TEST_CASE("result cache round-trip") {
  const auto path = std::filesystem::temp_directory_path() / "turan-test-cache.jsonl";
  std::filesystem::remove(path);
  auto result = extremal_number(HostSpec(PartSizes{2, 2, 2}, 2));
  {
    ResultCache cache(path);
    CHECK_FALSE(cache.lookup(result.instance).has_value());
    cache.store(result);
  }
  {
    std::ofstream(path, std::ios::app) << "not json\n";
  }
  ResultCache reloaded(path);
  CHECK(reloaded.skipped_lines() == 1);
  auto hit = reloaded.lookup(Instance(PartSizes{2, 2, 2}, 3, 2));
  REQUIRE(hit.has_value());
  CHECK(hit->max_edges == 10);
  CHECK(hit->witness == result.witness);
  CHECK_FALSE(reloaded.lookup(Instance(PartSizes{2, 2, 2}, 3, 1)).has_value());

  CHECK(ResultCache::from_record(ResultCache::to_record(result)).max_edges == 10);
  CHECK_THROWS_AS((void)ResultCache::from_record("{\"parts\":[2,2]}"), ParseError);
  std::filesystem::remove(path);
}
