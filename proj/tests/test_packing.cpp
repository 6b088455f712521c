#include <functional>

#include "doctest.h"
#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/identities.hpp"
#include "turan/packing.hpp"
#include "turan/sampling.hpp"

using namespace turan;

namespace {

bool disjoint(const Clique& a, const Clique& b) {
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices)
      if (u == v) return false;
  return true;
}

// Tries every k-subset of the clique list.
bool naive_packing(const std::vector<Clique>& cliques, int k) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == k) return true;
    for (std::size_t i = start; i < cliques.size(); ++i) {
      bool ok = true;
      for (auto j : pick) ok = ok && disjoint(cliques[i], cliques[j]);
      if (!ok) continue;
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("packing examples") {
  auto complete = complete_multipartite(PartSizes{2, 2, 2});
  auto p = find_packing(complete, 2);
  REQUIRE(p.has_value());
  CHECK(p->cliques.size() == 2);
  CHECK(is_valid_packing(complete, *p, 2, 3));

  auto c = extremal_construction(HostSpec(PartSizes{2, 2, 2}, 2)).graph;
  CHECK_FALSE(find_packing(c, 2).has_value());
  CHECK(find_packing(c, 1).has_value());
  auto cliques = enumerate_transversal_cliques(c);
  CHECK(cliques.size() == 4);
  for (const auto& q : cliques) CHECK(q.vertices[0] == VertexId{0, 0});

  CHECK_FALSE(find_packing(extremal_construction(HostSpec(PartSizes{2, 2, 2}, 1)).graph, 1).has_value());
  CHECK_FALSE(find_packing(complete_multipartite(PartSizes{1, 1, 1}), 2).has_value());
  CHECK_FALSE(find_packing(complete, 3).has_value());
  CHECK_THROWS_AS((void)find_packing(complete, 0), ParameterError);
}

TEST_CASE("enumeration order is lexicographic") {
  auto g = complete_multipartite(PartSizes{2, 1, 2});
  auto cliques = enumerate_transversal_cliques(g);
  REQUIRE(cliques.size() == 4);
  CHECK(std::is_sorted(cliques.begin(), cliques.end()));
  CHECK(cliques.front().vertices == std::vector<VertexId>{{0, 0}, {1, 0}, {2, 0}});
}

TEST_CASE("count on a complete host is the product of part sizes") {
  CHECK(count_cliques(complete_multipartite(PartSizes{2, 3, 4})) == 24);
  CHECK(count_cliques(complete_multipartite(PartSizes{3, 3, 3, 3})) == 81);
  CHECK(count_cliques(complete_multipartite(PartSizes{2, 2, 2, 2}), 3) == 32);
  CHECK(count_cliques(complete_multipartite(PartSizes{2, 3}), 2) == 6);
}

TEST_CASE("found packings are valid, absent ones are absent") {
  SubgraphSampler sampler(21);
  int found = 0;
  int absent = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> sizes;
    const int parts = 3 + static_cast<int>(sampler.below(2));
    for (int p = 0; p < parts; ++p) sizes.push_back(1 + static_cast<int>(sampler.below(3)));
    auto g = sampler.random_subgraph(PartSizes(sizes));
    const int r = 2 + static_cast<int>(sampler.below(static_cast<std::uint64_t>(parts - 1)));
    const auto cliques = enumerate_cliques(g, r);
    if (cliques.size() > 12) continue;
    for (int k = 1; k <= 3; ++k) {
      auto p = find_packing(g, k, r);
      CHECK(p.has_value() == naive_packing(cliques, k));
      if (p) {
        ++found;
        CHECK(is_valid_packing(g, *p, k, r));
      } else {
        ++absent;
      }
    }
  }
  CHECK(found > 20);
  CHECK(absent > 20);
}

TEST_CASE("packing existence is monotone under edge addition") {
  SubgraphSampler sampler(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = sampler.random_subgraph(PartSizes{3, 3, 3});
    for (int k = 1; k <= 3; ++k) {
      if (!contains_packing(g, k)) continue;
      for (const auto& e : complete_multipartite(PartSizes{3, 3, 3}).edges()) {
        if (g.adjacent(e.first, e.second)) continue;
        CHECK(contains_packing(g.with_edge(e.first, e.second), k));
        break;
      }
      if (k > 1) CHECK(contains_packing(g, k - 1));
    }
  }
}

TEST_CASE("clique count equals the number of full-weight transversals") {
  SubgraphSampler sampler(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = sampler.random_subgraph(PartSizes{2, 3, 3, 2});
    const auto summary = summarize_weights(g);
    CHECK(static_cast<std::uint64_t>(summary.clique_count_q) == count_cliques(g));
    for (const auto& q : enumerate_transversal_cliques(g)) CHECK(weight_of(g, q) == 6);
  }
}

TEST_CASE("is_valid_packing rejects broken packings") {
  auto g = complete_multipartite(PartSizes{2, 2, 2});
  CliquePacking overlap{{Clique{{{0, 0}, {1, 0}, {2, 0}}}, Clique{{{0, 0}, {1, 1}, {2, 1}}}}};
  CHECK_FALSE(is_valid_packing(g, overlap, 2, 3));
  CliquePacking same_part{{Clique{{{0, 0}, {0, 1}, {2, 0}}}}};
  CHECK_FALSE(is_valid_packing(g, same_part, 1, 3));
  auto sparse = g.without_edge({0, 1}, {1, 1});
  CliquePacking missing{{Clique{{{0, 1}, {1, 1}, {2, 1}}}}};
  CHECK(is_valid_packing(g, missing, 1, 3));
  CHECK_FALSE(is_valid_packing(sparse, missing, 1, 3));
  CHECK_FALSE(is_valid_packing(g, missing, 2, 3));
}

TEST_CASE("packing text round-trip") {
  auto g = complete_multipartite(PartSizes{3, 3, 3});
  auto p = find_packing(g, 3);
  REQUIRE(p.has_value());
  const auto text = to_text(*p);
  CHECK(parse_packing(text) == *p);
  CHECK(parse_packing("0:1 1:0 2:2\n").cliques.front().vertices ==
        std::vector<VertexId>{{0, 1}, {1, 0}, {2, 2}});
  CHECK_THROWS_AS((void)parse_packing("0-1 1:0"), ParseError);
}
