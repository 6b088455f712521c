#include "turan/packing.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "turan/error.hpp"
#include "turan/packing_search.hpp"

namespace turan {

namespace {

void check_clique_size(const MultipartiteGraph& g, int r) {
  if (r < 1 || r > g.part_count()) {
    throw ParameterError("clique size must lie in [1, number of parts], got " + std::to_string(r));
  }
}

// Depth-first over parts in increasing order, intersecting adjacency rows.
class CliqueWalker {
 public:
  CliqueWalker(const MultipartiteGraph& g, int r, const std::function<bool(std::span<const int>)>& visit)
      : g_(g), r_(r), visit_(visit), words_(g.words_per_row()) {
    masks_.assign(static_cast<std::size_t>(r + 1) * words_, ~std::uint64_t{0});
    stack_.reserve(static_cast<std::size_t>(r));
  }

  void run() { extend(0, 0); }

 private:
  bool extend(int depth, int min_part) {
    if (depth == r_) return visit_(stack_);
    const std::uint64_t* cand = masks_.data() + static_cast<std::size_t>(depth) * words_;
    std::uint64_t* next = masks_.data() + static_cast<std::size_t>(depth + 1) * words_;
    for (int p = min_part; p <= g_.part_count() - (r_ - depth); ++p) {
      const int begin = g_.part_offset(p);
      const int end = begin + g_.part_size(p);
      for (int v = begin; v < end; ++v) {
        if (!((cand[v / 64] >> (v % 64)) & 1U)) continue;
        auto row = g_.row(v);
        for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & row[w];
        stack_.push_back(v);
        const bool go_on = extend(depth + 1, p + 1);
        stack_.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  const MultipartiteGraph& g_;
  int r_;
  const std::function<bool(std::span<const int>)>& visit_;
  std::size_t words_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> stack_;
};

void walk_flat(const MultipartiteGraph& g, int r, const std::function<bool(std::span<const int>)>& visit) {
  check_clique_size(g, r);
  if (g.vertex_count() == 0) return;
  CliqueWalker(g, r, visit).run();
}

Clique to_clique(const MultipartiteGraph& g, std::span<const int> flat) {
  Clique c;
  c.vertices.reserve(flat.size());
  for (int v : flat) c.vertices.push_back(g.vertex(v));
  return c;
}

}  // namespace

void for_each_clique(const MultipartiteGraph& g, int r, const std::function<bool(const Clique&)>& visit) {
  walk_flat(g, r, [&](std::span<const int> flat) { return visit(to_clique(g, flat)); });
}

void for_each_transversal_clique(const MultipartiteGraph& g, const std::function<bool(const Clique&)>& visit) {
  for_each_clique(g, g.part_count(), visit);
}

std::vector<Clique> enumerate_cliques(const MultipartiteGraph& g, int r) {
  std::vector<Clique> out;
  for_each_clique(g, r, [&](const Clique& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Clique> enumerate_transversal_cliques(const MultipartiteGraph& g) {
  return enumerate_cliques(g, g.part_count());
}

std::uint64_t count_cliques(const MultipartiteGraph& g, int r) {
  std::uint64_t count = 0;
  walk_flat(g, r, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t count_cliques(const MultipartiteGraph& g) { return count_cliques(g, g.part_count()); }

std::optional<CliquePacking> find_packing(const MultipartiteGraph& g, int k, int r) {
  if (k < 1) throw ParameterError("find_packing: k must be at least 1");
  check_clique_size(g, r);

  if (k == 1) {
    std::optional<CliquePacking> first;
    for_each_clique(g, r, [&](const Clique& c) {
      first = CliquePacking{{c}};
      return false;
    });
    return first;
  }

  detail::CliqueTable table(std::vector<int>(), 0, r);
  {
    std::vector<int> vertex_part(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) vertex_part[static_cast<std::size_t>(v)] = g.part_of(v);
    table = detail::CliqueTable(std::move(vertex_part), g.part_count(), r);
  }
  walk_flat(g, r, [&](std::span<const int> flat) {
    table.add(flat);
    return true;
  });
  if (table.size() < static_cast<std::size_t>(k)) return std::nullopt;

  std::vector<std::uint32_t> candidates(table.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = static_cast<std::uint32_t>(i);
  auto picked = detail::find_disjoint_cliques(table, std::move(candidates), k);
  if (!picked) return std::nullopt;

  std::sort(picked->begin(), picked->end());
  CliquePacking packing;
  for (auto idx : *picked) packing.cliques.push_back(to_clique(g, table.members(idx)));
  return packing;
}

std::optional<CliquePacking> find_packing(const MultipartiteGraph& g, int k) {
  return find_packing(g, k, g.part_count());
}

bool contains_packing(const MultipartiteGraph& g, int k, int r) { return find_packing(g, k, r).has_value(); }

bool contains_packing(const MultipartiteGraph& g, int k) { return contains_packing(g, k, g.part_count()); }

bool is_valid_packing(const MultipartiteGraph& g, const CliquePacking& packing, int k, int r) {
  if (packing.cliques.size() != static_cast<std::size_t>(k)) return false;
  std::vector<VertexId> seen;
  for (const auto& clique : packing.cliques) {
    if (clique.vertices.size() != static_cast<std::size_t>(r)) return false;
    for (std::size_t a = 0; a < clique.vertices.size(); ++a) {
      if (!g.contains(clique.vertices[a])) return false;
      for (std::size_t b = a + 1; b < clique.vertices.size(); ++b) {
        if (clique.vertices[a].part == clique.vertices[b].part) return false;
        if (!g.adjacent(clique.vertices[a], clique.vertices[b])) return false;
      }
      seen.push_back(clique.vertices[a]);
    }
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::string to_text(const CliquePacking& packing) {
  std::ostringstream out;
  for (const auto& clique : packing.cliques) {
    for (std::size_t i = 0; i < clique.vertices.size(); ++i) {
      if (i) out << ' ';
      out << clique.vertices[i].part << ':' << clique.vertices[i].index;
    }
    out << '\n';
  }
  return out.str();
}

CliquePacking parse_packing(std::string_view text) {
  CliquePacking packing;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string token;
    Clique clique;
    while (tokens >> token) {
      auto colon = token.find(':');
      if (colon == std::string::npos) throw ParseError("packing: expected 'part:index', got '" + token + "'");
      try {
        clique.vertices.push_back({std::stoi(token.substr(0, colon)), std::stoi(token.substr(colon + 1))});
      } catch (const std::logic_error&) {
        throw ParseError("packing: expected 'part:index', got '" + token + "'");
      }
    }
    if (!clique.vertices.empty()) packing.cliques.push_back(std::move(clique));
  }
  return packing;
}

}  // namespace turan
