#include "turan/packing_search.hpp"

#include <algorithm>
#include <limits>

namespace turan::detail {

CliqueTable::CliqueTable(std::vector<int> vertex_part, int part_count, int clique_size)
    : vertex_part_(std::move(vertex_part)), part_count_(part_count), clique_size_(clique_size) {}

void CliqueTable::add(std::span<const int> members) { members_.insert(members_.end(), members.begin(), members.end()); }

namespace {

class DisjointSearch {
 public:
  DisjointSearch(const CliqueTable& table)
      : table_(table),
        occurrences_(static_cast<std::size_t>(table.vertex_count()), 0),
        marked_(static_cast<std::size_t>(table.vertex_count()), 0),
        part_available_(static_cast<std::size_t>(table.part_count()), 0) {}

  bool run(const std::vector<std::uint32_t>& candidates, int need) {
    if (need == 0) return true;
    if (candidates.size() < static_cast<std::size_t>(need)) return false;
    if (need == 1) {
      chosen.push_back(candidates.front());
      return true;
    }

    // Occurrence counts and a counting bound: each clique takes one vertex
    // from r distinct parts, so a part contributes at most `need` vertices.
    touched_.clear();
    for (auto c : candidates) {
      for (int v : table_.members(c)) {
        if (occurrences_[static_cast<std::size_t>(v)]++ == 0) touched_.push_back(v);
      }
    }
    std::fill(part_available_.begin(), part_available_.end(), 0);
    int pivot = -1;
    int pivot_count = std::numeric_limits<int>::max();
    for (int v : touched_) {
      ++part_available_[static_cast<std::size_t>(table_.part_of(v))];
      const int occ = occurrences_[static_cast<std::size_t>(v)];
      if (occ < pivot_count || (occ == pivot_count && v < pivot)) {
        pivot = v;
        pivot_count = occ;
      }
    }
    for (int v : touched_) occurrences_[static_cast<std::size_t>(v)] = 0;
    long capacity = 0;
    for (int avail : part_available_) capacity += std::min(avail, need);
    if (capacity < static_cast<long>(need) * table_.clique_size()) return false;

    std::vector<std::uint32_t> next;
    next.reserve(candidates.size());
    for (auto c : candidates) {
      if (!contains(c, pivot)) continue;
      mark(c, 1);
      next.clear();
      for (auto d : candidates) {
        if (d != c && disjoint_from_marked(d)) next.push_back(d);
      }
      mark(c, 0);
      chosen.push_back(c);
      if (run(next, need - 1)) return true;
      chosen.pop_back();
    }
    next.clear();
    for (auto d : candidates) {
      if (!contains(d, pivot)) next.push_back(d);
    }
    return run(next, need);
  }

  std::vector<std::uint32_t> chosen;

 private:
  bool contains(std::uint32_t c, int v) const {
    auto m = table_.members(c);
    return std::find(m.begin(), m.end(), v) != m.end();
  }
  void mark(std::uint32_t c, char value) {
    for (int v : table_.members(c)) marked_[static_cast<std::size_t>(v)] = value;
  }
  bool disjoint_from_marked(std::uint32_t c) const {
    for (int v : table_.members(c)) {
      if (marked_[static_cast<std::size_t>(v)]) return false;
    }
    return true;
  }

  const CliqueTable& table_;
  std::vector<int> occurrences_;
  std::vector<char> marked_;
  std::vector<int> part_available_;
  std::vector<int> touched_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_disjoint_cliques(const CliqueTable& table,
                                                                 std::vector<std::uint32_t> candidates, int k) {
  if (k <= 0) return std::vector<std::uint32_t>{};
  DisjointSearch search(table);
  if (!search.run(candidates, k)) return std::nullopt;
  return std::move(search.chosen);
}

}  // namespace turan::detail
