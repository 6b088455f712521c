#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "turan/error.hpp"

namespace turan {

PartSizes::PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ParameterError("part sizes: at least one part is required");
  for (int n : sizes_) {
    if (n < 1) throw ParameterError("part sizes: every part needs at least one vertex, got " + std::to_string(n));
  }
}

PartSizes::PartSizes(std::initializer_list<int> sizes) : PartSizes(std::vector<int>(sizes)) {}

int PartSizes::total() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

PartSizes PartSizes::canonical() const {
  auto sorted = sizes_;
  std::sort(sorted.begin(), sorted.end());
  return PartSizes(std::move(sorted));
}

bool PartSizes::is_canonical() const noexcept { return std::is_sorted(sizes_.begin(), sizes_.end()); }

std::string PartSizes::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

PartSizes PartSizes::parse(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ParameterError("part sizes: cannot parse '" + std::string(text) + "'");
    }
    sizes.push_back(value);
    pos = comma + 1;
  }
  return PartSizes(std::move(sizes));
}

HostSpec::HostSpec(PartSizes parts, int k) : parts_(std::move(parts)), k_(k) {
  if (parts_.count() < 2) throw ParameterError("host spec: r must be at least 2");
  if (k_ < 1) throw ParameterError("host spec: k must be at least 1");
}

Instance::Instance(PartSizes p, int clique_size, int multiplicity)
    : parts(std::move(p)), r(clique_size), k(multiplicity) {
  if (parts.count() < 2) throw ParameterError("instance: at least two parts are required");
  if (r < 2 || r > parts.count()) {
    throw ParameterError("instance: clique size r must satisfy 2 <= r <= number of parts");
  }
  if (k < 1) throw ParameterError("instance: k must be at least 1");
}

std::string Instance::to_string() const {
  return "parts=" + parts.to_string() + " r=" + std::to_string(r) + " k=" + std::to_string(k);
}

std::int64_t complete_edge_count(std::span<const int> sizes) {
  std::int64_t total = 0;
  std::int64_t sum = 0;
  for (int n : sizes) {
    total += sum * n;
    sum += n;
  }
  return total;
}

// ---------------------------------------------------------------------------

MultipartiteGraph::MultipartiteGraph(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
  offsets_.reserve(sizes_.size());
  int next = 0;
  for (std::size_t p = 0; p < sizes_.size(); ++p) {
    if (sizes_[p] < 0) throw ParameterError("graph: negative part size");
    offsets_.push_back(next);
    for (int i = 0; i < sizes_[p]; ++i) part_of_.push_back(static_cast<int>(p));
    next += sizes_[p];
  }
  words_ = (static_cast<std::size_t>(next) + 63) / 64;
  adjacency_.assign(words_ * static_cast<std::size_t>(next), 0);
}

MultipartiteGraph MultipartiteGraph::edgeless(std::vector<int> part_sizes) {
  return MultipartiteGraph(std::move(part_sizes));
}

bool MultipartiteGraph::contains(VertexId v) const noexcept {
  return v.part >= 0 && v.part < part_count() && v.index >= 0 && v.index < sizes_[static_cast<std::size_t>(v.part)];
}

int MultipartiteGraph::flat(VertexId v) const {
  if (!contains(v)) {
    throw ParameterError("unknown vertex (" + std::to_string(v.part) + "," + std::to_string(v.index) + ")");
  }
  return offsets_[static_cast<std::size_t>(v.part)] + v.index;
}

VertexId MultipartiteGraph::vertex(int flat_id) const {
  if (flat_id < 0 || flat_id >= vertex_count()) throw ParameterError("flat vertex id out of range");
  int p = part_of_[static_cast<std::size_t>(flat_id)];
  return {p, flat_id - offsets_[static_cast<std::size_t>(p)]};
}

int MultipartiteGraph::degree(int flat_id) const noexcept {
  int d = 0;
  for (auto w : row(flat_id)) d += std::popcount(w);
  return d;
}

void MultipartiteGraph::set_bit(int a, int b, bool value) {
  auto& wa = adjacency_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64];
  auto& wb = adjacency_[static_cast<std::size_t>(b) * words_ + static_cast<std::size_t>(a) / 64];
  const std::uint64_t ma = std::uint64_t{1} << (static_cast<unsigned>(b) % 64);
  const std::uint64_t mb = std::uint64_t{1} << (static_cast<unsigned>(a) % 64);
  const bool present = (wa & ma) != 0;
  if (present == value) return;
  if (value) {
    wa |= ma;
    wb |= mb;
    ++edge_count_;
  } else {
    wa &= ~ma;
    wb &= ~mb;
    --edge_count_;
  }
}

std::vector<std::pair<VertexId, VertexId>> MultipartiteGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int a = 0; a < vertex_count(); ++a) {
    for (int b = a + 1; b < vertex_count(); ++b) {
      if (adjacent_flat(a, b)) out.emplace_back(vertex(a), vertex(b));
    }
  }
  return out;
}

MultipartiteGraph MultipartiteGraph::with_edge(VertexId a, VertexId b) const {
  return GraphBuilder(*this).add_edge(a, b).build();
}

MultipartiteGraph MultipartiteGraph::without_edge(VertexId a, VertexId b) const {
  return GraphBuilder(*this).remove_edge(a, b).build();
}

bool MultipartiteGraph::check_invariants() const {
  std::int64_t twice = 0;
  for (int a = 0; a < vertex_count(); ++a) {
    for (int b = 0; b < vertex_count(); ++b) {
      bool ab = adjacent_flat(a, b);
      if (ab != adjacent_flat(b, a)) return false;
      if (ab && part_of(a) == part_of(b)) return false;
      twice += ab;
    }
    // padding bits beyond the vertex range stay clear
    for (int b = vertex_count(); b < static_cast<int>(words_ * 64); ++b) {
      if ((row(a)[static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1U) return false;
    }
  }
  return twice == 2 * edge_count_;
}

// ---------------------------------------------------------------------------

GraphBuilder::GraphBuilder(std::vector<int> part_sizes) : graph_(std::move(part_sizes)) {}

GraphBuilder::GraphBuilder(MultipartiteGraph start) : graph_(std::move(start)) {}

GraphBuilder& GraphBuilder::add_edge(VertexId a, VertexId b) {
  if (a.part == b.part && graph_.contains(a) && graph_.contains(b)) {
    throw PartitenessError("edge joins two vertices of part " + std::to_string(a.part));
  }
  graph_.set_bit(graph_.flat(a), graph_.flat(b), true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(VertexId a, VertexId b) {
  graph_.set_bit(graph_.flat(a), graph_.flat(b), false);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge_flat(int a, int b) {
  return add_edge(graph_.vertex(a), graph_.vertex(b));
}

// ---------------------------------------------------------------------------

MultipartiteGraph complete_multipartite(const PartSizes& parts) {
  GraphBuilder builder(parts.sizes());
  const auto& g = builder.peek();
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (g.part_of(a) != g.part_of(b)) builder.add_edge_flat(a, b);
    }
  }
  return std::move(builder).build();
}

MultipartiteGraph join(const MultipartiteGraph& g, const MultipartiteGraph& h) {
  std::vector<int> sizes = g.part_sizes();
  sizes.insert(sizes.end(), h.part_sizes().begin(), h.part_sizes().end());
  GraphBuilder builder(sizes);
  const int shift = g.part_count();
  for (auto [a, b] : g.edges()) builder.add_edge(a, b);
  for (auto [a, b] : h.edges()) builder.add_edge({a.part + shift, a.index}, {b.part + shift, b.index});
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = 0; b < h.vertex_count(); ++b) {
      auto hv = h.vertex(b);
      builder.add_edge(g.vertex(a), {hv.part + shift, hv.index});
    }
  }
  return std::move(builder).build();
}

MultipartiteGraph disjoint_union(const MultipartiteGraph& g, const MultipartiteGraph& h, const PartAlignment& align) {
  if (align.first.size() != static_cast<std::size_t>(g.part_count()) ||
      align.second.size() != static_cast<std::size_t>(h.part_count())) {
    throw ParameterError("disjoint_union: alignment must map every part of both operands");
  }
  int target_count = 0;
  for (int t : align.first) target_count = std::max(target_count, t + 1);
  for (int t : align.second) target_count = std::max(target_count, t + 1);
  for (int t : align.first) if (t < 0) throw ParameterError("disjoint_union: negative target part");
  for (int t : align.second) if (t < 0) throw ParameterError("disjoint_union: negative target part");

  std::vector<int> sizes(static_cast<std::size_t>(target_count), 0);
  // position of each source part's first vertex inside its target part
  auto place = [&](const MultipartiteGraph& src, const std::vector<int>& map) {
    std::vector<int> start(map.size());
    for (std::size_t p = 0; p < map.size(); ++p) {
      auto t = static_cast<std::size_t>(map[p]);
      start[p] = sizes[t];
      sizes[t] += src.part_size(static_cast<int>(p));
    }
    return start;
  };
  auto g_start = place(g, align.first);
  auto h_start = place(h, align.second);

  GraphBuilder builder(sizes);
  auto copy_edges = [&](const MultipartiteGraph& src, const std::vector<int>& map, const std::vector<int>& start) {
    for (auto [a, b] : src.edges()) {
      auto pa = static_cast<std::size_t>(a.part);
      auto pb = static_cast<std::size_t>(b.part);
      if (map[pa] == map[pb]) {
        throw PartitenessError("disjoint_union: alignment merges adjacent vertices into part " +
                               std::to_string(map[pa]));
      }
      builder.add_edge({map[pa], start[pa] + a.index}, {map[pb], start[pb] + b.index});
    }
  };
  copy_edges(g, align.first, g_start);
  copy_edges(h, align.second, h_start);
  return std::move(builder).build();
}

namespace {

std::vector<char> membership(const MultipartiteGraph& g, std::span<const VertexId> set) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto v : set) in[static_cast<std::size_t>(g.flat(v))] = 1;
  return in;
}

MultipartiteGraph restrict_to(const MultipartiteGraph& g, const std::vector<char>& keep) {
  std::vector<int> sizes(static_cast<std::size_t>(g.part_count()), 0);
  std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (keep[static_cast<std::size_t>(v)]) {
      new_index[static_cast<std::size_t>(v)] = sizes[static_cast<std::size_t>(g.part_of(v))]++;
    }
  }
  GraphBuilder builder(sizes);
  for (int a = 0; a < g.vertex_count(); ++a) {
    if (!keep[static_cast<std::size_t>(a)]) continue;
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (keep[static_cast<std::size_t>(b)] && g.adjacent_flat(a, b)) {
        builder.add_edge({g.part_of(a), new_index[static_cast<std::size_t>(a)]},
                         {g.part_of(b), new_index[static_cast<std::size_t>(b)]});
      }
    }
  }
  return std::move(builder).build();
}

}  // namespace

MultipartiteGraph delete_vertices(const MultipartiteGraph& g, std::span<const VertexId> removed) {
  auto keep = membership(g, removed);
  for (auto& c : keep) c = !c;
  return restrict_to(g, keep);
}

MultipartiteGraph induced_subgraph(const MultipartiteGraph& g, std::span<const VertexId> kept) {
  return restrict_to(g, membership(g, kept));
}

MultipartiteGraph compact(const MultipartiteGraph& g) {
  std::vector<int> target(static_cast<std::size_t>(g.part_count()), -1);
  std::vector<int> sizes;
  for (int p = 0; p < g.part_count(); ++p) {
    if (g.part_size(p) > 0) {
      target[static_cast<std::size_t>(p)] = static_cast<int>(sizes.size());
      sizes.push_back(g.part_size(p));
    }
  }
  GraphBuilder builder(sizes);
  for (auto [a, b] : g.edges()) {
    builder.add_edge({target[static_cast<std::size_t>(a.part)], a.index},
                     {target[static_cast<std::size_t>(b.part)], b.index});
  }
  return std::move(builder).build();
}

std::int64_t pair_edge_count(const MultipartiteGraph& g, int i, int j) {
  if (i == j) throw ParameterError("pair_edge_count: parts must differ");
  if (i < 0 || j < 0 || i >= g.part_count() || j >= g.part_count()) {
    throw ParameterError("pair_edge_count: part index out of range");
  }
  std::int64_t count = 0;
  const int jb = g.part_offset(j);
  const int je = jb + g.part_size(j);
  for (int a = g.part_offset(i); a < g.part_offset(i) + g.part_size(i); ++a) {
    for (int b = jb; b < je; ++b) count += g.adjacent_flat(a, b);
  }
  return count;
}

bool is_subgraph_of(const MultipartiteGraph& g, const MultipartiteGraph& host) {
  if (g.part_sizes() != host.part_sizes()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto gr = g.row(v);
    auto hr = host.row(v);
    for (std::size_t w = 0; w < gr.size(); ++w) {
      if (gr[w] & ~hr[w]) return false;
    }
  }
  return true;
}

}  // namespace turan
