#include "turan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "turan/constructions.hpp"
#include "turan/packing.hpp"
#include "turan/packing_search.hpp"

namespace turan {

BudgetExhausted::BudgetExhausted(Instance instance, std::int64_t lower, std::int64_t upper, std::uint64_t nodes)
    : Error("oracle budget exhausted for " + instance.to_string() + ": " + std::to_string(lower) +
            " <= ex <= " + std::to_string(upper) + " after " + std::to_string(nodes) + " nodes"),
      instance_(std::move(instance)),
      lower_(lower),
      upper_(upper),
      nodes_(nodes) {}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (auto i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
int popcount(Mask m) { return std::popcount(m); }

constexpr std::int64_t kDone = -1;

// The complete host with edges numbered 0..E-1 in lexicographic order and
// every host K_r stored with its vertex list and edge mask.
struct Host {
  Instance instance;
  int vertex_count = 0;
  std::vector<int> part_of;
  std::vector<int> offset;
  std::vector<std::pair<int, int>> edge_ends;
  std::vector<int> edge_index;  // vertex_count^2, -1 within a part
  detail::CliqueTable cliques;
  std::vector<Mask> clique_edges;
  Mask all = 0;

  explicit Host(Instance inst) : instance(std::move(inst)) {
    const auto complete = complete_multipartite(instance.parts);
    if (complete.edge_count() > kMaxOracleEdges) {
      throw ParameterError("oracle: host has " + std::to_string(complete.edge_count()) + " edges, more than " +
                           std::to_string(kMaxOracleEdges));
    }
    vertex_count = complete.vertex_count();
    for (int v = 0; v < vertex_count; ++v) part_of.push_back(complete.part_of(v));
    for (int p = 0; p < complete.part_count(); ++p) offset.push_back(complete.part_offset(p));
    edge_index.assign(static_cast<std::size_t>(vertex_count * vertex_count), -1);
    for (int a = 0; a < vertex_count; ++a) {
      for (int b = a + 1; b < vertex_count; ++b) {
        if (part_of[static_cast<std::size_t>(a)] == part_of[static_cast<std::size_t>(b)]) continue;
        const int e = static_cast<int>(edge_ends.size());
        edge_ends.emplace_back(a, b);
        edge_index[static_cast<std::size_t>(a * vertex_count + b)] = e;
        edge_index[static_cast<std::size_t>(b * vertex_count + a)] = e;
        all |= bit(e);
      }
    }
    cliques = detail::CliqueTable(part_of, instance.parts.count(), instance.r);
    for (const auto& c : enumerate_cliques(complete, instance.r)) {
      std::vector<int> flat;
      for (auto v : c.vertices) flat.push_back(complete.flat(v));
      Mask edges = 0;
      for (std::size_t i = 0; i < flat.size(); ++i) {
        for (std::size_t j = i + 1; j < flat.size(); ++j) edges |= bit(edge(flat[i], flat[j]));
      }
      cliques.add(flat);
      clique_edges.push_back(edges);
    }
  }

  [[nodiscard]] int edge(int a, int b) const { return edge_index[static_cast<std::size_t>(a * vertex_count + b)]; }

  [[nodiscard]] MultipartiteGraph graph(Mask present) const {
    GraphBuilder builder(instance.parts.sizes());
    for (Mask m = present; m; m &= m - 1) {
      auto [a, b] = edge_ends[static_cast<std::size_t>(std::countr_zero(m))];
      builder.add_edge_flat(a, b);
    }
    return std::move(builder).build();
  }

  [[nodiscard]] Mask mask(const MultipartiteGraph& g) const {
    Mask out = 0;
    for (auto [a, b] : g.edges()) out |= bit(edge(g.flat(a), g.flat(b)));
    return out;
  }

  // A kK_r inside `present`, preferring cliques with few non-fixed edges.
  [[nodiscard]] std::optional<Mask> packing_edges(Mask present, Mask fixed) const {
    const int buckets = instance.r * (instance.r - 1) / 2 + 1;
    std::vector<std::vector<std::uint32_t>> by_free(static_cast<std::size_t>(buckets));
    std::size_t available = 0;
    for (std::size_t c = 0; c < clique_edges.size(); ++c) {
      const Mask ce = clique_edges[c];
      if ((ce & present) != ce) continue;
      by_free[static_cast<std::size_t>(popcount(ce & ~fixed))].push_back(static_cast<std::uint32_t>(c));
      ++available;
    }
    if (available < static_cast<std::size_t>(instance.k)) return std::nullopt;
    std::vector<std::uint32_t> candidates;
    candidates.reserve(available);
    for (const auto& b : by_free) candidates.insert(candidates.end(), b.begin(), b.end());
    auto picked = detail::find_disjoint_cliques(cliques, std::move(candidates), instance.k);
    if (!picked) return std::nullopt;
    Mask out = 0;
    for (auto c : *picked) out |= clique_edges[c];
    return out;
  }

  [[nodiscard]] bool feasible(Mask present) const { return !packing_edges(present, 0); }
};

// Lower-bound graphs used to seed the incumbent.
std::vector<Mask> seed_masks(const Host& host) {
  std::vector<Mask> seeds;
  const auto& inst = host.instance;
  const auto& parts = inst.parts;
  auto hub_mask = [&](int hubs, auto joins) {
    Mask m = 0;
    for (int i = 0; i < std::min(hubs, parts[0]); ++i) {
      for (int v = 0; v < host.vertex_count; ++v) {
        if (joins(host.part_of[static_cast<std::size_t>(v)])) m |= bit(host.edge(i, v));
      }
    }
    return m;
  };

  if (inst.spans_all_parts() && inst.r >= 3 && inst.k <= parts[0]) {
    seeds.push_back(host.mask(extremal_construction(HostSpec(parts, inst.k)).graph));
  }
  if (inst.r == 2 && inst.k <= parts[0]) {
    // k-1 vertices of V_1 adjacent to everything outside V_1
    seeds.push_back(hub_mask(inst.k - 1, [](int p) { return p != 0; }));
  }
  if (inst.r == 3 && parts.count() == 4 && inst.k <= parts[0] + parts[1] + 1) {
    seeds.push_back(host.mask(four_partite_triangle_construction(parts, inst.k).graph));
  }

  // greedy: drop the highest-numbered edge of some packing until none is left
  Mask greedy = host.all;
  while (auto p = host.packing_edges(greedy, 0)) greedy &= ~bit(63 - std::countl_zero(*p));
  seeds.push_back(greedy);

  for (Mask s : seeds) {
    if (!host.feasible(s)) throw std::logic_error("oracle seed graph contains the forbidden packing");
  }
  return seeds;
}

struct StateKey {
  Mask present;
  Mask fixed;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return std::hash<Mask>{}(k.present * 0x9E3779B97F4A7C15ULL ^ (k.fixed + 0x632BE59BD9B4E019ULL));
  }
};

struct Task {
  Mask present;
  Mask fixed;
};

class BranchAndBound {
 public:
  BranchAndBound(const Host& host, const OracleOptions& options)
      : host_(host), options_(options), start_(std::chrono::steady_clock::now()) {
    deadline_ = start_ + options_.budget.max_time;
    if (options_.seed_incumbent) {
      for (Mask s : seed_masks(host_)) offer(s);
    }
  }

  ExtremalResult run() {
    std::int64_t unfinished = kDone;
    if (options_.threads <= 1) {
      Worker worker;
      unfinished = explore(host_.all, 0, worker, 0);
    } else {
      unfinished = run_parallel();
    }

    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const std::int64_t best = incumbent_.load();
    if (aborted_.load()) {
      throw BudgetExhausted(host_.instance, best, std::max(best, unfinished), nodes_.load());
    }
    ExtremalResult result;
    result.instance = host_.instance;
    result.max_edges = best;
    result.witness = host_.graph(witness_);
    result.nodes_explored = nodes_.load();
    result.elapsed = elapsed;
    if (result.witness.edge_count() != best ||
        contains_packing(result.witness, host_.instance.k, host_.instance.r)) {
      throw std::logic_error("oracle witness failed re-verification");
    }
    return result;
  }

 private:
  struct Worker {
    std::unordered_set<StateKey, StateKeyHash> seen;
  };

  void offer(Mask present) {
    std::lock_guard lock(witness_mutex_);
    const std::int64_t edges = popcount(present);
    if (edges > incumbent_.load()) {
      witness_ = present;
      incumbent_.store(edges);
    }
  }

  // Relabels vertices inside each part by a relabelling-invariant signature
  // (degrees into every part, present and fixed). Equal keys therefore mean
  // the two states are related by a within-part permutation.
  StateKey canonical_key(Mask present, Mask fixed) const {
    const int n = host_.vertex_count;
    const int parts = host_.instance.parts.count();
    std::vector<std::uint64_t> signature(static_cast<std::size_t>(n), 0);
    std::vector<int> degree(static_cast<std::size_t>(n * parts * 2), 0);
    for (Mask m = present; m; m &= m - 1) {
      const int e = std::countr_zero(m);
      auto [a, b] = host_.edge_ends[static_cast<std::size_t>(e)];
      const bool fx = (fixed >> e) & 1U;
      const int pa = host_.part_of[static_cast<std::size_t>(a)];
      const int pb = host_.part_of[static_cast<std::size_t>(b)];
      ++degree[static_cast<std::size_t>((a * parts + pb) * 2 + fx)];
      ++degree[static_cast<std::size_t>((b * parts + pa) * 2 + fx)];
    }
    for (int v = 0; v < n; ++v) {
      std::uint64_t h = 1469598103934665603ULL;
      for (int i = 0; i < parts * 2; ++i) {
        h = (h ^ static_cast<std::uint64_t>(degree[static_cast<std::size_t>(v * parts * 2 + i)])) * 1099511628211ULL;
      }
      signature[static_cast<std::size_t>(v)] = h;
    }
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::vector<int> order;
    for (int p = 0; p < parts; ++p) {
      const int begin = host_.offset[static_cast<std::size_t>(p)];
      const int size = host_.instance.parts[p];
      order.resize(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) order[static_cast<std::size_t>(i)] = begin + i;
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto sx = signature[static_cast<std::size_t>(x)];
        auto sy = signature[static_cast<std::size_t>(y)];
        return sx != sy ? sx < sy : x < y;
      });
      for (int i = 0; i < size; ++i) relabel[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = begin + i;
    }
    auto map_mask = [&](Mask m) {
      Mask out = 0;
      for (; m; m &= m - 1) {
        auto [a, b] = host_.edge_ends[static_cast<std::size_t>(std::countr_zero(m))];
        out |= bit(host_.edge(relabel[static_cast<std::size_t>(a)], relabel[static_cast<std::size_t>(b)]));
      }
      return out;
    };
    return {map_mask(present), map_mask(fixed)};
  }

  bool out_of_budget() {
    const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > options_.budget.max_nodes) return true;
    return (count & 255U) == 0 && std::chrono::steady_clock::now() > deadline_;
  }

  // Returns kDone when the subtree is settled, otherwise an upper bound on
  // the best edge count it could still hold (only after an abort).
  std::int64_t explore(Mask present, Mask fixed, Worker& worker, int depth) {
    const std::int64_t edges = popcount(present);
    if (aborted_.load(std::memory_order_relaxed)) return edges;
    if (out_of_budget()) {
      aborted_.store(true);
      return edges;
    }
    if (edges <= incumbent_.load(std::memory_order_relaxed)) return kDone;

    if (options_.symmetry) {
      const auto key = canonical_key(present, fixed);
      if (worker.seen.contains(key)) return kDone;
      if (worker.seen.size() < options_.seen_capacity) worker.seen.insert(key);
    }
    if (split_tasks_ && depth == split_depth_) {
      split_tasks_->push_back({present, fixed});
      return kDone;
    }

    auto first = host_.packing_edges(present, fixed);
    if (!first) {
      offer(present);
      return kDone;
    }
    Mask branch = *first & ~fixed;
    if (!branch) return kDone;  // the packing survives in every descendant

    // Packings whose free edges are pairwise disjoint each cost one deletion.
    std::int64_t deletions = 1;
    Mask consumed = branch;
    while (edges - deletions > incumbent_.load(std::memory_order_relaxed)) {
      auto next = host_.packing_edges(present & ~consumed, fixed);
      if (!next) break;
      const Mask free = *next & ~fixed;
      if (!free) return kDone;
      consumed |= free;
      ++deletions;
      if (popcount(free) < popcount(branch)) branch = free;
    }
    if (edges - deletions <= incumbent_.load(std::memory_order_relaxed)) return kDone;

    // Child i deletes the i-th free edge and keeps the earlier ones, so the
    // children partition the subtree.
    Mask keep = fixed;
    for (Mask m = branch; m; m &= m - 1) {
      const int e = std::countr_zero(m);
      const std::int64_t child = explore(present & ~bit(e), keep, worker, depth + 1);
      if (aborted_.load(std::memory_order_relaxed)) {
        const bool more = (m & (m - 1)) != 0;
        return std::min(std::max(child, more ? edges - 1 : kDone), edges - deletions);
      }
      keep |= bit(e);
    }
    return kDone;
  }

  std::int64_t run_parallel() {
    const std::size_t wanted = static_cast<std::size_t>(options_.threads) * 8;
    std::vector<Task> tasks;
    std::int64_t unfinished = kDone;
    for (int depth = 1; depth <= 12; ++depth) {
      tasks.clear();
      split_tasks_ = &tasks;
      split_depth_ = depth;
      Worker top;
      unfinished = explore(host_.all, 0, top, 0);
      split_tasks_ = nullptr;
      if (aborted_.load() || tasks.size() >= wanted || tasks.empty()) break;
    }

    std::vector<std::int64_t> task_bound(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) task_bound[i] = popcount(tasks[i].present);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < options_.threads; ++t) {
      pool.emplace_back([&] {
        Worker worker;
        for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
          if (aborted_.load()) break;
          task_bound[i] = explore(tasks[i].present, tasks[i].fixed, worker, -1);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto b : task_bound) unfinished = std::max(unfinished, b);
    return unfinished;
  }

  const Host& host_;
  OracleOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::int64_t> incumbent_{-1};
  std::mutex witness_mutex_;
  Mask witness_ = 0;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
  std::vector<Task>* split_tasks_ = nullptr;
  int split_depth_ = -1;
};

}  // namespace

ExtremalResult solve_instance(const Instance& instance, const OracleOptions& options) {
  Host host(instance.canonical());
  return BranchAndBound(host, options).run();
}

ExtremalResult extremal_number(const HostSpec& spec, const OracleOptions& options) {
  return solve_instance(Instance(spec), options);
}

ExtremalResult extremal_number_general(const PartSizes& parts, int r, int k, const OracleOptions& options) {
  return solve_instance(Instance(parts, r, k), options);
}

std::vector<GridRow> verify_formula_grid(std::span<const Instance> grid, const InstanceSolver& solve, int jobs) {
  std::vector<GridRow> rows(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    GridRow& row = rows[i];
    row.instance = grid[i].canonical();
    FormulaResult f;
    if (formula_for(row.instance, f)) row.formula = f;
    try {
      row.oracle = solve(row.instance);
    } catch (const Error& e) {
      row.error = e.what();
      return;
    }
    if (!row.formula) {
      row.match = true;
    } else if (is_exact(row.formula->validity)) {
      row.match = row.oracle->max_edges == row.formula->value;
    } else {
      row.match = row.oracle->max_edges >= row.formula->value;
    }
  });
  return rows;
}

std::vector<GridRow> verify_formula_grid(std::span<const Instance> grid, const OracleOptions& options, int jobs) {
  return verify_formula_grid(grid, [&](const Instance& inst) { return solve_instance(inst, options); }, jobs);
}

namespace {

void sorted_tuples(int count, int max_part, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(prefix.size()) == count) {
    emit(prefix);
    return;
  }
  const int lo = prefix.empty() ? 1 : prefix.back();
  for (int n = lo; n <= max_part; ++n) {
    prefix.push_back(n);
    sorted_tuples(count, max_part, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Instance> theorem_grid(int r, int max_part) {
  std::vector<Instance> grid;
  std::vector<int> prefix;
  sorted_tuples(r, max_part, prefix, [&](const std::vector<int>& t) {
    for (int k = 1; k <= t.front(); ++k) grid.emplace_back(PartSizes(t), r, k);
  });
  return grid;
}

std::vector<Instance> matching_grid(int part_count, int max_part) {
  std::vector<Instance> grid;
  std::vector<int> prefix;
  sorted_tuples(part_count, max_part, prefix, [&](const std::vector<int>& t) {
    for (int k = 1; k <= t.front(); ++k) grid.emplace_back(PartSizes(t), 2, k);
  });
  return grid;
}

}  // namespace turan
