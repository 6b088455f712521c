#include "turan/identities.hpp"

#include <functional>

#include "turan/error.hpp"

namespace turan {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::int64_t choose2(std::int64_t r) { return r * (r - 1) / 2; }

void require_nonempty_parts(const MultipartiteGraph& g) {
  if (g.part_count() < 2) throw ParameterError("identity checks need at least two parts");
  std::int64_t product = 1;
  for (int n : g.part_sizes()) {
    if (n == 0) throw ParameterError("identity checks reject empty parts (no transversals exist)");
    product *= n;
    if (product > kTransversalBudget) {
      throw BudgetError("more than " + std::to_string(kTransversalBudget) + " transversals to enumerate");
    }
  }
}

// Odometer over all transversals; `visit` receives flat ids, one per part.
void for_each_transversal(const MultipartiteGraph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int r = g.part_count();
  std::vector<int> pick(static_cast<std::size_t>(r), 0);
  std::vector<int> flat(static_cast<std::size_t>(r));
  while (true) {
    for (int p = 0; p < r; ++p) flat[static_cast<std::size_t>(p)] = g.part_offset(p) + pick[static_cast<std::size_t>(p)];
    visit(flat);
    int p = r - 1;
    while (p >= 0 && ++pick[static_cast<std::size_t>(p)] == g.part_size(p)) pick[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) return;
  }
}

int induced_edges(const MultipartiteGraph& g, const std::vector<int>& flat) {
  int w = 0;
  for (std::size_t a = 0; a < flat.size(); ++a) {
    for (std::size_t b = a + 1; b < flat.size(); ++b) w += g.adjacent_flat(flat[a], flat[b]);
  }
  return w;
}

std::vector<std::vector<std::int64_t>> pair_matrix(const MultipartiteGraph& g) {
  const auto r = static_cast<std::size_t>(g.part_count());
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      m[i][j] = m[j][i] = pair_edge_count(g, static_cast<int>(i), static_cast<int>(j));
    }
  }
  return m;
}

std::int64_t product_except(const std::vector<int>& sizes, std::size_t i, std::size_t j) {
  std::int64_t p = 1;
  for (std::size_t l = 0; l < sizes.size(); ++l) {
    if (l != i && l != j) p *= sizes[l];
  }
  return p;
}

void require_balanced_regime(const MultipartiteGraph& g) {
  if (g.part_count() < 3) throw RegimeError("inequality checks are stated for r >= 3");
  if (!is_almost_balanced(g.part_sizes())) throw RegimeError("inequality checks need n_2 = ... = n_r");
}

}  // namespace

bool is_almost_balanced(const std::vector<int>& sizes) {
  for (std::size_t i = 2; i < sizes.size(); ++i) {
    if (sizes[i] != sizes[1]) return false;
  }
  return sizes.size() >= 2;
}

int weight_of(const MultipartiteGraph& g, const Transversal& s) {
  if (s.vertices.size() != static_cast<std::size_t>(g.part_count())) {
    throw ParameterError("weight_of: a transversal has exactly one vertex per part");
  }
  std::vector<int> flat;
  for (std::size_t p = 0; p < s.vertices.size(); ++p) {
    if (s.vertices[p].part != static_cast<int>(p)) {
      throw ParameterError("weight_of: a transversal has exactly one vertex per part");
    }
    flat.push_back(g.flat(s.vertices[p]));
  }
  return induced_edges(g, flat);
}

WeightSummary summarize_weights(const MultipartiteGraph& g) {
  require_nonempty_parts(g);
  WeightSummary s;
  s.pair_counts = pair_matrix(g);
  const int full = static_cast<int>(choose2(g.part_count()));
  for_each_transversal(g, [&](const std::vector<int>& flat) {
    const int w = induced_edges(g, flat);
    s.total_weight += w;
    s.clique_count_q += (w == full);
    ++s.transversal_count;
  });
  return s;
}

IdentityCheck weight_identity_check(const MultipartiteGraph& g) {
  const auto summary = summarize_weights(g);
  const auto& sizes = g.part_sizes();
  IdentityCheck check;
  check.lhs = summary.total_weight;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      check.rhs += summary.pair_counts[i][j] * product_except(sizes, i, j);
    }
  }
  check.equal = check.lhs == check.rhs;
  return check;
}

IdentityCheck deletion_identity_check(const MultipartiteGraph& g) {
  require_nonempty_parts(g);
  const auto& sizes = g.part_sizes();
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);

  IdentityCheck check;
  // |E(G \ S)| = |E| - (edges touching S) = |E| - sum deg(v in S) + w(S)
  for_each_transversal(g, [&](const std::vector<int>& flat) {
    std::int64_t touching = -induced_edges(g, flat);
    for (int v : flat) touching += degree[static_cast<std::size_t>(v)];
    check.lhs += g.edge_count() - touching;
  });

  const auto pairs = pair_matrix(g);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      check.rhs += pairs[i][j] * (sizes[i] - 1) * (sizes[j] - 1) * product_except(sizes, i, j);
    }
  }
  check.equal = check.lhs == check.rhs;
  return check;
}

InequalityCheck clique_count_lower_bound_check(const MultipartiteGraph& g) {
  require_balanced_regime(g);
  const auto summary = summarize_weights(g);
  const int r = g.part_count();
  const std::int64_t n1 = g.part_size(0);
  const std::int64_t n2 = g.part_size(1);

  std::int64_t first_part = 0;
  for (int j = 1; j < r; ++j) first_part += summary.pair_counts[0][static_cast<std::size_t>(j)];
  std::int64_t others = 0;
  for (int i = 1; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) others += summary.pair_counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  InequalityCheck check;
  check.q = static_cast<std::int64_t>(count_cliques(g));
  check.bound = first_part * ipow(n2, r - 2) + others * n1 * ipow(n2, r - 3) -
                n1 * ipow(n2, r - 1) * (choose2(r) - 1);
  check.holds = check.q >= check.bound;
  return check;
}

bool kr_free_weight_bound_check(const MultipartiteGraph& g) {
  require_balanced_regime(g);
  if (contains_packing(g, 1)) throw PreconditionError("kr_free_weight_bound_check: graph contains K_r");
  const auto summary = summarize_weights(g);
  const int r = g.part_count();
  const std::int64_t bound = (choose2(r) - 1) * g.part_size(0) * ipow(g.part_size(1), r - 1);
  return summary.total_weight <= bound;
}

}  // namespace turan
