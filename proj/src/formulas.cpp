#include "turan/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "turan/error.hpp"

namespace turan {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("integer overflow in formula evaluation");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("integer overflow in formula evaluation");
  return out;
}

}  // namespace

std::string_view to_string(Validity v) noexcept {
  switch (v) {
    case Validity::exact_theorem:
      return "exact-theorem";
    case Validity::exact_trivial_range:
      return "exact-trivial-range";
    case Validity::lower_bound_only:
      return "lower-bound-only";
  }
  return "unknown";
}

bool is_exact(Validity v) noexcept { return v != Validity::lower_bound_only; }

std::int64_t host_edge_count(const PartSizes& parts) {
  std::int64_t total = 0;
  std::int64_t sum = 0;
  for (int n : parts.sizes()) {
    total = checked_add(total, checked_mul(sum, n));
    sum += n;
  }
  return total;
}

std::int64_t h_k(const PartSizes& parts, int k) {
  if (parts.count() < 2) throw ParameterError("h_k: at least two parts are required");
  if (k < 1) throw ParameterError("h_k: k must be at least 1");
  const std::int64_t n1 = parts[0];
  const std::int64_t n2 = parts[1];
  std::int64_t value = host_edge_count(parts);
  value = checked_add(value, -checked_mul(n1, n2));
  return checked_add(value, checked_mul(n2, k - 1));
}

FormulaResult bipartite_matching_number(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw ParameterError("bipartite_matching_number: m, n, k must be positive");
  const int small = std::min(m, n);
  const int large = std::max(m, n);
  FormulaResult result;
  result.canonical_spec = Instance(PartSizes{small, large}, 2, k);
  result.note = "bipartite";
  if (k <= small) {
    result.value = checked_mul(large, k - 1);
    result.validity = Validity::exact_theorem;
  } else {
    result.value = checked_mul(large, small);
    result.validity = Validity::exact_trivial_range;
  }
  return result;
}

FormulaResult turan_number(const HostSpec& spec) {
  if (spec.r() < 2) throw ParameterError("turan_number: r must be at least 2");
  const HostSpec canon = spec.canonical();
  const auto& parts = canon.parts();
  if (canon.r() == 2) return bipartite_matching_number(parts[1], parts[0], canon.k());

  FormulaResult result;
  result.canonical_spec = Instance(canon);
  if (canon.k() <= parts[0]) {
    result.value = h_k(parts, canon.k());
    result.validity = Validity::exact_theorem;
  } else {
    // every K_r is a transversal, so k disjoint copies need k vertices per part
    result.value = host_edge_count(parts);
    result.validity = Validity::exact_trivial_range;
  }
  return result;
}

FormulaResult multipartite_matching_number(const PartSizes& input, int k) {
  if (input.count() < 2) throw ParameterError("multipartite_matching_number: at least two parts are required");
  if (k < 1) throw ParameterError("multipartite_matching_number: k must be at least 1");
  const PartSizes parts = input.canonical();
  FormulaResult result;
  result.canonical_spec = Instance(parts, 2, k);
  result.note = "matching";

  const std::int64_t rest = parts.total() - parts[0];
  const std::int64_t n1 = parts[0];
  const std::int64_t total = parts.total();
  const std::int64_t largest = parts[parts.count() - 1];
  const std::int64_t max_matching = std::min(total / 2, total - largest);

  if (k <= n1) {
    result.value = checked_mul(k - 1, rest);
    result.validity = Validity::exact_theorem;
  } else if (k > max_matching) {
    result.value = host_edge_count(parts);
    result.validity = Validity::exact_trivial_range;
    result.note = "matching; k exceeds the host's maximum matching";
  } else {
    // k-1 hub vertices cannot exceed V_1, so clamp the hub count
    result.value = checked_mul(std::min<std::int64_t>(k - 1, n1), rest);
    result.validity = Validity::lower_bound_only;
    result.note = "matching; k > n_1 is outside the formula's range";
  }
  return result;
}

FormulaResult four_partite_triangle_lower_bound(const PartSizes& parts, int k) {
  if (parts.count() != 4) throw ParameterError("four_partite_triangle_lower_bound: exactly four parts are required");
  if (k < 1) throw ParameterError("four_partite_triangle_lower_bound: k must be at least 1");
  FormulaResult result;
  result.canonical_spec = Instance(parts, 3, k);
  result.validity = Validity::lower_bound_only;
  result.note = "4-partite triangle construction";
  const std::int64_t n123 = static_cast<std::int64_t>(parts[0]) + parts[1] + parts[2];
  result.value = checked_add(checked_mul(n123, parts[3]), checked_mul(k - 1, parts[2]));
  return result;
}

bool formula_for(const Instance& instance, FormulaResult& out) {
  if (instance.spans_all_parts()) {
    out = turan_number(HostSpec(instance.parts, instance.k));
    return true;
  }
  if (instance.r == 2) {
    out = multipartite_matching_number(instance.parts, instance.k);
    return true;
  }
  if (instance.r == 3 && instance.parts.count() == 4) {
    const auto canon = instance.parts.canonical();
    if (instance.k - 1 <= canon[0] + canon[1]) {
      out = four_partite_triangle_lower_bound(canon, instance.k);
      return true;
    }
  }
  return false;
}

}  // namespace turan
