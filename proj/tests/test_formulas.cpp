#include <algorithm>

#include "doctest.h"
#include "turan/error.hpp"
#include "turan/formulas.hpp"

using namespace turan;

TEST_CASE("h_k") {
  CHECK(h_k(PartSizes{1, 1, 1}, 1) == 2);
  CHECK(h_k(PartSizes{2, 2, 2}, 2) == 10);
  CHECK(h_k(PartSizes{3, 3, 3}, 2) == 21);
  // raw formula: no sorting
  CHECK(h_k(PartSizes{3, 2, 2}, 1) == 16 - 6);
  CHECK_THROWS_AS((void)h_k(PartSizes{2, 2}, 0), ParameterError);
  CHECK_THROWS_AS((void)h_k(PartSizes{2}, 1), ParameterError);
}

TEST_CASE("h_k overflow and the 10^4-vertex guarantee") {
  CHECK_THROWS_AS((void)h_k(PartSizes{2'000'000'000, 2'000'000'000, 2'000'000'000}, 1), ArithmeticError);
  CHECK_NOTHROW((void)h_k(PartSizes{1, 3333, 3333, 3333}, 1));
  CHECK(h_k(PartSizes{5000, 5000}, 5000) == 5000LL * 4999);
}

TEST_CASE("turan_number") {
  auto a = turan_number(HostSpec(PartSizes{2, 2, 2}, 1));
  CHECK(a.value == 8);
  CHECK(a.validity == Validity::exact_theorem);

  auto b = turan_number(HostSpec(PartSizes{2, 2, 2}, 3));
  CHECK(b.value == 12);
  CHECK(b.validity == Validity::exact_trivial_range);

  auto c = turan_number(HostSpec(PartSizes{3, 2, 2}, 2));
  CHECK(c.value == 14);
  CHECK(c.canonical_spec.parts.sizes() == std::vector<int>{2, 2, 3});

  auto bip = turan_number(HostSpec(PartSizes{3, 4}, 2));
  CHECK(bip.value == 4);
  CHECK(bip.note == "bipartite");
}

TEST_CASE("bipartite_matching_number") {
  CHECK(bipartite_matching_number(4, 3, 2).value == 4);
  CHECK(bipartite_matching_number(3, 4, 2).value == 4);
  CHECK(bipartite_matching_number(5, 5, 1).value == 0);
  auto over = bipartite_matching_number(2, 2, 3);
  CHECK(over.value == 4);
  CHECK(over.validity == Validity::exact_trivial_range);
  CHECK_THROWS_AS((void)bipartite_matching_number(0, 2, 1), ParameterError);
}

TEST_CASE("multipartite_matching_number") {
  CHECK(multipartite_matching_number(PartSizes{2, 2, 2}, 2).value == 4);
  CHECK(multipartite_matching_number(PartSizes{1, 1, 1}, 1).value == 0);
  CHECK(multipartite_matching_number(PartSizes{2, 3, 4}, 2).value == 7);
  CHECK(multipartite_matching_number(PartSizes{4, 2, 3}, 2).value == 7);

  auto out_of_range = multipartite_matching_number(PartSizes{1, 2, 2}, 2);
  CHECK(out_of_range.validity == Validity::lower_bound_only);
  CHECK(out_of_range.value == 4);
  CHECK_FALSE(out_of_range.note.empty());

  // K_{1,1,1} has no 2 disjoint edges
  auto trivial = multipartite_matching_number(PartSizes{1, 1, 1}, 2);
  CHECK(trivial.validity == Validity::exact_trivial_range);
  CHECK(trivial.value == 3);
}

TEST_CASE("four_partite_triangle_lower_bound") {
  auto a = four_partite_triangle_lower_bound(PartSizes{2, 2, 2, 2}, 2);
  CHECK(a.value == 14);
  CHECK(a.validity == Validity::lower_bound_only);
  CHECK(four_partite_triangle_lower_bound(PartSizes{1, 1, 1, 1}, 1).value == 3);
  CHECK(four_partite_triangle_lower_bound(PartSizes{2, 2, 2, 2}, 1).value == 12);
  CHECK_THROWS_AS((void)four_partite_triangle_lower_bound(PartSizes{2, 2, 2}, 1), ParameterError);
}

TEST_CASE("validity tags") {
  CHECK(to_string(Validity::exact_theorem) == "exact-theorem");
  CHECK(to_string(Validity::exact_trivial_range) == "exact-trivial-range");
  CHECK(to_string(Validity::lower_bound_only) == "lower-bound-only");
}

namespace {

std::vector<std::vector<int>> tuples(int r, int max_part) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < r; ++i) {
    std::vector<std::vector<int>> next;
    for (auto& t : out)
      for (int n = 1; n <= max_part; ++n) {
        auto u = t;
        u.push_back(n);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("turan_number is monotone, permutation invariant and bounded by the host") {
  for (int r = 2; r <= 4; ++r) {
    for (const auto& t : tuples(r, 4)) {
      for (int k = 1; k <= 5; ++k) {
        const auto value = turan_number(HostSpec(PartSizes(t), k)).value;
        CHECK(value <= host_edge_count(PartSizes(t)));
        CHECK(turan_number(HostSpec(PartSizes(t), k + 1)).value >= value);
        for (std::size_t i = 0; i < t.size(); ++i) {
          auto bigger = t;
          ++bigger[i];
          CHECK(turan_number(HostSpec(PartSizes(bigger), k)).value >= value);
        }
        auto rotated = t;
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        CHECK(turan_number(HostSpec(PartSizes(rotated), k)).value == value);
        const int n1 = *std::min_element(t.begin(), t.end());
        if (k > n1) CHECK(value == host_edge_count(PartSizes(t)));
      }
    }
  }
}

TEST_CASE("turan_number meets h_1 and h_{n_1} on almost-balanced hosts") {
  for (int r = 3; r <= 5; ++r) {
    for (int n1 = 1; n1 <= 5; ++n1) {
      for (int n2 = n1; n2 <= 5; ++n2) {
        std::vector<int> sizes(static_cast<std::size_t>(r), n2);
        sizes[0] = n1;
        const PartSizes parts(sizes);
        CHECK(turan_number(HostSpec(parts, 1)).value == h_k(parts, 1));
        CHECK(turan_number(HostSpec(parts, n1)).value == h_k(parts, n1));
        CHECK(turan_number(HostSpec(parts, n1)).validity == Validity::exact_theorem);
      }
    }
  }
}

TEST_CASE("formula_for dispatch") {
  FormulaResult f;
  CHECK(formula_for(Instance(PartSizes{2, 2, 2}, 3, 2), f));
  CHECK(f.value == 10);
  CHECK(formula_for(Instance(PartSizes{2, 2, 2}, 2, 2), f));
  CHECK(f.value == 4);
  CHECK(formula_for(Instance(PartSizes{2, 2, 2, 2}, 3, 1), f));
  CHECK(f.value == 12);
  CHECK_FALSE(formula_for(Instance(PartSizes{2, 2, 2, 2, 2}, 3, 1), f));
}
