#include "turan/constructions.hpp"

#include <stdexcept>

#include "turan/error.hpp"
#include "turan/formulas.hpp"
#include "turan/packing.hpp"

namespace turan {

namespace {

void finish(ConstructionCertificate& cert, std::int64_t expected) {
  cert.claimed_edges = cert.graph.edge_count();
  if (cert.claimed_edges != expected) {
    throw std::logic_error("construction edge count " + std::to_string(cert.claimed_edges) +
                           " disagrees with formula value " + std::to_string(expected));
  }
  if (cert.graph.vertex_count() <= kEagerFreenessLimit) verify_freeness(cert);
}

}  // namespace

ConstructionCertificate extremal_construction(const HostSpec& input) {
  const HostSpec spec = input.canonical();
  const auto& parts = spec.parts();
  if (spec.r() < 3) throw ParameterError("extremal_construction: r >= 3 violated (r = " + std::to_string(spec.r()) + ")");
  if (spec.k() > parts[0]) {
    throw ParameterError("extremal_construction: k <= n_1 violated (k = " + std::to_string(spec.k()) +
                         ", n_1 = " + std::to_string(parts[0]) + ")");
  }

  GraphBuilder builder(parts.sizes());
  const auto& g = builder.peek();
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      auto va = g.vertex(a);
      auto vb = g.vertex(b);
      if (va.part == vb.part) continue;
      if (va.part == 0 && vb.part == 1 && va.index >= spec.k() - 1) continue;
      builder.add_edge(va, vb);
    }
  }

  ConstructionCertificate cert;
  cert.graph = std::move(builder).build();
  cert.k = spec.k();
  cert.r = spec.r();
  finish(cert, h_k(parts, spec.k()));
  return cert;
}

ConstructionCertificate four_partite_triangle_construction(const PartSizes& parts, int k) {
  if (parts.count() != 4) throw ParameterError("four_partite_triangle_construction: exactly four parts are required");
  if (k < 1) throw ParameterError("four_partite_triangle_construction: k >= 1 violated");
  if (k > parts[0] + parts[1] + 1) {
    throw ParameterError("four_partite_triangle_construction: k <= n_1 + n_2 + 1 violated (k = " +
                         std::to_string(k) + ")");
  }

  GraphBuilder builder(parts.sizes());
  // hub pool: V_1 then V_2
  int hubs = k - 1;
  for (int p = 0; p < 2 && hubs > 0; ++p) {
    for (int i = 0; i < parts[p] && hubs > 0; ++i, --hubs) {
      for (int j = 0; j < parts[2]; ++j) builder.add_edge({p, i}, {2, j});
    }
  }
  for (int p = 0; p < 3; ++p) {
    for (int i = 0; i < parts[p]; ++i) {
      for (int j = 0; j < parts[3]; ++j) builder.add_edge({p, i}, {3, j});
    }
  }

  ConstructionCertificate cert;
  cert.graph = std::move(builder).build();
  cert.k = k;
  cert.r = 3;
  finish(cert, four_partite_triangle_lower_bound(parts, k).value);
  return cert;
}

bool verify_freeness(ConstructionCertificate& cert) {
  if (!cert.free_verified) cert.free_verified = !contains_packing(cert.graph, cert.k, cert.r);
  return *cert.free_verified;
}

std::vector<ProbeEntry> maximality_probe(const ConstructionCertificate& cert) {
  std::vector<ProbeEntry> out;
  const auto& g = cert.graph;
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (g.part_of(a) == g.part_of(b) || g.adjacent_flat(a, b)) continue;
      auto va = g.vertex(a);
      auto vb = g.vertex(b);
      out.push_back({va, vb, contains_packing(g.with_edge(va, vb), cert.k, cert.r)});
    }
  }
  return out;
}

}  // namespace turan
