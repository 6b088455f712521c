#include "turan/verification.hpp"

#include <sstream>

#include "turan/graph_io.hpp"
#include "turan/identities.hpp"
#include "turan/sampling.hpp"

namespace turan {

std::vector<PartSizes> identity_hosts() {
  std::vector<PartSizes> hosts;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) hosts.push_back(PartSizes{a, b, c});
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = b; c <= 3; ++c)
        for (int d = c; d <= 3; ++d) hosts.push_back(PartSizes{a, b, c, d});
  return hosts;
}

std::vector<PartSizes> almost_balanced_hosts() {
  std::vector<PartSizes> out;
  for (auto& h : identity_hosts()) {
    if (is_almost_balanced(h.sizes())) out.push_back(h);
  }
  return out;
}

namespace {

void record(SuiteReport& report, std::ostringstream& text, bool ok, const MultipartiteGraph& g) {
  ++report.checks;
  if (!ok) {
    ++report.failures;
    report.failing_instances.push_back(to_text(g));
  }
  text << (ok ? " pass" : " FAIL") << '\n';
}

}  // namespace

SuiteReport run_identity_suite(std::uint64_t seed, std::size_t samples) {
  SuiteReport report;
  std::ostringstream text;
  text << "identity suite seed=" << seed << " samples=" << samples << '\n';
  const auto hosts = identity_hosts();
  SubgraphSampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& host = hosts[i % hosts.size()];
    const auto g = sampler.random_subgraph(host);
    const auto w = weight_identity_check(g);
    text << "sample " << i << " host " << host.to_string() << " edges " << g.edge_count() << " weight " << w.lhs
         << '=' << w.rhs;
    record(report, text, w.equal, g);
    const auto d = deletion_identity_check(g);
    text << "sample " << i << " host " << host.to_string() << " edges " << g.edge_count() << " deletion " << d.lhs
         << '=' << d.rhs;
    record(report, text, d.equal, g);
  }
  text << "identity checks: " << report.checks - report.failures << '/' << report.checks << " passed\n";
  report.text = text.str();
  return report;
}

SuiteReport run_inequality_suite(std::uint64_t seed, std::size_t samples) {
  SuiteReport report;
  std::ostringstream text;
  text << "inequality suite seed=" << seed << " samples=" << samples << '\n';
  // balanced hosts need r >= 3, which every identity host satisfies
  const auto hosts = almost_balanced_hosts();
  SubgraphSampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& host = hosts[i % hosts.size()];
    const auto g = sampler.random_subgraph(host);
    const auto c = clique_count_lower_bound_check(g);
    text << "sample " << i << " host " << host.to_string() << " edges " << g.edge_count() << " q " << c.q
         << " >= " << c.bound;
    record(report, text, c.holds, g);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& host = hosts[i % hosts.size()];
    const auto g = sampler.random_kr_free_subgraph(host);
    const bool ok = kr_free_weight_bound_check(g);
    text << "free-sample " << i << " host " << host.to_string() << " edges " << g.edge_count() << " weight-bound";
    record(report, text, ok, g);
  }
  text << "inequality checks: " << report.checks - report.failures << '/' << report.checks << " passed\n";
  report.text = text.str();
  return report;
}

SuiteReport grid_report(const std::vector<GridRow>& rows) {
  SuiteReport report;
  std::ostringstream text;
  for (const auto& row : rows) {
    ++report.checks;
    text << row.instance.to_string() << " formula=";
    if (row.formula) {
      text << row.formula->value << '(' << to_string(row.formula->validity) << ')';
    } else {
      text << "none";
    }
    text << " oracle=";
    if (row.oracle) {
      text << row.oracle->max_edges;
    } else {
      text << "error(" << row.error << ')';
    }
    text << (row.match ? " match" : " MISMATCH") << '\n';
    if (!row.match) {
      ++report.failures;
      report.failing_instances.push_back(row.oracle ? to_text(row.oracle->witness) : row.instance.to_string() + "\n");
    }
  }
  report.text = text.str();
  return report;
}

}  // namespace turan
