#include "turan/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "turan/error.hpp"

namespace turan {

std::string to_text(const MultipartiteGraph& g) {
  std::ostringstream out;
  out << g.part_count();
  for (int n : g.part_sizes()) out << ' ' << n;
  out << '\n';
  for (auto [a, b] : g.edges()) out << a.part << ' ' << a.index << ' ' << b.part << ' ' << b.index << '\n';
  return out.str();
}

namespace {

std::vector<long long> numbers_on(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

MultipartiteGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<GraphBuilder> builder;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto values = numbers_on(line, line_no);
    if (values.empty()) continue;
    if (!builder) {
      const auto r = values.front();
      if (r < 1 || static_cast<std::size_t>(r) + 1 != values.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": header must be 'r n_1 ... n_r'");
      }
      std::vector<int> sizes;
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > 1'000'000) {
          throw ParseError("line " + std::to_string(line_no) + ": invalid part size");
        }
        sizes.push_back(static_cast<int>(values[i]));
      }
      builder.emplace(std::move(sizes));
      continue;
    }
    if (values.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": edge lines need 4 integers 'p1 i1 p2 i2'");
    }
    VertexId a{static_cast<int>(values[0]), static_cast<int>(values[1])};
    VertexId b{static_cast<int>(values[2]), static_cast<int>(values[3])};
    const auto& g = builder->peek();
    if (!g.contains(a) || !g.contains(b)) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex outside the declared parts");
    }
    if (a.part == b.part) {
      throw PartitenessError("line " + std::to_string(line_no) + ": edge inside part " + std::to_string(a.part));
    }
    builder->add_edge(a, b);
  }
  if (!builder) throw ParseError("missing header line");
  return std::move(*builder).build();
}

MultipartiteGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const MultipartiteGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << to_text(g);
}

}  // namespace turan
