#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

// Text graph format:
//   r n_1 n_2 ... n_r
//   p1 i1 p2 i2        (one edge per line, 0-based)
// Blank lines and '#' comments are ignored. Writers sort edges so output is
// byte-stable.

[[nodiscard]] std::string to_text(const MultipartiteGraph& g);

/// Throws ParseError on malformed input, PartitenessError for a same-part edge.
[[nodiscard]] MultipartiteGraph parse_graph(std::string_view text);

[[nodiscard]] MultipartiteGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const MultipartiteGraph& g);

}  // namespace turan
