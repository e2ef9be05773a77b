#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "signull/signed_graph.hpp"

namespace signull {

// Graph file format:
//
//   # comment
//   sg <n>
//   e <u> <v> <sign>
//
// Vertex ids are 0-based. Signs are read as + / - / 1 / -1 and always
// written as + / -. Blank lines and lines starting with '#' are ignored.
// Errors carry the 1-based line number: "line 3: duplicate edge (0,1)".
SignedGraph parse_graph(std::string_view text);
SignedGraph read_graph_file(const std::filesystem::path& path);

// "sg <n>\n" followed by one "e <u> <v> <+|->\n" per edge, ascending.
std::string format_graph(const SignedGraph& g);

}  // namespace signull
