#include "signull/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "signull/error.hpp"

namespace signull {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InvalidArgument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_vertex(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

Sign to_sign(std::string_view tok, int line) {
  if (tok == "+" || tok == "1" || tok == "+1") return Sign::kPositive;
  if (tok == "-" || tok == "-1") return Sign::kNegative;
  fail(line, "expected a sign (+, -, 1, -1), got '" + std::string(tok) + "'");
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  int order = -1;
  std::vector<SignedEdge> edges;
  std::set<std::pair<int, int>> seen;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto tok = tokens(raw);
    if (tok.empty() || tok[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (order < 0) {
      if (tok[0] != "sg" || tok.size() != 2) fail(line, "expected header 'sg <n>'");
      order = to_vertex(tok[1], line);
      if (order < 0) fail(line, "negative order");
    } else {
      if (tok[0] == "sg") fail(line, "duplicate header");
      if (tok[0] != "e" || tok.size() != 4) fail(line, "expected edge 'e <u> <v> <sign>'");
      int u = to_vertex(tok[1], line);
      int v = to_vertex(tok[2], line);
      const Sign s = to_sign(tok[3], line);
      if (u < 0 || u >= order || v < 0 || v >= order) {
        fail(line, "endpoint outside [0," + std::to_string(order) + ")");
      }
      if (u == v) fail(line, "loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) {
        fail(line, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      edges.push_back({u, v, s});
    }
    if (end == text.size()) break;
  }
  if (order < 0) throw InvalidArgument("line " + std::to_string(line) + ": missing header 'sg <n>'");
  return SignedGraph(order, std::move(edges));
}

SignedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const SignedGraph& g) {
  std::string out = "sg " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           (e.sign == Sign::kPositive ? "+" : "-") + "\n";
  }
  return out;
}

}  // namespace signull
