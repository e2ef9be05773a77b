#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "signull/error.hpp"
#include "signull/graph_io.hpp"
#include "signull/verification.hpp"
#include "support.hpp"

namespace signull {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGraph, AcceptsAllSignSpellings) {
  const auto g = parse_graph("# square\nsg 4\n\ne 0 1 +\ne 1 2 -\ne 2 3 1\ne 3 0 -1\n");
  EXPECT_EQ(g, testing::make(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}, {0, 3, -1}}));
}

TEST(ParseGraph, ToleratesCrlfAndTabs) {
  EXPECT_EQ(parse_graph("sg 2\r\ne\t0\t1\t+\r\n"), path_graph(2));
  EXPECT_EQ(parse_graph("sg 0"), SignedGraph(0, {}));
}

TEST(ParseGraph, ErrorsNameTheLine) {
  EXPECT_EQ(error_of("sg 3\ne 0 1 +\ne 1 0 -\n"), "line 3: duplicate edge (0,1)");
  EXPECT_EQ(error_of("sg 3\ne 1 1 +\n"), "line 2: loop at vertex 1");
  EXPECT_EQ(error_of("sg 3\n# x\ne 0 3 +\n"), "line 3: endpoint outside [0,3)");
  EXPECT_EQ(error_of("e 0 1 +\n"), "line 1: expected header 'sg <n>'");
  EXPECT_EQ(error_of("sg 3\ne 0 1 x\n"), "line 2: expected a sign (+, -, 1, -1), got 'x'");
  EXPECT_EQ(error_of("sg 3\ne 0 1\n"), "line 2: expected edge 'e <u> <v> <sign>'");
  EXPECT_EQ(error_of("sg 3\nsg 3\n"), "line 2: duplicate header");
  EXPECT_EQ(error_of("sg x\n"), "line 1: expected an integer, got 'x'");
  EXPECT_EQ(error_of("# nothing\n"), "line 2: missing header 'sg <n>'");
}

TEST(FormatGraph, CanonicalText) {
  EXPECT_EQ(format_graph(cycle_graph(3, false)), "sg 3\ne 0 1 -\ne 0 2 +\ne 1 2 +\n");
}

TEST(FormatGraph, RoundTrip) {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(i % 12, 0.4, rng);
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
}

TEST(ReadGraphFile, ReadsAndReportsMissing) {
  const auto path = std::filesystem::temp_directory_path() / "signull_io_test.sg";
  std::ofstream(path) << format_graph(star_graph(3));
  EXPECT_EQ(read_graph_file(path), star_graph(3));
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph_file(path), InvalidArgument);
}

}  // namespace
}  // namespace signull
