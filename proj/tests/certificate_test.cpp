#include <gtest/gtest.h>

#include <random>

#include "signull/certificate.hpp"
#include "signull/error.hpp"
#include "signull/nullity_engine.hpp"
#include "signull/verification.hpp"
#include "support.hpp"

namespace signull {
namespace {

TEST(Certificate, TextLayout) {
  const auto cert = nullity_structural(cycle_graph(4, true)).certificate;
  const auto lines = to_lines(cert);
  ASSERT_GE(lines.size(), 3u);
  EXPECT_EQ(lines.front(), "certificate v1");
  EXPECT_EQ(lines[1].rfind("graph 4 4 ", 0), 0u);
  EXPECT_EQ(lines.back(), "claim 2");
  std::string joined;
  for (const auto& l : lines) joined += l + "\n";
  EXPECT_EQ(joined, to_text(cert));
}

TEST(Certificate, RoundTripsThroughText) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_unicyclic(3 + i % 9, rng);
    EngineOptions options;
    if (i % 2) options.strategy = ReductionStrategy::kPendantFirst;
    const auto cert = nullity_structural(g, options).certificate;
    EXPECT_EQ(parse_certificate(to_text(cert)), cert);
  }
}

TEST(Certificate, ParseErrorsCarryLineNumbers) {
  const std::string good = to_text(nullity_structural(cycle_graph(5, false)).certificate);
  EXPECT_NO_THROW(parse_certificate(good));
  try {
    parse_certificate("certificate v1\ngraph 3 3 0000000000000000\nbogus 1\nclaim 0\n");
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_certificate(""), InvalidArgument);
  EXPECT_THROW(parse_certificate("certificate v2\n"), InvalidArgument);
  EXPECT_THROW(parse_certificate("certificate v1\ngraph 3 3 zz\nclaim 0\n"), InvalidArgument);
  EXPECT_THROW(parse_certificate("certificate v1\ngraph 3 3 00\ncycle 3 maybe 0\nclaim 0\n"), InvalidArgument);
  EXPECT_THROW(parse_certificate("certificate v1\ngraph 3 3 00\n"), InvalidArgument);
}

TEST(Certificate, DigestSeparatesSignsAndShapes) {
  EXPECT_NE(graph_digest(cycle_graph(4, true)), graph_digest(cycle_graph(4, false)));
  EXPECT_NE(graph_digest(path_graph(4)), graph_digest(star_graph(3)));
  EXPECT_EQ(graph_digest(cycle_graph(6)), graph_digest(cycle_graph(6)));
}

}  // namespace
}  // namespace signull
