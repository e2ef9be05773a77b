#include "signull/certificate.hpp"

#include <cstdio>
#include <sstream>

#include "signull/error.hpp"

namespace signull {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string step_line(const CertificateStep& s) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const step::Components& c) { os << "components " << c.count; },
                 [&](const step::PendantDelete& p) { os << "pendant " << p.pendant << ' ' << p.neighbor; },
                 [&](const step::TypeISplit& t) {
                   os << "type1 " << t.witness << ' ' << t.tree_nullity << ' ' << t.rest_nullity;
                 },
                 [&](const step::TypeIIDecompose& t) {
                   os << "type2 " << t.cycle.size();
                   for (Vertex v : t.cycle) os << ' ' << v;
                   os << " branches";
                   for (int e : t.branch_nullity) os << ' ' << e;
                 },
                 [&](const step::CycleBase& c) {
                   os << "cycle " << c.length << ' ' << (c.balanced ? "balanced" : "unbalanced") << ' '
                      << c.contribution;
                 },
                 [&](const step::ForestBase& f) {
                   os << "forest " << f.order << ' ' << f.matching_number << ' ' << f.contribution;
                 },
             },
             s);
  return os.str();
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InvalidArgument("certificate line " + std::to_string(line) + ": " + what);
}

int read_int(std::istringstream& in, int line, const char* field) {
  long long v;
  if (!(in >> v)) fail(line, std::string("expected integer ") + field);
  if (v < -(1LL << 31) || v >= (1LL << 31)) fail(line, std::string(field) + " out of range");
  return static_cast<int>(v);
}

void expect_end(std::istringstream& in, int line) {
  std::string extra;
  if (in >> extra) fail(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

std::uint64_t graph_digest(const SignedGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xffu;
      h *= 1099511628211ULL;
    }
  };
  mix(g.order());
  for (const auto& e : g.edges()) {
    mix(e.u);
    mix(e.v);
    mix(to_int(e.sign));
  }
  return h;
}

std::vector<std::string> to_lines(const NullityCertificate& cert) {
  std::vector<std::string> lines;
  lines.push_back("certificate v1");
  lines.push_back("graph " + std::to_string(cert.order) + " " + std::to_string(cert.edge_count) + " " +
                  hex64(cert.digest));
  for (const auto& s : cert.steps) lines.push_back(step_line(s));
  lines.push_back("claim " + std::to_string(cert.claimed_nullity));
  return lines;
}

std::string to_text(const NullityCertificate& cert) {
  std::string out;
  for (const auto& line : to_lines(cert)) {
    out += line;
    out += '\n';
  }
  return out;
}

NullityCertificate parse_certificate(std::string_view text) {
  NullityCertificate cert;
  std::istringstream all{std::string(text)};
  std::string raw;
  int line = 0;
  enum class Stage { kMagic, kGraph, kSteps, kDone } stage = Stage::kMagic;
  while (std::getline(all, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream in(raw);
    std::string word;
    in >> word;
    if (stage == Stage::kDone) fail(line, "content after claim");
    if (stage == Stage::kMagic) {
      std::string version;
      in >> version;
      if (word != "certificate" || version != "v1") fail(line, "expected 'certificate v1'");
      expect_end(in, line);
      stage = Stage::kGraph;
      continue;
    }
    if (stage == Stage::kGraph) {
      if (word != "graph") fail(line, "expected graph header");
      cert.order = read_int(in, line, "order");
      cert.edge_count = read_int(in, line, "edge count");
      std::string hex;
      if (!(in >> hex) || hex.size() != 16 || hex.find_first_not_of("0123456789abcdef") != std::string::npos) {
        fail(line, "expected 16 hex digit digest");
      }
      cert.digest = std::stoull(hex, nullptr, 16);
      expect_end(in, line);
      stage = Stage::kSteps;
      continue;
    }
    if (word == "components") {
      cert.steps.emplace_back(step::Components{read_int(in, line, "count")});
    } else if (word == "pendant") {
      step::PendantDelete p;
      p.pendant = read_int(in, line, "pendant");
      p.neighbor = read_int(in, line, "neighbor");
      cert.steps.emplace_back(p);
    } else if (word == "type1") {
      step::TypeISplit t;
      t.witness = read_int(in, line, "witness");
      t.tree_nullity = read_int(in, line, "tree nullity");
      t.rest_nullity = read_int(in, line, "rest nullity");
      cert.steps.emplace_back(t);
    } else if (word == "type2") {
      step::TypeIIDecompose t;
      const int l = read_int(in, line, "cycle length");
      if (l < 0 || l > 1'000'000) fail(line, "bad cycle length");
      for (int i = 0; i < l; ++i) t.cycle.push_back(read_int(in, line, "cycle vertex"));
      std::string tag;
      if (!(in >> tag) || tag != "branches") fail(line, "expected 'branches'");
      for (int i = 0; i < l; ++i) t.branch_nullity.push_back(read_int(in, line, "branch nullity"));
      cert.steps.emplace_back(std::move(t));
    } else if (word == "cycle") {
      step::CycleBase c;
      c.length = read_int(in, line, "length");
      std::string flag;
      in >> flag;
      if (flag != "balanced" && flag != "unbalanced") fail(line, "expected balanced|unbalanced");
      c.balanced = flag == "balanced";
      c.contribution = read_int(in, line, "contribution");
      cert.steps.emplace_back(c);
    } else if (word == "forest") {
      step::ForestBase f;
      f.order = read_int(in, line, "order");
      f.matching_number = read_int(in, line, "matching number");
      f.contribution = read_int(in, line, "contribution");
      cert.steps.emplace_back(f);
    } else if (word == "claim") {
      cert.claimed_nullity = read_int(in, line, "nullity");
      stage = Stage::kDone;
    } else {
      fail(line, "unknown step '" + word + "'");
    }
    expect_end(in, line);
  }
  if (stage != Stage::kDone) throw InvalidArgument("certificate has no claim line");
  return cert;
}

}  // namespace signull
