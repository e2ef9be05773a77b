#include "signull/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "signull/classifier.hpp"
#include "signull/enumeration.hpp"
#include "signull/error.hpp"
#include "signull/exact_linalg.hpp"
#include "signull/graph_io.hpp"
#include "signull/nullity_engine.hpp"
#include "signull/switching.hpp"
#include "signull/verification.hpp"

namespace signull::cli {
namespace {

using Json = nlohmann::ordered_json;

Json theta_json(const SwitchingFunction& f) {
  Json a = Json::array();
  for (Sign s : f.theta) a.push_back(to_int(s));
  return a;
}

std::string theta_text(const SwitchingFunction& f) {
  std::string s;
  for (Sign x : f.theta) s += x == Sign::kPositive ? '+' : '-';
  return s;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

// Every component acyclic or unicyclic.
bool structural_applies(const SignedGraph& g) {
  const auto labels = g.component_labels();
  std::vector<int> excess(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) --excess[labels[v]];
  for (const auto& e : g.edges()) ++excess[labels[e.u]];
  return std::all_of(excess.begin(), excess.end(), [](int x) { return x <= 0; });
}

struct Context {
  bool json = false;
  std::ostream& out;
  std::ostream& err;
};

int cmd_nullity(const Context& ctx, const std::string& path, bool pendant_first) {
  const auto g = read_graph_file(path);
  if (!structural_applies(g)) {
    ctx.err << "notice: a component has cycle rank >= 2; using the rank oracle\n";
    const int eta = nullity_oracle(g);
    if (ctx.json) {
      ctx.out << Json{{"n", g.order()}, {"nullity", eta}, {"method", "oracle"}, {"certificate", nullptr}}.dump()
              << "\n";
    } else {
      ctx.out << "nullity " << eta << "\n";
    }
    return kOk;
  }
  EngineOptions options;
  if (pendant_first) options.strategy = ReductionStrategy::kPendantFirst;
  const auto result = nullity_structural(g, options);
  if (ctx.json) {
    ctx.out << Json{{"n", g.order()},
                    {"nullity", result.nullity},
                    {"method", "structural"},
                    {"certificate", to_lines(result.certificate)}}
                   .dump()
            << "\n";
  } else {
    ctx.out << "nullity " << result.nullity << "\n" << to_text(result.certificate);
  }
  return kOk;
}

int cmd_oracle(const Context& ctx, const std::string& path) {
  const auto g = read_graph_file(path);
  const int eta = nullity_oracle(g);
  if (ctx.json) {
    ctx.out << Json{{"n", g.order()}, {"nullity", eta}, {"method", "oracle"}}.dump() << "\n";
  } else {
    ctx.out << "nullity " << eta << "\n";
  }
  return kOk;
}

int cmd_balance(const Context& ctx, const std::string& path) {
  const auto g = read_graph_file(path);
  const auto result = is_balanced(g);
  if (ctx.json) {
    ctx.out << Json{{"n", g.order()},
                    {"balanced", result.balanced},
                    {"switching", result.witness ? theta_json(*result.witness) : Json(nullptr)}}
                   .dump()
            << "\n";
  } else {
    ctx.out << (result.balanced ? "balanced" : "unbalanced") << "\n";
    if (result.witness) ctx.out << "switching " << theta_text(*result.witness) << "\n";
  }
  return kOk;
}

int cmd_normalize(const Context& ctx, const std::string& path, const std::string& output) {
  const auto g = read_graph_file(path);
  const auto result = normalize_unicyclic(g);
  const std::string text = format_graph(result.graph);
  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write " + output);
    file << text;
  }
  if (ctx.json) {
    ctx.out << Json{{"n", g.order()},
                    {"balanced", result.balanced},
                    {"switching", theta_json(result.switching)},
                    {"graph", text}}
                   .dump()
            << "\n";
  } else if (output.empty()) {
    ctx.out << text;
  } else {
    ctx.out << (result.balanced ? "balanced" : "unbalanced") << "\nswitching " << theta_text(result.switching)
            << "\n";
  }
  return kOk;
}

int cmd_classify(const Context& ctx, const std::string& path) {
  const auto g = read_graph_file(path);
  const auto r = classify_extremal(g);
  if (ctx.json) {
    ctx.out << Json{{"n", r.order},
                    {"nullity", r.nullity},
                    {"class", class_label(r.label)},
                    {"family", family_name(r.family.tag)},
                    {"r", optional_int(r.family.r)},
                    {"s", optional_int(r.family.s)},
                    {"cycle_length", r.cycle_length},
                    {"balanced", r.balanced}}
                   .dump()
            << "\n";
  } else {
    ctx.out << "n " << r.order << "\nnullity " << r.nullity << "\nclass " << class_label(r.label) << "\nfamily "
            << family_name(r.family.tag);
    if (r.family.r) {
      ctx.out << "(" << *r.family.r;
      if (r.family.s) ctx.out << "," << *r.family.s;
      ctx.out << ")";
    }
    ctx.out << "\ncycle " << r.cycle_length << " " << (r.balanced ? "balanced" : "unbalanced") << "\n";
  }
  return kOk;
}

int cmd_spectrum(const Context& ctx, int length, bool unbalanced) {
  if (length < 3) throw InvalidArgument("--cycle must be at least 3");
  const bool balanced = !unbalanced;
  const auto poly = char_poly(adjacency_matrix(cycle_graph(length, balanced)));
  const auto eigenvalues = cycle_eigenvalues(length, balanced);
  long double worst = 0;
  for (double x : eigenvalues) worst = std::max(worst, std::fabs(poly.evaluate(x)));
  if (ctx.json) {
    Json coefficients = Json::array();
    for (const auto& c : poly.coefficients()) coefficients.push_back(c.get_si());
    ctx.out << Json{{"length", length},
                    {"balanced", balanced},
                    {"char_poly", coefficients},
                    {"eigenvalues", eigenvalues},
                    {"max_residual", static_cast<double>(worst)},
                    {"nullity", poly.zero_root_multiplicity()}}
                   .dump()
            << "\n";
    return kOk;
  }
  ctx.out << "cycle " << length << " " << (balanced ? "balanced" : "unbalanced") << "\nchar_poly";
  for (const auto& c : poly.coefficients()) ctx.out << " " << c.get_str();
  ctx.out << "\neigenvalues";
  ctx.out << std::setprecision(17);
  for (double x : eigenvalues) ctx.out << " " << x;
  ctx.out << std::setprecision(6) << "\nmax_residual " << static_cast<double>(worst) << "\nnullity "
          << poly.zero_root_multiplicity() << "\n";
  return kOk;
}

int cmd_verify(const Context& ctx, const VerifyOptions& options) {
  const auto report = verify_all(options);
  if (ctx.json) {
    ctx.out << to_json(report).dump(2) << "\n";
  } else {
    ctx.out << to_text(report);
  }
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_enumerate(const Context& ctx, int order, bool iso, bool list) {
  std::uint64_t count = 0;
  Json graphs = Json::array();
  std::string listing;
  enumerate_unicyclic(order, iso, [&](const SignedGraph& g) {
    ++count;
    if (!list) return;
    if (ctx.json) {
      graphs.push_back(format_graph(g));
    } else {
      listing += format_graph(g) + "\n";
    }
  });
  if (ctx.json) {
    Json j{{"order", order}, {"up_to_iso", iso}, {"count", count}};
    if (list) j["graphs"] = graphs;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << listing << "order " << order << (iso ? " classes " : " labeled ") << count << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nullity of signed graphs", "signull"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output");

  std::string path;
  std::string output;
  bool pendant_first = false;
  int length = 0;
  bool unbalanced = false;
  VerifyOptions verify;
  int order = 0;
  bool iso = false;
  bool list = false;

  auto* nullity = app.add_subcommand("nullity", "Structural nullity with certificate");
  nullity->add_option("file", path, "Graph file")->required();
  nullity->add_flag("--pendant-first", pendant_first, "Strip pendant pairs before decomposing");
  auto* oracle = app.add_subcommand("oracle", "Nullity from the exact rank");
  oracle->add_option("file", path, "Graph file")->required();
  auto* balance = app.add_subcommand("balance", "Balance test");
  balance->add_option("file", path, "Graph file")->required();
  auto* normalize = app.add_subcommand("normalize", "Canonical switching representative of a unicyclic graph");
  normalize->add_option("file", path, "Graph file")->required();
  normalize->add_option("-o,--output", output, "Write the normalized graph here");
  auto* classify = app.add_subcommand("classify", "Nullity class and extremal family");
  classify->add_option("file", path, "Graph file")->required();
  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial and closed-form spectrum of a cycle");
  spectrum->add_option("--cycle", length, "Cycle length")->required();
  spectrum->add_flag("--unbalanced", unbalanced, "Unbalanced signing");
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification harness");
  verify_cmd->add_option("--max-n", verify.n_max, "Largest order for the exhaustive sweeps")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random instances")->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads for the labeled sweep")->capture_default_str();
  auto* enumerate = app.add_subcommand("enumerate", "Count connected unicyclic graphs");
  enumerate->add_option("--order", order, "Number of vertices")->required();
  enumerate->add_flag("--iso", iso, "Up to isomorphism");
  enumerate->add_flag("--list", list, "Print the graphs");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const Context ctx{json, out, err};
  try {
    if (nullity->parsed()) return cmd_nullity(ctx, path, pendant_first);
    if (oracle->parsed()) return cmd_oracle(ctx, path);
    if (balance->parsed()) return cmd_balance(ctx, path);
    if (normalize->parsed()) return cmd_normalize(ctx, path, output);
    if (classify->parsed()) return cmd_classify(ctx, path);
    if (spectrum->parsed()) return cmd_spectrum(ctx, length, unbalanced);
    if (verify_cmd->parsed()) return cmd_verify(ctx, verify);
    if (enumerate->parsed()) return cmd_enumerate(ctx, order, iso, list);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace signull::cli
