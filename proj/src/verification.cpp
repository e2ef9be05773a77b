#include "signull/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "signull/classifier.hpp"
#include "signull/enumeration.hpp"
#include "signull/error.hpp"
#include "signull/exact_linalg.hpp"
#include "signull/graph_io.hpp"
#include "signull/matching.hpp"
#include "signull/switching.hpp"

namespace signull {
namespace {

using Clock = std::chrono::steady_clock;

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Sign random_sign(std::mt19937_64& rng) { return uniform(rng, 0, 1) ? Sign::kPositive : Sign::kNegative; }

std::string str(int x) { return std::to_string(x); }

std::string descriptor(const Family& f, bool balanced, int order) {
  std::string out(family_name(f.tag));
  if (f.r) {
    out += "(" + str(*f.r);
    if (f.s) out += "," + str(*f.s);
    out += ")";
  }
  out += balanced ? " balanced" : " unbalanced";
  out += " n=" + str(order);
  return out;
}

// Family lists, instantiated for every order up to n_max.
std::vector<std::string> expected_members(NullityClass target, int n_max) {
  std::vector<std::string> out;
  auto add = [&](const Family& f, bool balanced) {
    const auto g = build_family(f, balanced);
    if (g.order() <= n_max) out.push_back(descriptor(f, balanced, g.order()));
  };
  switch (target) {
    case NullityClass::kNMinus2:
      add({FamilyTag::kBalancedC4, {}, {}}, true);
      break;
    case NullityClass::kNMinus3:
      add({FamilyTag::kC3AnySign, {}, {}}, true);
      add({FamilyTag::kC3AnySign, {}, {}}, false);
      break;
    case NullityClass::kNMinus4:
      add({FamilyTag::kUnbalancedC4, {}, {}}, false);
      add({FamilyTag::kUnbalancedC6, {}, {}}, false);
      for (int r = 1; r <= n_max; ++r) {
        for (int s = 0; s <= r; ++s) {
          for (bool b : {true, false}) {
            add({FamilyTag::kU1, r, s}, b);
            add({FamilyTag::kU2, r, s}, b);
          }
        }
        add({FamilyTag::kBalancedU3, r, std::nullopt}, true);
      }
      break;
    case NullityClass::kNMinus5:
      add({FamilyTag::kC5AnySign, {}, {}}, true);
      add({FamilyTag::kC5AnySign, {}, {}}, false);
      for (int r = 1; r <= n_max; ++r) {
        for (bool b : {true, false}) add({FamilyTag::kU4, r, std::nullopt}, b);
      }
      break;
    case NullityClass::kOther:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += "; ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

bool VerificationReport::passed() const { return failure_count() == 0 && failures.empty(); }

std::uint64_t VerificationReport::failure_count() const {
  std::uint64_t total = 0;
  for (const auto& [id, tally] : checks) total += tally.failures;
  return total;
}

std::uint64_t VerificationReport::failure_count(const std::string& check) const {
  auto it = checks.find(check);
  return it == checks.end() ? 0 : it->second.failures;
}

void VerificationReport::record(const std::string& check, bool ok, const SignedGraph& g,
                                const std::string& expected, const std::string& got) {
  auto& tally = checks[check];
  ++tally.runs;
  ++checks_run;
  if (ok) return;
  ++tally.failures;
  if (tally.failures <= kStoredFailuresPerCheck) failures.push_back({check, format_graph(g), expected, got});
}

void VerificationReport::record(const std::string& check, bool ok, const std::string& graph_text,
                                const std::string& expected, const std::string& got) {
  auto& tally = checks[check];
  ++tally.runs;
  ++checks_run;
  if (ok) return;
  ++tally.failures;
  if (tally.failures <= kStoredFailuresPerCheck) failures.push_back({check, graph_text, expected, got});
}

void VerificationReport::merge(const VerificationReport& other) {
  graphs_generated += other.graphs_generated;
  signings_tested += other.signings_tested;
  checks_run += other.checks_run;
  for (const auto& [id, tally] : other.checks) {
    auto& mine = checks[id];
    const std::uint64_t stored_before = std::min<std::uint64_t>(mine.failures, kStoredFailuresPerCheck);
    mine.runs += tally.runs;
    mine.failures += tally.failures;
    std::uint64_t room = kStoredFailuresPerCheck - stored_before;
    for (const auto& f : other.failures) {
      if (f.check == id && room > 0) {
        failures.push_back(f);
        --room;
      }
    }
  }
  elapsed_seconds += other.elapsed_seconds;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["status"] = report.passed() ? "PASS" : "FAIL";
  j["n_max"] = report.n_max;
  j["seed"] = report.seed;
  j["graphs_generated"] = report.graphs_generated;
  j["signings_tested"] = report.signings_tested;
  j["checks_run"] = report.checks_run;
  auto& checks_json = j["checks"] = nlohmann::ordered_json::object();
  for (const auto& [id, tally] : report.checks) {
    checks_json[id] = {{"runs", tally.runs}, {"failures", tally.failures}};
  }
  auto& failures_json = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures_json.push_back({{"check", f.check}, {"graph", f.graph}, {"expected", f.expected}, {"got", f.got}});
  }
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << (report.passed() ? "PASS" : "FAIL") << "  n_max=" << report.n_max << " seed=" << report.seed << "\n";
  os << "graphs " << report.graphs_generated << ", signings " << report.signings_tested << ", checks "
     << report.checks_run << ", " << report.elapsed_seconds << " s\n";
  for (const auto& [id, tally] : report.checks) {
    os << "  " << (tally.failures ? "FAIL " : "ok   ") << id << ": " << tally.runs << " run";
    if (tally.failures) os << ", " << tally.failures << " failed";
    os << "\n";
  }
  for (const auto& f : report.failures) {
    os << "failure [" << f.check << "] expected " << f.expected << ", got " << f.got << "\n" << f.graph;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Random instances

SignedGraph random_graph(int order, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<SignedEdge> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (coin(rng)) edges.push_back({u, v, random_sign(rng)});
    }
  }
  return SignedGraph(order, std::move(edges));
}

SignedGraph random_tree(int order, std::mt19937_64& rng) {
  std::vector<int> seq(std::max(order - 2, 0));
  for (int& x : seq) x = uniform(rng, 0, order - 1);
  return prufer_decode(order, seq);
}

SignedGraph random_signing(const SignedGraph& g, std::mt19937_64& rng) {
  std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = random_sign(rng);
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph random_unicyclic(int order, std::mt19937_64& rng) {
  const auto tree = random_tree(order, rng);
  std::vector<std::pair<Vertex, Vertex>> gaps;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (!tree.has_edge(u, v)) gaps.emplace_back(u, v);
    }
  }
  const auto [a, b] = gaps[uniform(rng, 0, static_cast<int>(gaps.size()) - 1)];
  std::vector<SignedEdge> edges(tree.edges().begin(), tree.edges().end());
  edges.push_back({a, b, Sign::kPositive});
  return random_signing(SignedGraph(order, std::move(edges)), rng);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

void sweep_one(const SignedGraph& underlying, const EngineOptions& engine, VerificationReport& report) {
  ++report.graphs_generated;
  const auto variants = signed_variants(underlying);
  const auto type = classify_type(variants.balanced);
  int structural[2] = {0, 0};
  int index = 0;
  for (const SignedGraph* g : {&variants.balanced, &variants.unbalanced}) {
    ++report.signings_tested;
    const auto result = nullity_structural(*g, engine);
    const int eta = nullity_oracle(*g);
    structural[index++] = result.nullity;
    report.record(checks::kOracleEquivalence, result.nullity == eta, *g, str(eta), str(result.nullity));
    const auto verdict = verify_certificate(*g, result.certificate);
    report.record(checks::kCertificate, verdict.valid, *g, "valid", verdict.reason);
    if (type.type == UnicyclicType::kTypeII) {
      const auto& cycle = type.cycle;
      const bool balanced = cycle_sign(*g, cycle) == Sign::kPositive;
      const int rhs = nullity_oracle(delete_vertices(*g, cycle.vertices).graph) + cycle_nullity(cycle.length(), balanced);
      report.record(checks::kTypeIIIdentity, eta == rhs, *g, str(eta), str(rhs));
    }
    const auto family = recognize_family(*g);
    const auto label = nullity_class(g->order(), eta);
    report.record(checks::kClassificationLabeled, expected_class(family.tag) == label, *g,
                  std::string(class_label(expected_class(family.tag))), std::string(class_label(label)));
  }
  if (type.type == UnicyclicType::kTypeI) {
    report.record(checks::kTypeISignIndependence, structural[0] == structural[1], variants.unbalanced,
                  str(structural[0]), str(structural[1]));
  }
}

}  // namespace

VerificationReport check_unicyclic_sweep(int n_lo, int n_hi, const EngineOptions& engine, int threads) {
  const auto start = Clock::now();
  VerificationReport total;
  total.n_max = n_hi;
  threads = std::max(threads, 1);
  for (int n = std::max(n_lo, 3); n <= n_hi; ++n) {
    const std::uint64_t trees = labeled_tree_count(n);
    constexpr std::uint64_t kChunks = 64;
    const std::uint64_t chunk = (trees + kChunks - 1) / kChunks;
    std::vector<VerificationReport> parts(kChunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (std::uint64_t c = next++; c < kChunks; c = next++) {
        enumerate_labeled_unicyclic_range(n, c * chunk, (c + 1) * chunk,
                                          [&](const SignedGraph& g) { sweep_one(g, engine, parts[c]); });
      }
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (const auto& p : parts) total.merge(p);
  }
  total.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return total;
}

VerificationReport check_classification(int n_max, const EngineOptions& engine) {
  const auto start = Clock::now();
  VerificationReport report;
  report.n_max = n_max;
  const NullityClass targets[] = {NullityClass::kNMinus2, NullityClass::kNMinus3, NullityClass::kNMinus4,
                                  NullityClass::kNMinus5};
  const char* ids[] = {checks::kClassN2, checks::kClassN3, checks::kClassN4, checks::kClassN5};
  std::vector<std::string> observed[4];
  for (int n = 3; n <= n_max; ++n) {
    for (const auto& underlying : unicyclic_classes(n)) {
      ++report.graphs_generated;
      const auto variants = signed_variants(underlying);
      for (const SignedGraph* g : {&variants.balanced, &variants.unbalanced}) {
        ++report.signings_tested;
        const int eta = nullity_oracle(*g);
        const int structural = nullity_structural(*g, engine).nullity;
        report.record(checks::kOracleEquivalence, structural == eta, *g, str(eta), str(structural));
        const auto label = nullity_class(n, eta);
        const auto family = recognize_family(*g);
        const bool balanced = find_cycle(*g)->sign == Sign::kPositive;
        for (int t = 0; t < 4; ++t) {
          const bool in_class = label == targets[t];
          const bool in_list = expected_class(family.tag) == targets[t];
          report.record(ids[t], in_class == in_list, *g, in_list ? "in class" : "not in class",
                        "nullity " + str(eta) + ", family " + std::string(family_name(family.tag)));
          if (in_class) observed[t].push_back(descriptor(family, balanced, n));
        }
      }
    }
  }
  // Solution sets against the family lists.
  for (int t = 0; t < 4; ++t) {
    std::sort(observed[t].begin(), observed[t].end());
    const auto expected = expected_members(targets[t], n_max);
    report.record(ids[t], observed[t] == expected, "", join(expected), join(observed[t]));
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerificationReport check_tree_formula(int n_max, int signings, std::uint64_t seed) {
  const auto start = Clock::now();
  VerificationReport report;
  report.n_max = n_max;
  report.seed = seed;
  auto rng = rng_for(seed, 0x7472656573ULL);
  for (int n = 1; n <= n_max; ++n) {
    enumerate_trees(n, [&](const SignedGraph& tree) {
      ++report.graphs_generated;
      for (int i = 0; i < signings; ++i) {
        ++report.signings_tested;
        const auto g = random_signing(tree, rng);
        const int formula = tree_nullity(g);
        const int eta = nullity_oracle(g);
        report.record(checks::kTreeFormula, formula == eta, g, str(eta), str(formula));
      }
    });
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerificationReport check_pendant_deletion(int instances, std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  auto rng = rng_for(seed, 0x70656e64ULL);
  for (int i = 0; i < instances; ++i) {
    const int n = uniform(rng, 2, 12);
    const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    auto base = random_graph(n - 1, p, rng);
    std::vector<SignedEdge> edges(base.edges().begin(), base.edges().end());
    edges.push_back({uniform(rng, 0, n - 2), n - 1, random_sign(rng)});
    std::vector<Vertex> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto g = permute(SignedGraph(n, std::move(edges)), perm);
    const auto pendants = pendant_vertices(g);
    const Vertex u = pendants[uniform(rng, 0, static_cast<int>(pendants.size()) - 1)];
    const Vertex w = g.neighbors(u)[0].vertex;
    const Vertex removed[] = {u, w};
    const int before = nullity_oracle(g);
    const int after = nullity_oracle(delete_vertices(g, removed).graph);
    ++report.graphs_generated;
    report.record(checks::kPendantDeletion, before == after, g, str(before), str(after));
  }
  return report;
}

VerificationReport check_joining(int instances, bool matched, std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  auto rng = rng_for(seed, matched ? 0x6a6f696e31ULL : 0x6a6f696e32ULL);
  const char* id = matched ? checks::kMatchedJoining : checks::kMismatchedJoining;
  int done = 0;
  while (done < instances) {
    const auto tree = random_signing(random_tree(uniform(rng, matched ? 2 : 1, 8), rng), rng);
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < tree.order(); ++v) {
      if (is_matched_in_tree(tree, v) == matched) candidates.push_back(v);
    }
    if (candidates.empty()) continue;  // e.g. trees with a perfect matching have no mismatched vertex
    const Vertex u = candidates[uniform(rng, 0, static_cast<int>(candidates.size()) - 1)];
    const int m = uniform(rng, 1, 6);
    const auto partner = random_graph(m, std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng);
    const int k = uniform(rng, 1, m);
    std::vector<Vertex> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Vertex> targets(pool.begin(), pool.begin() + k);
    std::vector<Sign> signs(k);
    for (auto& s : signs) s = random_sign(rng);
    const auto joined = k_joining(tree, u, partner, targets, signs);
    const int lhs = nullity_oracle(joined);
    int rhs;
    if (matched) {
      rhs = nullity_oracle(tree) + nullity_oracle(partner);
    } else {
      std::vector<Vertex> keep{u};
      for (int i = 0; i < m; ++i) keep.push_back(tree.order() + i);
      rhs = nullity_oracle(tree) + nullity_oracle(induced_subgraph(joined, keep).graph) - 1;
    }
    ++report.graphs_generated;
    report.record(id, lhs == rhs, joined, str(rhs), str(lhs));
    ++done;
  }
  return report;
}

VerificationReport check_switching_invariance(int instances, std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  auto rng = rng_for(seed, 0x7377697463ULL);
  for (int i = 0; i < instances; ++i) {
    const int n = uniform(rng, 1, 12);
    const auto g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.8)(rng), rng);
    SwitchingFunction theta{std::vector<Sign>(n)};
    for (auto& s : theta.theta) s = random_sign(rng);
    const int before = nullity_oracle(g);
    const int after = nullity_oracle(apply_switching(g, theta));
    ++report.graphs_generated;
    report.record(checks::kSwitchingInvariance, before == after, g, str(before), str(after));
  }
  return report;
}

VerificationReport check_cycle_nullity(int l_max, const EngineOptions& engine) {
  VerificationReport report;
  for (int l = 3; l <= l_max; ++l) {
    for (bool balanced : {true, false}) {
      const auto g = cycle_graph(l, balanced);
      const int table = engine.cycle_table(l, balanced);
      const int eta = nullity_oracle(g);
      ++report.graphs_generated;
      report.record(checks::kCycleNullity, table == eta, g, str(eta), str(table));
    }
  }
  return report;
}

VerificationReport check_cycle_spectrum(int l_max, bool include_balanced, double tolerance) {
  VerificationReport report;
  for (int l = 3; l <= l_max; ++l) {
    for (bool balanced : {false, true}) {
      if (balanced && !include_balanced) continue;
      const auto g = cycle_graph(l, balanced);
      const auto poly = char_poly(adjacency_matrix(g));
      ++report.graphs_generated;
      long double worst = 0;
      for (double lambda : cycle_eigenvalues(l, balanced)) {
        worst = std::max(worst, std::fabs(poly.evaluate(lambda)));
      }
      std::ostringstream got;
      got << "max |p(lambda)| = " << static_cast<double>(worst);
      report.record(checks::kCycleSpectrum, worst < tolerance, g, "< " + std::to_string(tolerance), got.str());
      const int eta = nullity_oracle(g);
      report.record(checks::kCycleSpectrum, poly.zero_root_multiplicity() == eta, g, "zero-root multiplicity " + str(eta),
                    str(poly.zero_root_multiplicity()));
    }
  }
  return report;
}

NullityCertificate mutate_certificate(const NullityCertificate& cert, const SignedGraph& g, std::mt19937_64& rng) {
  NullityCertificate out = cert;
  // A components step with count 1 on a connected part is a no-op, so it
  // is never dropped or duplicated.
  auto is_noop = [](const CertificateStep& s) {
    auto* c = std::get_if<step::Components>(&s);
    return c && c->count == 1;
  };
  std::vector<std::size_t> droppable;
  for (std::size_t i = 0; i < out.steps.size(); ++i) {
    if (!is_noop(out.steps[i])) droppable.push_back(i);
  }
  const int delta = uniform(rng, 0, 1) ? uniform(rng, 1, 3) : -uniform(rng, 1, 3);
  while (true) {
    switch (uniform(rng, 0, 7)) {
      case 0:
        out.claimed_nullity += delta;
        return out;
      case 1: {  // numeric field of a random step
        auto& s = out.steps[uniform(rng, 0, static_cast<int>(out.steps.size()) - 1)];
        if (auto* c = std::get_if<step::Components>(&s)) c->count += delta;
        if (auto* t = std::get_if<step::TypeISplit>(&s)) (uniform(rng, 0, 1) ? t->tree_nullity : t->rest_nullity) += delta;
        if (auto* t = std::get_if<step::TypeIIDecompose>(&s)) {
          t->branch_nullity[uniform(rng, 0, static_cast<int>(t->branch_nullity.size()) - 1)] += delta;
        }
        if (auto* c = std::get_if<step::CycleBase>(&s)) c->contribution += delta;
        if (auto* f = std::get_if<step::ForestBase>(&s)) (uniform(rng, 0, 1) ? f->matching_number : f->contribution) += delta;
        if (std::holds_alternative<step::PendantDelete>(s)) continue;
        return out;
      }
      case 2:
        for (auto& s : out.steps) {
          if (auto* c = std::get_if<step::CycleBase>(&s)) {
            c->balanced = !c->balanced;
            return out;
          }
        }
        continue;
      case 3:
        if (droppable.empty()) continue;
        out.steps.erase(out.steps.begin() + droppable[uniform(rng, 0, static_cast<int>(droppable.size()) - 1)]);
        return out;
      case 4: {
        if (droppable.empty()) continue;
        const auto i = droppable[uniform(rng, 0, static_cast<int>(droppable.size()) - 1)];
        out.steps.insert(out.steps.begin() + i, out.steps[i]);
        return out;
      }
      case 5:
        for (auto& s : out.steps) {
          if (auto* t = std::get_if<step::TypeISplit>(&s)) {
            // Move the witness off the cycle.
            const auto cycle = find_cycle(g);
            std::vector<Vertex> off;
            for (Vertex v = 0; v < g.order(); ++v) {
              if (!cycle || !cycle->contains(v)) off.push_back(v);
            }
            if (off.empty()) break;
            t->witness = off[uniform(rng, 0, static_cast<int>(off.size()) - 1)];
            return out;
          }
        }
        continue;
      case 6:
        out.digest ^= std::uint64_t{1} << uniform(rng, 0, 63);
        return out;
      case 7:
        out.order += delta;
        return out;
    }
  }
}

VerificationReport check_certificate_mutations(int instances, std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  auto rng = rng_for(seed, 0x6d757461ULL);
  for (int i = 0; i < instances; ++i) {
    const auto g = random_unicyclic(uniform(rng, 3, 9), rng);
    EngineOptions engine;
    if (uniform(rng, 0, 1)) engine.strategy = ReductionStrategy::kPendantFirst;
    const auto cert = nullity_structural(g, engine).certificate;
    const auto mutant = mutate_certificate(cert, g, rng);
    const auto verdict = verify_certificate(g, mutant);
    ++report.graphs_generated;
    report.record(checks::kCertificateMutation, !verdict.valid && mutant != cert, g, "rejected",
                  verdict.valid ? "accepted:\n" + to_text(mutant) : verdict.reason);
  }
  return report;
}

VerificationReport verify_all(const VerifyOptions& options) {
  if (options.n_max > kMaxLabeledUnicyclicOrder) {
    throw InvalidArgument("verify_all supports n_max <= " + str(kMaxLabeledUnicyclicOrder));
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.merge(check_unicyclic_sweep(3, options.n_max, options.engine, options.threads));
  report.merge(check_classification(options.n_max, options.engine));
  report.merge(check_joining(options.joining_instances, true, options.seed));
  report.merge(check_joining(options.joining_instances, false, options.seed));
  report.merge(check_pendant_deletion(options.pendant_instances, options.seed));
  report.merge(check_switching_invariance(options.switching_instances, options.seed));
  report.merge(check_cycle_nullity(options.cycle_length_max, options.engine));
  report.merge(check_cycle_spectrum(options.cycle_length_max, true));
  report.merge(check_tree_formula(options.n_max, options.tree_signings, options.seed));
  report.merge(check_certificate_mutations(options.mutation_instances, options.seed));
  report.n_max = options.n_max;
  report.seed = options.seed;
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace signull
