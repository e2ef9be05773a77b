#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "signull/certificate.hpp"
#include "signull/nullity_engine.hpp"
#include "signull/signed_graph.hpp"

namespace signull {

struct Failure {
  std::string check;
  std::string graph;  // graph file text, replayable with the CLI
  std::string expected;
  std::string got;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckTally {
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct VerificationReport {
  int n_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t graphs_generated = 0;
  std::uint64_t signings_tested = 0;
  std::uint64_t checks_run = 0;
  std::map<std::string, CheckTally> checks;
  // At most kStoredFailuresPerCheck per check are kept; tallies count all.
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;

  static constexpr std::size_t kStoredFailuresPerCheck = 20;

  bool passed() const;
  std::uint64_t failure_count() const;
  std::uint64_t failure_count(const std::string& check) const;

  // Records one evaluation of `check`; stores a failure entry when !ok.
  void record(const std::string& check, bool ok, const SignedGraph& g, const std::string& expected,
              const std::string& got);
  void record(const std::string& check, bool ok, const std::string& graph_text, const std::string& expected,
              const std::string& got);

  // Commutative up to failure ordering; callers merge in a fixed order.
  void merge(const VerificationReport& other);
};

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true);
std::string to_text(const VerificationReport& report);

struct VerifyOptions {
  int n_max = 6;
  std::uint64_t seed = 7;
  int threads = 1;
  int pendant_instances = 1000;
  int joining_instances = 500;
  int switching_instances = 1000;
  int tree_signings = 3;
  int mutation_instances = 100;
  int cycle_length_max = 12;
  EngineOptions engine;
};

// Check ids used in reports.
namespace checks {
inline constexpr const char* kOracleEquivalence = "oracle-equivalence";
inline constexpr const char* kCertificate = "certificate";
inline constexpr const char* kTypeIIIdentity = "type2-identity";
inline constexpr const char* kTypeISignIndependence = "type1-sign-independence";
inline constexpr const char* kClassificationLabeled = "classification-labeled";
inline constexpr const char* kClassN2 = "classification-n-2";
inline constexpr const char* kClassN3 = "classification-n-3";
inline constexpr const char* kClassN4 = "classification-n-4";
inline constexpr const char* kClassN5 = "classification-n-5";
inline constexpr const char* kTreeFormula = "tree-formula";
inline constexpr const char* kPendantDeletion = "pendant-deletion";
inline constexpr const char* kMatchedJoining = "matched-joining";
inline constexpr const char* kMismatchedJoining = "mismatched-joining";
inline constexpr const char* kSwitchingInvariance = "switching-invariance";
inline constexpr const char* kCycleNullity = "cycle-nullity";
inline constexpr const char* kCycleSpectrum = "cycle-spectrum";
inline constexpr const char* kCertificateMutation = "certificate-mutation";
}  // namespace checks

// (a) All labeled unicyclic graphs with n_lo <= n <= n_hi, both switching
// classes: structural vs oracle, certificate replay, Type II identity,
// Type I sign independence, labeled classification consistency.
VerificationReport check_unicyclic_sweep(int n_lo, int n_hi, const EngineOptions& engine, int threads = 1);

// (b) Isomorphism classes up to n_max, both switching classes, nullity by
// the oracle. Per class label X in {n-2..n-5}: the set of graphs with
// nullity n - X must equal the family list, compared both per
// graph and as sets of (family, parameters, balance, order).
VerificationReport check_classification(int n_max, const EngineOptions& engine);

// Every labeled tree with n <= n_max, `signings` random signings each.
VerificationReport check_tree_formula(int n_max, int signings, std::uint64_t seed);

VerificationReport check_pendant_deletion(int instances, std::uint64_t seed);
VerificationReport check_joining(int instances, bool matched, std::uint64_t seed);
VerificationReport check_switching_invariance(int instances, std::uint64_t seed);

// cycle table vs oracle for 3 <= l <= l_max, both classes.
VerificationReport check_cycle_nullity(int l_max, const EngineOptions& engine);
// |p(lambda)| < tolerance for the closed-form eigenvalues of C_l, and the
// zero-root multiplicity of p equals the oracle nullity.
VerificationReport check_cycle_spectrum(int l_max, bool include_balanced, double tolerance = 1e-9);

// Certificates for random unicyclic graphs, each mutated once; every
// mutant must be rejected.
VerificationReport check_certificate_mutations(int instances, std::uint64_t seed);

// Returns a certificate that differs from `cert` in a way no valid
// derivation for `g` can match.
NullityCertificate mutate_certificate(const NullityCertificate& cert, const SignedGraph& g, std::mt19937_64& rng);

// Everything above with the option values. Deterministic given the seed.
VerificationReport verify_all(const VerifyOptions& options);

// Random helpers shared with tests.
SignedGraph random_graph(int order, double edge_probability, std::mt19937_64& rng);
SignedGraph random_tree(int order, std::mt19937_64& rng);
SignedGraph random_signing(const SignedGraph& g, std::mt19937_64& rng);
SignedGraph random_unicyclic(int order, std::mt19937_64& rng);

}  // namespace signull
