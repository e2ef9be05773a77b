#include <gtest/gtest.h>

#include <random>

#include "signull/classifier.hpp"
#include "signull/enumeration.hpp"
#include "signull/error.hpp"
#include "signull/exact_linalg.hpp"
#include "signull/nullity_engine.hpp"
#include "signull/verification.hpp"
#include "support.hpp"

namespace signull {
namespace {

using testing::make;

int wrong_table(int length, bool balanced) { return cycle_nullity(length, balanced) == 2 ? 0 : 2; }

TEST(PendantReduce, Examples) {
  const auto p4 = pendant_reduce(path_graph(4));
  EXPECT_EQ(p4.reduced.order(), 0);
  EXPECT_EQ(p4.steps.size(), 2u);
  EXPECT_EQ(p4.steps[0], (step::PendantDelete{0, 1}));

  const auto star = pendant_reduce(star_graph(3));
  EXPECT_EQ(star.reduced.order(), 2);
  EXPECT_EQ(star.reduced.edge_count(), 0);
  EXPECT_EQ(star.steps.size(), 1u);
  EXPECT_EQ(star.original_ids, (std::vector<Vertex>{2, 3}));

  const auto c5 = pendant_reduce(cycle_graph(5));
  EXPECT_EQ(c5.reduced, cycle_graph(5));
  EXPECT_TRUE(c5.steps.empty());
}

TEST(PendantReduce, PreservesNullity) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_graph(1 + i % 12, 0.2, rng);
    const auto r = pendant_reduce(g);
    EXPECT_EQ(nullity_oracle(r.reduced), nullity_oracle(g));
    EXPECT_TRUE(pendant_vertices(r.reduced).empty());
  }
}

TEST(CycleNullity, Table) {
  EXPECT_EQ(cycle_nullity(4, true), 2);
  EXPECT_EQ(cycle_nullity(6, false), 2);
  EXPECT_EQ(cycle_nullity(3, true), 0);
  EXPECT_EQ(cycle_nullity(3, false), 0);
  EXPECT_EQ(cycle_nullity(8, true), 2);
  EXPECT_EQ(cycle_nullity(8, false), 0);
  EXPECT_EQ(cycle_nullity(10, true), 0);
  EXPECT_EQ(cycle_nullity(10, false), 2);
  EXPECT_THROW(cycle_nullity(2, true), InvalidArgument);
}

TEST(ClassifyType, Examples) {
  for (int l = 3; l <= 8; ++l) EXPECT_EQ(classify_type(cycle_graph(l)).type, UnicyclicType::kTypeII);
  const auto u1 = build_family({FamilyTag::kU1, 2, 1});
  const auto t1 = classify_type(u1);
  EXPECT_EQ(t1.type, UnicyclicType::kTypeI);
  EXPECT_EQ(t1.witness, 0);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(classify_type(build_family({FamilyTag::kBalancedU3, r, {}})).type, UnicyclicType::kTypeII);
  EXPECT_THROW(classify_type(path_graph(4)), ShapeError);
}

TEST(NullityUnicyclic, Examples) {
  EXPECT_EQ(nullity_unicyclic(build_family({FamilyTag::kU1, 1, 1})).nullity, 1);
  EXPECT_EQ(nullity_unicyclic(build_family({FamilyTag::kBalancedU3, 1, {}})).nullity, 2);
  EXPECT_EQ(nullity_unicyclic(build_family({FamilyTag::kU4, 1, {}})).nullity, 0);
  EXPECT_THROW(nullity_unicyclic(disjoint_union(cycle_graph(3), cycle_graph(3))), ShapeError);
}

TEST(NullityStructural, Examples) {
  std::mt19937_64 rng(62);
  const auto forest = random_signing(disjoint_union(random_tree(7, rng), random_tree(4, rng)), rng);
  EXPECT_EQ(nullity_structural(forest).nullity, nullity_oracle(forest));
  EXPECT_EQ(nullity_structural(disjoint_union(cycle_graph(3), path_graph(2))).nullity, 0);
  EXPECT_EQ(nullity_structural(SignedGraph(0, {})).nullity, 0);
  const auto bicyclic = make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 2, 1}});
  EXPECT_THROW(nullity_structural(bicyclic), ShapeError);
}

TEST(NullityStructural, BothStrategiesMatchOracleOnMixedForests) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 300; ++i) {
    auto g = random_unicyclic(3 + i % 7, rng);
    if (i % 3) g = disjoint_union(g, random_signing(random_tree(1 + i % 5, rng), rng));
    if (i % 5 == 0) g = disjoint_union(g, random_unicyclic(3 + i % 4, rng));
    const int eta = nullity_oracle(g);
    for (auto strategy : {ReductionStrategy::kDecomposition, ReductionStrategy::kPendantFirst}) {
      const auto r = nullity_structural(g, {strategy});
      EXPECT_EQ(r.nullity, eta);
      EXPECT_TRUE(verify_certificate(g, r.certificate).valid) << verify_certificate(g, r.certificate).reason;
    }
  }
}

TEST(NullityStructural, TamperedTableDisagreesWithOracle) {
  const EngineOptions bad{ReductionStrategy::kDecomposition, &wrong_table};
  int disagreements = 0;
  for (int l = 3; l <= 10; ++l) {
    disagreements += nullity_structural(cycle_graph(l), bad).nullity != nullity_oracle(cycle_graph(l));
  }
  EXPECT_EQ(disagreements, 8);
}

TEST(VerifyCertificate, AcceptsEngineOutput) {
  const auto g = build_family({FamilyTag::kU2, 2, 1}, false);
  EXPECT_TRUE(verify_certificate(g, nullity_structural(g).certificate).valid);
}

TEST(VerifyCertificate, RejectsTamperedContribution) {
  const auto g = cycle_graph(8, true);
  auto cert = nullity_structural(g).certificate;
  for (auto& s : cert.steps) {
    if (auto* c = std::get_if<step::CycleBase>(&s)) c->contribution = 0;
  }
  cert.claimed_nullity = 0;
  const auto v = verify_certificate(g, cert);
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.reason.empty());
}

TEST(VerifyCertificate, RejectsOtherGraph) {
  const auto cert = nullity_structural(cycle_graph(4, true)).certificate;
  EXPECT_FALSE(verify_certificate(cycle_graph(4, false), cert).valid);
  EXPECT_FALSE(verify_certificate(path_graph(4), cert).valid);
}

TEST(VerifyCertificate, RejectsWrongTableCertificates) {
  const EngineOptions bad{ReductionStrategy::kDecomposition, &wrong_table};
  for (int l = 3; l <= 10; ++l) {
    const auto g = cycle_graph(l, l % 2 == 0);
    EXPECT_FALSE(verify_certificate(g, nullity_structural(g, bad).certificate).valid) << l;
  }
}

TEST(VerifyCertificate, RejectsForgedPendantStep) {
  // Deleting a non-pendant pair is not a valid step even if the value fits.
  const auto g = cycle_graph(4, true);
  NullityCertificate cert = nullity_structural(g).certificate;
  cert.steps = {step::Components{1}, step::PendantDelete{0, 1}, step::ForestBase{2, 1, 0}};
  cert.claimed_nullity = 0;
  EXPECT_FALSE(verify_certificate(g, cert).valid);
}

TEST(VerifyCertificate, RejectsMismatchedWitness) {
  // U3(1): no cycle vertex is matched in its pendant tree.
  const auto g = build_family({FamilyTag::kBalancedU3, 1, {}});
  auto cert = nullity_structural(g).certificate;
  cert.steps = {step::Components{1}, step::TypeISplit{0, 1, 1}, step::ForestBase{3, 1, 1}, step::ForestBase{3, 1, 1}};
  cert.claimed_nullity = 2;
  EXPECT_FALSE(verify_certificate(g, cert).valid);
}

TEST(VerifyCertificate, RejectsMutants) {
  std::mt19937_64 rng(64);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_unicyclic(3 + i % 8, rng);
    const auto cert = nullity_structural(g, {i % 2 ? ReductionStrategy::kPendantFirst : ReductionStrategy::kDecomposition}).certificate;
    const auto mutant = mutate_certificate(cert, g, rng);
    EXPECT_NE(mutant, cert);
    EXPECT_FALSE(verify_certificate(g, mutant).valid) << to_text(mutant);
  }
}

}  // namespace
}  // namespace signull
