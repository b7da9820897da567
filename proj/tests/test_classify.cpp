#include <gtest/gtest.h>

#include "cca/catalog.hpp"
#include "cca/classify.hpp"
#include "cca/colour_aut.hpp"
#include "cca/errors.hpp"
#include "support.hpp"

namespace cca {
namespace {

using test::by_label;
using test::make;

TEST(Iota, Examples) {
  EXPECT_TRUE(iota_map(build_group("Z2^3")).is_identity());
  EXPECT_EQ(iota_map(build_group("Z4")), GroupMap(std::vector<Element>{0, 3, 2, 1}));
  const auto Q8 = make("Q8");
  const GroupMap iota = iota_map(*Q8);
  EXPECT_TRUE(is_colour_preserving(complete_cayley(Q8), iota));
  EXPECT_FALSE(is_affine(*Q8, iota));
}

TEST(DicyclicFlip, IsAnAutomorphismFixingA) {
  for (const char* spec : {"Dic(Z6)", "Dic(Z8)", "Q8"}) {
    const FiniteGroup G = build_group(spec);
    const DicyclicWitness w = *is_dicyclic_type(G);
    const GroupMap flip = dicyclic_flip(G, w);
    EXPECT_TRUE(is_group_automorphism(G, flip)) << spec;
    for (Element a : w.A) EXPECT_EQ(flip(a), a);
    EXPECT_EQ(flip(w.q), G.inv(w.q));
  }
  const FiniteGroup Q8 = build_group("Q8");
  DicyclicWitness bad = *is_dicyclic_type(Q8);
  bad.z = 0;
  EXPECT_THROW(dicyclic_flip(Q8, bad), PreconditionError);
}

TEST(PhiI, QuaternionExamples) {
  const FiniteGroup Q8 = build_group("Q8");
  const Ham2Decomposition d = *decompose_hamiltonian_2group(Q8);
  EXPECT_TRUE(phi_I(Q8, d, QuaternionSubset{true, true, true}).is_identity());

  const GroupMap phi_i = phi_I(Q8, d, QuaternionSubset{true, false, false});
  EXPECT_EQ(phi_i, conjugation(Q8, d.i));
  const Element i = d.i, j = d.j, k = d.k, m1 = Q8.mul(i, i);
  EXPECT_EQ(phi_i(m1), m1);
  EXPECT_EQ(phi_i(i), i);
  EXPECT_EQ(phi_i(Q8.inv(i)), Q8.inv(i));
  EXPECT_EQ(phi_i(j), Q8.inv(j));
  EXPECT_EQ(phi_i(k), Q8.inv(k));
  EXPECT_EQ(fixed_set(phi_i), (ElementSet{0, 1, 2, 3}));

  const GroupMap phi_ij = phi_I(Q8, d, QuaternionSubset{true, true, false});
  EXPECT_EQ(phi_ij, compose(phi_I(Q8, d, QuaternionSubset{false, false, true}), phi_I(Q8, d, QuaternionSubset{})));
  EXPECT_FALSE(is_group_automorphism(Q8, phi_ij));
  EXPECT_EQ(phi_I(Q8, d, QuaternionSubset{}), iota_map(Q8));
}

TEST(PhiI, AffineExactlyForOddSubsets) {
  for (const char* spec : {"Q8", "Q8xZ2", "Q8xZ2^2"}) {
    const FiniteGroup G = build_group(spec);
    const Ham2Decomposition d = *decompose_hamiltonian_2group(G);
    for (unsigned bits = 0; bits < 8; ++bits) {
      const QuaternionSubset I = QuaternionSubset::from_bits(bits);
      EXPECT_EQ(is_affine(G, phi_I(G, d, I)).has_value(), I.size() % 2 == 1) << spec << " " << I.to_string();
    }
  }
}

TEST(PhiI, OverlapWithDicyclicFlip) {
  for (const char* spec : {"Q8", "Q8xZ2", "Q8xZ2^2"}) {
    const FiniteGroup G = build_group(spec);
    const Ham2Decomposition d = *decompose_hamiltonian_2group(G);
    std::vector<Element> gens{d.k};
    gens.insert(gens.end(), d.B.begin(), d.B.end());
    const DicyclicWitness w{subgroup_generated(G, gens), G.mul(d.i, d.i), d.i};
    EXPECT_EQ(dicyclic_flip(G, w), phi_I(G, d, QuaternionSubset{false, false, true})) << spec;
  }
}

TEST(FixedSet, Examples) {
  EXPECT_EQ(fixed_set(GroupMap::identity(5)).size(), 5u);
  EXPECT_EQ(fixed_set(iota_map(build_group("Z4"))), (ElementSet{0, 2}));
}

TEST(PredictStabilizer, Examples) {
  const FiniteGroup Z7 = build_group("Z7");
  const CompleteClassification z7 = predict_stabilizer(Z7);
  EXPECT_EQ(z7.kind, StabilizerKind::AbelianInversion);
  EXPECT_EQ(z7.predicted_stabilizer.maps, (std::vector<GroupMap>{GroupMap::identity(7), iota_map(Z7)}));

  const CompleteClassification d12 = predict_stabilizer(build_group("D12"));
  EXPECT_EQ(d12.kind, StabilizerKind::Trivial);
  EXPECT_EQ(d12.predicted_stabilizer.size(), 1u);

  const CompleteClassification q = predict_stabilizer(build_group("Q8xZ2"));
  EXPECT_EQ(q.kind, StabilizerKind::Hamiltonian2Group);
  EXPECT_EQ(q.predicted_stabilizer.size(), 8u);

  EXPECT_EQ(predict_stabilizer(build_group("Dic(Z8)")).kind, StabilizerKind::DicyclicFlip);
  EXPECT_EQ(predict_stabilizer(build_group("Z2^3")).kind, StabilizerKind::Trivial);
  EXPECT_THROW(predict_stabilizer(build_group("Z8"), 4), CapExceeded);
}

TEST(PredictStabilizer, MatchesBruteForceOnCatalog) {
  for (const auto& G : load_catalog(32)) {
    const CompleteClassification c = predict_stabilizer(*G);
    const AutomorphismSet brute = enumerate_stabilizer(complete_cayley(G), AutMode::ColourPreserving);
    EXPECT_EQ(brute.maps, c.predicted_stabilizer.maps) << G->name();
    const std::size_t expected = c.kind == StabilizerKind::Hamiltonian2Group ? 8 : c.kind == StabilizerKind::Trivial ? 1 : 2;
    EXPECT_EQ(c.predicted_stabilizer.size(), expected) << G->name();
  }
}

TEST(PredictStabilizer, MatchesBruteForceBeyondCatalog) {
  for (const char* spec : {"Z7", "Z9", "Z3^2", "D10", "Dic(Z10)", "Z4^2", "Z2xZ4xZ2", "D8xZ2", "Dic(Z4)xZ2", "Q8xZ4"}) {
    const auto G = make(spec);
    const AutomorphismSet brute = enumerate_stabilizer(complete_cayley(G), AutMode::ColourPreserving);
    EXPECT_EQ(brute.maps, predict_stabilizer(*G).predicted_stabilizer.maps) << spec;
  }
}

TEST(Verdict, Examples) {
  const CompleteVerdict q8 = complete_cca_verdict(build_group("Q8"));
  EXPECT_FALSE(q8.cca);
  EXPECT_FALSE(q8.strongly_cca);
  const CompleteVerdict z4z2 = complete_cca_verdict(build_group("Z4xZ2"));
  EXPECT_TRUE(z4z2.cca);
  EXPECT_TRUE(z4z2.strongly_cca);
  const auto q8z3 = make("Q8xZ3");
  const CompleteVerdict v = complete_cca_verdict(*q8z3);
  EXPECT_TRUE(v.cca);
  EXPECT_TRUE(v.strongly_cca);
  const CcaStatus brute = cca_status(complete_cayley(q8z3), {.check_normal = false});
  EXPECT_TRUE(brute.cca);
  EXPECT_TRUE(brute.strongly_cca);
}

TEST(Kind, Names) {
  EXPECT_EQ(to_string(StabilizerKind::Trivial), "trivial");
  EXPECT_EQ(to_string(StabilizerKind::AbelianInversion), "abelian-inversion");
  EXPECT_EQ(to_string(StabilizerKind::DicyclicFlip), "dicyclic-flip");
  EXPECT_EQ(to_string(StabilizerKind::Hamiltonian2Group), "hamiltonian-2-group");
}

}  // namespace
}  // namespace cca
