#include <gtest/gtest.h>

#include "cca/classify.hpp"
#include "cca/colour_aut.hpp"
#include "cca/errors.hpp"
#include "support.hpp"

namespace cca {
namespace {

using test::by_label;
using test::make;

TEST(ColourPreserving, TranslationsAndInversion) {
  for (const char* spec : {"Z5", "D8", "Q8"}) {
    const auto G = make(spec);
    const CayleyGraph K = complete_cayley(G);
    for (Element g = 0; g < G->order(); ++g) EXPECT_TRUE(is_colour_preserving(K, left_translation(*G, g)));
  }
  const auto Z4 = make("Z4");
  EXPECT_TRUE(is_colour_preserving(complete_cayley(Z4), inversion_map(*Z4)));
}

TEST(ColourPreserving, TranspositionOnK5Fails) {
  const CayleyGraph K = complete_cayley(make("Z5"));
  EXPECT_FALSE(is_colour_preserving(K, GroupMap(std::vector<Element>{0, 2, 1, 3, 4})));
}

TEST(ColourPermuting, InducedClassPermutation) {
  const auto G = make("Q8xZ2");
  const CayleyGraph K = complete_cayley(G);
  const auto id = is_colour_permuting(K, GroupMap::identity(G->order()));
  ASSERT_TRUE(id);
  for (std::size_t c = 0; c < id->size(); ++c) EXPECT_EQ((*id)[c], static_cast<int>(c));

  for (const GroupMap& alpha : enumerate_automorphisms(*G).maps) {
    const auto pibar = is_colour_permuting(K, alpha);
    ASSERT_TRUE(pibar);
    for (const ColourClass& c : K.colours())
      EXPECT_EQ((*pibar)[c.id], K.colour_of_element(alpha(c.lo)));
  }
  const GroupMap phi = phi_I(*G, *decompose_hamiltonian_2group(*G), QuaternionSubset{});
  const auto pibar = is_colour_permuting(K, phi);
  ASSERT_TRUE(pibar);
  for (std::size_t c = 0; c < pibar->size(); ++c) EXPECT_EQ((*pibar)[c], static_cast<int>(c));
}

TEST(ColourPermuting, RejectsNonAutomorphism) {
  const CayleyGraph X = build_cayley(make("Z6"), std::vector<Element>{1, 5});
  EXPECT_FALSE(is_colour_permuting(X, GroupMap(std::vector<Element>{0, 2, 1, 3, 4, 5})));
  EXPECT_FALSE(is_graph_automorphism(X, GroupMap(std::vector<Element>{0, 2, 1, 3, 4, 5})));
}

TEST(LocalPermutation, Examples) {
  const auto Z4 = make("Z4");
  const CayleyGraph K = complete_cayley(Z4);
  const LocalPermutation id = local_permutation(K, GroupMap::identity(4), 2);
  for (Element s : K.connection_set()) EXPECT_EQ(id(s), s);
  const LocalPermutation inv = local_permutation(K, inversion_map(*Z4), 0);
  EXPECT_EQ(inv(1), 3u);
  EXPECT_EQ(inv(3), 1u);
  EXPECT_EQ(inv(2), 2u);
  for (Element h = 0; h < 4; ++h)
    for (Element g = 0; g < 4; ++g) {
      const LocalPermutation p = local_permutation(K, left_translation(*Z4, h), g);
      for (Element s : K.connection_set()) EXPECT_EQ(p(s), s);
    }
  EXPECT_THROW(local_permutation(K, GroupMap(std::vector<Element>{0, 2, 1, 3}), 0), PreconditionError);
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(enumerate_stabilizer(complete_cayley(make("Z2^3")), AutMode::ColourPreserving).size(), 1u);
  const auto Q8 = make("Q8");
  const AutomorphismSet q8 = enumerate_stabilizer(complete_cayley(Q8), AutMode::ColourPreserving);
  EXPECT_EQ(q8.size(), 8u);
  const auto d = decompose_hamiltonian_2group(*Q8);
  for (unsigned bits = 0; bits < 8; ++bits)
    EXPECT_TRUE(q8.contains(phi_I(*Q8, *d, QuaternionSubset::from_bits(bits))));

  const auto Z5 = make("Z5");
  const AutomorphismSet z5 = enumerate_stabilizer(complete_cayley(Z5), AutMode::ColourPermuting);
  EXPECT_EQ(z5.maps, enumerate_automorphisms(*Z5).maps);
  EXPECT_EQ(z5.size(), 4u);
  EXPECT_EQ(enumerate_stabilizer(complete_cayley(Q8), AutMode::ColourPermuting).size(), 48u);
}

TEST(Stabilizer, AgreesWithAllPermutationsOracle) {
  for (const char* spec : {"Z4", "Z5", "Z6", "Z2^2", "Q8", "D8", "Z4xZ2"}) {
    const auto G = make(spec);
    const CayleyGraph K = complete_cayley(G);
    std::vector<GroupMap> pres, perm;
    test::for_each_permutation_fixing_zero(G->order(), [&](const GroupMap& phi) {
      if (is_colour_preserving(K, phi)) pres.push_back(phi);
      if (is_colour_permuting(K, phi)) perm.push_back(phi);
    });
    EXPECT_EQ(enumerate_stabilizer(K, AutMode::ColourPreserving).maps, pres) << spec;
    EXPECT_EQ(enumerate_stabilizer(K, AutMode::ColourPermuting).maps, perm) << spec;
  }
}

TEST(Stabilizer, GraphModeOnSparseGraph) {
  // The 6-cycle Cay(Z6, {1, 5}) has the reflection x -> -x as its only nontrivial 1-fixing automorphism.
  const CayleyGraph X = build_cayley(make("Z6"), std::vector<Element>{1, 5});
  const AutomorphismSet a = enumerate_stabilizer(X, AutMode::Graph);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.contains(inversion_map(X.group())));
}

TEST(Stabilizer, VisitorStopsEarly) {
  const CayleyGraph K = complete_cayley(make("Q8"));
  std::size_t seen = 0;
  EXPECT_FALSE(search_stabilizer(K, AutMode::ColourPreserving, [&](const GroupMap&) { return ++seen < 3; }));
  EXPECT_EQ(seen, 3u);
}

TEST(Stabilizer, CapIsEnforced) {
  EXPECT_THROW(enumerate_stabilizer(complete_cayley(make("Q8xZ2")), AutMode::ColourPreserving, 8), CapExceeded);
}

TEST(ConjugateConstruction, Examples) {
  const auto Q8 = make("Q8");
  const CayleyGraph K = complete_cayley(Q8);
  for (Element g = 0; g < 8; ++g)
    for (Element s : K.connection_set()) {
      EXPECT_TRUE(make_colour_preserving_conjugate(K, GroupMap::identity(8), g, s).is_identity());
      for (const GroupMap& alpha : enumerate_automorphisms(*Q8).maps)
        EXPECT_TRUE(make_colour_preserving_conjugate(K, alpha, g, s).is_identity());
    }
  const AutomorphismSet pres = enumerate_stabilizer(K, AutMode::ColourPreserving);
  const Element i = by_label(*Q8, "i");
  for (const GroupMap& phi : enumerate_stabilizer(K, AutMode::ColourPermuting).maps) {
    if (is_group_automorphism(*Q8, phi)) continue;
    const GroupMap psi = make_colour_preserving_conjugate(K, phi, 0, i);
    EXPECT_TRUE(pres.contains(psi));
    EXPECT_EQ(psi(i), i);
  }
}

TEST(ConjugateConstruction, Preconditions) {
  const auto Z5 = make("Z5");
  const CayleyGraph K = complete_cayley(Z5);
  EXPECT_THROW(make_colour_preserving_conjugate(K, left_translation(*Z5, 1), 0, 1), PreconditionError);
  EXPECT_THROW(make_colour_preserving_conjugate(K, GroupMap::identity(5), 0, 0), PreconditionError);
}

TEST(StarSet, Examples) {
  const CayleyGraph K22 = complete_cayley(make("Z2^2"));
  EXPECT_EQ(star_set(K22), K22.connection_set());
  EXPECT_EQ(star_set(complete_cayley(make("Z4"))), (ElementSet{1, 3}));
  EXPECT_TRUE(star_set(complete_cayley(make("Q8"))).empty());
}

TEST(Semiregular, Examples) {
  const auto Z5 = make("Z5");
  const CayleyGraph K = complete_cayley(Z5);
  EXPECT_TRUE(acts_semiregularly_on_S(K, enumerate_stabilizer(K, AutMode::ColourPreserving)));
  const CayleyGraph Q = complete_cayley(make("Q8"));
  EXPECT_FALSE(acts_semiregularly_on_S(Q, enumerate_stabilizer(Q, AutMode::ColourPreserving)));
}

TEST(InvolutionSubgroup, Examples) {
  EXPECT_EQ(involution_subgroup(complete_cayley(make("Z2^2"))).subgroup.size(), 4u);
  EXPECT_EQ(involution_subgroup(complete_cayley(make("Z5"))).subgroup, (ElementSet{0}));
  const InvolutionSubgroup d12 = involution_subgroup(complete_cayley(make("D12")));
  EXPECT_EQ(d12.involutions.size(), 7u);
  EXPECT_EQ(d12.subgroup.size(), 12u);
}

TEST(CcaStatus, Examples) {
  const auto G = make("Z4xZ2");
  const std::vector<Element> S = {by_label(*G, "(1,0)"), by_label(*G, "(3,0)"), by_label(*G, "(0,1)")};
  const CcaStatus example = cca_status(build_cayley(G, S));
  EXPECT_TRUE(example.cca);
  EXPECT_TRUE(example.strongly_cca);

  const auto Q8 = make("Q8");
  const CcaStatus q8 = cca_status(complete_cayley(Q8));
  EXPECT_FALSE(q8.cca);
  EXPECT_FALSE(q8.strongly_cca);
  ASSERT_TRUE(q8.normal.has_value());
  EXPECT_FALSE(*q8.normal);
  EXPECT_NE(std::find(q8.preserving_witnesses.begin(), q8.preserving_witnesses.end(), inversion_map(*Q8)),
            q8.preserving_witnesses.end());
  EXPECT_EQ(q8.preserving_witnesses.size(), 4u);  // the four phi_I with |I| even

  const CcaStatus z6 = cca_status(complete_cayley(make("Z6")), {.check_normal = false});
  EXPECT_TRUE(z6.cca);
  EXPECT_TRUE(z6.strongly_cca);
  EXPECT_FALSE(z6.normal.has_value());
}

TEST(CcaStatus, StronglyImpliesCca) {
  for (const char* spec : {"Z6", "D8", "Dic(Z6)", "Q8xZ3"}) {
    const CcaStatus s = cca_status(complete_cayley(make(spec)), {.check_normal = false});
    EXPECT_TRUE(!s.strongly_cca || s.cca) << spec;
  }
}

}  // namespace
}  // namespace cca
