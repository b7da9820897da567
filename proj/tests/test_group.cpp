#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "cca/catalog.hpp"
#include "cca/errors.hpp"
#include "cca/group.hpp"
#include "support.hpp"

namespace cca {
namespace {

using test::by_label;

void expect_group_axioms(const FiniteGroup& G) {
  const std::size_t n = G.order();
  for (Element a = 0; a < n; ++a) {
    std::set<Element> row, col;
    for (Element b = 0; b < n; ++b) {
      row.insert(G.mul(a, b));
      col.insert(G.mul(b, a));
      for (Element c = 0; c < n; ++c) ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    }
    ASSERT_EQ(row.size(), n);
    ASSERT_EQ(col.size(), n);
    ASSERT_EQ(G.mul(0, a), a);
    ASSERT_EQ(G.mul(a, 0), a);
    ASSERT_EQ(G.mul(a, G.inv(a)), 0u);
    ASSERT_EQ(G.mul(G.inv(a), a), 0u);
  }
}

TEST(GroupConstruction, CyclicZ4) {
  const FiniteGroup G = build_group("Z4");
  EXPECT_EQ(G.order(), 4u);
  EXPECT_EQ(FiniteGroup::identity(), 0u);
  EXPECT_TRUE(G.is_abelian());
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) EXPECT_EQ(G.mul(a, b), (a + b) % 4);
  EXPECT_EQ(G.element_order(1), 4u);
  EXPECT_EQ(G.element_order(2), 2u);
}

TEST(GroupConstruction, Q8xZ2HasCentreOfOrderFour) {
  const FiniteGroup G = build_group("Q8xZ2");
  ASSERT_EQ(G.order(), 16u);
  std::size_t central = 0;
  for (Element x = 0; x < G.order(); ++x) {
    bool commutes = true;
    for (Element y = 0; y < G.order(); ++y) commutes = commutes && G.mul(x, y) == G.mul(y, x);
    central += commutes ? 1 : 0;
  }
  EXPECT_EQ(central, 4u);
  EXPECT_EQ(centre(G).size(), 4u);
}

TEST(GroupConstruction, D12IsDihedralOfOrder12) {
  const FiniteGroup G = build_group("D12");
  ASSERT_EQ(G.order(), 12u);
  EXPECT_FALSE(G.is_abelian());
  const Element r = by_label(G, "r"), s = by_label(G, "s");
  EXPECT_EQ(G.element_order(r), 6u);
  EXPECT_EQ(G.element_order(s), 2u);
  EXPECT_EQ(G.mul(G.mul(s, r), s), G.inv(r));
  std::size_t involutions = 0;
  for (Element x = 0; x < G.order(); ++x) involutions += G.element_order(x) == 2 ? 1 : 0;
  EXPECT_EQ(involutions, 7u);
}

TEST(GroupConstruction, QuaternionRelations) {
  const FiniteGroup G = build_group("Q8");
  const Element i = by_label(G, "i"), j = by_label(G, "j"), k = by_label(G, "k"), m1 = by_label(G, "-1");
  EXPECT_EQ(G.mul(i, i), m1);
  EXPECT_EQ(G.mul(j, j), m1);
  EXPECT_EQ(G.mul(k, k), m1);
  EXPECT_EQ(G.mul(i, j), k);
  EXPECT_EQ(G.mul(j, i), G.inv(k));
}

TEST(GroupConstruction, EveryCatalogGroupSatisfiesTheAxioms) {
  for (const auto& G : load_catalog(64)) {
    SCOPED_TRACE(G->name());
    expect_group_axioms(*G);
  }
  expect_group_axioms(build_group("Z4xZ4xZ4"));
  expect_group_axioms(build_group("Dic(Z16)"));
  expect_group_axioms(build_group("D8xZ2^2"));
}

TEST(GroupConstruction, ExponentAndProductOrders) {
  EXPECT_EQ(build_group("Z2^3").order(), 8u);
  EXPECT_EQ(build_group("Q8xZ2^2").order(), 32u);
  EXPECT_EQ(build_group("Dic(Z6)").order(), 12u);
  EXPECT_EQ(build_group("Z4xZ2").name(), "Z4xZ2");
}

TEST(GroupConstruction, RejectsMalformedSpecs) {
  for (const char* bad : {"", "Z", "Z0", "D5", "D2", "Q9", "Dic(Z5)", "Dic(Z4", "Z4x", "Z4*Z2", "Z2^0", "z4"}) {
    EXPECT_THROW(build_group(bad), ParseError) << bad;
  }
}

TEST(GroupConstruction, OrderCap) {
  EXPECT_THROW(build_group("Z65"), CapExceeded);
  EXPECT_THROW(build_group("Q8xZ2^4"), CapExceeded);
  EXPECT_NO_THROW(build_group("Q8xZ2^3"));
  EXPECT_THROW(build_group("Z8", 4), CapExceeded);
  EXPECT_EQ(build_group("Z100", 100).order(), 100u);
}

TEST(GroupConstruction, CapFromEnvironment) {
  ::setenv("CCA_MAX_ORDER", "128", 1);
  EXPECT_EQ(max_order_from_env(), 128u);
  ::setenv("CCA_MAX_ORDER", "junk", 1);
  EXPECT_EQ(max_order_from_env(), kDefaultMaxOrder);
  ::unsetenv("CCA_MAX_ORDER");
  EXPECT_EQ(max_order_from_env(), kDefaultMaxOrder);
}

TEST(GroupConstruction, RejectsNonAssociativeTable) {
  // A Latin square with identity 0 that is not a group (the smallest is of order 5).
  std::vector<Element> table = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup("loop", 5, table), PreconditionError);
  std::vector<Element> not_latin = {0, 1, 1, 1};
  EXPECT_THROW(FiniteGroup("bad", 2, not_latin), PreconditionError);
}

TEST(SubgroupGenerated, Examples) {
  const FiniteGroup Z6 = build_group("Z6");
  EXPECT_EQ(subgroup_generated(Z6, std::vector<Element>{2}), (ElementSet{0, 2, 4}));
  EXPECT_EQ(subgroup_generated(Z6, std::vector<Element>{}), (ElementSet{0}));
  const FiniteGroup Q8 = build_group("Q8");
  const ElementSet I = subgroup_generated(Q8, std::vector<Element>{by_label(Q8, "i")});
  EXPECT_EQ(I.size(), 4u);
  EXPECT_EQ(subgroup_generated(Q8, set_complement(Q8, I)).size(), 8u);
}

TEST(Centralizer, Examples) {
  const FiniteGroup Q8 = build_group("Q8");
  EXPECT_EQ(centre(Q8), (ElementSet{0, by_label(Q8, "-1")}));
  const FiniteGroup Z8 = build_group("Z8");
  EXPECT_EQ(centre(Z8).size(), 8u);
  const FiniteGroup D12 = build_group("D12");
  const ElementSet C = centralizer(D12, std::vector<Element>{by_label(D12, "r")});
  EXPECT_EQ(C.size(), 6u);
  EXPECT_EQ(C, subgroup_generated(D12, std::vector<Element>{by_label(D12, "r")}));
}

TEST(Automorphisms, CountsMatchBruteForce) {
  for (const char* spec : {"Z4", "Q8", "Z2^2", "Z5", "D8", "Z2^3"}) {
    const FiniteGroup G = build_group(spec);
    const AutomorphismSet aut = enumerate_automorphisms(G);
    EXPECT_EQ(aut.maps, test::brute_force_automorphisms(G)) << spec;
  }
  EXPECT_EQ(enumerate_automorphisms(build_group("Z4")).size(), 2u);
  EXPECT_EQ(enumerate_automorphisms(build_group("Q8")).size(), 24u);
  EXPECT_EQ(enumerate_automorphisms(build_group("Z2^2")).size(), 6u);
  EXPECT_EQ(enumerate_automorphisms(build_group("Z2^3")).size(), 168u);
}

TEST(Affine, Examples) {
  const FiniteGroup Z5 = build_group("Z5");
  const auto id = is_affine(Z5, GroupMap::identity(5));
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->alpha.is_identity());
  EXPECT_EQ(id->g, 0u);
  EXPECT_TRUE(is_affine(Z5, inversion_map(Z5)));
  const FiniteGroup Q8 = build_group("Q8");
  EXPECT_FALSE(is_affine(Q8, inversion_map(Q8)));
  const Element i = by_label(Q8, "i");
  const auto w = is_affine(Q8, compose(conjugation(Q8, i), left_translation(Q8, i)));
  ASSERT_TRUE(w);
  for (Element x = 0; x < 8; ++x) EXPECT_EQ(w->alpha(Q8.mul(w->g, x)), Q8.mul(i, Q8.mul(Q8.mul(i, x), Q8.inv(i))));
}

TEST(Dicyclic, Recognizer) {
  const FiniteGroup Q8 = build_group("Q8");
  const auto w = is_dicyclic_type(Q8);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_valid_dicyclic_witness(Q8, *w));
  EXPECT_EQ(w->z, by_label(Q8, "-1"));

  EXPECT_FALSE(is_dicyclic_type(build_group("Z6")));
  EXPECT_FALSE(is_dicyclic_type(build_group("D12")));
  EXPECT_FALSE(is_dicyclic_type(build_group("Z2^3")));

  const FiniteGroup Q16 = build_group("Dic(Z8)");
  const auto w16 = is_dicyclic_type(Q16);
  ASSERT_TRUE(w16);
  EXPECT_EQ(w16->A.size(), 8u);
  EXPECT_EQ(subgroup_generated(Q16, std::vector<Element>{1}), w16->A);  // the cyclic Z8 copy
  std::size_t involutions = 0;
  for (Element x = 0; x < Q16.order(); ++x) involutions += Q16.element_order(x) == 2 ? 1 : 0;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(Q16.element_order(w16->z), 2u);
  EXPECT_EQ(Q16.mul(w16->q, w16->q), w16->z);
}

TEST(Dicyclic, RejectsBadWitness) {
  const FiniteGroup Q8 = build_group("Q8");
  DicyclicWitness w = *is_dicyclic_type(Q8);
  w.q = w.A.back();
  EXPECT_FALSE(is_valid_dicyclic_witness(Q8, w));
}

TEST(Hamiltonian2Group, Recognizer) {
  const FiniteGroup Q8 = build_group("Q8");
  const auto d = decompose_hamiltonian_2group(Q8);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->B, (ElementSet{0}));
  EXPECT_EQ(d->i, by_label(Q8, "i"));
  EXPECT_EQ(d->j, by_label(Q8, "j"));
  EXPECT_EQ(d->k, by_label(Q8, "k"));

  const FiniteGroup G = build_group("Q8xZ2");
  const auto d2 = decompose_hamiltonian_2group(G);
  ASSERT_TRUE(d2);
  EXPECT_EQ(d2->B.size(), 2u);
  EXPECT_TRUE(is_valid_ham2_decomposition(G, *d2));

  EXPECT_FALSE(decompose_hamiltonian_2group(build_group("Q8xZ3")));
  EXPECT_FALSE(decompose_hamiltonian_2group(build_group("Q8xZ4")));
  EXPECT_FALSE(decompose_hamiltonian_2group(build_group("Dic(Z8)")));
  EXPECT_FALSE(decompose_hamiltonian_2group(build_group("Z2^3")));
}

TEST(Hamiltonian2Group, ReconstructsTheGroup) {
  for (const char* spec : {"Q8", "Q8xZ2", "Q8xZ2^2", "Z2xQ8"}) {
    const FiniteGroup G = build_group(spec);
    const auto d = decompose_hamiltonian_2group(G);
    ASSERT_TRUE(d) << spec;
    const ElementSet Q = subgroup_generated(G, std::vector<Element>{d->i, d->j});
    EXPECT_EQ(product_set(G, Q, d->B), product_set(G, d->B, Q));
    std::set<Element> image;
    for (Element q : Q)
      for (Element b : d->B) image.insert(G.mul(q, b));
    EXPECT_EQ(image.size(), G.order()) << spec;
  }
}

TEST(Subgroups, ComplementOfProperSubgroupGenerates) {
  for (const auto& G : load_catalog(16)) {
    for (const ElementSet& H : all_subgroups(*G)) {
      EXPECT_TRUE(is_subgroup(*G, H));
      if (H.size() == G->order()) continue;
      EXPECT_EQ(subgroup_generated(*G, set_complement(*G, H)).size(), G->order()) << G->name();
    }
  }
}

TEST(Subgroups, CountsMatchKnownLattices) {
  EXPECT_EQ(all_subgroups(build_group("Q8")).size(), 6u);
  EXPECT_EQ(all_subgroups(build_group("Z2^2")).size(), 5u);
  EXPECT_EQ(all_subgroups(build_group("D8")).size(), 10u);
  EXPECT_EQ(all_subgroups(build_group("Z6")).size(), 4u);
}

TEST(Subgroups, NormalityInHamiltonianGroup) {
  const FiniteGroup Q8 = build_group("Q8");
  for (const ElementSet& H : all_subgroups(Q8)) EXPECT_TRUE(is_normal_subgroup(Q8, H));
  const FiniteGroup D8 = build_group("D8");
  EXPECT_FALSE(is_normal_subgroup(D8, ElementSet{0, by_label(D8, "s")}));
}

}  // namespace
}  // namespace cca
