#include <gtest/gtest.h>

#include "polyhopf/constructions.hpp"

using namespace polyhopf;

TEST(Constructions, CatalogDimensions) {
  const std::vector<std::pair<std::string, int>> cases{
      {"A2D3", 12}, {"B2D4", 16}, {"H8", 8},       {"A2T", 24},     {"FUN2D5", 20},
      {"GRPD4", 8}, {"FUNA4", 12}, {"TWD3D5", 60}, {"FUN2T", 24}};
  for (const auto& [name, dim] : cases) {
    const CatalogEntry e = catalog(name);
    EXPECT_EQ(e.H->dim, dim) << name;
  }
  EXPECT_EQ(catalog("B2I").H->dim, 120);
  EXPECT_EQ(catalog("TWA5").H->dim, 60);
}

TEST(Constructions, UnknownNamesRejected) {
  for (const char* bad : {"X9", "A2D1", "A2I", "FUN2Z4", "FUNQ", "C2D3"})
    EXPECT_THROW(catalog(bad), std::invalid_argument) << bad;
}

TEST(Constructions, DeformationsAreGenuineHopfAlgebras) {
  for (const char* name : {"A2D3", "B2D3", "A2D4", "B2D4", "A2T"}) {
    const CatalogEntry e = catalog(name);
    EXPECT_EQ(e.kind, "deformation");
    EXPECT_TRUE(verify_axioms(*e.H).all()) << name;
    EXPECT_FALSE(e.H->is_commutative()) << name;
    EXPECT_FALSE(e.H->is_cocommutative()) << name;
    ASSERT_EQ(e.alpha.size(), 4u);
    EXPECT_TRUE(is_comultiplicative(*e.H, e.alpha, 2)) << name;
    ASSERT_TRUE(e.iota && e.p);
    EXPECT_TRUE(e.iota->is_algebra_map() && e.iota->is_coalgebra_map()) << name;
    EXPECT_TRUE(e.p->is_algebra_map() && e.p->is_coalgebra_map()) << name;
    ASSERT_TRUE(e.theta.has_value());
    EXPECT_EQ(e.fixed_order, fixed_subgroup(e.gamma, *e.theta).order());
  }
}

TEST(Constructions, BinaryMatrixCoefficientsAreComultiplicative) {
  const CatalogEntry e = catalog("FUN2D3");
  ASSERT_EQ(e.alpha.size(), 4u);
  EXPECT_TRUE(is_comultiplicative(*e.H, e.alpha, 2));
}

TEST(Constructions, ParseGroupSpec) {
  const auto d5 = parse_group_spec("2D5");
  ASSERT_TRUE(d5);
  EXPECT_TRUE(d5->binary);
  EXPECT_EQ(d5->kind, PolyKind::dihedral);
  EXPECT_EQ(d5->n, 5);
  EXPECT_EQ(parse_group_spec("A5")->kind, PolyKind::icosa);
  EXPECT_EQ(parse_group_spec("O")->kind, PolyKind::octa);
  EXPECT_EQ(parse_group_spec("2T")->kind, PolyKind::tetra);
  EXPECT_EQ(parse_group_spec("Z4")->n, 4);
  EXPECT_FALSE(parse_group_spec("2Z4"));
  EXPECT_FALSE(parse_group_spec("D1"));
  EXPECT_FALSE(parse_group_spec("Q8"));
}

TEST(Constructions, EnumerationCounts) {
  EXPECT_EQ(enumerate_deformations(PolyKind::dihedral, 3).count(), 2);
  EXPECT_EQ(enumerate_deformations(PolyKind::dihedral, 4).count(), 2);
  EXPECT_EQ(enumerate_deformations(PolyKind::tetra).count(), 2);
  const Enumeration icosa = enumerate_deformations(PolyKind::icosa);
  EXPECT_EQ(icosa.count(), 1);
  int rejected = 0;
  for (const auto& c : icosa.candidates)
    if (!c.passes()) {
      ++rejected;
      EXPECT_EQ(c.filter.reason(), "no self-dual 2-dim");
    }
  EXPECT_GT(rejected, 0);
  EXPECT_THROW(enumerate_deformations(PolyKind::cyclic, 4), std::invalid_argument);
}

TEST(Constructions, AcceptanceCatalogNames) {
  const auto names = acceptance_catalog();
  EXPECT_EQ(names.size(), 26u);
  EXPECT_NE(std::find(names.begin(), names.end(), "B2I"), names.end());
}
