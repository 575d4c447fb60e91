#include <gtest/gtest.h>

#include "polyhopf/constructions.hpp"
#include "polyhopf/reptheory.hpp"

using namespace polyhopf;

namespace {

int square_roots_of_identity(const FinGroup& g) {
  int c = 0;
  for (int a = 0; a < g.n; ++a)
    if (g.mul(a, a) == g.identity) ++c;
  return c;
}

int sum_of_squares(const TypeMultiset& t) {
  int s = 0;
  for (auto [d, m] : t) s += d * d * m;
  return s;
}

}  // namespace

TEST(RepTheory, ClassicalAlgebraTypes) {
  EXPECT_EQ(algebra_type(group_algebra(dihedral_group(3))), (TypeMultiset{{1, 2}, {2, 1}}));
  EXPECT_EQ(algebra_type(function_algebra(dihedral_group(3))), (TypeMultiset{{1, 6}}));
  EXPECT_EQ(coalgebra_type(function_algebra(dihedral_group(4))), (TypeMultiset{{1, 4}, {2, 1}}));
  EXPECT_EQ(algebra_type(group_algebra(alternating_group(5))), (TypeMultiset{{1, 1}, {3, 2}, {4, 1}, {5, 1}}));
  EXPECT_EQ(type_str(TypeMultiset{{1, 4}, {2, 2}}), "(1, 4; 2, 2)");
}

TEST(RepTheory, TypeIndependentOfPrime) {
  const HopfQ h = group_algebra(symmetric_group(4));
  const auto a = algebra_type(h, 0, 97);
  const auto b = algebra_type(h, 3, 193);
  EXPECT_EQ(a, b);
  EXPECT_EQ(sum_of_squares(a), 24);
  EXPECT_EQ(a, (TypeMultiset{{1, 2}, {2, 1}, {3, 2}}));
}

TEST(RepTheory, FrobeniusSchurAgainstInvolutionCount) {
  for (const char* name : {"FUN2D2", "FUN2D3", "FUND4", "FUN2T", "FUNS4"}) {
    const CatalogEntry e = catalog(name);
    const ComoduleData cd = simple_comodules(*e.H);
    const auto nu = fs_indicators(cd);
    int s = 0;
    for (std::size_t k = 0; k < nu.size(); ++k) s += nu[k] * cd.simples[k].degree;
    EXPECT_EQ(s, square_roots_of_identity(e.gamma)) << name;
  }
}

TEST(RepTheory, QuaternionTwoDimensionalIsQuaternionic) {
  const ComoduleData cd = simple_comodules(*catalog("FUN2D2").H);
  const auto nu = fs_indicators(cd);
  for (std::size_t k = 0; k < nu.size(); ++k) EXPECT_EQ(nu[k], cd.simples[k].degree == 2 ? -1 : 1);
}

TEST(RepTheory, FusionRings) {
  const FusionRing d3 = fusion_ring(simple_comodules(function_algebra(dihedral_group(3))));
  EXPECT_TRUE(d3.is_associative());
  EXPECT_TRUE(d3.degrees_multiplicative());
  EXPECT_TRUE(d3.duality_law());
  EXPECT_TRUE(d3.unit_law());
  int two = -1;
  for (int k = 0; k < d3.n; ++k)
    if (d3.degrees[k] == 2) two = k;
  ASSERT_GE(two, 0);
  for (int c = 0; c < d3.n; ++c) EXPECT_EQ(d3(two, two, c), 1);

  // Q8 and D4 share their fusion ring; Q8 and Z8 do not.
  const FusionRing q8 = fusion_ring(simple_comodules(*catalog("FUN2D2").H));
  const FusionRing d4 = fusion_ring(simple_comodules(function_algebra(dihedral_group(4))));
  const FusionRing z8 = fusion_ring(simple_comodules(function_algebra(cyclic_group(8), 8)));
  EXPECT_TRUE(fusion_iso(q8, d4).has_value());
  EXPECT_FALSE(fusion_iso(q8, z8).has_value());
}

TEST(RepTheory, InvariantFormsOfBinaryAndDeformation) {
  const CatalogEntry fun = catalog("FUN2D3");
  const auto f = invariant_form(*fun.H, fun.alpha, 2);
  EXPECT_EQ(f.solution_dim, 1);
  EXPECT_EQ(f.kind, FormKind::skew);
  EXPECT_TRUE(be_relations_check(*fun.H, fun.alpha, 2, f.E, f.kind).all(f.kind));

  const CatalogEntry def = catalog("A2D3");
  const auto g = invariant_form(*def.H, def.alpha, 2);
  EXPECT_EQ(g.solution_dim, 1);
  EXPECT_EQ(g.kind, FormKind::symmetric);
  EXPECT_TRUE(be_relations_check(*def.H, def.alpha, 2, g.E, g.kind).all(g.kind));
}

TEST(RepTheory, GrouplikesOfH8) {
  const CatalogEntry e = catalog("H8");
  const GrouplikeSet g = grouplikes(*e.H);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.exact);
  EXPECT_EQ(catalog_match(g.group), std::optional<std::string>("D2"));
  EXPECT_EQ(algebra_type(*e.H), (TypeMultiset{{1, 4}, {2, 1}}));
  EXPECT_EQ(coalgebra_type(*e.H), (TypeMultiset{{1, 4}, {2, 1}}));
}

TEST(RepTheory, GrouplikesOfGroupAlgebra) {
  const GrouplikeSet g = grouplikes(group_algebra(dihedral_group(5)));
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(iso_invariants(g.group), iso_invariants(dihedral_group(5)));
}

TEST(RepTheory, IndicatorValues) {
  EXPECT_EQ(indicator_value(CycNumber(1)), 1);
  EXPECT_EQ(indicator_value(CycNumber(-1)), -1);
  EXPECT_EQ(indicator_value(CycNumber(0)), 0);
}
