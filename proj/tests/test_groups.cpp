#include <gtest/gtest.h>

#include <set>

#include "polyhopf/binary.hpp"
#include "polyhopf/groups.hpp"

using namespace polyhopf;

namespace {

std::multiset<int> spectrum(const FinGroup& g) {
  std::multiset<int> s;
  for (int a = 0; a < g.n; ++a) s.insert(g.element_order(a));
  return s;
}

}  // namespace

TEST(Groups, PolyhedralOrdersAndAxioms) {
  EXPECT_EQ(polyhedral(PolyKind::cyclic, 1).order(), 1);
  EXPECT_EQ(polyhedral(PolyKind::cyclic, 7).order(), 7);
  EXPECT_EQ(polyhedral(PolyKind::dihedral, 3).order(), 6);
  EXPECT_EQ(polyhedral(PolyKind::tetra).order(), 12);
  EXPECT_EQ(polyhedral(PolyKind::octa).order(), 24);
  EXPECT_EQ(polyhedral(PolyKind::icosa).order(), 60);
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(dihedral_group(n).is_valid());
  EXPECT_TRUE(polyhedral(PolyKind::tetra).is_valid());
  EXPECT_TRUE(polyhedral(PolyKind::octa).is_valid());
  EXPECT_TRUE(polyhedral(PolyKind::icosa).is_valid());
  EXPECT_THROW(polyhedral(PolyKind::cyclic, 0), std::invalid_argument);
  EXPECT_THROW(polyhedral(PolyKind::dihedral, 1), std::invalid_argument);
}

TEST(Groups, DihedralGeneratorRelations) {
  for (int n = 2; n <= 8; ++n) {
    const FinGroup g = dihedral_group(n);
    ASSERT_EQ(g.generators.size(), 2u);
    const int sp = g.generators[0], sm = g.generators[1];
    EXPECT_EQ(g.mul(sp, sp), g.identity);
    EXPECT_EQ(g.mul(sm, sm), g.identity);
    EXPECT_EQ(g.element_order(g.mul(sp, sm)), n);
    EXPECT_EQ(static_cast<int>(g.closure({sp, sm}).size()), 2 * n);
  }
}

TEST(Groups, TetraIsA4) {
  const FinGroup t = polyhedral(PolyKind::tetra);
  std::multiset<int> expect{1, 2, 2, 2};
  for (int i = 0; i < 8; ++i) expect.insert(3);
  EXPECT_EQ(spectrum(t), expect);
  EXPECT_EQ(catalog_match(t), std::optional<std::string>("A4"));
}

TEST(Groups, InvariantsSeparateD3FromZ6) {
  EXPECT_EQ(spectrum(dihedral_group(3)), (std::multiset<int>{1, 2, 2, 2, 3, 3}));
  EXPECT_EQ(spectrum(cyclic_group(6)), (std::multiset<int>{1, 2, 3, 3, 6, 6}));
  EXPECT_FALSE(iso_invariants(dihedral_group(3)) == iso_invariants(cyclic_group(6)));
  EXPECT_EQ(catalog_match(cyclic_group(1)), std::optional<std::string>("Z1"));
  EXPECT_EQ(catalog_match(polyhedral(PolyKind::icosa)), std::optional<std::string>("A5"));
  EXPECT_EQ(catalog_match(direct_product(cyclic_group(3), cyclic_group(4))), std::optional<std::string>("Z12"));
  EXPECT_FALSE(catalog_match(direct_product(cyclic_group(2), cyclic_group(6))).has_value());
}

TEST(Groups, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphisms(polyhedral(PolyKind::tetra)).size(), 24u);
  EXPECT_EQ(automorphisms(polyhedral(PolyKind::octa)).size(), 24u);
  EXPECT_EQ(automorphisms(polyhedral(PolyKind::icosa)).size(), 120u);
  EXPECT_EQ(automorphisms(dihedral_group(2)).size(), 6u);   // GL2(F2)
  EXPECT_EQ(automorphisms(dihedral_group(5)).size(), 20u);  // n * phi(n)
  EXPECT_EQ(automorphisms(cyclic_group(8)).size(), 4u);
}

TEST(Groups, AutomorphismsFormAGroup) {
  const FinGroup g = polyhedral(PolyKind::tetra);
  const auto auts = automorphisms(g);
  std::set<GroupAut> s(auts.begin(), auts.end());
  for (const auto& a : auts) {
    EXPECT_TRUE(is_automorphism(g, a));
    for (const auto& b : auts) EXPECT_TRUE(s.count(compose(a, b)));
  }
}

TEST(Groups, Order2ClassesOfA5) {
  const auto classes = order2_classes(polyhedral(PolyKind::icosa));
  ASSERT_EQ(classes.size(), 2u);
  std::multiset<std::size_t> sizes{classes[0].size(), classes[1].size()};
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{10, 15}));
}

TEST(Groups, FixedSubgroups) {
  const FinGroup d = dihedral_group(5);
  EXPECT_EQ(fixed_subgroup(d, identity_aut(d)).order(), 10);
  const int sp = d.generators[0], sm = d.generators[1];
  int found = 0;
  for (const auto& a : automorphisms(d))
    if (a(sp) == sm && a(sm) == sp) {
      ++found;
      EXPECT_EQ(fixed_subgroup(d, a).order(), 2);
    }
  EXPECT_EQ(found, 1);

  // Conjugation by a double transposition of A4.
  const FinGroup t = polyhedral(PolyKind::tetra);
  const FinGroup s4 = polyhedral(PolyKind::octa);
  int inner = 0;
  for (int h = 0; h < t.n; ++h)
    if (h != t.identity && t.element_order(h) == 2) {
      ++inner;
      EXPECT_EQ(fixed_subgroup(t, conjugation(t, h)).order(), 4);
    }
  EXPECT_EQ(inner, 3);
  EXPECT_EQ(s4.center().size(), 1u);
}

TEST(Binary, CoverOrdersAndStructure) {
  struct Case {
    PolyKind kind;
    int n;
    int order;
  };
  for (Case c : {Case{PolyKind::dihedral, 2, 8}, Case{PolyKind::dihedral, 3, 12}, Case{PolyKind::dihedral, 5, 20},
                 Case{PolyKind::dihedral, 8, 32}, Case{PolyKind::tetra, 0, 24}, Case{PolyKind::octa, 0, 48},
                 Case{PolyKind::icosa, 0, 120}}) {
    const CentralExt e = binary_cover(c.kind, c.n);
    ASSERT_EQ(e.cover.order(), c.order);
    EXPECT_TRUE(e.cover.is_valid());
    EXPECT_TRUE(e.base.is_valid());
    EXPECT_EQ(e.base.order() * 2, c.order);
    for (const auto& m : e.matrices) EXPECT_EQ(m.det(), CycNumber(1));
    for (int a = 0; a < e.cover.n; ++a) {
      EXPECT_EQ(e.cover.mul(a, e.z), e.cover.mul(e.z, a));
      for (int b = 0; b < e.cover.n; ++b)
        ASSERT_EQ(e.proj[e.cover.mul(a, b)], e.base.mul(e.proj[a], e.proj[b]));
    }
    for (int s = 0; s < e.base.n; ++s) EXPECT_EQ(e.proj[e.section[s]], s);
    EXPECT_EQ(e.section[e.base.identity], e.cover.identity);
    EXPECT_EQ(e.proj[e.z], e.base.identity);
    EXPECT_EQ(iso_invariants(e.base), iso_invariants(polyhedral(c.kind, c.n)));
  }
  EXPECT_THROW(binary_cover(PolyKind::cyclic, 4), std::invalid_argument);
}

TEST(Binary, QuaternionAndSL23) {
  const CentralExt q = binary_cover(PolyKind::dihedral, 2);
  std::multiset<int> expect{1, 2, 4, 4, 4, 4, 4, 4};
  EXPECT_EQ(spectrum(q.cover), expect);
  // SL(2,3): one involution, 6 elements of order 4, 8 of order 3, 8 of order 6.
  const CentralExt t = binary_cover(PolyKind::tetra);
  const auto sp = spectrum(t.cover);
  EXPECT_EQ(sp.count(2), 1u);
  EXPECT_EQ(sp.count(4), 6u);
  EXPECT_EQ(sp.count(3), 8u);
  EXPECT_EQ(sp.count(6), 8u);
}
