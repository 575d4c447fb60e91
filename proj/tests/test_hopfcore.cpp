#include <gtest/gtest.h>

#include "polyhopf/builders.hpp"
#include "polyhopf/hopf.hpp"

using namespace polyhopf;

namespace {

// Quotient map kD3 -> kZ2 sending r^k s^f to f.
HopfMap<CycNumber> sign_quotient(const HopfQ& H, const HopfQ& T, int n) {
  HopfMap<CycNumber> p;
  p.source = &H;
  p.target = &T;
  p.mat = Matrix<CycNumber>(T.dim, H.dim, CycNumber(0));
  for (int x = 0; x < H.dim; ++x) p.mat(x / n, x) = CycNumber(1);
  return p;
}

}  // namespace

TEST(HopfCore, ClassicalAlgebrasSatisfyAxioms) {
  const FinGroup g = dihedral_group(3);
  const HopfQ f = function_algebra(g), k = group_algebra(g);
  EXPECT_TRUE(verify_axioms(f).all());
  EXPECT_TRUE(verify_axioms(k).all());
  EXPECT_TRUE(f.is_commutative());
  EXPECT_FALSE(f.is_cocommutative());
  EXPECT_FALSE(k.is_commutative());
  EXPECT_TRUE(k.is_cocommutative());
}

TEST(HopfCore, DualOfFunctionAlgebraIsGroupAlgebra) {
  const FinGroup g = polyhedral(PolyKind::tetra);
  const HopfQ f = function_algebra(g);
  EXPECT_TRUE(dual(f) == group_algebra(g));
  EXPECT_TRUE(dual(dual(f)) == f);
  EXPECT_TRUE(verify_axioms(dual(f)).all());
}

TEST(HopfCore, PerturbationsAreDetected) {
  const HopfQ base = group_algebra(dihedral_group(3));
  {
    HopfQ h = base;
    h.mult[1 * h.dim + 2][0].c = CycNumber(2);
    const AxiomReport r = verify_axioms(h);
    EXPECT_FALSE(r.all());
    EXPECT_FALSE(r.first_failure.empty());
  }
  {
    HopfQ h = base;
    h.antipode[1][0].k = 1;
    EXPECT_FALSE(verify_axioms(h).antipode);
  }
  {
    HopfQ h = base;
    h.counit[2] = CycNumber(0);
    EXPECT_FALSE(verify_axioms(h).all());
  }
}

TEST(HopfCore, ModularReductionKeepsAxioms) {
  const HopfQ h = group_algebra(dihedral_group(4), 8);
  const auto hq = modularize(h, 17);
  EXPECT_TRUE(verify_axioms(hq).all());
  EXPECT_EQ(hq.dim, 8);
}

TEST(HopfCore, ExactSequenceOfGroupAlgebras) {
  const int n = 3;
  const FinGroup g = dihedral_group(n);
  const HopfQ H = group_algebra(g), T = group_algebra(cyclic_group(2));
  const auto p = sign_quotient(H, T, n);
  EXPECT_TRUE(p.is_algebra_map());
  EXPECT_TRUE(p.is_coalgebra_map());
  EXPECT_TRUE(is_cocentral(p));

  std::vector<Vec<CycNumber>> rot;
  for (int k = 0; k < n; ++k) rot.push_back(H.basis_vec(k));
  const auto K = span(H, rot);
  EXPECT_TRUE(is_hopf_subalgebra(H, K));
  EXPECT_TRUE(is_normal(H, K));
  const ExactnessReport good = exactness_check(K, p);
  EXPECT_TRUE(good.all());
  EXPECT_EQ(good.dim_coinvariants, n);

  const auto wrong = span(H, {H.basis_vec(0), H.basis_vec(n)});
  EXPECT_FALSE(exactness_check(wrong, p).all());
  EXPECT_FALSE(is_normal(H, wrong));
}

TEST(HopfCore, IntegralOfGroupAlgebra) {
  const FinGroup g = dihedral_group(3);
  const HopfQ H = group_algebra(g);
  const auto L = integral(H);
  for (const auto& c : L) EXPECT_EQ(c, CycNumber(Rational(1, 6)));
}

TEST(HopfCore, BicrossedProductWithTrivialDataIsTensorProduct) {
  const FinGroup g = dihedral_group(3);
  const HopfQ B = bicrossed_build(g, identity_aut(g), Cocycle2F2(g.n), 1);
  EXPECT_EQ(B.dim, 12);
  EXPECT_TRUE(verify_axioms(B).all());
  EXPECT_TRUE(B.is_commutative());
}

TEST(HopfCore, BicrossedBuildRejectsBadData) {
  const FinGroup g = dihedral_group(3);
  Cocycle2F2 w(g.n);
  w.set(0, 1, 1);
  EXPECT_THROW(bicrossed_build(g, identity_aut(g), w, 1), std::invalid_argument);
  GroupAut bad = identity_aut(g);
  std::swap(bad.perm[1], bad.perm[3]);
  EXPECT_THROW(bicrossed_build(g, bad, Cocycle2F2(g.n), 1), std::invalid_argument);
}
