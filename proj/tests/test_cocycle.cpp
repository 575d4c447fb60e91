#include <gtest/gtest.h>

#include <random>
#include <set>

#include "polyhopf/binary.hpp"
#include "polyhopf/cocycle.hpp"

using namespace polyhopf;

namespace {

// |Z^2| / |B^2| over all normalized cochains; feasible for order <= 4.
int h2_by_enumeration(const FinGroup& g) {
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (a != g.identity && b != g.identity) cells.push_back({a, b});
  long cocycles = 0;
  for (long m = 0; m < (1L << cells.size()); ++m) {
    Cocycle2F2 w(g.n);
    for (std::size_t k = 0; k < cells.size(); ++k) w.set(cells[k].first, cells[k].second, (m >> k) & 1);
    if (is_cocycle(g, w)) ++cocycles;
  }
  std::set<std::vector<std::uint8_t>> boundaries;
  for (long m = 0; m < (1L << g.n); ++m) {
    std::vector<std::uint8_t> b(g.n);
    for (int i = 0; i < g.n; ++i) b[i] = (m >> i) & 1;
    if (b[g.identity]) continue;
    boundaries.insert(coboundary(g, b).t);
  }
  int dim = 0;
  for (long q = cocycles / static_cast<long>(boundaries.size()); q > 1; q /= 2) ++dim;
  return dim;
}

}  // namespace

TEST(Cocycle, CoboundariesAreCocyclesAndSolvable) {
  std::mt19937 rng(5);
  for (const FinGroup& g : {dihedral_group(4), polyhedral(PolyKind::tetra), polyhedral(PolyKind::octa)}) {
    std::vector<std::uint8_t> b(g.n);
    for (auto& x : b) x = rng() & 1;
    b[g.identity] = 0;
    const Cocycle2F2 w = coboundary(g, b);
    EXPECT_TRUE(is_cocycle(g, w));
    EXPECT_TRUE(is_normalized(g, w));
    const auto sol = coboundary_solve(g, w);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(coboundary(g, *sol), w);
  }
}

TEST(Cocycle, NonCocycleRejected) {
  const FinGroup g = dihedral_group(3);
  Cocycle2F2 w(g.n);
  w.set(1, 2, 1);
  EXPECT_FALSE(is_cocycle(g, w));
}

TEST(Cocycle, H2MatchesEnumeration) {
  const FinGroup z2 = cyclic_group(2), z4 = cyclic_group(4), v4 = direct_product(z2, z2);
  EXPECT_EQ(h2_by_enumeration(z2), 1);
  EXPECT_EQ(h2_by_enumeration(v4), 3);
  EXPECT_EQ(h2_f2_dim(z2), h2_by_enumeration(z2));
  EXPECT_EQ(h2_f2_dim(z4), h2_by_enumeration(z4));
  EXPECT_EQ(h2_f2_dim(v4), h2_by_enumeration(v4));
  EXPECT_EQ(h2_f2_dim(cyclic_group(3)), h2_by_enumeration(cyclic_group(3)));
}

TEST(Cocycle, HomToF2) {
  EXPECT_EQ(hom_to_f2(dihedral_group(3)).size(), 1u);
  EXPECT_EQ(hom_to_f2(dihedral_group(4)).size(), 2u);
  EXPECT_EQ(hom_to_f2(polyhedral(PolyKind::icosa)).size(), 0u);
  EXPECT_EQ(all_homs_to_f2(dihedral_group(4)).size(), 4u);
}

TEST(Cocycle, ExtensionCocyclesOfBinaryCoversAreNonSplit) {
  struct Case {
    PolyKind kind;
    int n;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 8; ++n) cases.push_back({PolyKind::dihedral, n});
  cases.push_back({PolyKind::tetra, 0});
  cases.push_back({PolyKind::octa, 0});
  cases.push_back({PolyKind::icosa, 0});
  for (const Case& c : cases) {
    const CentralExt e = binary_cover(c.kind, c.n);
    const Cocycle2F2 w = extension_cocycle(e);
    EXPECT_TRUE(is_normalized(e.base, w));
    EXPECT_TRUE(is_cocycle(e.base, w));
    EXPECT_FALSE(coboundary_solve(e.base, w).has_value()) << e.name();
    // Independent oracle: -I is the only involution, so no subgroup of order |Gamma| avoids it.
    int involutions = 0;
    for (int a = 0; a < e.cover.n; ++a)
      if (e.cover.element_order(a) == 2) ++involutions;
    EXPECT_EQ(involutions, 1) << e.name();
  }
}

TEST(Cocycle, ExhaustiveSplittingSearchSmallCovers) {
  for (int n : {2, 3, 4, 6}) {
    const CentralExt e = binary_cover(PolyKind::dihedral, n);
    const int target = e.base.n;
    bool split = false;
    for (int a = 0; a < e.cover.n && !split; ++a)
      for (int b = a; b < e.cover.n && !split; ++b) {
        const auto h = e.cover.closure({a, b});
        if (static_cast<int>(h.size()) == target && std::find(h.begin(), h.end(), e.z) == h.end()) split = true;
      }
    EXPECT_FALSE(split) << e.name();
  }
  const CentralExt t = binary_cover(PolyKind::tetra);
  bool split = false;
  for (int a = 0; a < t.cover.n && !split; ++a)
    for (int b = a; b < t.cover.n && !split; ++b) {
      const auto h = t.cover.closure({a, b});
      if (static_cast<int>(h.size()) == t.base.n && std::find(h.begin(), h.end(), t.z) == h.end()) split = true;
    }
  EXPECT_FALSE(split);
}

TEST(Cocycle, ThetaStabilizeIdentity) {
  const CentralExt e = binary_cover(PolyKind::dihedral, 3);
  const Cocycle2F2 w = extension_cocycle(e);
  const Stabilized s = theta_stabilize(e.base, w, identity_aut(e.base));
  EXPECT_EQ(s.omega, w + coboundary(e.base, s.b));
  EXPECT_TRUE(is_cocycle(e.base, s.omega));
}

TEST(Cocycle, StrictStabilizationFailsForA4Conjugation) {
  const CentralExt e = binary_cover(PolyKind::tetra);
  const Cocycle2F2 w = extension_cocycle(e);
  int checked = 0;
  for (int h = 0; h < e.base.n; ++h) {
    if (h == e.base.identity || e.base.element_order(h) != 2) continue;
    ++checked;
    const GroupAut theta = conjugation(e.base, h);
    try {
      theta_stabilize(e.base, w, theta);
      ADD_FAILURE() << "expected failure";
    } catch (const std::runtime_error& err) {
      EXPECT_NE(std::string(err.what()).find("class not theta-stable"), std::string::npos);
    }
    // The mu_4 lift exists and has the required properties.
    const auto lifts = theta_lifts(e.base, w, theta);
    ASSERT_FALSE(lifts.empty());
    for (const auto& L : lifts) {
      EXPECT_TRUE(is_cocycle(e.base, L.tau));
      EXPECT_TRUE(is_theta_anti_invariant(e.base, L.tau, theta));
      for (int a = 0; a < e.base.n; ++a)
        for (int b = 0; b < e.base.n; ++b)
          ASSERT_EQ((L.tau(a, b) - 2 * w(a, b) - L.c[a] - L.c[b] + L.c[e.base.mul(a, b)] + 64) % 4, 0);
    }
  }
  EXPECT_EQ(checked, 3);
}

TEST(Cocycle, SignCocycle) {
  Cocycle2F2 w(2);
  w.set(1, 1, 1);
  const auto s = to_sign_cocycle(w);
  EXPECT_EQ(s[0], CycNumber(1));
  EXPECT_EQ(s[3], CycNumber(-1));
}
