#include <gtest/gtest.h>

#include "polyhopf/analyzer.hpp"
#include "polyhopf/constructions.hpp"

using namespace polyhopf;

namespace {

const Claim* find_claim(const TheoremReport& r, const std::string& prefix) {
  for (const auto& c : r.claims)
    if (c.claim.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST(Analyzer, NRTheoremCaseSplit) {
  struct Case {
    const char* name;
    const char* claim;
    const char* gamma;
  };
  for (Case c : {Case{"H8", "case (i)", "D2"}, Case{"A2D3", "case (ii)", "D3"}, Case{"B2D5", "case (ii)", "D5"},
                 Case{"A2T", "case (iii)", "A4"}}) {
    const CatalogEntry e = catalog(c.name);
    const TheoremReport r = verify_nr_theorem(*e.H, &e.alpha);
    EXPECT_TRUE(r.all()) << c.name;
    const Claim* k = find_claim(r, c.claim);
    ASSERT_NE(k, nullptr) << c.name;
    EXPECT_EQ(k->witness, c.gamma);
  }
}

TEST(Analyzer, ShortExactSequence) {
  for (const char* name : {"A2D3", "B2D4", "A2T"}) {
    const CatalogEntry e = catalog(name);
    const TheoremReport r = verify_short_exact(*e.H, &e.alpha);
    EXPECT_TRUE(r.all()) << name;
    const Claim* m = find_claim(r, "M cyclic");
    ASSERT_NE(m, nullptr);
    EXPECT_EQ(m->witness, "m = 2");
    const Claim* g = find_claim(r, "H_coad = k^Gamma");
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->witness, detail::group_label(e.gamma));
  }
}

TEST(Analyzer, PreconditionsReported) {
  const HopfQ h = group_algebra(dihedral_group(3));
  EXPECT_THROW(verify_short_exact(h), PreconditionError);
  EXPECT_THROW(verify_nr_theorem(h), PreconditionError);
}

TEST(Analyzer, CentralGrouplikeAndDegreeTwo) {
  const CatalogEntry e = catalog("A2D4");
  EXPECT_TRUE(central_grouplike_checks(*e.H).all());
  EXPECT_TRUE(degree_two_structure(*e.H).all());
}

TEST(Analyzer, GroupLabels) {
  EXPECT_EQ(detail::group_label(dihedral_group(2)), "D2");
  EXPECT_EQ(detail::group_label(alternating_group(5)), "A5");
}
