#include <gtest/gtest.h>

#include "polyhopf/suites.hpp"

using namespace polyhopf;

TEST(Suites, AllPassOnOddLiftWithClassicalFusion) {
  const CatalogEntry e = catalog("A2D3");
  for (const auto& s : suite_names()) {
    const SuiteResult r = run_suite(s, e);
    EXPECT_TRUE(r.pass()) << s;
  }
}

TEST(Suites, ReferenceAlgebras) {
  const CatalogEntry f = catalog("FUN2D4");
  for (const char* s : {"axioms", "types", "fusion", "fs", "sl2"}) EXPECT_TRUE(run_suite(s, f).pass()) << s;
  EXPECT_EQ(detail::reference_name("H8"), "FUN2D2");
  EXPECT_EQ(detail::reference_name("B2I"), "FUN2I");
}

TEST(Suites, EvenDihedralFixFourClassDeviatesFromPaperType) {
  const SuiteResult r = run_suite("types", catalog("A2D4"));
  bool saw_type_failure = false, two_p = false;
  for (const auto& c : r.claims) {
    if (c.claim.rfind("algebra type", 0) == 0) saw_type_failure = !c.pass && c.witness == "computed (1, 8; 2, 2)";
    if (c.claim.rfind("2p", 0) == 0) two_p = c.pass;
  }
  EXPECT_TRUE(saw_type_failure);
  EXPECT_TRUE(two_p);
}

TEST(Suites, TwistsAreGenuine) {
  const CatalogEntry e = catalog("TWD3D5");
  EXPECT_TRUE(run_suite("axioms", e).pass());
  EXPECT_TRUE(run_suite("types", e).pass());
  EXPECT_FALSE(run_suite("theorems", e).notes.empty());
}

TEST(Suites, UnknownSuiteRejected) {
  EXPECT_THROW(run_suite("nope", catalog("H8")), std::invalid_argument);
}
