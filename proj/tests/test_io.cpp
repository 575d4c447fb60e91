#include <gtest/gtest.h>

#include "polyhopf/io.hpp"

using namespace polyhopf;

TEST(IO, RoundTripCyclotomic) {
  const CatalogEntry e = catalog("A2D3");
  const json j = entry_json(e);
  EXPECT_EQ(j["dim"], 12);
  EXPECT_EQ(j["field"]["type"], "cyclotomic");
  ASSERT_TRUE(j.contains("provenance"));
  const HopfQ back = hopf_from_json(j);
  EXPECT_TRUE(back == *e.H);
  EXPECT_TRUE(verify_axioms(back).all());
}

TEST(IO, RoundTripPrime) {
  const auto hq = modularize(group_algebra(dihedral_group(4)), 17);
  const json j = to_json(hq);
  EXPECT_EQ(j["field"]["q"], 17);
  EXPECT_TRUE(hopf_from_json_prime(j) == hq);
}

TEST(IO, ImportErrors) {
  json j = to_json(group_algebra(dihedral_group(3)));
  {
    json bad = j;
    bad.erase("antipode");
    EXPECT_THROW(hopf_from_json(bad), ImportError);
  }
  {
    json bad = j;
    bad["mult"][0][2] = 99;
    EXPECT_THROW(hopf_from_json(bad), ImportError);
  }
  {
    json bad = j;
    bad["mult"][0][3] = "not a number";
    EXPECT_THROW(hopf_from_json(bad), ImportError);
  }
  {
    json bad = j;
    bad["basis"].erase(0);
    EXPECT_THROW(hopf_from_json(bad), ImportError);
  }
}

TEST(IO, PerturbedImportFailsAxioms) {
  json j = to_json(group_algebra(dihedral_group(3)));
  j["mult"][7][3] = "2";
  const HopfQ h = hopf_from_json(j);
  EXPECT_FALSE(verify_axioms(h).all());
}

TEST(IO, Tables) {
  const std::vector<TypeRow> rows{{"H8", "algebra", {{1, 4}, {2, 1}}}};
  EXPECT_EQ(csv_types(rows), "name,kind,type\nH8,algebra,\"(1, 4; 2, 1)\"\n");
  const std::string md = markdown_types(rows, "T");
  EXPECT_NE(md.find("| H8 | algebra | (1, 4; 2, 1) |"), std::string::npos);
  const json t = json_types(rows);
  EXPECT_EQ(t[0]["multiset"][1][0], 2);
  const std::vector<ReportSection> secs{{"T", rows}};
  EXPECT_EQ(render_report(secs, "md").rfind("# Type tables", 0), 0u);
  EXPECT_EQ(render_report(secs, "csv"), csv_types(rows));
  EXPECT_EQ(json::parse(render_report(secs, "json"))[0]["title"], "T");
}

TEST(IO, SuiteSerialization) {
  SuiteResult r{"axioms", "X", {}, {"note"}};
  r.add("claim one", true, "w");
  r.add("claim two", false);
  const json j = suite_json(r);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["claims"].size(), 2u);
  const std::string md = suite_markdown(r);
  EXPECT_NE(md.find("- [x] claim one (w)"), std::string::npos);
  EXPECT_NE(md.find("- [ ] claim two"), std::string::npos);
}
