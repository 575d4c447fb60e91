// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polyhopf/suites.hpp"

using namespace polyhopf;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Criteria whose failure reproduces a documented disagreement with a claim in the source
// (see README "Known deviations"); every other failure is unexpected.
const std::set<int> kDocumentedDeviations{3, 5, 10};

std::map<std::string, CatalogEntry>& cache() {
  static std::map<std::string, CatalogEntry> c;
  return c;
}

const CatalogEntry& entry(const std::string& name) {
  auto it = cache().find(name);
  if (it == cache().end()) it = cache().emplace(name, catalog(name)).first;
  return it->second;
}

std::vector<std::string> deformations() {
  std::vector<std::string> out;
  for (const auto& n : acceptance_catalog())
    if (entry(n).kind == "deformation" && n != "H8") out.push_back(n);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

Outcome c1_axioms() {
  std::vector<std::string> bad;
  double worst = 0;
  std::string worst_name;
  for (const auto& n : acceptance_catalog()) {
    const auto t0 = std::chrono::steady_clock::now();
    cache().erase(n);
    const CatalogEntry& e = entry(n);
    const bool ok = verify_axioms(*e.H).all();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > worst) worst = s, worst_name = n;
    if (!ok || s > 60) bad.push_back(n);
  }
  std::ostringstream os;
  os << acceptance_catalog().size() << " instances, slowest " << worst_name << " " << worst << " s";
  if (!bad.empty()) os << "; failing: " << join(bad);
  return {bad.empty(), os.str()};
}

Outcome types_check(bool algebra) {
  std::vector<std::string> bad;
  int checked = 0;
  for (const auto& n : deformations()) {
    const CatalogEntry& e = entry(n);
    const ExpectedTypes ex = expected_types(n);
    const TypeMultiset t = algebra ? algebra_type(*e.H) : coalgebra_type(*e.H);
    const TypeMultiset& want = algebra ? *ex.algebra : *ex.coalgebra;
    ++checked;
    if (t != want) bad.push_back(n + " " + type_str(t) + " vs " + type_str(want));
    if (algebra) {
      const int ones = t.front().first == 1 ? t.front().second : 0;
      if (ones != 2 * e.fixed_order) bad.push_back(n + " 2p != 2|fixed|");
    }
  }
  std::string d = std::to_string(checked) + " deformations";
  if (algebra) d += ", 2p = 2|Gamma^theta| checked";
  if (!bad.empty()) d += "; mismatches: " + join(bad);
  return {bad.empty(), d};
}

Outcome c4_function_algebras() {
  std::vector<std::string> bad;
  std::vector<std::string> names;
  for (int n = 2; n <= 8; ++n) names.push_back("FUND" + std::to_string(n));
  for (const char* g : {"FUNA4", "FUNS4", "FUNA5"}) names.push_back(g);
  for (const auto& n : names) {
    const TypeMultiset t = coalgebra_type(*entry(n).H);
    const TypeMultiset want = *expected_types(n).coalgebra;
    if (t != want) bad.push_back(n + " " + type_str(t) + " vs " + type_str(want));
  }
  return {bad.empty(), "k^Gamma for D2..D8, A4, S4, A5" + (bad.empty() ? std::string() : "; mismatches: " + join(bad))};
}

// chi1^2 = 1 + a + chi2 and chi1 chi2 = chi1 + chi2 for some labeling of k^{D5}.
bool d5_formulas(const FusionRing& R) {
  int a = -1;
  std::vector<int> two;
  for (int x = 0; x < R.n; ++x) {
    if (R.degrees[x] == 1 && x != R.unit) a = x;
    if (R.degrees[x] == 2) two.push_back(x);
  }
  if (a < 0 || two.size() != 2 || R.n != 4) return false;
  for (int i = 0; i < 2; ++i) {
    const int c1 = two[i], c2 = two[1 - i];
    std::vector<int> sq(R.n, 0), pr(R.n, 0);
    sq[R.unit] = sq[a] = sq[c2] = 1;
    pr[c1] = pr[c2] = 1;
    bool ok = true;
    for (int x = 0; x < R.n; ++x) ok = ok && R(c1, c1, x) == sq[x] && R(c1, c2, x) == pr[x];
    if (ok) return true;
  }
  return false;
}

Outcome c5_fusion() {
  std::vector<std::string> bad;
  for (const auto& n : deformations()) {
    const FusionRing R = fusion_ring(simple_comodules(*entry(n).H, 0, 0, false));
    const std::string ref = detail::reference_name(n);
    const FusionRing S = fusion_ring(simple_comodules(*entry(ref).H, 0, 0, false));
    if (fusion_iso(R, S)) continue;
    std::string why = n + " !~ " + ref;
    if (n[2] == 'D') {
      const std::string alt = "FUND" + std::to_string(2 * std::stoi(n.substr(3)));
      if (fusion_iso(R, fusion_ring(simple_comodules(*entry(alt).H, 0, 0, false)))) why += " (~ " + alt + ")";
    }
    bad.push_back(why);
  }
  const bool d5 = d5_formulas(fusion_ring(simple_comodules(*entry("FUND5").H, 0, 0, false)));
  std::string d = std::string("k^D5 odd-n formulas ") + (d5 ? "hold" : "FAIL");
  if (!bad.empty()) d += "; not isomorphic to the binary reference: " + join(bad);
  return {bad.empty() && d5, d};
}

Outcome c6_fs() {
  std::vector<std::string> bad;
  int simples = 0;
  for (const auto& n : acceptance_catalog()) {
    const SuiteResult r = suite_fs(entry(n));
    for (const auto& c : r.claims) {
      if (c.claim == "indicator matches invariant form") {
        const auto slash = c.witness.find('/');
        simples += std::stoi(c.witness.substr(slash + 1));
      }
      if (!c.pass) bad.push_back(n + ": " + c.claim + " [" + c.witness + "]");
    }
  }
  return {bad.empty(), std::to_string(simples) + " simple comodules compared with invariant forms" +
                           (bad.empty() ? std::string() : "; " + join(bad))};
}

Outcome c7_enumeration() {
  struct Case {
    PolyKind kind;
    int n;
    std::string label;
    int want;
  };
  std::vector<Case> cases{{PolyKind::dihedral, 2, "D2", 1}};
  for (int n = 3; n <= 8; ++n) cases.push_back({PolyKind::dihedral, n, "D" + std::to_string(n), 2});
  cases.push_back({PolyKind::tetra, 0, "A4", 2});
  cases.push_back({PolyKind::octa, 0, "S4", 2});
  cases.push_back({PolyKind::icosa, 0, "A5", 1});
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& c : cases) {
    const Enumeration en = enumerate_deformations(c.kind, c.n);
    parts.push_back(c.label + "->" + std::to_string(en.count()));
    ok = ok && en.count() == c.want;
    if (c.kind == PolyKind::icosa) {
      const auto passing = en.passing_classes();
      int failing = 0;
      bool reason = true;
      for (const auto& cand : en.candidates)
        if (std::find(passing.begin(), passing.end(), cand.class_index) == passing.end()) {
          ++failing;
          reason = reason && cand.filter.reason() == "no self-dual 2-dim";
        }
      reason = reason && failing > 0;
      ok = ok && reason;
      parts.push_back(std::string("A5 failing class: ") + (reason ? "no self-dual 2-dim" : "other"));
    }
  }
  return {ok, join(parts)};
}

Outcome c8_exact() {
  std::vector<std::string> bad;
  for (const auto& n : deformations()) {
    const SuiteResult r = suite_exact(entry(n));
    for (const auto& c : r.claims)
      if (!c.pass) bad.push_back(n + ": " + c.claim);
  }
  return {bad.empty(), std::to_string(deformations().size()) +
                           " deformations: exactness, cocentral p, M = Z2, H_coad = k^Gamma, central order-2 in H*" +
                           (bad.empty() ? std::string() : "; " + join(bad))};
}

Outcome c9_sl2() {
  std::vector<std::string> bad, names = deformations();
  for (const char* f : {"FUN2T", "FUN2O", "FUN2I"}) names.push_back(f);
  int o1 = 0;
  for (const auto& n : names) {
    const SuiteResult r = suite_sl2(entry(n));
    for (const auto& c : r.claims)
      if (!c.pass) bad.push_back(n + ": " + c.claim);
    if (entry(n).kind == "deformation") ++o1;
  }
  return {bad.empty(), "B(E) relations on " + std::to_string(names.size()) + " instances; normalized O_-1 relations on " +
                           std::to_string(o1) + " deformations" + (bad.empty() ? std::string() : "; " + join(bad))};
}

// dim H^2 by exhaustive enumeration of normalized cochains.
int h2_by_enumeration(const FinGroup& g) {
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (a != g.identity && b != g.identity) cells.emplace_back(a, b);
  auto value = [&](std::uint32_t mask, int a, int b) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i] == std::pair(a, b)) return static_cast<int>((mask >> i) & 1);
    return 0;
  };
  std::set<std::uint32_t> cocycles, coboundaries;
  for (std::uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
    bool ok = true;
    for (int a = 0; a < g.n && ok; ++a)
      for (int b = 0; b < g.n && ok; ++b)
        for (int c = 0; c < g.n && ok; ++c)
          ok = (value(mask, b, c) ^ value(mask, g.mul(a, b), c) ^ value(mask, a, g.mul(b, c)) ^ value(mask, a, b)) == 0;
    if (ok) cocycles.insert(mask);
  }
  for (std::uint32_t bm = 0; bm < (1u << g.n); ++bm) {
    if ((bm >> g.identity) & 1) continue;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto [a, b] = cells[i];
      const int v = ((bm >> a) ^ (bm >> b) ^ (bm >> g.mul(a, b))) & 1;
      mask |= static_cast<std::uint32_t>(v) << i;
    }
    coboundaries.insert(mask);
  }
  int d = 0;
  for (std::size_t q = cocycles.size() / coboundaries.size(); q > 1; q >>= 1) ++d;
  return d;
}

Outcome c10_cohomology() {
  std::vector<std::string> parts;
  bool ok = true;
  int noncob = 0, covers = 0;
  std::vector<std::pair<PolyKind, int>> kinds;
  for (int n = 2; n <= 8; ++n) kinds.emplace_back(PolyKind::dihedral, n);
  kinds.emplace_back(PolyKind::tetra, 0);
  kinds.emplace_back(PolyKind::octa, 0);
  kinds.emplace_back(PolyKind::icosa, 0);
  for (const auto& [k, n] : kinds) {
    const CentralExt ext = binary_cover(k, n);
    ++covers;
    if (!coboundary_solve(ext.base, extension_cocycle(ext))) ++noncob;
  }
  ok = ok && noncob == covers;
  parts.push_back(std::to_string(noncob) + "/" + std::to_string(covers) + " binary covers non-split");
  std::vector<std::string> unstable;
  int lifted = 0, pairs = 0;
  for (const auto& n : deformations()) {
    const CatalogEntry& e = entry(n);
    const Cocycle2F2 w = extension_cocycle(*e.ext);
    ++pairs;
    try {
      theta_stabilize(e.gamma, w, *e.theta);
    } catch (const std::exception&) {
      unstable.push_back(n);
    }
    bool lift_ok = false;
    for (const auto& l : theta_lifts(e.gamma, w, *e.theta))
      lift_ok = lift_ok || (is_cocycle(e.gamma, l.tau) && is_theta_anti_invariant(e.gamma, l.tau, *e.theta));
    if (lift_ok) ++lifted;
  }
  ok = ok && unstable.empty();
  parts.push_back("theta_stabilize (strict F2) succeeds on " + std::to_string(pairs - unstable.size()) + "/" +
                  std::to_string(pairs) + (unstable.empty() ? std::string() : " (fails: " + join(unstable) + ")"));
  parts.push_back("mu4 theta-lift exists on " + std::to_string(lifted) + "/" + std::to_string(pairs));
  const FinGroup z2 = cyclic_group(2), v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const int a = h2_f2_dim(z2), b = h2_f2_dim(v4), ea = h2_by_enumeration(z2), eb = h2_by_enumeration(v4);
  ok = ok && a == 1 && b == 3 && a == ea && b == eb;
  parts.push_back("h2(Z2) = " + std::to_string(a) + " (enum " + std::to_string(ea) + "), h2(Z2^2) = " +
                  std::to_string(b) + " (enum " + std::to_string(eb) + ")");
  return {ok, join(parts)};
}

Outcome c11_twists() {
  std::vector<std::string> parts;
  bool ok = true;
  auto check = [&](const std::string& n, const TypeMultiset& want, const std::string& group) {
    const CatalogEntry& e = entry(n);
    const TypeMultiset t = coalgebra_type(*e.H);
    const std::string g = detail::group_label(grouplikes(*e.H).group);
    ok = ok && t == want && g == group;
    parts.push_back(n + " " + type_str(t) + " G = " + g);
  };
  check("TWA5", {{1, 12}, {4, 3}}, "A4");
  check("TWD3D5", {{1, 4}, {2, 6}, {4, 2}}, "D2");
  const TypeMultiset dual_t = coalgebra_type(dual(*entry("TWA5").H));
  ok = ok && dual_t == TypeMultiset{{1, 1}, {3, 2}, {4, 1}, {5, 1}};
  parts.push_back("dual of TWA5 " + type_str(dual_t));
  return {ok, join(parts)};
}

Outcome c12_twisted_group_algebras() {
  std::vector<std::string> parts;
  bool ok = true;
  auto run = [&](PolyKind k, const TypeMultiset& want) {
    const CentralExt ext = binary_cover(k);
    const Algebra<CycNumber> A = twisted_group_algebra(ext.base, extension_cocycle(ext), 1);
    const std::uint32_t q = next_good_prime(4 * detail::group_exponent(ext.base), static_cast<std::uint64_t>(A.dim), 100);
    const TypeMultiset t = meataxe_type(modularize(A, q), 0);
    ok = ok && t == want;
    parts.push_back("k_tau " + detail::group_label(ext.base) + " " + type_str(t));
  };
  run(PolyKind::tetra, {{2, 3}});
  run(PolyKind::icosa, {{2, 2}, {4, 1}, {6, 1}});
  return {ok, join(parts)};
}

Outcome c13_properties() {
  std::vector<std::string> bad;
  int decomps = 0;
  for (const auto& n : acceptance_catalog()) {
    const HopfQ& H = *entry(n).H;
    const TypeMultiset a0 = algebra_type(H, 0), a1 = algebra_type(H, 17);
    const TypeMultiset c0 = coalgebra_type(H, 0), c1 = coalgebra_type(H, 17);
    if (a0 != a1 || c0 != c1) bad.push_back(n + " seed-dependent types");
    for (const auto* t : {&a0, &a1, &c0, &c1}) {
      ++decomps;
      if (type_dim(*t) != H.dim) bad.push_back(n + " sum n d^2 != dim");
    }
    const SuiteResult f = suite_fusion(entry(n));
    for (const auto& c : f.claims)
      if (!c.pass && c.claim.rfind("fusion rules isomorphic", 0) != 0) bad.push_back(n + " " + c.claim);
    if (!verify_axioms(H).antipode_sq_id) bad.push_back(n + " S^2 != id");
  }
  int fs_checked = 0;
  for (const char* n : {"FUN2T", "FUN2O", "FUN2I", "GRP2T"}) {
    for (const auto& c : suite_fs(entry(n)).claims)
      if (c.claim.rfind("classical", 0) == 0) {
        ++fs_checked;
        if (!c.pass) bad.push_back(std::string(n) + " classical FS mismatch");
      }
  }
  if (fs_checked != 4) bad.push_back("classical FS cross-check missing");
  return {bad.empty(), std::to_string(decomps) + " decompositions (seeds 0, 17), fusion laws, S^2 = id, classical FS on " +
                           std::to_string(fs_checked) + " instances" + (bad.empty() ? std::string() : "; " + join(bad))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Hopf axioms on the acceptance catalog", c1_axioms},
      {"coalgebra types of deformations", [] { return types_check(false); }},
      {"algebra types of deformations", [] { return types_check(true); }},
      {"coalgebra types of k^Gamma", c4_function_algebras},
      {"fusion rules", c5_fusion},
      {"Frobenius-Schur indicators", c6_fs},
      {"enumeration counts", c7_enumeration},
      {"exact sequences", c8_exact},
      {"SL2 relations", c9_sl2},
      {"F2 cohomology", c10_cohomology},
      {"twists", c11_twists},
      {"twisted group algebras", c12_twisted_group_algebras},
      {"property suites", c13_properties},
  };
  int passed = 0, documented = 0, unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (o.pass)
      ++passed;
    else if (kDocumentedDeviations.count(id))
      ++documented;
    else
      ++unexpected;
    std::printf("criterion %2d %s: %s - %s%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), !o.pass && kDocumentedDeviations.count(id) ? " [documented deviation]" : "");
    std::fflush(stdout);
  }
  std::printf("summary: %d passed, %d failed (%d documented deviations, %d unexpected)\n", passed,
              documented + unexpected, documented, unexpected);
  return unexpected == 0 ? 0 : 1;
}
