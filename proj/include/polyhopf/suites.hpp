#ifndef POLYHOPF_SUITES_HPP
#define POLYHOPF_SUITES_HPP

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "constructions.hpp"
#include "reptheory.hpp"

namespace polyhopf {

/// Result of one verification suite on one instance. A suite with no claims
/// and a note was not applicable and counts as passing.
struct SuiteResult {
  std::string suite;
  std::string instance;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  void add(std::string claim, bool pass, std::string witness = {}) {
    claims.push_back({std::move(claim), pass, std::move(witness)});
  }
  void absorb(const TheoremReport& r) {
    for (const auto& c : r.claims) claims.push_back({r.theorem + ": " + c.claim, c.pass, c.witness});
  }
  bool pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "types", "fusion", "fs", "exact", "sl2", "theorems"};
  return names;
}

struct ExpectedTypes {
  std::optional<TypeMultiset> algebra, coalgebra;
};

namespace detail {

inline TypeMultiset binary_irrep_type(const std::string& body) {
  if (body == "T") return {{1, 3}, {2, 3}, {3, 1}};
  if (body == "O") return {{1, 2}, {2, 3}, {3, 2}, {4, 1}};
  if (body == "I") return {{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}};
  const int n = std::stoi(body.substr(1));
  return {{1, 4}, {2, n - 1}};
}

inline TypeMultiset polyhedral_irrep_type(const std::string& g) {
  if (g == "A4") return {{1, 3}, {3, 1}};
  if (g == "S4") return {{1, 2}, {2, 1}, {3, 2}};
  if (g == "A5") return {{1, 1}, {3, 2}, {4, 1}, {5, 1}};
  const int n = std::stoi(g.substr(1));
  if (n % 2) return {{1, 2}, {2, (n - 1) / 2}};
  if (n == 2) return {{1, 4}};
  return {{1, 4}, {2, n / 2 - 1}};
}

inline int binary_order(const std::string& body) {
  if (body == "T") return 24;
  if (body == "O") return 48;
  if (body == "I") return 120;
  return 4 * std::stoi(body.substr(1));
}

inline int polyhedral_order(const std::string& g) {
  if (g == "A4") return 12;
  if (g == "S4") return 24;
  if (g == "A5") return 60;
  return 2 * std::stoi(g.substr(1));
}

inline std::string reference_name(const std::string& deformation) {
  return deformation == "H8" ? "FUN2D2" : "FUN2" + deformation.substr(2);
}

}  // namespace detail

/// Algebra and coalgebra types known in closed form for catalog names.
inline ExpectedTypes expected_types(const std::string& name) {
  static const std::regex def_re("^([AB])2(D(\\d+)|T|O|I)$");
  static const std::regex bin_re("^(FUN|GRP)2(D\\d+|T|O|I)$");
  static const std::regex poly_re("^(FUN|GRP)(D\\d+|A4|S4|A5)$");
  std::smatch m;
  ExpectedTypes e;
  if (name == "H8") {
    e.algebra = e.coalgebra = TypeMultiset{{1, 4}, {2, 1}};
  } else if (std::regex_match(name, m, def_re)) {
    const std::string body = m[2].str();
    e.coalgebra = detail::binary_irrep_type(body);
    if (body[0] == 'D') {
      e.algebra = TypeMultiset{{1, 4}, {2, std::stoi(m[3].str()) - 1}};
    } else {
      const std::string key = m[1].str() + body;
      if (key == "AT") e.algebra = TypeMultiset{{1, 4}, {2, 5}};
      if (key == "BT") e.algebra = TypeMultiset{{1, 8}, {2, 4}};
      if (key == "AO") e.algebra = TypeMultiset{{1, 8}, {2, 10}};
      if (key == "BO") e.algebra = TypeMultiset{{1, 16}, {2, 8}};
      if (key == "BI") e.algebra = TypeMultiset{{1, 8}, {2, 28}};
    }
  } else if (std::regex_match(name, m, bin_re)) {
    const TypeMultiset irr = detail::binary_irrep_type(m[2].str());
    const TypeMultiset flat{{1, detail::binary_order(m[2].str())}};
    e.coalgebra = m[1].str() == "FUN" ? irr : flat;
    e.algebra = m[1].str() == "FUN" ? flat : irr;
  } else if (std::regex_match(name, m, poly_re)) {
    const TypeMultiset irr = detail::polyhedral_irrep_type(m[2].str());
    const TypeMultiset flat{{1, detail::polyhedral_order(m[2].str())}};
    e.coalgebra = m[1].str() == "FUN" ? irr : flat;
    e.algebra = m[1].str() == "FUN" ? flat : irr;
  } else if (name == "TWA5") {
    e.coalgebra = TypeMultiset{{1, 12}, {4, 3}};
    e.algebra = TypeMultiset{{1, 1}, {3, 2}, {4, 1}, {5, 1}};
  } else if (name == "TWD3D5") {
    e.coalgebra = TypeMultiset{{1, 4}, {2, 6}, {4, 2}};
    e.algebra = TypeMultiset{{1, 4}, {2, 6}, {4, 2}};
  }
  return e;
}

/// Classical indicator (1/|G|) sum_g chi(g^2) for characters given as functions on G.
inline std::vector<int> classical_fs(const ComoduleData& cd, const FinGroup& g) {
  std::vector<int> out;
  const PrimeField f{cd.q};
  const Fq inv_order = f.from_int(g.n).inverse();
  for (const auto& s : cd.simples) {
    Fq sum = f.zero();
    for (int x = 0; x < g.n; ++x) sum += s.character[g.mul(x, x)];
    out.push_back(indicator_value(sum * inv_order));
  }
  return out;
}

inline SuiteResult suite_axioms(const CatalogEntry& e) {
  SuiteResult r{"axioms", e.name, {}, {}};
  const AxiomReport a = verify_axioms(*e.H);
  r.add("associativity", a.assoc, a.first_failure);
  r.add("unit", a.unit);
  r.add("coassociativity", a.coassoc);
  r.add("counit", a.counit);
  r.add("Delta multiplicative", a.bialgebra);
  r.add("antipode", a.antipode);
  r.add("S^2 = id", a.antipode_sq_id);
  return r;
}

inline SuiteResult suite_types(const CatalogEntry& e, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  SuiteResult r{"types", e.name, {}, {}};
  const TypeMultiset alg = algebra_type(*e.H, seed, prime);
  const TypeMultiset coalg = coalgebra_type(*e.H, seed, prime);
  r.add("sum n_i d_i^2 = dim (algebra)", type_dim(alg) == e.H->dim, type_str(alg));
  r.add("sum n_i d_i^2 = dim (coalgebra)", type_dim(coalg) == e.H->dim, type_str(coalg));
  const ExpectedTypes ex = expected_types(e.name);
  if (ex.algebra)
    r.add("algebra type " + type_str(*ex.algebra), alg == *ex.algebra, "computed " + type_str(alg));
  if (ex.coalgebra)
    r.add("coalgebra type " + type_str(*ex.coalgebra), coalg == *ex.coalgebra, "computed " + type_str(coalg));
  if (e.kind == "deformation") {
    const int ones = alg.empty() || alg.front().first != 1 ? 0 : alg.front().second;
    r.add("2p = 2 |Gamma^theta|", ones == 2 * e.fixed_order,
          "2p = " + std::to_string(ones) + ", |Gamma^theta| = " + std::to_string(e.fixed_order));
  }
  if (!ex.algebra && !ex.coalgebra) r.notes.push_back("no closed-form type for " + e.name);
  return r;
}

inline SuiteResult suite_fusion(const CatalogEntry& e, std::uint64_t seed = 0) {
  SuiteResult r{"fusion", e.name, {}, {}};
  const FusionRing R = fusion_ring(simple_comodules(*e.H, seed, 0, false));
  r.add("structure constants nonnegative", R.nonnegative());
  r.add("associative", R.is_associative());
  r.add("unit law", R.unit_law());
  r.add("duality law N_ab^1 = [b = a*]", R.duality_law());
  bool involution = true;
  for (int a = 0; a < R.n; ++a) involution = involution && R.dual[R.dual[a]] == a;
  r.add("duality is an involution", involution);
  r.add("degrees multiplicative", R.degrees_multiplicative());
  if (e.kind == "deformation") {
    const std::string ref = detail::reference_name(e.name);
    const FusionRing S = fusion_ring(simple_comodules(*catalog(ref).H, seed, 0, false));
    r.add("fusion rules isomorphic to " + ref, fusion_iso(R, S).has_value());
  }
  return r;
}

inline SuiteResult suite_fs(const CatalogEntry& e, std::uint64_t seed = 0) {
  SuiteResult r{"fs", e.name, {}, {}};
  const ComoduleData cd = simple_comodules(*e.H, seed);
  const std::vector<int> nu = fs_indicators(cd);
  int agree = 0;
  std::string mismatch;
  for (std::size_t i = 0; i < cd.simples.size(); ++i) {
    const auto& s = cd.simples[i];
    const FormKind k = invariant_form(cd.Hq, s.alpha, s.degree).kind;
    const bool ok = (nu[i] == 1 && k == FormKind::symmetric) || (nu[i] == -1 && k == FormKind::skew) ||
                    (nu[i] == 0 && k == FormKind::none);
    if (ok)
      ++agree;
    else if (mismatch.empty())
      mismatch = "simple " + std::to_string(i) + " nu " + std::to_string(nu[i]) + " form " + form_kind_name(k);
  }
  r.add("indicator matches invariant form", agree == static_cast<int>(cd.simples.size()),
        std::to_string(agree) + "/" + std::to_string(cd.simples.size()) + (mismatch.empty() ? "" : "; " + mismatch));
  if (e.alpha.size() == 4) {
    const int k = detail::locate_two_dim(cd, &e.alpha, e.H->field.conductor);
    const int want = e.kind == "deformation" ? 1 : -1;
    r.add("distinguished comodule has nu = " + std::to_string(want), k >= 0 && nu[k] == want,
          k >= 0 ? "nu = " + std::to_string(nu[k]) : "not found");
  }
  if (e.kind == "function" || e.kind == "group") {
    const ComoduleData& side = cd;
    std::optional<ComoduleData> dual_side;
    if (e.kind == "group") dual_side = simple_comodules(dual(cd.Hq), seed, false);
    const ComoduleData& use = e.kind == "group" ? *dual_side : side;
    const std::vector<int> hopf = e.kind == "group" ? fs_indicators(use) : nu;
    r.add("classical (1/|G|) sum chi(g^2) agrees", classical_fs(use, e.gamma) == hopf);
  }
  return r;
}

inline SuiteResult suite_exact(const CatalogEntry& e, std::uint64_t seed = 0) {
  SuiteResult r{"exact", e.name, {}, {}};
  if (e.kind != "deformation") {
    r.notes.push_back("no abelian exact sequence attached to " + e.kind + " instances");
    return r;
  }
  const HopfQ& H = *e.H;
  Subspace<CycNumber> K(H.dim, H.field);
  for (int i = 0; i < e.K->dim; ++i) K.insert(e.iota->column(i));
  const ExactnessReport ex = exactness_check(K, *e.p);
  r.add("iota injective", ex.iota_injective && static_cast<int>(K.dim()) == e.K->dim);
  r.add("iota is a Hopf map", e.iota->is_algebra_map() && e.iota->is_coalgebra_map());
  r.add("p is a Hopf map", e.p->is_algebra_map() && e.p->is_coalgebra_map());
  r.add("p surjective", ex.p_surjective);
  r.add("p iota = eps", ex.p_iota_trivial);
  r.add("iota(k^Gamma) = H^{co p}", ex.K_is_coinvariants, "dim H^{co p} = " + std::to_string(ex.dim_coinvariants));
  r.add("ker p = H iota(k^Gamma)^+", ex.ker_p_is_HKplus);
  r.add("p cocentral", is_cocentral(*e.p));
  const TheoremReport se = verify_short_exact(H, &e.alpha, seed);
  r.absorb(se);
  for (const auto& c : se.claims) {
    if (c.claim == "M cyclic") r.add("M = Z2", c.witness == "m = 2", c.witness);
    if (c.claim == "H_coad = k^Gamma")
      r.add("H_coad reconstructs Gamma = " + detail::group_label(e.gamma), c.witness == detail::group_label(e.gamma),
            c.witness);
  }
  r.absorb(central_grouplike_checks(H, seed));
  return r;
}

inline SuiteResult suite_sl2(const CatalogEntry& e) {
  SuiteResult r{"sl2", e.name, {}, {}};
  if (e.alpha.size() != 4) {
    r.notes.push_back("no distinguished 2-dimensional comodule");
    return r;
  }
  const HopfQ& H = *e.H;
  const InvariantForm<CycNumber> f = invariant_form(H, e.alpha, 2);
  const FormKind want = e.kind == "deformation" ? FormKind::symmetric : FormKind::skew;
  r.add("invariant form E is " + form_kind_name(want), f.kind == want, form_kind_name(f.kind));
  if (f.kind == FormKind::symmetric || f.kind == FormKind::skew) {
    const BERelations be = be_relations_check(H, e.alpha, 2, f.E, f.kind);
    r.add("tA E A = E", be.left);
    r.add("A E^-1 tA E = I", be.right);
    r.add("S(A) = E^-1 tA E", be.antipode);
    if (f.kind == FormKind::skew) r.add("entries commute, ad - bc = 1", be.skew_commutative_sl2);
  }
  if (e.kind == "deformation") {
    const SL2Verification v = minus_one_sl2_verify(H, e.alpha);
    r.add("hyperbolic basis over F_" + std::to_string(v.q), v.hyperbolic);
    r.add("ba = -ab, ca = -ac, db = -bd, dc = -cd",
          v.relations.ba_anti && v.relations.ca_anti && v.relations.db_anti && v.relations.dc_anti);
    r.add("bc = cb, ad = da", v.relations.bc_commute && v.relations.ad_commute);
    r.add("ad + bc = 1", v.relations.ad_plus_bc);
    r.add("antipode of O_-1[SL2]", v.relations.antipode_pattern);
  }
  return r;
}

inline SuiteResult suite_theorems(const CatalogEntry& e, std::uint64_t seed = 0) {
  SuiteResult r{"theorems", e.name, {}, {}};
  const auto* alpha = e.alpha.size() == 4 ? &e.alpha : nullptr;
  auto run = [&](auto&& fn) {
    try {
      r.absorb(fn());
    } catch (const PreconditionError& ex) {
      r.notes.push_back(ex.what());
    }
  };
  run([&] { return verify_nr_theorem(*e.H, alpha, seed); });
  run([&] { return verify_short_exact(*e.H, alpha, seed); });
  if (e.kind == "twist")
    r.notes.push_back("central_grouplike: stated for deformations and binary polyhedral groups only");
  else
    run([&] { return central_grouplike_checks(*e.H, seed); });
  run([&] { return degree_two_structure(*e.H, seed); });
  return r;
}

inline SuiteResult run_suite(const std::string& suite, const CatalogEntry& e, std::uint64_t seed = 0,
                             std::uint32_t prime = 0) {
  if (suite == "axioms") return suite_axioms(e);
  if (suite == "types") return suite_types(e, seed, prime);
  if (suite == "fusion") return suite_fusion(e, seed);
  if (suite == "fs") return suite_fs(e, seed);
  if (suite == "exact") return suite_exact(e, seed);
  if (suite == "sl2") return suite_sl2(e);
  if (suite == "theorems") return suite_theorems(e, seed);
  throw std::invalid_argument("unknown suite " + suite);
}

}  // namespace polyhopf

#endif  // POLYHOPF_SUITES_HPP
