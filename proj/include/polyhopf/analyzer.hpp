#ifndef POLYHOPF_ANALYZER_HPP
#define POLYHOPF_ANALYZER_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf.hpp"
#include "reptheory.hpp"

namespace polyhopf {

struct Claim {
  std::string claim;
  bool pass = false;
  std::string witness;
};

struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::uint32_t q = 0;
  std::vector<Claim> claims;

  void add(std::string claim, bool pass, std::string witness = {}) {
    claims.push_back({std::move(claim), pass, std::move(witness)});
  }
  bool all() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return !claims.empty();
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : claims)
      if (!c.pass) out.push_back(c.claim);
    return out;
  }
};

class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string group_label(const FinGroup& g) {
  auto m = catalog_match(g);
  return m ? *m : "order " + std::to_string(g.n);
}

inline Subspace<Fq> antipode_image(const HopfAlg<Fq>& H, const Subspace<Fq>& C) {
  Subspace<Fq> out(H.dim, H.field);
  for (const auto& v : C.basis()) out.insert(H.S(v));
  return out;
}

/// k[C S(C)].
inline Subspace<Fq> c_sc_subalgebra(const HopfAlg<Fq>& H, const Subspace<Fq>& C) {
  const Subspace<Fq> SC = antipode_image(H, C);
  Subspace<Fq> prods(H.dim, H.field);
  for (const auto& a : C.basis())
    for (const auto& b : SC.basis()) prods.insert(H.mul(a, b));
  return subalgebra_generated(H, prods);
}

/// Subalgebra generated by C S(C) over every simple subcoalgebra C.
inline Subspace<Fq> adjoint_subalgebra(const ComoduleData& cd) {
  const auto& H = cd.Hq;
  Subspace<Fq> prods(H.dim, H.field);
  for (std::size_t k = 0; k < cd.simples.size(); ++k) {
    const Subspace<Fq> C = cd.coefficient_space(static_cast<int>(k));
    const Subspace<Fq> SC = antipode_image(H, C);
    for (const auto& a : C.basis())
      for (const auto& b : SC.basis()) prods.insert(H.mul(a, b));
  }
  return subalgebra_generated(H, prods);
}

inline bool is_commutative_subspace(const HopfAlg<Fq>& H, const Subspace<Fq>& W) {
  const auto& B = W.basis();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!(H.mul(B[i], B[j]) == H.mul(B[j], B[i]))) return false;
  return true;
}

/// H -> H / I with I a Hopf ideal, as a map onto quotient_hopf's basis.
struct QuotientMap {
  std::shared_ptr<HopfAlg<Fq>> Q;
  HopfMap<Fq> p;
};

inline QuotientMap quotient_map(const HopfAlg<Fq>& H, const Subspace<Fq>& I) {
  QuotientMap out;
  out.Q = std::make_shared<HopfAlg<Fq>>(quotient_hopf(H, I, "H/I"));
  std::vector<char> is_piv(H.dim, 0);
  for (auto p : I.pivots()) is_piv[p] = 1;
  std::vector<int> keep;
  for (int i = 0; i < H.dim; ++i)
    if (!is_piv[i]) keep.push_back(i);
  out.p = HopfMap<Fq>{&H, out.Q.get(), Matrix<Fq>(keep.size(), H.dim, H.field.zero())};
  for (int i = 0; i < H.dim; ++i) {
    Vec<Fq> v = H.basis_vec(i);
    I.reduce(v);
    for (std::size_t r = 0; r < keep.size(); ++r) out.p.mat(r, i) = v[keep[r]];
  }
  return out;
}

/// A 2-dim simple comodule: the one spanned by alpha when given, else the
/// first self-dual generating one, else the first generating one.
inline int locate_two_dim(const ComoduleData& cd, const std::vector<Vec<CycNumber>>* alpha, int conductor) {
  const auto& H = cd.Hq;
  if (alpha && !alpha->empty()) {
    const Embedding emb = fq_embed(conductor, cd.q);
    std::vector<Vec<Fq>> a;
    for (const auto& v : *alpha) a.push_back(reduce_vec(v, emb));
    const Subspace<Fq> target = span(H, a);
    for (int k : cd.of_degree(2))
      if (cd.coefficient_space(k) == target) return k;
    return -1;
  }
  int fallback = -1;
  for (int k : cd.of_degree(2)) {
    const Subspace<Fq> C = cd.coefficient_space(k);
    if (static_cast<int>(subalgebra_generated(H, C).dim()) != H.dim) continue;
    if (antipode_image(H, C) == C) return k;
    if (fallback < 0) fallback = k;
  }
  return fallback;
}

inline std::uint32_t pick_prime(const HopfQ& H, std::uint32_t prime) { return prime ? prime : default_prime(H); }

}  // namespace detail

/// B = k[C S(C)] is a commutative Hopf subalgebra k^Gamma, and the |G[chi]| case split.
inline TheoremReport verify_nr_theorem(const HopfQ& H, const std::vector<Vec<CycNumber>>* alpha = nullptr,
                                       std::uint64_t seed = 0, std::uint32_t prime = 0) {
  TheoremReport rep;
  rep.theorem = "nr";
  rep.instance = H.name;
  rep.q = detail::pick_prime(H, prime);
  const HopfAlg<Fq> Hq = modularize(H, rep.q);
  const ComoduleData cd = simple_comodules(Hq, seed, true);
  const int k = detail::locate_two_dim(cd, alpha, H.field.conductor);
  if (k < 0) throw PreconditionError("verify_nr_theorem: no 4-dimensional simple subcoalgebra");
  const Subspace<Fq> C = cd.coefficient_space(k);
  const Subspace<Fq> B = detail::c_sc_subalgebra(Hq, C);
  const bool hopf = is_hopf_subalgebra(Hq, B);
  const bool comm = detail::is_commutative_subspace(Hq, B);
  rep.add("B = k[C S(C)] is a Hopf subalgebra", hopf, "dim B = " + std::to_string(B.dim()));
  rep.add("B is commutative", comm);
  if (!hopf || !comm) return rep;
  const FinGroup gamma = group_reconstruct(sub_hopf(Hq, B, "B"), seed);
  const std::string gname = detail::group_label(gamma);
  rep.add("Gamma has order dim B", gamma.n == static_cast<int>(B.dim()), std::to_string(gamma.n));
  rep.add("Gamma is non-cyclic of even order", gamma.n % 2 == 0 && !is_cyclic(gamma), gname);
  const auto G = stabilizer_G_chi(cd, cd.simples[k].character);
  const int g = static_cast<int>(G.size());
  rep.add("|G[chi]| divides 4", 4 % g == 0, std::to_string(g));
  if (g == 4) {
    rep.add("case (i): Gamma = Z2 x Z2", gname == "D2", gname);
  } else if (g == 2) {
    rep.add("case (ii): Gamma = D_n", gname.size() > 1 && gname[0] == 'D', gname);
  } else if (g == 1) {
    rep.add("case (iii): Gamma in {A4, S4, A5}", gname == "A4" || gname == "S4" || gname == "A5", gname);
  }
  return rep;
}

/// Smallest n >= 1 with the trivial comodule in V^{(x) n}, or 0 past the cutoff.
inline int comodule_order(const HopfAlg<Fq>& H, const Vec<Fq>& chi, int cutoff) {
  const Vec<Fq> L = dual_integral(H);
  Vec<Fq> p = chi;
  for (int n = 1; n <= cutoff; ++n) {
    Fq m = H.field.zero();
    for (int j = 0; j < H.dim; ++j)
      if (!p[j].is_zero()) m += p[j] * L[j];
    if (!m.is_zero()) return n;
    p = H.mul(p, chi);
  }
  return 0;
}

/// Cocentral abelian exact sequence k -> k^Gamma -> H -> kZ_m -> k with m | order(V).
inline TheoremReport verify_short_exact(const HopfQ& H, const std::vector<Vec<CycNumber>>* alpha = nullptr,
                                        std::uint64_t seed = 0, std::uint32_t prime = 0) {
  TheoremReport rep;
  rep.theorem = "short_exact";
  rep.instance = H.name;
  rep.q = detail::pick_prime(H, prime);
  const HopfAlg<Fq> Hq = modularize(H, rep.q);
  const ComoduleData cd = simple_comodules(Hq, seed, true);
  const int k = detail::locate_two_dim(cd, alpha, H.field.conductor);
  if (k < 0) throw PreconditionError("verify_short_exact: no 2-dimensional comodule");
  const Subspace<Fq> C = cd.coefficient_space(k);
  if (static_cast<int>(subalgebra_generated(Hq, C).dim()) != Hq.dim)
    throw PreconditionError("verify_short_exact: V is not faithful");
  const Vec<Fq>& chi = cd.simples[k].character;
  const Vec<Fq> chi_star = Hq.S(chi);
  if (!(Hq.mul(chi, chi_star) == Hq.mul(chi_star, chi)))
    throw PreconditionError("verify_short_exact: chi chi* != chi* chi");
  const Subspace<Fq> Hcoad = detail::adjoint_subalgebra(cd);
  const Subspace<Fq> B = detail::c_sc_subalgebra(Hq, C);
  rep.add("H_coad = k[C S(C)]", Hcoad == B, "dim " + std::to_string(Hcoad.dim()));
  const bool hopf = is_hopf_subalgebra(Hq, Hcoad);
  const bool comm = detail::is_commutative_subspace(Hq, Hcoad);
  const bool normal = hopf && is_normal(Hq, Hcoad);
  rep.add("H_coad is a commutative Hopf subalgebra", hopf && comm);
  rep.add("H_coad is normal", normal);
  if (!hopf || !comm || !normal) return rep;
  const FinGroup gamma = group_reconstruct(sub_hopf(Hq, Hcoad, "H_coad"), seed);
  rep.add("H_coad = k^Gamma", gamma.n == static_cast<int>(Hcoad.dim()), detail::group_label(gamma));
  const auto qm = detail::quotient_map(Hq, ideal_HKplus(Hq, Hcoad));
  const ExactnessReport ex = exactness_check(Hcoad, qm.p);
  rep.add("p surjective", ex.p_surjective);
  rep.add("p iota = eps", ex.p_iota_trivial);
  rep.add("K = H^{co p}", ex.K_is_coinvariants);
  rep.add("ker p = H K^+", ex.ker_p_is_HKplus);
  rep.add("p cocentral", is_cocentral(qm.p));
  const QuotientGroup M = quotient_group_algebra(Hq, Hcoad, seed);
  rep.add("M cyclic", M.cyclic, "m = " + std::to_string(M.M.n));
  const int ord = comodule_order(Hq, chi, Hq.dim);
  rep.add("m divides order(V)", ord > 0 && ord % M.M.n == 0, "order(V) = " + std::to_string(ord));
  return rep;
}

/// Central group-likes of order 2: in H* for non-cocommutative H, in H for group algebras.
inline TheoremReport central_grouplike_checks(const HopfQ& H, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  TheoremReport rep;
  rep.theorem = "central_grouplike";
  rep.instance = H.name;
  rep.q = detail::pick_prime(H, prime);
  const HopfAlg<Fq> Hq = modularize(H, rep.q);
  const bool on_h = H.is_cocommutative();
  const HopfAlg<Fq> A = on_h ? Hq : dual(Hq);
  const GrouplikeSet gs = grouplikes(A, seed);
  int found = -1;
  for (std::size_t i = 0; i < gs.size() && found < 0; ++i) {
    if (gs.group.element_order(static_cast<int>(i)) != 2) continue;
    bool central = true;
    for (int b = 0; b < A.dim && central; ++b) {
      const Vec<Fq> e = A.basis_vec(b);
      central = A.mul(gs.modq[i], e) == A.mul(e, gs.modq[i]);
    }
    if (central) found = static_cast<int>(i);
  }
  rep.add(on_h ? "H has a central group-like of order 2" : "H* has a central group-like of order 2", found >= 0,
          "|G| = " + std::to_string(gs.size()));
  return rep;
}

/// Structure of Hopf algebras whose irreducible characters have degree <= 2,
/// on H when its comodules have degree <= 2, else on H* (the module side).
inline TheoremReport degree_two_structure(const HopfQ& H, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  TheoremReport rep;
  rep.theorem = "degree_two";
  rep.instance = H.name;
  rep.q = detail::pick_prime(H, prime);
  const HopfAlg<Fq> Hq = modularize(H, rep.q);
  auto max_degree = [](const ComoduleData& cd) {
    int m = 0;
    for (const auto& s : cd.simples) m = std::max(m, s.degree);
    return m;
  };
  ComoduleData cd = simple_comodules(Hq, seed, true);
  std::string side = "H";
  if (max_degree(cd) > 2) {
    cd = simple_comodules(dual(Hq), seed, true);
    side = "H*";
    if (max_degree(cd) > 2) throw PreconditionError("degree_two_structure: characters of degree > 2 on both sides");
  }
  const HopfAlg<Fq>& A = cd.Hq;
  rep.add("irreducible characters of degree <= 2", true, side);
  const Subspace<Fq> B = detail::adjoint_subalgebra(cd);
  const bool hopf = is_hopf_subalgebra(A, B);
  rep.add("B = A_coad is a Hopf subalgebra", hopf, "dim " + std::to_string(B.dim()));
  if (!hopf) return rep;
  const HopfAlg<Fq> Bh = sub_hopf(A, B, "B");
  // Central group-likes of B of order <= 2.
  const GrouplikeSet gs = grouplikes(Bh, seed);
  std::vector<Vec<Fq>> gamma;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs.group.element_order(static_cast<int>(i)) > 2) continue;
    bool central = true;
    for (int b = 0; b < Bh.dim && central; ++b) {
      const Vec<Fq> e = Bh.basis_vec(b);
      central = Bh.mul(gs.modq[i], e) == Bh.mul(e, gs.modq[i]);
    }
    if (central) gamma.push_back(gs.modq[i]);
  }
  const FinGroup G = group_of_elements(Bh, gamma, "Gamma");
  bool elementary = G.is_abelian();
  for (int a = 0; a < G.n; ++a) elementary = elementary && G.element_order(a) <= 2;
  const Subspace<Fq> kG = span(Bh, gamma);
  bool alt_i = false;
  if (elementary && G.n > 1) {
    const HopfAlg<Fq> Q = quotient_hopf(Bh, ideal_HKplus(Bh, kG), "B/B(kGamma)+");
    alt_i = Q.is_cocommutative();
  }
  const bool alt_ii = Bh.is_cocommutative();
  rep.add("(i) central kGamma with cocommutative quotient, or (ii) B cocommutative", alt_i || alt_ii,
          alt_i ? "(i) |Gamma| = " + std::to_string(G.n) : alt_ii ? "(ii)" : "neither");
  // Semisolvability witness: a commutative normal K (B itself or the central
  // kGamma, carried back into A) with cocommutative A / A K^+.
  auto chain_ok = [&](const Subspace<Fq>& K) {
    if (!detail::is_commutative_subspace(A, K) || !is_normal(A, K)) return false;
    return quotient_hopf(A, ideal_HKplus(A, K), "A/AK+").is_cocommutative();
  };
  Subspace<Fq> kGA(A.dim, A.field);
  for (const auto& g : gamma) {
    Vec<Fq> v = A.zero_vec();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!g[i].is_zero()) axpy(v, g[i], B.basis()[i]);
    kGA.insert(v);
  }
  const bool via_b = chain_ok(B);
  const bool via_g = !via_b && G.n > 1 && chain_ok(kGA);
  rep.add("chain k c K c A with K commutative normal and A / A K^+ cocommutative", via_b || via_g,
          via_b ? "K = B" : via_g ? "K = kGamma" : "none");
  return rep;
}

}  // namespace polyhopf

#endif  // POLYHOPF_ANALYZER_HPP
