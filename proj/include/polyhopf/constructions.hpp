#ifndef POLYHOPF_CONSTRUCTIONS_HPP
#define POLYHOPF_CONSTRUCTIONS_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "binary.hpp"
#include "builders.hpp"
#include "cocycle.hpp"
#include "reptheory.hpp"

namespace polyhopf {

struct Provenance {
  std::string gamma;
  std::vector<int> theta;      // permutation of Gamma
  std::vector<int> tau;        // tau_p(s, t) = i^{tau[s * n + t]}
  std::vector<int> beta;       // d beta = w o theta + w, beta o theta = beta
  std::vector<int> c;          // tau_p = (-1)^{omega0} dc with c(s) = i^{c[s]}
};

struct CatalogEntry {
  std::string name;
  std::string kind;  // deformation, function, group, twist
  std::shared_ptr<HopfQ> H;
  std::vector<Vec<CycNumber>> alpha;  // 2 x 2 distinguished coaction matrix, row-major; empty if none
  std::shared_ptr<HopfQ> K;           // k^Gamma, source of iota
  std::shared_ptr<HopfQ> Q;           // kZ2, target of p
  std::optional<HopfMap<CycNumber>> iota;
  std::optional<HopfMap<CycNumber>> p;
  std::optional<CentralExt> ext;
  FinGroup gamma;
  std::optional<GroupAut> theta;
  int fixed_order = 0;
  std::optional<Provenance> provenance;

  Vec<CycNumber> distinguished_character() const {
    if (alpha.size() != 4) throw std::logic_error("entry has no distinguished comodule");
    Vec<CycNumber> chi = alpha[0];
    axpy(chi, CycNumber(1), alpha[3]);
    return chi;
  }
};

/// Comultiplicative matrix check: Delta(alpha_ij) = sum_k alpha_ik (x) alpha_kj, eps(alpha_ij) = delta_ij.
template <class F>
bool is_comultiplicative(const HopfAlg<F>& H, const std::vector<Vec<F>>& alpha, int n) {
  auto A = [&](int i, int j) -> const Vec<F>& { return alpha[static_cast<std::size_t>(i) * n + j]; };
  const int d = H.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(H.eps(A(i, j)) == (i == j ? H.field.one() : H.field.zero()))) return false;
      std::vector<F> rhs(static_cast<std::size_t>(d) * d, H.field.zero());
      for (int k = 0; k < n; ++k) {
        const auto& x = A(i, k);
        const auto& y = A(k, j);
        for (int a = 0; a < d; ++a) {
          if (x[a].is_zero()) continue;
          for (int b = 0; b < d; ++b)
            if (!y[b].is_zero()) rhs[static_cast<std::size_t>(a) * d + b] += x[a] * y[b];
        }
      }
      if (!(H.Delta(A(i, j)) == rhs)) return false;
    }
  return true;
}

namespace detail {

inline std::string gamma_name(PolyKind kind, int n) {
  switch (kind) {
    case PolyKind::dihedral: return "D" + std::to_string(n);
    case PolyKind::tetra: return "T";
    case PolyKind::octa: return "O";
    case PolyKind::icosa: return "I";
    default: return "Z" + std::to_string(n);
  }
}

/// alpha_ij = x_ij # p with x(s) = i^{c(s)} u(s).
inline std::vector<Vec<CycNumber>> deformation_alpha(const CentralExt& ext, const ThetaLift& lift) {
  const int n = ext.base.n;
  const int N = ext.conductor;
  std::vector<Vec<CycNumber>> alpha(4, Vec<CycNumber>(2 * n, CycNumber::make(N, {})));
  for (int s = 0; s < n; ++s) {
    const CycNumber c = CycNumber::zeta(N, static_cast<long>(lift.c[s]) * (N / 4));
    const Mat2& u = ext.matrices[ext.section[s]];
    for (int k = 0; k < 4; ++k) alpha[k][bicrossed_index(n, s, 1)] = c * u.e[k];
  }
  return alpha;
}

}  // namespace detail

/// Deformation k^Gamma #_tau kZ2 for a theta lift, with iota, p and alpha.
inline CatalogEntry deformation_entry(const CentralExt& ext, const GroupAut& theta, const ThetaLift& lift,
                                      std::string name) {
  const FinGroup& G = ext.base;
  const int n = G.n;
  const int N = ext.conductor;
  CatalogEntry e;
  e.name = name;
  e.kind = "deformation";
  e.ext = ext;
  e.gamma = G;
  e.theta = theta;
  e.fixed_order = static_cast<int>(fixed_points(G, theta).size());
  e.H = std::make_shared<HopfQ>(bicrossed_build(G, theta, lift.tau.scalars(N), N, name));
  e.alpha = detail::deformation_alpha(ext, lift);
  e.K = std::make_shared<HopfQ>(function_algebra(G, N, "k^" + G.name));
  e.Q = std::make_shared<HopfQ>(group_algebra(cyclic_group(2), N, "kZ2"));
  const CycField f{N};
  HopfMap<CycNumber> iota{e.K.get(), e.H.get(), Matrix<CycNumber>(2 * n, n, f.zero())};
  for (int s = 0; s < n; ++s) iota.mat(bicrossed_index(n, s, 0), s) = f.one();
  HopfMap<CycNumber> p{e.H.get(), e.Q.get(), Matrix<CycNumber>(2, 2 * n, f.zero())};
  const FinGroup z2 = cyclic_group(2);
  for (int x = 0; x < 2; ++x) p.mat(x == 0 ? z2.identity : 1 - z2.identity, bicrossed_index(n, G.identity, x)) = f.one();
  e.iota = std::move(iota);
  e.p = std::move(p);
  Provenance pv;
  pv.gamma = G.name;
  pv.theta = theta.perm;
  for (auto v : lift.tau.t) pv.tau.push_back(v);
  for (auto v : lift.beta) pv.beta.push_back(v);
  pv.c = lift.c;
  e.provenance = std::move(pv);
  return e;
}

// ---------------------------------------------------------------------------
// Enumeration of deformations

struct Signature {
  TypeMultiset algebra, coalgebra;
  int grouplikes = 0, dual_grouplikes = 0;
  bool grouplikes_cyclic = false, dual_grouplikes_cyclic = false;
  std::vector<int> comodule_indicators, module_indicators;
  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;

  std::string str() const {
    auto ind = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    return "alg " + type_str(algebra) + " coalg " + type_str(coalgebra) + " G(H) " + std::to_string(grouplikes) +
           (grouplikes_cyclic ? "c" : "n") + " G(H*) " + std::to_string(dual_grouplikes) +
           (dual_grouplikes_cyclic ? "c" : "n") + " nu " + ind(comodule_indicators) + " nu* " + ind(module_indicators);
  }
};

struct FilterResult {
  bool noncommutative = false;
  bool has_self_dual_2 = false;  // a 4-dim simple subcoalgebra C with S(C) = C
  bool generates = false;        // ... and k[C] = H
  int distinguished = -1;        // index of such a simple comodule
  bool passes() const { return noncommutative && has_self_dual_2 && generates; }
  std::string reason() const {
    if (passes()) return "pass";
    if (!noncommutative) return "commutative";
    if (!has_self_dual_2) return "no self-dual 2-dim";
    return "no self-dual 2-dim generating H";
  }
};

inline FilterResult deformation_filter(const ComoduleData& cd) {
  FilterResult r;
  const auto& H = cd.Hq;
  r.noncommutative = !H.is_commutative();
  for (int k : cd.of_degree(2)) {
    const Subspace<Fq> C = cd.coefficient_space(k);
    Subspace<Fq> SC(H.dim, H.field);
    for (const auto& v : C.basis()) SC.insert(H.S(v));
    if (!(SC == C)) continue;
    r.has_self_dual_2 = true;
    if (static_cast<int>(subalgebra_generated(H, C).dim()) == H.dim) {
      r.generates = true;
      r.distinguished = k;
      break;
    }
  }
  return r;
}

inline Signature signature_of(const HopfQ& H, std::uint64_t seed = 0) {
  Signature s;
  const std::uint32_t q = default_prime(H);
  const HopfAlg<Fq> Hq = modularize(H, q);
  const ComoduleData co = simple_comodules(Hq, seed, false);
  const ComoduleData mo = simple_comodules(dual(Hq), seed, false);
  s.coalgebra = co.type();
  s.algebra = mo.type();
  const FinGroup g1 = group_of_elements(Hq, [&] {
    std::vector<Vec<Fq>> v;
    for (int k : co.of_degree(1)) v.push_back(co.simples[k].character);
    return v;
  }());
  const HopfAlg<Fq> Dq = dual(Hq);
  const FinGroup g2 = group_of_elements(Dq, [&] {
    std::vector<Vec<Fq>> v;
    for (int k : mo.of_degree(1)) v.push_back(mo.simples[k].character);
    return v;
  }());
  s.grouplikes = g1.n;
  s.dual_grouplikes = g2.n;
  s.grouplikes_cyclic = is_cyclic(g1);
  s.dual_grouplikes_cyclic = is_cyclic(g2);
  s.comodule_indicators = fs_indicators(co);
  s.module_indicators = fs_indicators(mo);
  std::sort(s.comodule_indicators.begin(), s.comodule_indicators.end());
  std::sort(s.module_indicators.begin(), s.module_indicators.end());
  return s;
}

struct DeformationCandidate {
  int class_index = 0;
  int class_size = 0;
  GroupAut theta;
  int fixed_order = 0;
  int lift_index = -1;
  bool stable = false;
  std::string error;
  FilterResult filter;
  std::optional<ThetaLift> lift;
  std::shared_ptr<HopfQ> H;
  std::optional<Signature> signature;
  bool passes() const { return stable && filter.passes(); }
};

struct Enumeration {
  CentralExt ext;
  std::vector<DeformationCandidate> candidates;
  std::vector<int> representatives;  // one passing candidate per distinct signature, in candidate order
  int count() const { return static_cast<int>(representatives.size()); }
  /// Theta classes with at least one passing candidate.
  std::vector<int> passing_classes() const {
    std::vector<int> out;
    for (const auto& c : candidates)
      if (c.passes() && std::find(out.begin(), out.end(), c.class_index) == out.end()) out.push_back(c.class_index);
    return out;
  }
};

/// Every (theta class, lift) pair, the noncommutative / self-dual / generating
/// filter, and the distinct invariant signatures among passing candidates.
inline Enumeration enumerate_deformations(PolyKind kind, int n = 0, int conductor = 0, std::uint64_t seed = 0) {
  if (kind == PolyKind::cyclic) throw std::invalid_argument("enumerate_deformations: cyclic groups are excluded");
  Enumeration en;
  en.ext = binary_cover(kind, n, conductor);
  const FinGroup& G = en.ext.base;
  const Cocycle2F2 w0 = extension_cocycle(en.ext);
  const auto classes = order2_classes(G);
  std::vector<Signature> seen;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const GroupAut& theta = classes[ci].front();
    std::vector<ThetaLift> lifts;
    DeformationCandidate base;
    base.class_index = static_cast<int>(ci);
    base.class_size = static_cast<int>(classes[ci].size());
    base.theta = theta;
    base.fixed_order = static_cast<int>(fixed_points(G, theta).size());
    try {
      lifts = theta_lifts(G, w0, theta);
    } catch (const std::runtime_error& ex) {
      base.error = ex.what();
      en.candidates.push_back(base);
      continue;
    }
    for (std::size_t li = 0; li < lifts.size(); ++li) {
      DeformationCandidate c = base;
      c.lift_index = static_cast<int>(li);
      c.stable = true;
      c.lift = lifts[li];
      c.H = std::make_shared<HopfQ>(
          bicrossed_build(G, theta, lifts[li].tau.scalars(en.ext.conductor), en.ext.conductor));
      const ComoduleData cd = simple_comodules(*c.H, seed);
      c.filter = deformation_filter(cd);
      if (c.filter.passes()) {
        c.signature = signature_of(*c.H, seed);
        if (std::find(seen.begin(), seen.end(), *c.signature) == seen.end()) {
          seen.push_back(*c.signature);
          en.representatives.push_back(static_cast<int>(en.candidates.size()));
        }
      }
      en.candidates.push_back(std::move(c));
    }
  }
  return en;
}

// ---------------------------------------------------------------------------
// Named catalog

inline std::vector<Vec<CycNumber>> matrix_coefficients(const CentralExt& ext) {
  const int m = ext.cover.n;
  std::vector<Vec<CycNumber>> alpha(4, Vec<CycNumber>(m, CycNumber::make(ext.conductor, {})));
  for (int g = 0; g < m; ++g)
    for (int k = 0; k < 4; ++k) alpha[k][g] = ext.matrices[g].e[k];
  return alpha;
}

struct GroupSpec {
  bool binary = false;
  PolyKind kind = PolyKind::cyclic;
  int n = 0;
};

/// "2T", "2D5", "T", "D5", "Z4", "A4", "S4", "A5".
inline std::optional<GroupSpec> parse_group_spec(const std::string& s) {
  static const std::regex re("^(2?)(D(\\d+)|Z(\\d+)|T|O|I)$");
  std::smatch m;
  if (s == "A4") return GroupSpec{false, PolyKind::tetra, 0};
  if (s == "S4") return GroupSpec{false, PolyKind::octa, 0};
  if (s == "A5") return GroupSpec{false, PolyKind::icosa, 0};
  if (!std::regex_match(s, m, re)) return std::nullopt;
  GroupSpec g;
  g.binary = !m[1].str().empty();
  const std::string body = m[2].str();
  if (body[0] == 'D') {
    g.kind = PolyKind::dihedral;
    g.n = std::stoi(m[3].str());
    if (g.n < 2) return std::nullopt;
  } else if (body[0] == 'Z') {
    g.kind = PolyKind::cyclic;
    g.n = std::stoi(m[4].str());
    if (g.binary || g.n < 1) return std::nullopt;
  } else {
    g.kind = body == "T" ? PolyKind::tetra : body == "O" ? PolyKind::octa : PolyKind::icosa;
  }
  return g;
}

namespace detail {

inline int theta_rank(const std::string& label) { return label == "A" ? 0 : 1; }

/// A / B assignment among the distinct passing deformations of Gamma.
inline std::vector<std::pair<std::string, int>> deformation_labels(const Enumeration& en) {
  std::vector<int> reps = en.representatives;
  std::vector<std::pair<std::string, int>> out;
  const PolyKind kind = en.ext.kind;
  if (kind == PolyKind::dihedral && en.ext.n == 2) {
    if (!reps.empty()) {
      out.emplace_back("A", reps[0]);
      out.emplace_back("B", reps[0]);
    }
    return out;
  }
  if (kind == PolyKind::icosa) {
    if (!reps.empty()) out.emplace_back("B", reps[0]);
    return out;
  }
  if (kind == PolyKind::tetra || kind == PolyKind::octa) {
    std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
      return en.candidates[a].fixed_order < en.candidates[b].fixed_order;
    });
  } else {
    std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
      const auto& x = en.candidates[a];
      const auto& y = en.candidates[b];
      return std::tie(x.theta.perm, x.lift_index) < std::tie(y.theta.perm, y.lift_index);
    });
  }
  if (reps.size() > 0) out.emplace_back("A", reps[0]);
  if (reps.size() > 1) out.emplace_back("B", reps[1]);
  return out;
}

}  // namespace detail

/// Catalog names: A2Dn, B2Dn (n >= 2), A2T, B2T, A2O, B2O, B2I, H8,
/// FUN<g> and GRP<g> for g in {2Dn, 2T, 2O, 2I, Dn, T, O, I, Zn, A4, S4, A5},
/// TWA5 = (kA5)^J and TWD3D5 = (k(D3 x D5))^J.
inline CatalogEntry catalog(const std::string& name, int conductor = 0, std::uint64_t seed = 0) {
  static const std::regex def_re("^([AB])2(D(\\d+)|T|O|I)$");
  std::smatch m;
  if (name == "H8") {
    CatalogEntry e = catalog("A2D2", conductor, seed);
    e.name = "H8";
    e.H->name = "H8";
    return e;
  }
  if (std::regex_match(name, m, def_re)) {
    const std::string label = m[1].str();
    const std::string body = m[2].str();
    PolyKind kind = body[0] == 'D' ? PolyKind::dihedral
                    : body == "T"  ? PolyKind::tetra
                    : body == "O"  ? PolyKind::octa
                                   : PolyKind::icosa;
    const int n = kind == PolyKind::dihedral ? std::stoi(m[3].str()) : 0;
    if (kind == PolyKind::dihedral && n < 2) throw std::invalid_argument("catalog: unknown name " + name);
    const Enumeration en = enumerate_deformations(kind, n, conductor, seed);
    for (const auto& [l, idx] : detail::deformation_labels(en))
      if (l == label) {
        const auto& c = en.candidates[idx];
        return deformation_entry(en.ext, c.theta, *c.lift, name);
      }
    throw std::invalid_argument("catalog: unknown name " + name);
  }
  if (name == "TWA5") {
    const FinGroup g = alternating_group(5);
    // Klein subgroup {e, (12)(34), (13)(24), (14)(23)} located by cycle type on the sorted permutation list.
    std::vector<Perm> elems;
    group_from_permutations({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "A5", &elems);
    std::vector<int> klein;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Perm& p = elems[i];
      const bool fixes4 = p[4] == 4;
      bool involution = true;
      for (int x = 0; x < 5; ++x) involution = involution && p[p[x]] == x;
      if (fixes4 && involution) klein.push_back(static_cast<int>(i));
    }
    CatalogEntry e;
    e.name = name;
    e.kind = "twist";
    e.gamma = g;
    e.H = std::make_shared<HopfQ>(twist_group_algebra(g, klein, "(kA5)^J"));
    return e;
  }
  if (name == "TWD3D5") {
    const FinGroup d3 = dihedral_group(3), d5 = dihedral_group(5);
    const FinGroup g = direct_product(d3, d5);
    // Reflections s = n (index k + n*f with k = 0, f = 1) in each factor; product index a * |D5| + b.
    const int r3 = 3, r5 = 5;
    const int e3 = d3.identity, e5 = d5.identity;
    std::vector<int> klein = {e3 * d5.n + e5, r3 * d5.n + e5, e3 * d5.n + r5, r3 * d5.n + r5};
    CatalogEntry e;
    e.name = name;
    e.kind = "twist";
    e.gamma = g;
    e.H = std::make_shared<HopfQ>(twist_group_algebra(g, klein, "(k(D3xD5))^J"));
    return e;
  }
  if (name.rfind("FUN", 0) == 0 || name.rfind("GRP", 0) == 0) {
    const bool fun = name[0] == 'F';
    auto spec = parse_group_spec(name.substr(3));
    if (!spec) throw std::invalid_argument("catalog: unknown name " + name);
    CatalogEntry e;
    e.name = name;
    e.kind = fun ? "function" : "group";
    if (spec->binary) {
      CentralExt ext = binary_cover(spec->kind, spec->n, conductor);
      e.gamma = ext.cover;
      e.H = std::make_shared<HopfQ>(fun ? function_algebra(ext.cover, ext.conductor, "k^" + ext.name())
                                        : group_algebra(ext.cover, ext.conductor, "k" + ext.name()));
      if (fun) e.alpha = matrix_coefficients(ext);
      e.ext = std::move(ext);
    } else {
      FinGroup g = polyhedral(spec->kind, spec->n);
      const int N = conductor > 0 ? conductor : 1;
      e.H = std::make_shared<HopfQ>(fun ? function_algebra(g, N, "k^" + g.name) : group_algebra(g, N, "k" + g.name));
      e.gamma = std::move(g);
    }
    return e;
  }
  throw std::invalid_argument("catalog: unknown name " + name);
}

/// Acceptance catalog: both labeled D_n classes for n = 2..8, the T/O/I
/// deformations, references, H8 and the two twists.
inline std::vector<std::string> acceptance_catalog() {
  std::vector<std::string> out;
  for (int n = 2; n <= 8; ++n) {
    out.push_back("A2D" + std::to_string(n));
    out.push_back("B2D" + std::to_string(n));
  }
  for (const char* s : {"A2T", "B2T", "A2O", "B2O", "B2I", "FUN2T", "FUN2O", "FUN2I", "GRP2T", "H8", "TWA5", "TWD3D5"})
    out.push_back(s);
  return out;
}

}  // namespace polyhopf

#endif  // POLYHOPF_CONSTRUCTIONS_HPP
