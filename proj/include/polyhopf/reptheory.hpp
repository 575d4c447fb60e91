#ifndef POLYHOPF_REPTHEORY_HPP
#define POLYHOPF_REPTHEORY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groups.hpp"
#include "hopf.hpp"
#include "polyfq.hpp"
#include "wedderburn.hpp"

namespace polyhopf {

// ---------------------------------------------------------------------------
// Prime selection

/// Prime used when mod-q results must be lifted back to Q(zeta_N).
inline std::uint32_t lift_prime(const HopfQ& H) { return default_prime(H, 1u << 20); }

/// Runs fn(q) at the requested prime, or at the default prime advancing on
/// split failures when no prime was requested.
template <class Fn>
auto with_prime(const HopfQ& H, std::uint32_t prime, Fn&& fn, int attempts = 8) {
  std::uint32_t q = prime ? prime : default_prime(H);
  for (int a = 1;; ++a) {
    try {
      return fn(q);
    } catch (const SplitFailure&) {
      if (prime || a >= attempts) throw;
      q = default_prime(H, q);
    }
  }
}

inline TypeMultiset algebra_type(const HopfQ& H, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  return with_prime(H, prime, [&](std::uint32_t q) { return meataxe_type(modularize(H, q).algebra(), seed); });
}

inline TypeMultiset coalgebra_type(const HopfQ& H, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  return algebra_type(dual(H), seed, prime);
}

// ---------------------------------------------------------------------------
// Simple comodules

struct SimpleComodule {
  int degree = 0;
  Vec<Fq> character;           // chi as an element of H
  std::vector<Vec<Fq>> alpha;  // alpha[a * degree + b]; Delta(alpha_ab) = sum_c alpha_ac (x) alpha_cb
  Vec<Fq> idempotent;          // central primitive idempotent of H*
};

struct ComoduleData {
  std::uint32_t q = 0;
  HopfAlg<Fq> Hq;
  std::vector<SimpleComodule> simples;  // by degree, then by character

  TypeMultiset type() const {
    std::map<int, int> c;
    for (const auto& s : simples) ++c[s.degree];
    return TypeMultiset(c.begin(), c.end());
  }
  std::vector<int> of_degree(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < simples.size(); ++i)
      if (simples[i].degree == d) out.push_back(static_cast<int>(i));
    return out;
  }
  /// Simple subcoalgebra spanned by the matrix coefficients of simple k.
  Subspace<Fq> coefficient_space(int k) const { return span(Hq, simples[k].alpha); }
  int index_of_character(const Vec<Fq>& chi) const {
    for (std::size_t i = 0; i < simples.size(); ++i)
      if (simples[i].character == chi) return static_cast<int>(i);
    return -1;
  }
};

/// Simple comodules of Hq as simple modules of the dual algebra.
inline ComoduleData simple_comodules(const HopfAlg<Fq>& Hq, std::uint64_t seed = 0, bool matrices = true) {
  ComoduleData cd;
  cd.q = Hq.field.q;
  cd.Hq = Hq;
  const HopfAlg<Fq> D = dual(Hq);
  const Algebra<Fq> A = D.algebra();
  const Decomposition dec = wedderburn(A);
  const int d = Hq.dim;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& blk = dec.blocks[i];
    SimpleComodule s;
    s.degree = blk.degree;
    s.character = blk.character;
    s.idempotent = blk.idempotent;
    if (matrices) {
      if (blk.degree == 1) {
        s.alpha = {blk.character};
      } else {
        const auto rho = irrep(A, blk, seed + i);
        const int n = blk.degree;
        s.alpha.assign(static_cast<std::size_t>(n) * n, Vec<Fq>(d, Hq.field.zero()));
        for (int j = 0; j < d; ++j)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) s.alpha[static_cast<std::size_t>(a) * n + b][j] = rho[j](a, b);
      }
    }
    cd.simples.push_back(std::move(s));
  }
  return cd;
}

inline ComoduleData simple_comodules(const HopfQ& H, std::uint64_t seed = 0, std::uint32_t prime = 0,
                                     bool matrices = true) {
  return with_prime(H, prime, [&](std::uint32_t q) { return simple_comodules(modularize(H, q), seed, matrices); });
}

struct Character {
  int degree = 0;
  std::uint32_t q = 0;
  Vec<Fq> coords;
};

inline std::vector<Character> simple_characters(const HopfQ& H, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  const ComoduleData cd = simple_comodules(H, seed, prime, false);
  std::vector<Character> out;
  for (const auto& s : cd.simples) out.push_back({s.degree, cd.q, s.character});
  return out;
}

// ---------------------------------------------------------------------------
// Lifting residues to Q(zeta_N)

/// a / b with |a|, b <= bound and a / b = t mod q, when it exists.
inline std::optional<std::pair<std::int64_t, std::int64_t>> rational_reconstruct(std::uint32_t t, std::uint32_t q,
                                                                                 std::int64_t bound) {
  std::int64_t r0 = q, r1 = t, s0 = 0, s1 = 1;
  while (r1 > bound) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - k * r1);
    std::tie(s0, s1) = std::pair(s1, s0 - k * s1);
  }
  if (s1 == 0 || std::llabs(s1) > bound) return std::nullopt;
  if (s1 < 0) {
    s1 = -s1;
    r1 = -r1;
  }
  if (std::gcd(r1, s1) != 1) return std::nullopt;
  return std::pair(r1, s1);
}

/// Lift of a residue to a number (a / b) zeta_N^k with small a and b.
inline std::optional<CycNumber> lift_scalar(const Fq& x, const Embedding& emb, std::int64_t bound = 256) {
  if (x.is_zero()) return CycNumber(0);
  const PrimeField f{emb.q};
  const Fq winv = f.from_int(emb.w).inverse();
  std::optional<CycNumber> best;
  std::int64_t best_cost = 0;
  Fq t = x;
  for (int k = 0; k < emb.conductor; ++k, t *= winv) {
    auto r = rational_reconstruct(t.value(), emb.q, bound);
    if (!r) continue;
    const std::int64_t cost = std::llabs(r->first) + r->second;
    if (!best || cost < best_cost) {
      best_cost = cost;
      best = CycNumber(Rational(r->first, r->second)) * CycNumber::zeta(emb.conductor, k);
    }
  }
  return best;
}

inline std::optional<Vec<CycNumber>> lift_vector(const Vec<Fq>& v, const Embedding& emb) {
  Vec<CycNumber> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    auto c = lift_scalar(x, emb);
    if (!c) return std::nullopt;
    out.push_back(emb.conductor > 1 ? CycNumber::make(emb.conductor, {}) + *c : *c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group-likes

struct GrouplikeSet {
  std::uint32_t q = 0;
  std::vector<Vec<Fq>> modq;  // identity first
  FinGroup group;
  bool exact = false;
  std::vector<Vec<CycNumber>> lifted;  // filled when exact
  std::size_t size() const { return modq.size(); }
};

template <class F>
FinGroup group_of_elements(const HopfAlg<F>& H, const std::vector<Vec<F>>& elems, std::string name = {}) {
  const int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec<F> p = H.mul(elems[a], elems[b]);
      for (int c = 0; c < n; ++c)
        if (elems[c] == p) {
          t[static_cast<std::size_t>(a) * n + b] = c;
          break;
        }
      if (t[static_cast<std::size_t>(a) * n + b] < 0) throw std::logic_error("group-likes not closed under product");
    }
  return FinGroup::from_table(n, std::move(t), std::move(name));
}

/// Group-likes of Hq: the characters of the one-dimensional comodules.
inline GrouplikeSet grouplikes(const HopfAlg<Fq>& Hq, std::uint64_t seed = 0) {
  GrouplikeSet gs;
  gs.q = Hq.field.q;
  const ComoduleData cd = simple_comodules(Hq, seed, false);
  for (int k : cd.of_degree(1)) gs.modq.push_back(cd.simples[k].character);
  auto it = std::find(gs.modq.begin(), gs.modq.end(), Hq.unit);
  if (it == gs.modq.end()) throw std::logic_error("grouplikes: unit is not among the group-likes");
  std::rotate(gs.modq.begin(), it, it + 1);
  gs.group = group_of_elements(Hq, gs.modq, "G(H)");
  return gs;
}

/// Exact check of Delta(g) = g (x) g and eps(g) = 1.
template <class F>
bool is_grouplike(const HopfAlg<F>& H, const Vec<F>& g) {
  if (!(H.eps(g) == H.field.one())) return false;
  const auto D = H.Delta(g);
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < H.dim; ++j)
      if (!(D[static_cast<std::size_t>(i) * H.dim + j] == g[i] * g[j])) return false;
  return true;
}

/// Group-likes computed mod q (a large prime by default) and lifted to
/// Q(zeta_N) when every coordinate has the form (a / b) zeta^k; lifts are
/// re-verified exactly.
inline GrouplikeSet grouplikes(const HopfQ& H, std::uint32_t prime = 0, std::uint64_t seed = 0) {
  const std::uint32_t q = prime ? prime : lift_prime(H);
  GrouplikeSet gs = grouplikes(modularize(H, q), seed);
  const Embedding emb = fq_embed(H.field.conductor, q);
  std::vector<Vec<CycNumber>> lifted;
  for (const auto& g : gs.modq) {
    auto l = lift_vector(g, emb);
    if (!l || !is_grouplike(H, *l)) return gs;
    lifted.push_back(std::move(*l));
  }
  gs.exact = true;
  gs.lifted = std::move(lifted);
  return gs;
}

/// G[chi] = {g in G(H) : g chi = chi}, as indices into cd.simples.
inline std::vector<int> stabilizer_G_chi(const ComoduleData& cd, const Vec<Fq>& chi) {
  std::vector<int> out;
  for (int k : cd.of_degree(1))
    if (cd.Hq.mul(cd.simples[k].character, chi) == chi) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// Sub- and quotient Hopf algebras

/// Hopf subalgebra W with structure constants in the echelon basis of W.
template <class F>
HopfAlg<F> sub_hopf(const HopfAlg<F>& H, const Subspace<F>& W, std::string name = {}) {
  const auto& B = W.basis();
  const auto& piv = W.pivots();
  const int m = static_cast<int>(B.size());
  auto coords = [&](const Vec<F>& v) {
    auto c = W.coords(v);
    if (!c) throw std::invalid_argument("sub_hopf: subspace is not a Hopf subalgebra");
    return *c;
  };
  HopfAlg<F> S;
  S.name = std::move(name);
  S.dim = m;
  S.field = H.field;
  S.split_exponent = H.split_exponent;
  for (int i = 0; i < m; ++i) S.labels.push_back("w" + std::to_string(i));
  S.mult.assign(static_cast<std::size_t>(m) * m, {});
  S.comult.assign(m, {});
  S.antipode.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto c = coords(H.mul(B[i], B[j]));
      for (int k = 0; k < m; ++k)
        if (!c[k].is_zero()) S.mult[static_cast<std::size_t>(i) * m + j].push_back({k, c[k]});
    }
  S.unit = coords(H.unit);
  for (int i = 0; i < m; ++i) {
    S.counit.push_back(H.eps(B[i]));
    auto s = coords(H.S(B[i]));
    for (int k = 0; k < m; ++k)
      if (!s[k].is_zero()) S.antipode[i].push_back({k, s[k]});
    const auto D = H.Delta(B[i]);
    if (!in_tensor_square(W, D, H.dim, H.field.zero()))
      throw std::invalid_argument("sub_hopf: subspace is not a subcoalgebra");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const F& c = D[piv[a] * H.dim + piv[b]];
        if (!c.is_zero()) S.comult[i].push_back({a, b, c});
      }
  }
  S.canonicalize();
  return S;
}

/// H / I for a Hopf ideal I, on the classes of the non-pivot basis vectors.
template <class F>
HopfAlg<F> quotient_hopf(const HopfAlg<F>& H, const Subspace<F>& I, std::string name = {}) {
  const int d = H.dim;
  std::vector<char> is_piv(d, 0);
  for (auto p : I.pivots()) is_piv[p] = 1;
  std::vector<int> keep, pos(d, -1);
  for (int i = 0; i < d; ++i)
    if (!is_piv[i]) {
      pos[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  const int m = static_cast<int>(keep.size());
  auto proj = [&](Vec<F> v) {
    I.reduce(v);
    Vec<F> out(m, H.field.zero());
    for (int i = 0; i < m; ++i) out[i] = v[keep[i]];
    return out;
  };
  std::vector<Vec<F>> pe(d);
  for (int i = 0; i < d; ++i) pe[i] = proj(H.basis_vec(i));
  HopfAlg<F> Q;
  Q.name = std::move(name);
  Q.dim = m;
  Q.field = H.field;
  Q.split_exponent = H.split_exponent;
  for (int i = 0; i < m; ++i) Q.labels.push_back("[" + (H.labels.empty() ? std::to_string(keep[i]) : H.labels[keep[i]]) + "]");
  Q.mult.assign(static_cast<std::size_t>(m) * m, {});
  Q.comult.assign(m, {});
  Q.antipode.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec<F> p = H.zero_vec();
      for (const auto& [k, c] : H.m(keep[i], keep[j])) p[k] += c;
      auto c = proj(std::move(p));
      for (int k = 0; k < m; ++k)
        if (!c[k].is_zero()) Q.mult[static_cast<std::size_t>(i) * m + j].push_back({k, c[k]});
    }
  Q.unit = proj(H.unit);
  for (int i = 0; i < m; ++i) {
    Q.counit.push_back(H.counit[keep[i]]);
    auto s = proj(H.S(H.basis_vec(keep[i])));
    for (int k = 0; k < m; ++k)
      if (!s[k].is_zero()) Q.antipode[i].push_back({k, s[k]});
    for (const auto& [a, b, c] : H.comult[keep[i]])
      for (int x = 0; x < m; ++x) {
        if (pe[a][x].is_zero()) continue;
        for (int y = 0; y < m; ++y)
          if (!pe[b][y].is_zero()) Q.comult[i].push_back({x, y, c * pe[a][x] * pe[b][y]});
      }
  }
  Q.canonicalize();
  return Q;
}

/// Group of characters H -> k of a commutative Hopf algebra.
inline FinGroup group_reconstruct(const HopfAlg<Fq>& B, std::uint64_t seed = 0) {
  if (!B.is_commutative()) throw std::invalid_argument("group_reconstruct: algebra is not commutative");
  return grouplikes(dual(B), seed).group;
}

inline FinGroup group_reconstruct(const HopfQ& B, std::uint64_t seed = 0, std::uint32_t prime = 0) {
  if (!B.is_commutative()) throw std::invalid_argument("group_reconstruct: algebra is not commutative");
  return with_prime(B, prime, [&](std::uint32_t q) { return group_reconstruct(modularize(B, q), seed); });
}

inline bool is_cyclic(const FinGroup& g) {
  for (int a = 0; a < g.n; ++a)
    if (g.element_order(a) == g.n) return true;
  return false;
}

struct QuotientGroup {
  FinGroup M;
  bool cyclic = false;
  int dim = 0;
};

/// M with H / H K^+ = kM, for a normal Hopf subalgebra K.
inline QuotientGroup quotient_group_algebra(const HopfAlg<Fq>& Hq, const Subspace<Fq>& K, std::uint64_t seed = 0) {
  const Subspace<Fq> I = ideal_HKplus(Hq, K);
  const HopfAlg<Fq> Q = quotient_hopf(Hq, I, "H/HK+");
  QuotientGroup out;
  out.dim = Q.dim;
  if (Q.dim == 1) {
    out.M = cyclic_group(1);
    out.cyclic = true;
    return out;
  }
  const GrouplikeSet gs = grouplikes(Q, seed);
  if (static_cast<int>(gs.size()) != Q.dim)
    throw std::runtime_error("quotient_group_algebra: quotient is not spanned by group-likes");
  out.M = gs.group;
  out.cyclic = is_cyclic(out.M);
  return out;
}

// ---------------------------------------------------------------------------
// Integrals and Frobenius-Schur indicators

/// Normalized integral of H* (as coordinates Lambda(b_j)), from the trace
/// form Lambda(h) = Tr(L_h) / dim H and verified to be a two-sided integral.
template <class F>
Vec<F> dual_integral(const HopfAlg<F>& H) {
  const int d = H.dim;
  Vec<F> L(d, H.field.zero());
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (const auto& [kk, c] : H.m(j, k))
        if (kk == k) L[j] += c;
  const F inv = H.field.from_int(d).inverse();
  for (auto& x : L) x = x * inv;
  // (f_i L)(b_k) = sum over Delta(b_k) of [a = i] L_b; must equal f_i(1) L_k.
  std::vector<F> left(static_cast<std::size_t>(d) * d, H.field.zero()), right = left;
  for (int k = 0; k < d; ++k)
    for (const auto& [a, b, c] : H.comult[k]) {
      if (!L[b].is_zero()) left[static_cast<std::size_t>(a) * d + k] += c * L[b];
      if (!L[a].is_zero()) right[static_cast<std::size_t>(b) * d + k] += c * L[a];
    }
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const F expect = H.unit[i] * L[k];
      if (!(left[static_cast<std::size_t>(i) * d + k] == expect) || !(right[static_cast<std::size_t>(i) * d + k] == expect))
        throw std::runtime_error("dual_integral: trace form is not an integral of H*");
    }
  F norm = H.field.zero();
  for (int j = 0; j < d; ++j) norm += L[j] * H.unit[j];
  if (!(norm == H.field.one())) throw std::runtime_error("dual_integral: not normalized");
  return L;
}

/// m(Delta(x)) = x_(1) x_(2).
template <class F>
Vec<F> sweedler_square(const HopfAlg<F>& H, const Vec<F>& x) {
  Vec<F> out = H.zero_vec();
  for (int k = 0; k < H.dim; ++k) {
    if (x[k].is_zero()) continue;
    for (const auto& [a, b, c] : H.comult[k]) {
      const F s = x[k] * c;
      for (const auto& [m, cm] : H.m(a, b)) out[m] += s * cm;
    }
  }
  return out;
}

inline int indicator_value(const CycNumber& v) {
  if (v.is_rational()) {
    const Rational r = v.rational_value();
    if (r.den() == 1 && r.num() >= -1 && r.num() <= 1) return static_cast<int>(r.num());
  }
  throw std::runtime_error("Frobenius-Schur indicator outside {-1, 0, 1}: " + v.str());
}

inline int indicator_value(const Fq& v) {
  const auto s = v.signed_value();
  if (s >= -1 && s <= 1) return static_cast<int>(s);
  throw std::runtime_error("Frobenius-Schur indicator outside {-1, 0, 1}: " + v.str());
}

/// nu(V) = Lambda(chi_(1) chi_(2)) with Lambda the normalized integral of H*.
template <class F>
int fs_indicator(const HopfAlg<F>& H, const Vec<F>& dual_lambda, const Vec<F>& chi) {
  const Vec<F> s = sweedler_square(H, chi);
  F v = H.field.zero();
  for (int j = 0; j < H.dim; ++j)
    if (!s[j].is_zero()) v += s[j] * dual_lambda[j];
  return indicator_value(v);
}

/// Indicators of every simple comodule.
inline std::vector<int> fs_indicators(const ComoduleData& cd) {
  const Vec<Fq> L = dual_integral(cd.Hq);
  std::vector<int> out;
  for (const auto& s : cd.simples) out.push_back(fs_indicator(cd.Hq, L, s.character));
  return out;
}

/// Sweedler powers x_(1) x_(2) ... x_(m) of every basis vector, for m = 1..mmax.
template <class F>
std::vector<std::vector<Vec<F>>> sweedler_powers(const HopfAlg<F>& H, int mmax) {
  std::vector<std::vector<Vec<F>>> P(1);
  for (int k = 0; k < H.dim; ++k) P[0].push_back(H.basis_vec(k));
  for (int m = 2; m <= mmax; ++m) {
    std::vector<Vec<F>> next(H.dim, H.zero_vec());
    const auto& prev = P.back();
    for (int k = 0; k < H.dim; ++k)
      for (const auto& [a, b, c] : H.comult[k]) {
        const Vec<F>& x = prev[a];
        for (int i = 0; i < H.dim; ++i) {
          if (x[i].is_zero()) continue;
          const F s = c * x[i];
          for (const auto& [t, ct] : H.m(i, b)) next[k][t] += s * ct;
        }
      }
    P.push_back(std::move(next));
  }
  return P;
}

/// Higher indicators nu_m(V) = Lambda(chi^{[m]}) of every simple comodule, m = 2..mmax,
/// as residues mod q; out[m - 2][k] belongs to simple k.
inline std::vector<std::vector<std::uint32_t>> higher_indicators(const ComoduleData& cd, int mmax) {
  const auto& H = cd.Hq;
  const Vec<Fq> L = dual_integral(H);
  const auto P = sweedler_powers(H, mmax);
  std::vector<std::vector<std::uint32_t>> out;
  for (int m = 2; m <= mmax; ++m) {
    std::vector<Fq> onL(H.dim, H.field.zero());
    for (int k = 0; k < H.dim; ++k)
      for (int j = 0; j < H.dim; ++j)
        if (!P[m - 1][k][j].is_zero()) onL[k] += P[m - 1][k][j] * L[j];
    std::vector<std::uint32_t> row;
    for (const auto& s : cd.simples) {
      Fq v = H.field.zero();
      for (int k = 0; k < H.dim; ++k)
        if (!s.character[k].is_zero()) v += s.character[k] * onL[k];
      row.push_back(v.value());
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariant bilinear forms and the B(E) relations

enum class FormKind { none, symmetric, skew, other, multiple };

inline std::string form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::none: return "none";
    case FormKind::symmetric: return "symmetric";
    case FormKind::skew: return "skew";
    case FormKind::other: return "other";
    case FormKind::multiple: return "multiple";
  }
  return "?";
}

template <class F>
struct InvariantForm {
  FormKind kind = FormKind::none;
  int n = 0;
  int solution_dim = 0;
  Matrix<F> E;
};

/// Forms E with sum_{k,l} E_kl alpha_ki alpha_lj = E_ij 1, i.e. tA E A = E.
template <class F>
InvariantForm<F> invariant_form(const HopfAlg<F>& H, const std::vector<Vec<F>>& alpha, int n) {
  const int d = H.dim;
  const int u = n * n;
  auto A = [&](int i, int j) -> const Vec<F>& { return alpha[static_cast<std::size_t>(i) * n + j]; };
  LinearSystem<F> sys(u, H.field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Vec<F>> cols(u);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) cols[k * n + l] = H.mul(A(k, i), A(l, j));
      for (int m = 0; m < d; ++m) {
        Vec<F> row(u, H.field.zero());
        for (int x = 0; x < u; ++x) row[x] = cols[x][m];
        row[i * n + j] -= H.unit[m];
        if (!is_zero_vec(row)) sys.add(std::move(row));
        if (static_cast<int>(sys.rank()) == u) break;
      }
    }
  InvariantForm<F> out;
  out.n = n;
  const auto sol = sys.solutions();
  out.solution_dim = static_cast<int>(sol.size());
  if (sol.empty()) return out;
  out.E = Matrix<F>(n, n, H.field.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.E(i, j) = sol[0][i * n + j];
  if (sol.size() > 1) {
    out.kind = FormKind::multiple;
    return out;
  }
  bool sym = true, skew = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sym = sym && out.E(i, j) == out.E(j, i);
      skew = skew && out.E(i, j) == -out.E(j, i);
    }
  out.kind = sym ? FormKind::symmetric : skew ? FormKind::skew : FormKind::other;
  return out;
}

struct BERelations {
  bool left = false;      // tA E A = E
  bool right = false;     // A E^{-1} tA E = I
  bool antipode = false;  // S(A) = E^{-1} tA E
  bool skew_commutative_sl2 = false;  // skew E: entries commute and ad - bc = 1
  bool all(FormKind kind) const {
    return left && right && antipode && (kind != FormKind::skew || skew_commutative_sl2);
  }
};

template <class F>
BERelations be_relations_check(const HopfAlg<F>& H, const std::vector<Vec<F>>& alpha, int n, const Matrix<F>& E,
                               FormKind kind) {
  BERelations r;
  auto A = [&](int i, int j) -> const Vec<F>& { return alpha[static_cast<std::size_t>(i) * n + j]; };
  auto Einv_opt = inverse(E, H.field);
  if (!Einv_opt) return r;
  const Matrix<F>& Einv = *Einv_opt;
  const Vec<F> zero = H.zero_vec();
  r.left = r.right = r.antipode = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<F> lhs = zero, rhs = zero, s = zero;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (!E(k, l).is_zero()) axpy(lhs, E(k, l), H.mul(A(k, i), A(l, j)));
          for (int m = 0; m < n; ++m) {
            const F c = Einv(k, l) * E(m, j);
            if (!c.is_zero()) axpy(rhs, c, H.mul(A(i, k), A(m, l)));
          }
          const F c2 = Einv(i, k) * E(l, j);
          if (!c2.is_zero()) axpy(s, c2, A(l, k));
        }
      Vec<F> el = H.unit, ir = zero;
      for (auto& x : el) x = x * E(i, j);
      if (i == j) ir = H.unit;
      r.left = r.left && lhs == el;
      r.right = r.right && rhs == ir;
      r.antipode = r.antipode && H.S(A(i, j)) == s;
    }
  if (kind == FormKind::skew && n == 2) {
    bool commute = true;
    for (const auto& x : alpha)
      for (const auto& y : alpha) commute = commute && H.mul(x, y) == H.mul(y, x);
    Vec<F> det = H.mul(A(0, 0), A(1, 1));
    axpy(det, -H.field.one(), H.mul(A(0, 1), A(1, 0)));
    r.skew_commutative_sl2 = commute && det == H.unit;
  }
  return r;
}

/// O_{-1}[SL2] relations for A' = P^{-1} A P with tP E P = (0, 1; 1, 0).
struct MinusOneSL2 {
  bool ba_anti = false, ca_anti = false, db_anti = false, dc_anti = false;
  bool bc_commute = false, ad_commute = false, ad_plus_bc = false, antipode_pattern = false;
  bool all() const {
    return ba_anti && ca_anti && db_anti && dc_anti && bc_commute && ad_commute && ad_plus_bc && antipode_pattern;
  }
};

/// Basis P of isotropic vectors with tP E P = (0, 1; 1, 0), given a square
/// root of -det E.
template <class F>
std::optional<Matrix<F>> hyperbolic_basis(const Matrix<F>& E, const FieldFor<F>& field,
                                          const std::function<std::optional<F>(const F&)>& sqrt_fn) {
  const F e = E(0, 0), f = E(0, 1), g = E(1, 1);
  if (!(E(0, 1) == E(1, 0))) throw std::invalid_argument("hyperbolic_basis: E is not symmetric");
  const F disc = f * f - e * g;
  if (disc.is_zero()) throw std::invalid_argument("hyperbolic_basis: E is degenerate");
  std::array<F, 2> v1, v2;
  if (e.is_zero()) {
    v1 = {field.one(), field.zero()};
    v2 = {g, -(f + f)};
  } else {
    auto s = sqrt_fn(disc);
    if (!s) return std::nullopt;
    v1 = {*s - f, e};
    v2 = {-(*s) - f, e};
  }
  auto B = [&](const std::array<F, 2>& x, const std::array<F, 2>& y) {
    return x[0] * (e * y[0] + f * y[1]) + x[1] * (f * y[0] + g * y[1]);
  };
  const F c = B(v1, v2);
  if (c.is_zero()) return std::nullopt;
  const F ci = c.inverse();
  Matrix<F> P(2, 2, field.zero());
  P(0, 0) = v1[0];
  P(1, 0) = v1[1];
  P(0, 1) = v2[0] * ci;
  P(1, 1) = v2[1] * ci;
  return P;
}

template <class F>
MinusOneSL2 minus_one_sl2_check(const HopfAlg<F>& H, const std::vector<Vec<F>>& alpha, const Matrix<F>& P) {
  MinusOneSL2 r;
  auto Pinv_opt = inverse(P, H.field);
  if (!Pinv_opt) return r;
  const Matrix<F>& Pi = *Pinv_opt;
  auto A = [&](int i, int j) -> const Vec<F>& { return alpha[static_cast<std::size_t>(i) * 2 + j]; };
  std::array<Vec<F>, 4> X;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec<F> v = H.zero_vec();
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const F c = Pi(i, k) * P(l, j);
          if (!c.is_zero()) axpy(v, c, A(k, l));
        }
      X[i * 2 + j] = std::move(v);
    }
  const Vec<F>&a = X[0], &b = X[1], &c = X[2], &d = X[3];
  auto mul = [&](const Vec<F>& x, const Vec<F>& y) { return H.mul(x, y); };
  auto anti = [&](const Vec<F>& x, const Vec<F>& y) {
    Vec<F> s = mul(x, y);
    axpy(s, H.field.one(), mul(y, x));
    return is_zero_vec(s);
  };
  r.ba_anti = anti(b, a);
  r.ca_anti = anti(c, a);
  r.db_anti = anti(d, b);
  r.dc_anti = anti(d, c);
  r.bc_commute = mul(b, c) == mul(c, b);
  r.ad_commute = mul(a, d) == mul(d, a);
  Vec<F> s = mul(a, d);
  axpy(s, H.field.one(), mul(b, c));
  r.ad_plus_bc = s == H.unit;
  r.antipode_pattern = H.S(a) == d && H.S(b) == b && H.S(c) == c && H.S(d) == a;
  return r;
}

/// Square root of a cyclotomic number when it is a rational square, or minus
/// a rational square and i is available.
inline std::optional<CycNumber> exact_sqrt(const CycNumber& x) {
  if (!x.is_rational()) return std::nullopt;
  const Rational r = x.rational_value();
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    if (v < 0) return std::nullopt;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    if (s * s != v) return std::nullopt;
    return s;
  };
  const std::int64_t sign = r.num() < 0 ? -1 : 1;
  auto n = isqrt(sign * r.num());
  auto d = isqrt(r.den());
  if (!n || !d) return std::nullopt;
  CycNumber root(Rational(*n, *d));
  if (sign > 0) return root;
  const int N = x.conductor();
  if (N % 4 != 0) return std::nullopt;
  return root * CycNumber::zeta(N, N / 4);
}

inline std::optional<Fq> sqrt_mod(const Fq& x) {
  if (x.is_zero()) return x;
  const PrimeField f{x.modulus()};
  auto r = poly::roots(PolyFq{-x, f.zero(), f.one()}, f);
  if (r.empty()) return std::nullopt;
  return r.front();
}

struct SL2Verification {
  std::uint32_t q = 0;
  InvariantForm<Fq> form;
  BERelations be;
  bool hyperbolic = false;  // an F_q-rational hyperbolic basis was found
  MinusOneSL2 relations;
  bool all() const { return form.kind == FormKind::symmetric && be.all(form.kind) && hyperbolic && relations.all(); }
};

/// Normalized O_{-1}[SL2] relations for an exact comodule matrix, checked mod q.
/// A hyperbolic basis needs sqrt(-det E) in F_q; without an explicit prime the
/// next admissible primes are tried.
inline SL2Verification minus_one_sl2_verify(const HopfQ& H, const std::vector<Vec<CycNumber>>& alpha,
                                            std::uint32_t prime = 0, int attempts = 16) {
  const int n = std::lcm(H.field.conductor, H.split_exponent);
  std::uint32_t q = prime ? prime : default_prime(H);
  SL2Verification out;
  for (int t = 0; t < attempts; ++t) {
    const HopfAlg<Fq> Hq = modularize(H, q);
    const Embedding emb = fq_embed(H.field.conductor, q);
    std::vector<Vec<Fq>> a;
    for (const auto& v : alpha) a.push_back(reduce_vec(v, emb));
    out = SL2Verification{};
    out.q = q;
    out.form = invariant_form(Hq, a, 2);
    if (out.form.kind != FormKind::symmetric) return out;
    out.be = be_relations_check(Hq, a, 2, out.form.E, out.form.kind);
    auto P = hyperbolic_basis<Fq>(out.form.E, Hq.field, [](const Fq& x) { return sqrt_mod(x); });
    if (P) {
      out.hyperbolic = true;
      out.relations = minus_one_sl2_check(Hq, a, *P);
      return out;
    }
    if (prime) return out;
    q = next_good_prime(n, static_cast<std::uint64_t>(H.dim), q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fusion rings

struct FusionRing {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  int unit = 0;
  std::vector<int> dual;
  std::vector<int> N;  // N[(a * n + b) * n + c]

  int operator()(int a, int b, int c) const { return N[(static_cast<std::size_t>(a) * n + b) * n + c]; }

  bool is_associative() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int e = 0; e < n; ++e) {
            long l = 0, r = 0;
            for (int x = 0; x < n; ++x) {
              l += static_cast<long>((*this)(a, b, x)) * (*this)(x, c, e);
              r += static_cast<long>((*this)(b, c, x)) * (*this)(a, x, e);
            }
            if (l != r) return false;
          }
    return true;
  }
  bool degrees_multiplicative() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        long s = 0;
        for (int c = 0; c < n; ++c) s += static_cast<long>((*this)(a, b, c)) * degrees[c];
        if (s != static_cast<long>(degrees[a]) * degrees[b]) return false;
      }
    return true;
  }
  bool duality_law() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((*this)(a, b, unit) != (b == dual[a] ? 1 : 0)) return false;
    return true;
  }
  bool unit_law() const {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if ((*this)(unit, a, c) != (a == c) || (*this)(a, unit, c) != (a == c)) return false;
    return true;
  }
  bool nonnegative() const {
    return std::all_of(N.begin(), N.end(), [](int x) { return x >= 0; });
  }

  /// "chi2_1 * chi2_1 = 1 + g1 + chi2_2"
  std::string render(int a, int b) const {
    std::string s = labels[a] + " * " + labels[b] + " =";
    bool first = true;
    for (int c = 0; c < n; ++c) {
      const int k = (*this)(a, b, c);
      if (!k) continue;
      s += first ? " " : " + ";
      first = false;
      if (k > 1) s += std::to_string(k) + " ";
      s += labels[c];
    }
    return s;
  }
  std::string render_all() const {
    std::string s;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (a != unit && b != unit) s += render(a, b) + "\n";
    return s;
  }
};

/// Fusion rules of the comodule category, from products of characters in H.
inline FusionRing fusion_ring(const ComoduleData& cd) {
  const auto& H = cd.Hq;
  FusionRing R;
  R.n = static_cast<int>(cd.simples.size());
  std::vector<Vec<Fq>> chars;
  for (const auto& s : cd.simples) {
    chars.push_back(s.character);
    R.degrees.push_back(s.degree);
  }
  R.unit = cd.index_of_character(H.unit);
  if (R.unit < 0) throw std::logic_error("fusion_ring: unit character not found");
  std::map<int, int> counter;
  for (int a = 0; a < R.n; ++a) {
    if (a == R.unit) {
      R.labels.push_back("1");
      continue;
    }
    const int d = R.degrees[a];
    const int k = ++counter[d];
    R.labels.push_back(d == 1 ? "g" + std::to_string(k) : "chi" + std::to_string(d) + "_" + std::to_string(k));
  }
  R.dual.assign(R.n, -1);
  for (int a = 0; a < R.n; ++a) {
    R.dual[a] = cd.index_of_character(H.S(chars[a]));
    if (R.dual[a] < 0) throw std::logic_error("fusion_ring: S(chi) is not a simple character");
  }
  R.N.assign(static_cast<std::size_t>(R.n) * R.n * R.n, 0);
  for (int a = 0; a < R.n; ++a)
    for (int b = 0; b < R.n; ++b) {
      auto c = solve_combination(chars, H.mul(chars[a], chars[b]), H.field);
      if (!c) throw std::runtime_error("fusion_ring: product is not a combination of characters");
      for (int x = 0; x < R.n; ++x) {
        const auto v = (*c)[x].signed_value();
        if (v < 0 || v > H.dim) throw std::runtime_error("fusion_ring: coefficient is not a small nonnegative integer");
        R.N[(static_cast<std::size_t>(a) * R.n + b) * R.n + x] = static_cast<int>(v);
      }
    }
  return R;
}

/// Degree-preserving bijection R1 -> R2 matching units, duality and every
/// structure constant.
inline std::optional<std::vector<int>> fusion_iso(const FusionRing& R1, const FusionRing& R2) {
  if (R1.n != R2.n) return std::nullopt;
  const int n = R1.n;
  std::vector<int> map(n, -1), order;
  std::vector<char> used(n, 0);
  order.push_back(R1.unit);
  for (int a = 0; a < n; ++a)
    if (a != R1.unit) order.push_back(a);
  map[R1.unit] = R2.unit;
  used[R2.unit] = 1;
  if (R1.degrees[R1.unit] != R2.degrees[R2.unit]) return std::nullopt;
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int a = order[pos];
    for (int b = 0; b < n; ++b) {
      if (used[b] || R1.degrees[a] != R2.degrees[b]) continue;
      map[a] = b;
      used[b] = 1;
      bool ok = true;
      for (std::size_t i = 0; i <= pos && ok; ++i) {
        const int x = order[i];
        if (map[R1.dual[x]] >= 0 && map[R1.dual[x]] != R2.dual[map[x]]) ok = false;
        for (std::size_t j = 0; j <= pos && ok; ++j) {
          const int y = order[j];
          for (std::size_t k = 0; k <= pos && ok; ++k) {
            if (i != pos && j != pos && k != pos) continue;
            const int z = order[k];
            ok = R1(x, y, z) == R2(map[x], map[y], map[z]);
          }
        }
      }
      if (ok && rec(pos + 1)) return true;
      map[a] = -1;
      used[b] = 0;
    }
    return false;
  };
  if (!rec(1)) return std::nullopt;
  return map;
}

}  // namespace polyhopf

#endif  // POLYHOPF_REPTHEORY_HPP
