#ifndef POLYHOPF_HOPF_HPP
#define POLYHOPF_HOPF_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace polyhopf {

template <class F>
struct MTerm {
  int k;
  F c;
};

template <class F>
struct CTerm {
  int i, j;
  F c;
};

/// Dense accumulator with a touched list, reused across many sums.
template <class F>
class DenseAcc {
public:
  explicit DenseAcc(std::size_t n = 0) : vals_(n), flag_(n, 0) {}
  void add(std::size_t idx, const F& c) {
    if (c.is_zero()) return;
    if (!flag_[idx]) {
      flag_[idx] = 1;
      touched_.push_back(idx);
      vals_[idx] = c;
    } else {
      vals_[idx] += c;
    }
  }
  bool all_zero() const {
    for (auto i : touched_)
      if (!vals_[i].is_zero()) return false;
    return true;
  }
  std::vector<std::pair<std::size_t, F>> nonzero() const {
    std::vector<std::pair<std::size_t, F>> out;
    for (auto i : touched_)
      if (!vals_[i].is_zero()) out.emplace_back(i, vals_[i]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  void clear() {
    for (auto i : touched_) {
      flag_[i] = 0;
      vals_[i] = F();
    }
    touched_.clear();
  }

private:
  std::vector<F> vals_;
  std::vector<char> flag_;
  std::vector<std::size_t> touched_;
};

/// Associative unital algebra by structure constants b_i b_j = sum_k m_ij^k b_k.
template <class F>
struct Algebra {
  using Field = FieldFor<F>;
  int dim = 0;
  Field field{};
  std::vector<std::vector<MTerm<F>>> mult;  // dim*dim
  Vec<F> unit;

  const std::vector<MTerm<F>>& m(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }

  Vec<F> zero_vec() const { return Vec<F>(dim, field.zero()); }
  Vec<F> basis_vec(int i) const {
    Vec<F> v = zero_vec();
    v[i] = field.one();
    return v;
  }

  Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> out = zero_vec();
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        const auto& t = m(i, j);
        if (t.empty()) continue;
        F xy = x[i] * y[j];
        for (const auto& [k, c] : t) out[k] += xy * c;
      }
    }
    return out;
  }
};

/// Finite-dimensional Hopf algebra as structure-constant tensors.
template <class F>
struct HopfAlg {
  using Field = FieldFor<F>;
  using Scalar = F;
  std::string name;
  int dim = 0;
  Field field{};
  int split_exponent = 1;  // q = 1 mod this guarantees splitting of every decomposition
  std::vector<std::string> labels;
  std::vector<std::vector<MTerm<F>>> mult;   // dim*dim
  Vec<F> unit;
  std::vector<std::vector<CTerm<F>>> comult;  // dim
  Vec<F> counit;
  std::vector<std::vector<MTerm<F>>> antipode;  // antipode[i] = S(b_i)

  const std::vector<MTerm<F>>& m(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }

  Vec<F> zero_vec() const { return Vec<F>(dim, field.zero()); }
  Vec<F> basis_vec(int i) const {
    Vec<F> v = zero_vec();
    v[i] = field.one();
    return v;
  }

  Algebra<F> algebra() const {
    Algebra<F> a;
    a.dim = dim;
    a.field = field;
    a.mult = mult;
    a.unit = unit;
    return a;
  }

  Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> out = zero_vec();
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        const auto& t = m(i, j);
        if (t.empty()) continue;
        F xy = x[i] * y[j];
        for (const auto& [k, c] : t) out[k] += xy * c;
      }
    }
    return out;
  }

  Vec<F> S(const Vec<F>& x) const {
    Vec<F> out = zero_vec();
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, c] : antipode[i]) out[k] += x[i] * c;
    }
    return out;
  }

  F eps(const Vec<F>& x) const {
    F out = field.zero();
    for (int i = 0; i < dim; ++i)
      if (!x[i].is_zero() && !counit[i].is_zero()) out += x[i] * counit[i];
    return out;
  }

  /// Delta(x) as a dense dim x dim coefficient table (row = left factor).
  std::vector<F> Delta(const Vec<F>& x) const {
    std::vector<F> out(static_cast<std::size_t>(dim) * dim, field.zero());
    for (int k = 0; k < dim; ++k) {
      if (x[k].is_zero()) continue;
      for (const auto& [i, j, c] : comult[k]) out[static_cast<std::size_t>(i) * dim + j] += x[k] * c;
    }
    return out;
  }

  /// Sort all sparse lists, merge duplicates and drop zeros.
  void canonicalize() {
    auto fix_m = [](std::vector<MTerm<F>>& v) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
      std::vector<MTerm<F>> out;
      for (auto& t : v) {
        if (!out.empty() && out.back().k == t.k) out.back().c += t.c;
        else out.push_back(t);
      }
      std::erase_if(out, [](const auto& t) { return t.c.is_zero(); });
      v = std::move(out);
    };
    for (auto& v : mult) fix_m(v);
    for (auto& v : antipode) fix_m(v);
    for (auto& v : comult) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
      std::vector<CTerm<F>> out;
      for (auto& t : v) {
        if (!out.empty() && out.back().i == t.i && out.back().j == t.j) out.back().c += t.c;
        else out.push_back(t);
      }
      std::erase_if(out, [](const auto& t) { return t.c.is_zero(); });
      v = std::move(out);
    }
  }

  bool is_commutative() const {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        const auto& a = m(i, j);
        const auto& b = m(j, i);
        if (a.size() != b.size()) return false;
        for (std::size_t t = 0; t < a.size(); ++t)
          if (a[t].k != b[t].k || !(a[t].c == b[t].c)) return false;
      }
    return true;
  }

  bool is_cocommutative() const {
    for (int k = 0; k < dim; ++k) {
      std::map<std::pair<int, int>, F> a;
      for (const auto& [i, j, c] : comult[k]) a[{i, j}] = c;
      for (const auto& [i, j, c] : comult[k]) {
        auto it = a.find({j, i});
        if (it == a.end() || !(it->second == c)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const HopfAlg& x, const HopfAlg& y) {
    if (x.dim != y.dim || x.mult.size() != y.mult.size()) return false;
    auto eq_m = [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].k != b[t].k || !(a[t].c == b[t].c)) return false;
      return true;
    };
    for (std::size_t i = 0; i < x.mult.size(); ++i)
      if (!eq_m(x.mult[i], y.mult[i])) return false;
    for (int i = 0; i < x.dim; ++i) {
      if (!eq_m(x.antipode[i], y.antipode[i])) return false;
      const auto& a = x.comult[i];
      const auto& b = y.comult[i];
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].i != b[t].i || a[t].j != b[t].j || !(a[t].c == b[t].c)) return false;
      if (!(x.unit[i] == y.unit[i]) || !(x.counit[i] == y.counit[i])) return false;
    }
    return true;
  }
};

using HopfQ = HopfAlg<CycNumber>;

struct AxiomReport {
  bool assoc = true, unit = true, coassoc = true, counit = true, bialgebra = true, antipode = true,
       antipode_sq_id = true;
  std::string first_failure;
  bool all() const { return assoc && unit && coassoc && counit && bialgebra && antipode && antipode_sq_id; }
  void fail(bool& flag, const std::string& what) {
    if (flag && first_failure.empty()) first_failure = what;
    flag = false;
  }
};

/// Exhaustive check of every Hopf axiom on basis elements.
template <class F>
AxiomReport verify_axioms(const HopfAlg<F>& H) {
  AxiomReport rep;
  const int d = H.dim;
  const auto zero = H.field.zero();
  auto shape_ok = static_cast<int>(H.mult.size()) == d * d && static_cast<int>(H.comult.size()) == d &&
                  static_cast<int>(H.unit.size()) == d && static_cast<int>(H.counit.size()) == d &&
                  static_cast<int>(H.antipode.size()) == d;
  if (!shape_ok) {
    rep.fail(rep.assoc, "shape");
    rep.unit = rep.coassoc = rep.counit = rep.bialgebra = rep.antipode = rep.antipode_sq_id = false;
    return rep;
  }
  // Associativity: (b_i b_j) b_k = b_i (b_j b_k).
  {
    DenseAcc<F> acc(d);
    for (int i = 0; i < d && rep.assoc; ++i)
      for (int j = 0; j < d && rep.assoc; ++j)
        for (int k = 0; k < d; ++k) {
          for (const auto& [a, c1] : H.m(i, j))
            for (const auto& [b, c2] : H.m(a, k)) acc.add(b, c1 * c2);
          for (const auto& [a, c1] : H.m(j, k))
            for (const auto& [b, c2] : H.m(i, a)) acc.add(b, -(c1 * c2));
          bool ok = acc.all_zero();
          acc.clear();
          if (!ok) {
            rep.fail(rep.assoc, "assoc at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            break;
          }
        }
  }
  // Unit.
  for (int i = 0; i < d && rep.unit; ++i) {
    Vec<F> b = H.basis_vec(i);
    if (!(H.mul(H.unit, b) == b) || !(H.mul(b, H.unit) == b)) rep.fail(rep.unit, "unit at " + std::to_string(i));
  }
  // Coassociativity.
  {
    std::unordered_map<std::int64_t, F> acc;
    const std::int64_t D = d;
    for (int x = 0; x < d && rep.coassoc; ++x) {
      acc.clear();
      for (const auto& [a, b, c1] : H.comult[x]) {
        for (const auto& [p, q, c2] : H.comult[a]) acc[(p * D + q) * D + b] += c1 * c2;
        for (const auto& [p, q, c2] : H.comult[b]) acc[(a * D + p) * D + q] -= c1 * c2;
      }
      for (const auto& [key, v] : acc)
        if (!v.is_zero()) {
          rep.fail(rep.coassoc, "coassoc at " + std::to_string(x));
          break;
        }
    }
  }
  // Counit.
  for (int x = 0; x < d && rep.counit; ++x) {
    Vec<F> l = H.zero_vec(), r = H.zero_vec();
    for (const auto& [a, b, c] : H.comult[x]) {
      l[b] += H.counit[a] * c;
      r[a] += H.counit[b] * c;
    }
    Vec<F> bx = H.basis_vec(x);
    if (!(l == bx) || !(r == bx)) rep.fail(rep.counit, "counit at " + std::to_string(x));
  }
  // Bialgebra: Delta(b_i b_j) = Delta(b_i) Delta(b_j), Delta(1) = 1 (x) 1, eps multiplicative.
  {
    DenseAcc<F> acc(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d && rep.bialgebra; ++i)
      for (int j = 0; j < d; ++j) {
        for (const auto& [k, c] : H.m(i, j))
          for (const auto& [p, q, c2] : H.comult[k]) acc.add(static_cast<std::size_t>(p) * d + q, -(c * c2));
        for (const auto& [a, b, c1] : H.comult[i])
          for (const auto& [a2, b2, c2] : H.comult[j]) {
            const auto& left = H.m(a, a2);
            if (left.empty()) continue;
            const auto& right = H.m(b, b2);
            if (right.empty()) continue;
            F c12 = c1 * c2;
            for (const auto& [p, cp] : left) {
              F cc = c12 * cp;
              for (const auto& [q, cq] : right) acc.add(static_cast<std::size_t>(p) * d + q, cc * cq);
            }
          }
        bool ok = acc.all_zero();
        acc.clear();
        if (!ok) {
          rep.fail(rep.bialgebra, "Delta not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
        F e = zero;
        for (const auto& [k, c] : H.m(i, j)) e += c * H.counit[k];
        if (!(e == H.counit[i] * H.counit[j])) {
          rep.fail(rep.bialgebra, "counit not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
    if (rep.bialgebra) {
      auto D1 = H.Delta(H.unit);
      for (int a = 0; a < d && rep.bialgebra; ++a)
        for (int b = 0; b < d; ++b)
          if (!(D1[static_cast<std::size_t>(a) * d + b] == H.unit[a] * H.unit[b])) {
            rep.fail(rep.bialgebra, "Delta(1) != 1 (x) 1");
            break;
          }
      if (!(H.eps(H.unit) == H.field.one())) rep.fail(rep.bialgebra, "eps(1) != 1");
    }
  }
  // Antipode: m(S (x) id)Delta = u eps = m(id (x) S)Delta.
  {
    DenseAcc<F> l(d), r(d);
    for (int x = 0; x < d && rep.antipode; ++x) {
      for (const auto& [a, b, c] : H.comult[x]) {
        for (const auto& [sa, cs] : H.antipode[a])
          for (const auto& [k, cm] : H.m(sa, b)) l.add(k, c * cs * cm);
        for (const auto& [sb, cs] : H.antipode[b])
          for (const auto& [k, cm] : H.m(a, sb)) r.add(k, c * cs * cm);
      }
      for (int k = 0; k < d; ++k) {
        l.add(k, -(H.counit[x] * H.unit[k]));
        r.add(k, -(H.counit[x] * H.unit[k]));
      }
      bool ok = l.all_zero() && r.all_zero();
      l.clear();
      r.clear();
      if (!ok) rep.fail(rep.antipode, "antipode at " + std::to_string(x));
    }
  }
  // S^2 = id.
  for (int x = 0; x < d && rep.antipode_sq_id; ++x) {
    Vec<F> bx = H.basis_vec(x);
    if (!(H.S(H.S(bx)) == bx)) rep.fail(rep.antipode_sq_id, "S^2 != id at " + std::to_string(x));
  }
  return rep;
}

/// Dual Hopf algebra on the dual basis f_i.
template <class F>
HopfAlg<F> dual(const HopfAlg<F>& H) {
  HopfAlg<F> D;
  D.name = H.name.empty() ? std::string() : H.name + "*";
  D.dim = H.dim;
  D.field = H.field;
  D.split_exponent = H.split_exponent;
  for (const auto& l : H.labels) D.labels.push_back(l + "*");
  const int d = H.dim;
  D.mult.assign(static_cast<std::size_t>(d) * d, {});
  D.comult.assign(d, {});
  D.antipode.assign(d, {});
  for (int k = 0; k < d; ++k)
    for (const auto& [i, j, c] : H.comult[k]) D.mult[static_cast<std::size_t>(i) * d + j].push_back({k, c});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : H.m(i, j)) D.comult[k].push_back({i, j, c});
  for (int i = 0; i < d; ++i)
    for (const auto& [k, c] : H.antipode[i]) D.antipode[k].push_back({i, c});
  D.unit = H.counit;
  D.counit = H.unit;
  D.canonicalize();
  return D;
}

/// Image of every tensor under a scalar map.
template <class G, class F, class Map>
HopfAlg<G> map_scalars(const HopfAlg<F>& H, FieldFor<G> field, Map f) {
  HopfAlg<G> R;
  R.name = H.name;
  R.dim = H.dim;
  R.field = field;
  R.split_exponent = H.split_exponent;
  R.labels = H.labels;
  R.mult.resize(H.mult.size());
  for (std::size_t i = 0; i < H.mult.size(); ++i)
    for (const auto& [k, c] : H.mult[i]) R.mult[i].push_back({k, f(c)});
  R.comult.resize(H.comult.size());
  for (std::size_t i = 0; i < H.comult.size(); ++i)
    for (const auto& [a, b, c] : H.comult[i]) R.comult[i].push_back({a, b, f(c)});
  R.antipode.resize(H.antipode.size());
  for (std::size_t i = 0; i < H.antipode.size(); ++i)
    for (const auto& [k, c] : H.antipode[i]) R.antipode[i].push_back({k, f(c)});
  for (const auto& c : H.unit) R.unit.push_back(f(c));
  for (const auto& c : H.counit) R.counit.push_back(f(c));
  R.canonicalize();
  return R;
}

/// Reduction of an exact algebra modulo q with the smallest-residue embedding.
inline HopfAlg<Fq> modularize(const HopfAlg<CycNumber>& H, std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("modularize: " + std::to_string(q) + " is not prime");
  if (H.dim % static_cast<int>(q) == 0)
    throw std::invalid_argument("modularize: q divides dim H");
  const Embedding emb = fq_embed(H.field.conductor, q);
  return map_scalars<Fq>(H, PrimeField{q}, [&](const CycNumber& c) { return reduce_scalar(c, emb); });
}

inline Algebra<Fq> modularize(const Algebra<CycNumber>& A, std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("modularize: " + std::to_string(q) + " is not prime");
  const Embedding emb = fq_embed(A.field.conductor, q);
  Algebra<Fq> R;
  R.dim = A.dim;
  R.field = PrimeField{q};
  R.mult.resize(A.mult.size());
  for (std::size_t i = 0; i < A.mult.size(); ++i)
    for (const auto& [k, c] : A.mult[i]) R.mult[i].push_back({k, reduce_scalar(c, emb)});
  for (const auto& c : A.unit) R.unit.push_back(reduce_scalar(c, emb));
  return R;
}

inline Vec<Fq> reduce_vec(const Vec<CycNumber>& v, const Embedding& emb) {
  Vec<Fq> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(reduce_scalar(c, emb));
  return out;
}

/// Smallest prime q = 1 mod lcm(conductor, split exponent), not dividing dim, above floor.
inline std::uint32_t default_prime(const HopfAlg<CycNumber>& H, std::uint32_t floor = 2) {
  int n = std::lcm(H.field.conductor, H.split_exponent);
  std::uint32_t q = next_good_prime(n, static_cast<std::uint64_t>(H.dim), floor);
  while (static_cast<int>(q) <= H.dim + 1) q = next_good_prime(n, static_cast<std::uint64_t>(H.dim), q);
  return q;
}

// ---------------------------------------------------------------------------
// Subspaces and maps

template <class F>
Subspace<F> span(const HopfAlg<F>& H, const std::vector<Vec<F>>& vs) {
  Subspace<F> s(H.dim, H.field);
  for (const auto& v : vs) s.insert(v);
  return s;
}

/// Smallest unital subalgebra containing S.
template <class F>
Subspace<F> subalgebra_generated(const HopfAlg<F>& H, const Subspace<F>& S) {
  Subspace<F> W(H.dim, H.field);
  std::vector<Vec<F>> frontier;
  if (W.insert(H.unit)) frontier.push_back(H.unit);
  const auto& gens = S.basis();
  for (const auto& g : gens)
    if (W.insert(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Vec<F>> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Vec<F> p = H.mul(w, g);
        if (W.insert(p)) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return W;
}

/// Whether the dim x dim table M (row = left factor) lies in W (x) W.
template <class F>
bool in_tensor_square(const Subspace<F>& W, const std::vector<F>& M, int d, const F& zero) {
  for (int i = 0; i < d; ++i) {
    Vec<F> row(M.begin() + static_cast<std::ptrdiff_t>(i) * d, M.begin() + static_cast<std::ptrdiff_t>(i + 1) * d);
    if (!W.contains(row)) return false;
  }
  for (int j = 0; j < d; ++j) {
    Vec<F> col(d, zero);
    for (int i = 0; i < d; ++i) col[i] = M[static_cast<std::size_t>(i) * d + j];
    if (!W.contains(col)) return false;
  }
  return true;
}

template <class F>
bool is_subcoalgebra(const HopfAlg<F>& H, const Subspace<F>& W) {
  for (const auto& w : W.basis())
    if (!in_tensor_square(W, H.Delta(w), H.dim, H.field.zero())) return false;
  return true;
}

template <class F>
bool is_subalgebra(const HopfAlg<F>& H, const Subspace<F>& W) {
  if (!W.contains(H.unit)) return false;
  for (const auto& a : W.basis())
    for (const auto& b : W.basis())
      if (!W.contains(H.mul(a, b))) return false;
  return true;
}

template <class F>
bool is_hopf_subalgebra(const HopfAlg<F>& H, const Subspace<F>& W) {
  if (!is_subalgebra(H, W) || !is_subcoalgebra(H, W)) return false;
  for (const auto& w : W.basis())
    if (!W.contains(H.S(w))) return false;
  return true;
}

/// Stability under ad_l(h)(x) = h1 x S(h2) and ad_r(h)(x) = S(h1) x h2.
template <class F>
bool is_normal(const HopfAlg<F>& H, const Subspace<F>& K) {
  for (int h = 0; h < H.dim; ++h)
    for (const auto& x : K.basis()) {
      Vec<F> l = H.zero_vec(), r = H.zero_vec();
      for (const auto& [a, b, c] : H.comult[h]) {
        Vec<F> ea = H.basis_vec(a), eb = H.basis_vec(b);
        Vec<F> lx = H.mul(H.mul(ea, x), H.S(eb));
        Vec<F> rx = H.mul(H.mul(H.S(ea), x), eb);
        axpy(l, c, lx);
        axpy(r, c, rx);
      }
      if (!K.contains(l) || !K.contains(r)) return false;
    }
  return true;
}

/// Linear map between Hopf algebras, matrix of size target.dim x source.dim.
template <class F>
struct HopfMap {
  const HopfAlg<F>* source = nullptr;
  const HopfAlg<F>* target = nullptr;
  Matrix<F> mat;

  Vec<F> operator()(const Vec<F>& x) const { return mat.apply(x); }
  Vec<F> column(int i) const {
    Vec<F> v(mat.rows, source->field.zero());
    for (std::size_t r = 0; r < mat.rows; ++r) v[r] = mat(r, i);
    return v;
  }

  bool is_algebra_map() const {
    const auto& S = *source;
    const auto& T = *target;
    if (!((*this)(S.unit) == T.unit)) return false;
    for (int i = 0; i < S.dim; ++i)
      for (int j = 0; j < S.dim; ++j) {
        Vec<F> prod = S.zero_vec();
        for (const auto& [k, c] : S.m(i, j)) prod[k] += c;
        if (!((*this)(prod) == T.mul(column(i), column(j)))) return false;
      }
    return true;
  }

  bool is_coalgebra_map() const {
    const auto& S = *source;
    const auto& T = *target;
    const int t = T.dim;
    for (int i = 0; i < S.dim; ++i) {
      if (!(T.eps(column(i)) == S.counit[i])) return false;
      std::vector<F> lhs = T.Delta(column(i));
      std::vector<F> rhs(static_cast<std::size_t>(t) * t, S.field.zero());
      for (const auto& [a, b, c] : S.comult[i]) {
        Vec<F> pa = column(a), pb = column(b);
        for (int x = 0; x < t; ++x) {
          if (pa[x].is_zero()) continue;
          for (int y = 0; y < t; ++y)
            if (!pb[y].is_zero()) rhs[static_cast<std::size_t>(x) * t + y] += c * pa[x] * pb[y];
        }
      }
      if (!(lhs == rhs)) return false;
    }
    return true;
  }
};

/// p(h1) (x) h2 = p(h2) (x) h1 for every basis h.
template <class F>
bool is_cocentral(const HopfMap<F>& p) {
  if (!p.is_coalgebra_map()) throw std::invalid_argument("is_cocentral: p is not a coalgebra map");
  const auto& H = *p.source;
  const int t = p.target->dim;
  for (int h = 0; h < H.dim; ++h) {
    std::vector<F> l(static_cast<std::size_t>(t) * H.dim, H.field.zero()), r = l;
    for (const auto& [a, b, c] : H.comult[h])
      for (int x = 0; x < t; ++x) {
        if (!p.mat(x, a).is_zero()) l[static_cast<std::size_t>(x) * H.dim + b] += c * p.mat(x, a);
        if (!p.mat(x, b).is_zero()) r[static_cast<std::size_t>(x) * H.dim + a] += c * p.mat(x, b);
      }
    if (!(l == r)) return false;
  }
  return true;
}

/// H^{co p} = {h : (id (x) p)Delta(h) = h (x) 1}.
template <class F>
Subspace<F> coinvariants(const HopfMap<F>& p) {
  const auto& H = *p.source;
  const auto& T = *p.target;
  const int d = H.dim, t = T.dim;
  // Column i of the constraint matrix is (id (x) p)Delta(b_i) - b_i (x) 1_T.
  std::vector<Vec<F>> cols(d, Vec<F>(static_cast<std::size_t>(d) * t, H.field.zero()));
  for (int i = 0; i < d; ++i) {
    for (const auto& [a, b, c] : H.comult[i])
      for (int x = 0; x < t; ++x)
        if (!p.mat(x, b).is_zero()) cols[i][static_cast<std::size_t>(a) * t + x] += c * p.mat(x, b);
    for (int x = 0; x < t; ++x) cols[i][static_cast<std::size_t>(i) * t + x] -= T.unit[x];
  }
  LinearSystem<F> sys(d, H.field);
  for (std::size_t r = 0; r < static_cast<std::size_t>(d) * t; ++r) {
    Vec<F> eq(d, H.field.zero());
    bool any = false;
    for (int i = 0; i < d; ++i) {
      eq[i] = cols[i][r];
      any = any || !eq[i].is_zero();
    }
    if (any) sys.add(std::move(eq));
  }
  return span(H, sys.solutions());
}

template <class F>
Subspace<F> kernel_of(const HopfMap<F>& p) {
  LinearSystem<F> sys(p.source->dim, p.source->field);
  for (std::size_t r = 0; r < p.mat.rows; ++r) {
    Vec<F> eq(p.source->dim, p.source->field.zero());
    for (int i = 0; i < p.source->dim; ++i) eq[i] = p.mat(r, i);
    sys.add(std::move(eq));
  }
  return span(*p.source, sys.solutions());
}

/// K^+ = K intersect ker(eps).
template <class F>
std::vector<Vec<F>> augmentation(const HopfAlg<F>& H, const Subspace<F>& K) {
  std::vector<Vec<F>> out;
  const auto& B = K.basis();
  std::optional<Vec<F>> base;
  F base_eps = H.field.zero();
  for (const auto& k : B) {
    F e = H.eps(k);
    if (e.is_zero()) {
      out.push_back(k);
    } else if (!base) {
      base = k;
      base_eps = e;
    } else {
      Vec<F> v = k;
      axpy(v, -(e / base_eps), *base);
      out.push_back(std::move(v));
    }
  }
  return out;
}

/// H K^+ (left ideal generated by K^+).
template <class F>
Subspace<F> ideal_HKplus(const HopfAlg<F>& H, const Subspace<F>& K) {
  Subspace<F> I(H.dim, H.field);
  for (const auto& k : augmentation(H, K))
    for (int h = 0; h < H.dim; ++h) I.insert(H.mul(H.basis_vec(h), k));
  return I;
}

struct ExactnessReport {
  bool iota_injective = false, p_surjective = false, p_iota_trivial = false, K_is_coinvariants = false,
       ker_p_is_HKplus = false;
  int dim_coinvariants = 0;
  bool all() const { return iota_injective && p_surjective && p_iota_trivial && K_is_coinvariants && ker_p_is_HKplus; }
};

/// Conditions for k -> K -> H -> T -> k to be exact, with K a subspace of H.
template <class F>
ExactnessReport exactness_check(const Subspace<F>& K, const HopfMap<F>& p) {
  const auto& H = *p.source;
  const auto& T = *p.target;
  ExactnessReport rep;
  rep.iota_injective = K.dim() > 0;  // K is given by an independent basis
  std::vector<Vec<F>> cols;
  for (int i = 0; i < H.dim; ++i) cols.push_back(p.column(i));
  rep.p_surjective = static_cast<int>(rank_of(cols, T.dim, H.field)) == T.dim;
  rep.p_iota_trivial = true;
  for (const auto& k : K.basis()) {
    Vec<F> expect = T.unit;
    F e = H.eps(k);
    for (auto& x : expect) x = x * e;
    if (!(p(k) == expect)) rep.p_iota_trivial = false;
  }
  Subspace<F> co = coinvariants(p);
  rep.dim_coinvariants = static_cast<int>(co.dim());
  rep.K_is_coinvariants = co == K;
  rep.ker_p_is_HKplus = kernel_of(p) == ideal_HKplus(H, K);
  return rep;
}

/// Left integral: h L = eps(h) L, normalized by eps(L) = 1; verified two-sided.
template <class F>
Vec<F> integral(const HopfAlg<F>& H) {
  const int d = H.dim;
  LinearSystem<F> sys(d, H.field);
  for (int i = 0; i < d && static_cast<int>(sys.rank()) < d - 1; ++i) {
    // Column j of the block: b_i b_j - eps(b_i) b_j.
    std::vector<Vec<F>> rows(d, Vec<F>(d, H.field.zero()));
    for (int j = 0; j < d; ++j) {
      for (const auto& [k, c] : H.m(i, j)) rows[k][j] += c;
      rows[j][j] -= H.counit[i];
    }
    for (auto& r : rows) {
      if (is_zero_vec(r)) continue;
      sys.add(std::move(r));
      if (static_cast<int>(sys.rank()) >= d - 1) break;
    }
  }
  auto sol = sys.solutions();
  if (sol.size() != 1) throw std::runtime_error("integral: solution space is not one-dimensional");
  Vec<F> L = sol[0];
  F e = H.eps(L);
  if (e.is_zero()) throw std::runtime_error("integral: eps(L) = 0, algebra is not semisimple");
  F inv = e.inverse();
  for (auto& x : L) x = x * inv;
  for (int i = 0; i < d; ++i) {
    Vec<F> b = H.basis_vec(i);
    Vec<F> expect = L;
    for (auto& x : expect) x = x * H.counit[i];
    if (!(H.mul(b, L) == expect) || !(H.mul(L, b) == expect))
      throw std::runtime_error("integral: not a two-sided integral");
  }
  return L;
}

}  // namespace polyhopf

#endif  // POLYHOPF_HOPF_HPP
