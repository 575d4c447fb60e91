#ifndef POLYHOPF_WEDDERBURN_HPP
#define POLYHOPF_WEDDERBURN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf.hpp"
#include "polyfq.hpp"

namespace polyhopf {

/// Raised when the algebra does not split over the chosen F_q.
struct SplitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multiset {(degree, multiplicity)} sorted by degree.
using TypeMultiset = std::vector<std::pair<int, int>>;

inline std::string type_str(const TypeMultiset& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "; ";
    s += std::to_string(t[i].first) + ", " + std::to_string(t[i].second);
  }
  return s + ")";
}

inline int type_dim(const TypeMultiset& t) {
  int d = 0;
  for (auto [deg, n] : t) d += deg * deg * n;
  return d;
}

struct WedderburnBlock {
  int degree = 0;
  Vec<Fq> idempotent;       // central primitive idempotent
  std::vector<Vec<Fq>> span;  // basis of the block A e
  Vec<Fq> character;        // chi(b_j) for every basis element
};

struct Decomposition {
  std::uint32_t q = 0;
  std::vector<WedderburnBlock> blocks;

  TypeMultiset type() const {
    std::map<int, int> count;
    for (const auto& b : blocks) ++count[b.degree];
    return TypeMultiset(count.begin(), count.end());
  }
};

/// Center of an algebra over F_q.
inline Subspace<Fq> center(const Algebra<Fq>& A) {
  const int d = A.dim;
  LinearSystem<Fq> sys(d, A.field);
  std::vector<Vec<Fq>> rows(d, Vec<Fq>(d, A.field.zero()));
  for (int j = 0; j < d; ++j) {
    for (auto& r : rows) std::fill(r.begin(), r.end(), A.field.zero());
    // (x b_j - b_j x)_k = sum_i x_i (m_ij^k - m_ji^k)
    for (int i = 0; i < d; ++i) {
      for (const auto& [k, c] : A.m(i, j)) rows[k][i] += c;
      for (const auto& [k, c] : A.m(j, i)) rows[k][i] -= c;
    }
    for (const auto& r : rows)
      if (!is_zero_vec(r)) sys.add(r);
  }
  Subspace<Fq> Z(d, A.field);
  for (auto& v : sys.solutions()) Z.insert(std::move(v));
  return Z;
}

namespace detail {

/// Eigenspaces of the r x r matrix M (M[i][j], acting on column vectors)
/// restricted to the invariant subspace W; throws SplitFailure when the
/// eigenvalues in F_q do not account for all of W.
inline std::vector<Subspace<Fq>> split_invariant(const std::vector<Vec<Fq>>& M, const Subspace<Fq>& W,
                                                 const PrimeField& f) {
  const std::size_t r = W.ambient();
  const std::size_t m = W.dim();
  auto apply = [&](const Vec<Fq>& v) {
    Vec<Fq> out(r, f.zero());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (!M[i][j].is_zero() && !v[j].is_zero()) out[i] += M[i][j] * v[j];
    return out;
  };
  // Matrix of M on W in W-coordinates: column j = coords(M w_j).
  std::vector<Vec<Fq>> R(m, Vec<Fq>(m, f.zero()));
  for (std::size_t j = 0; j < m; ++j) {
    auto c = W.coords(apply(W.basis()[j]));
    if (!c) throw std::logic_error("split_invariant: subspace not invariant");
    for (std::size_t i = 0; i < m; ++i) R[i][j] = (*c)[i];
  }
  std::vector<Subspace<Fq>> out;
  std::size_t total = 0;
  for (const Fq& lam : poly::roots(poly::charpoly(R, f), f)) {
    LinearSystem<Fq> sys(m, f);
    for (std::size_t i = 0; i < m; ++i) {
      Vec<Fq> row = R[i];
      row[i] -= lam;
      sys.add(std::move(row));
    }
    auto ker = sys.solutions();
    if (ker.empty()) continue;
    Subspace<Fq> E(r, f);
    for (const auto& k : ker) {
      Vec<Fq> v(r, f.zero());
      for (std::size_t j = 0; j < m; ++j) axpy(v, k[j], W.basis()[j]);
      E.insert(std::move(v));
    }
    total += E.dim();
    out.push_back(std::move(E));
  }
  if (total != m) throw SplitFailure("center does not split over F_" + std::to_string(f.q));
  return out;
}

}  // namespace detail

/// Central primitive idempotents, blocks, degrees and irreducible characters.
inline Decomposition wedderburn(const Algebra<Fq>& A) {
  const PrimeField f = A.field;
  const int d = A.dim;
  Subspace<Fq> Z = center(A);
  const std::size_t r = Z.dim();
  const auto& zb = Z.basis();
  // Left multiplication matrices of the basis of Z in Z-coordinates.
  std::vector<std::vector<Vec<Fq>>> L(r, std::vector<Vec<Fq>>(r, Vec<Fq>(r, f.zero())));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      auto c = Z.coords(A.mul(zb[a], zb[b]));
      if (!c) throw std::logic_error("wedderburn: center not closed");
      for (std::size_t i = 0; i < r; ++i) L[a][i][b] = (*c)[i];
    }
  std::vector<Subspace<Fq>> parts;
  {
    Subspace<Fq> all(r, f);
    for (std::size_t i = 0; i < r; ++i) {
      Vec<Fq> e(r, f.zero());
      e[i] = f.one();
      all.insert(std::move(e));
    }
    parts.push_back(std::move(all));
  }
  for (std::size_t a = 0; a < r; ++a) {
    std::vector<Subspace<Fq>> next;
    for (const auto& W : parts) {
      if (W.dim() == 1) {
        next.push_back(W);
        continue;
      }
      for (auto& E : detail::split_invariant(L[a], W, f)) next.push_back(std::move(E));
    }
    parts = std::move(next);
  }
  // Trace form T_m = Tr(L_{b_m}).
  Vec<Fq> T(d, f.zero());
  for (int m = 0; m < d; ++m)
    for (int k = 0; k < d; ++k)
      for (const auto& [kk, c] : A.m(m, k))
        if (kk == k) T[m] += c;

  Decomposition out;
  out.q = f.q;
  for (const auto& W : parts) {
    if (W.dim() != 1) throw SplitFailure("center does not split over F_" + std::to_string(f.q));
    Vec<Fq> v(d, f.zero());
    for (std::size_t i = 0; i < r; ++i) axpy(v, W.basis()[0][i], zb[i]);
    // v = c e with e idempotent: v^2 = c v.
    Vec<Fq> v2 = A.mul(v, v);
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    Fq c = v2[p] / v[p];
    WedderburnBlock blk;
    blk.idempotent = v;
    for (auto& x : blk.idempotent) x = x / c;
    Subspace<Fq> B(d, f);
    for (int j = 0; j < d; ++j) B.insert(A.mul(A.basis_vec(j), blk.idempotent));
    blk.span = B.basis();
    int deg = static_cast<int>(std::lround(std::sqrt(static_cast<double>(B.dim()))));
    if (deg * deg != static_cast<int>(B.dim()))
      throw SplitFailure("block of non-square dimension " + std::to_string(B.dim()) + " over F_" + std::to_string(f.q));
    blk.degree = deg;
    blk.character.assign(d, f.zero());
    Fq inv_deg = f.from_int(deg).inverse();
    for (int j = 0; j < d; ++j) {
      Vec<Fq> be = A.mul(A.basis_vec(j), blk.idempotent);
      Fq tr = f.zero();
      for (int m = 0; m < d; ++m)
        if (!be[m].is_zero()) tr += be[m] * T[m];
      blk.character[j] = tr * inv_deg;
    }
    out.blocks.push_back(std::move(blk));
  }
  if (type_dim(out.type()) != d) throw SplitFailure("block dimensions do not add up");
  // Deterministic order: by degree, then by character vector.
  std::sort(out.blocks.begin(), out.blocks.end(), [](const WedderburnBlock& a, const WedderburnBlock& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t j = 0; j < a.character.size(); ++j)
      if (a.character[j].value() != b.character[j].value()) return a.character[j].value() < b.character[j].value();
    return false;
  });
  return out;
}

/// Explicit irreducible representation on a minimal left ideal of the block:
/// for random b in the block and an eigenvalue lambda of geometric
/// multiplicity one, {y in B : y(b - lambda e) = 0} is a minimal left ideal.
/// Returns rho(b_j) for every basis element, as degree x degree matrices.
inline std::vector<Matrix<Fq>> irrep(const Algebra<Fq>& A, const WedderburnBlock& blk, std::uint64_t seed,
                                     int retries = 64) {
  const PrimeField f = A.field;
  const int d = A.dim;
  const int deg = blk.degree;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.q - 1);
  std::vector<Vec<Fq>> ideal;
  if (deg == 1) {
    ideal.push_back(blk.idempotent);
  } else {
    const auto& basis = blk.span;
    for (int attempt = 0; attempt < retries && ideal.empty(); ++attempt) {
      Vec<Fq> b(d, f.zero());
      for (const auto& y : basis) axpy(b, f.from_int(dist(rng)), y);
      std::vector<Vec<Fq>> yb;
      for (const auto& y : basis) yb.push_back(A.mul(y, b));
      // Matrix of right multiplication by b on the block, in block coordinates.
      const std::size_t m = basis.size();
      Subspace<Fq> Bsp(d, f);
      for (const auto& y : basis) Bsp.insert(y);
      std::vector<Vec<Fq>> R(m, Vec<Fq>(m, f.zero()));
      for (std::size_t j = 0; j < m; ++j) {
        auto c = Bsp.coords(yb[j]);
        if (!c) throw std::logic_error("irrep: block not closed");
        for (std::size_t i = 0; i < m; ++i) R[i][j] = (*c)[i];
      }
      for (const Fq& lam : poly::roots(poly::charpoly(R, f), f, seed + attempt)) {
        LinearSystem<Fq> sys(m, f);
        for (int k = 0; k < d; ++k) {
          Vec<Fq> row(m, f.zero());
          for (std::size_t j = 0; j < m; ++j) row[j] = yb[j][k] - lam * basis[j][k];
          if (!is_zero_vec(row)) sys.add(std::move(row));
        }
        auto ker = sys.solutions();
        if (static_cast<int>(ker.size()) != deg) continue;
        for (const auto& c : ker) {
          Vec<Fq> v(d, f.zero());
          for (std::size_t j = 0; j < m; ++j) axpy(v, c[j], basis[j]);
          ideal.push_back(std::move(v));
        }
        break;
      }
    }
    if (ideal.empty()) throw SplitFailure("irrep: no eigenvalue of multiplicity one found");
  }
  Subspace<Fq> V(d, f);
  for (const auto& v : ideal) V.insert(v);
  const auto& vb = V.basis();
  std::vector<Matrix<Fq>> rho;
  rho.reserve(d);
  for (int j = 0; j < d; ++j) {
    Matrix<Fq> M(deg, deg, f.zero());
    for (int k = 0; k < deg; ++k) {
      auto c = V.coords(A.mul(A.basis_vec(j), vb[k]));
      if (!c) throw std::logic_error("irrep: ideal not stable");
      for (int i = 0; i < deg; ++i) M(i, k) = (*c)[i];
    }
    rho.push_back(std::move(M));
  }
  return rho;
}

/// Algebra type of A over F_q; the seed only drives the random elements of
/// the irreducibility step, which is run on every block as a certificate.
inline TypeMultiset meataxe_type(const Algebra<Fq>& A, std::uint64_t seed, Decomposition* dec_out = nullptr,
                                 bool certify = false) {
  Decomposition dec = wedderburn(A);
  if (certify)
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      auto rho = irrep(A, dec.blocks[i], seed + i);
      (void)rho;
    }
  TypeMultiset t = dec.type();
  if (dec_out) *dec_out = std::move(dec);
  return t;
}

}  // namespace polyhopf

#endif  // POLYHOPF_WEDDERBURN_HPP
