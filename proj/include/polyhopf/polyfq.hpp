#ifndef POLYHOPF_POLYFQ_HPP
#define POLYHOPF_POLYFQ_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace polyhopf {

/// Polynomial over F_q, coefficients from the constant term upwards.
using PolyFq = std::vector<Fq>;

namespace poly {

inline void trim(PolyFq& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline int degree(const PolyFq& a) { return static_cast<int>(a.size()) - 1; }

inline PolyFq mul(const PolyFq& a, const PolyFq& b, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  PolyFq r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline PolyFq sub(PolyFq a, const PolyFq& b, const PrimeField& f) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Remainder of a modulo b (b nonzero).
inline PolyFq mod(PolyFq a, const PolyFq& b) {
  if (b.empty()) throw std::domain_error("poly::mod: division by zero polynomial");
  trim(a);
  const int db = degree(b);
  const Fq inv = b.back().inverse();
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const Fq c = a.back() * inv;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(shift + i)] -= c * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

inline PolyFq monic(PolyFq a) {
  trim(a);
  if (a.empty()) return a;
  const Fq inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

inline PolyFq gcd(PolyFq a, PolyFq b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFq r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// base^e modulo m.
inline PolyFq powmod(PolyFq base, std::uint64_t e, const PolyFq& m, const PrimeField& f) {
  PolyFq result{f.one()};
  base = mod(base, m);
  while (e) {
    if (e & 1) result = mod(mul(result, base, f), m);
    e >>= 1;
    if (e) base = mod(mul(base, base, f), m);
  }
  return result;
}

/// Exact quotient a / b.
inline PolyFq div(PolyFq a, const PolyFq& b, const PrimeField& f) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {};
  PolyFq q(static_cast<std::size_t>(degree(a) - db + 1), f.zero());
  const Fq inv = b.back().inverse();
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const Fq c = a.back() * inv;
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(shift + i)] -= c * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return q;
}

inline void split_roots(const PolyFq& g, const PrimeField& f, std::mt19937_64& rng, std::vector<Fq>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(-(g[0] / g[1]));
    return;
  }
  if (f.q == 2) {
    for (std::uint32_t x = 0; x < 2; ++x) {
      Fq v = f.zero();
      for (std::size_t i = g.size(); i-- > 0;) v = v * f.from_int(x) + g[i];
      if (v.is_zero()) out.push_back(f.from_int(x));
    }
    return;
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, f.q - 1);
  for (;;) {
    PolyFq t{f.from_int(dist(rng)), f.one()};
    PolyFq h = powmod(t, (f.q - 1) / 2, g, f);
    h = sub(h, PolyFq{f.one()}, f);
    PolyFq a = gcd(g, h);
    if (degree(a) > 0 && degree(a) < d) {
      split_roots(a, f, rng, out);
      split_roots(monic(div(g, a, f)), f, rng, out);
      return;
    }
  }
}

/// Distinct roots in F_q, sorted by residue.
inline std::vector<Fq> roots(const PolyFq& p, const PrimeField& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  PolyFq g = monic(p);
  if (degree(g) <= 0) return {};
  PolyFq xq = powmod(PolyFq{f.zero(), f.one()}, f.q, g, f);
  g = gcd(g, sub(xq, PolyFq{f.zero(), f.one()}, f));
  std::mt19937_64 rng(seed);
  std::vector<Fq> out;
  split_roots(g, f, rng, out);
  std::sort(out.begin(), out.end(), [](Fq a, Fq b) { return a.value() < b.value(); });
  return out;
}

/// Characteristic polynomial det(x I - M) by Hessenberg reduction.
inline PolyFq charpoly(std::vector<Vec<Fq>> M, const PrimeField& f) {
  const std::size_t n = M.size();
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t piv = m;
    while (piv < n && M[piv][m - 1].is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(M[piv], M[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(M[r][piv], M[r][m]);
    }
    const Fq inv = M[m][m - 1].inverse();
    for (std::size_t i = m + 1; i < n; ++i) {
      if (M[i][m - 1].is_zero()) continue;
      const Fq u = M[i][m - 1] * inv;
      for (std::size_t j = 0; j < n; ++j) M[i][j] -= u * M[m][j];
      for (std::size_t r = 0; r < n; ++r) M[r][m] += u * M[r][i];
    }
  }
  // p_k = det(x I - H_k) by the standard recurrence on the upper Hessenberg form.
  std::vector<PolyFq> p(n + 1);
  p[0] = PolyFq{f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    PolyFq xk = mul(PolyFq{-M[k - 1][k - 1], f.one()}, p[k - 1], f);
    Fq prod = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      prod *= M[k - i][k - i - 1];
      const Fq c = prod * M[k - i - 1][k - 1];
      if (c.is_zero()) continue;
      PolyFq term = p[k - i - 1];
      for (auto& t : term) t *= c;
      xk = sub(xk, term, f);
    }
    p[k] = xk;
  }
  return p[n];
}

}  // namespace poly
}  // namespace polyhopf

#endif  // POLYHOPF_POLYFQ_HPP
