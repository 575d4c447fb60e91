#ifndef POLYHOPF_BUILDERS_HPP
#define POLYHOPF_BUILDERS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "binary.hpp"
#include "cocycle.hpp"
#include "hopf.hpp"

namespace polyhopf {


namespace detail {

inline HopfQ empty_hopf(int dim, int conductor, std::string name) {
  HopfQ H;
  H.name = std::move(name);
  H.dim = dim;
  H.field = CycField{conductor};
  H.split_exponent = conductor;
  H.mult.assign(static_cast<std::size_t>(dim) * dim, {});
  H.comult.assign(dim, {});
  H.antipode.assign(dim, {});
  H.unit.assign(dim, H.field.zero());
  H.counit.assign(dim, H.field.zero());
  return H;
}

inline int group_exponent(const FinGroup& g) {
  int e = 1;
  for (int a = 0; a < g.n; ++a) e = std::lcm(e, g.element_order(a));
  return e;
}

}  // namespace detail

/// k^G on the basis of point indicators e_g.
inline HopfQ function_algebra(const FinGroup& g, int conductor = 1, std::string name = {}) {
  HopfQ H = detail::empty_hopf(g.n, conductor, name.empty() ? "k^" + g.name : name);
  H.split_exponent = std::lcm(conductor, detail::group_exponent(g));
  const CycNumber one = H.field.one();
  for (int a = 0; a < g.n; ++a) {
    H.labels.push_back("e" + std::to_string(a));
    H.mult[static_cast<std::size_t>(a) * g.n + a].push_back({a, one});
    H.unit[a] = one;
    H.antipode[a].push_back({g.inverse(a), one});
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) H.comult[g.mul(x, y)].push_back({x, y, one});
  H.counit[g.identity] = one;
  H.canonicalize();
  return H;
}

/// kG on the basis of group elements.
inline HopfQ group_algebra(const FinGroup& g, int conductor = 1, std::string name = {}) {
  HopfQ H = detail::empty_hopf(g.n, conductor, name.empty() ? "k" + g.name : name);
  H.split_exponent = std::lcm(conductor, detail::group_exponent(g));
  const CycNumber one = H.field.one();
  for (int a = 0; a < g.n; ++a) {
    H.labels.push_back("g" + std::to_string(a));
    for (int b = 0; b < g.n; ++b) H.mult[static_cast<std::size_t>(a) * g.n + b].push_back({g.mul(a, b), one});
    H.comult[a].push_back({a, a, one});
    H.counit[a] = one;
    H.antipode[a].push_back({g.inverse(a), one});
  }
  H.unit[g.identity] = one;
  H.canonicalize();
  return H;
}

/// Twisted group algebra k_tau G with b_s b_t = tau(s,t) b_st, tau = (-1)^w.
inline Algebra<CycNumber> twisted_group_algebra(const FinGroup& g, const Cocycle2F2& w, int conductor = 1) {
  Algebra<CycNumber> A;
  A.dim = g.n;
  A.field = CycField{conductor};
  A.mult.assign(static_cast<std::size_t>(g.n) * g.n, {});
  for (int s = 0; s < g.n; ++s)
    for (int t = 0; t < g.n; ++t)
      A.mult[static_cast<std::size_t>(s) * g.n + t].push_back({g.mul(s, t), A.field.from_int(w(s, t) ? -1 : 1)});
  A.unit = A.zero_vec();
  A.unit[g.identity] = A.field.one();
  return A;
}

/// Index of e_s # x in the bicrossed product basis.
inline int bicrossed_index(int n, int s, int x) { return x * n + s; }

/// Bicrossed product k^Gamma #_tau kZ2 with trivial left action, sigma = 1,
/// right action s <| p = theta(s) and tau_p given as a scalar table
/// (tau_1 = 1). Requires tau_p(theta g, theta h) tau_p(g, h) = 1.
inline HopfQ bicrossed_build(const FinGroup& g, const GroupAut& theta, const std::vector<CycNumber>& tau_p,
                             int conductor, std::string name = {}) {
  if (!is_automorphism(g, theta)) throw std::invalid_argument("bicrossed_build: theta is not an automorphism");
  if (!(compose(theta, theta) == identity_aut(g))) throw std::invalid_argument("bicrossed_build: theta^2 != id");
  const int n = g.n;
  if (static_cast<int>(tau_p.size()) != n * n) throw std::invalid_argument("bicrossed_build: tau has wrong size");
  auto T = [&](int a, int b) -> const CycNumber& { return tau_p[static_cast<std::size_t>(a) * n + b]; };
  const CycNumber one(1);
  for (int s = 0; s < n; ++s)
    if (!(T(g.identity, s) == one) || !(T(s, g.identity) == one))
      throw std::invalid_argument("bicrossed_build: tau_p is not normalized");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (!(T(theta(s), theta(t)) * T(s, t) == one))
        throw std::invalid_argument("bicrossed_build: tau_p(theta s, theta t) tau_p(s, t) != 1");
  HopfQ H = detail::empty_hopf(2 * n, conductor, name);
  H.split_exponent = std::lcm(conductor, 2 * detail::group_exponent(g));
  const CycNumber unit = H.field.one();
  auto tau = [&](int x, int a, int b) { return x == 1 ? T(a, b) * unit : unit; };
  auto th = [&](int x, int s) { return x ? theta(s) : s; };
  for (int x = 0; x < 2; ++x)
    for (int s = 0; s < n; ++s) H.labels.push_back("e" + std::to_string(s) + (x ? "#p" : "#1"));
  for (int x = 0; x < 2; ++x)
    for (int s = 0; s < n; ++s) {
      const int i = bicrossed_index(n, s, x);
      for (int y = 0; y < 2; ++y) {
        const int j = bicrossed_index(n, th(x, s), y);
        H.mult[static_cast<std::size_t>(i) * H.dim + j].push_back({bicrossed_index(n, s, x ^ y), unit});
      }
      for (int a = 0; a < n; ++a) {
        int b = g.mul(g.inverse(a), s);
        H.comult[i].push_back({bicrossed_index(n, a, x), bicrossed_index(n, b, x), tau(x, a, b)});
      }
      // S(e_s # x) = tau_x(s^{-1}, s)^{-1} e_{(theta^x s)^{-1}} # x
      H.antipode[i].push_back({bicrossed_index(n, g.inverse(th(x, s)), x), tau(x, g.inverse(s), s).inverse()});
    }
  for (int s = 0; s < n; ++s) H.unit[bicrossed_index(n, s, 0)] = unit;
  H.counit[bicrossed_index(n, g.identity, 0)] = unit;
  H.counit[bicrossed_index(n, g.identity, 1)] = unit;
  H.canonicalize();
  return H;
}

/// Sign-cocycle form: tau_p = (-1)^w, w strictly theta-invariant.
inline HopfQ bicrossed_build(const FinGroup& g, const GroupAut& theta, const Cocycle2F2& w, int conductor,
                             std::string name = {}) {
  if (!is_normalized(g, w)) throw std::invalid_argument("bicrossed_build: cocycle not normalized");
  for (int s = 0; s < g.n; ++s)
    for (int t = 0; t < g.n; ++t)
      if (w(theta(s), theta(t)) != w(s, t)) throw std::invalid_argument("bicrossed_build: tau_p is not theta-invariant");
  return bicrossed_build(g, theta, to_sign_cocycle(w), conductor, std::move(name));
}

/// Twist of kG by J = sum sigma(chi, psi) e_chi (x) e_psi lifted from a Klein
/// four-subgroup A = {e, a1, a2, a1 a2}, with sigma(chi, psi) = (-1)^{chi_1 psi_2}
/// in the coordinates chi = (chi(a1), chi(a2)) in F2^2.
inline HopfQ twist_group_algebra(const FinGroup& g, const std::vector<int>& klein, std::string name = {},
                                 bool trivial_sigma = false) {
  if (klein.size() != 4) throw std::invalid_argument("twist: A must have four elements");
  if (g.closure(klein).size() != 4)
    throw std::invalid_argument("twist: A is not a subgroup of order 4");
  for (int a : klein)
    if (a != g.identity && g.element_order(a) != 2) throw std::invalid_argument("twist: A is not a Klein four-group");
  for (int a : klein)
    for (int b : klein)
      if (g.mul(a, b) != g.mul(b, a)) throw std::invalid_argument("twist: A is not abelian");
  int a1 = -1, a2 = -1;
  for (int a : klein)
    if (a != g.identity) {
      if (a1 < 0) a1 = a;
      else if (a2 < 0) a2 = a;
    }
  const int a12 = g.mul(a1, a2);
  // Elements of A as (u, v) in F2^2: a1^u a2^v.
  std::vector<std::pair<int, std::array<int, 2>>> elems = {
      {g.identity, {0, 0}}, {a1, {1, 0}}, {a2, {0, 1}}, {a12, {1, 1}}};
  HopfQ K = group_algebra(g);
  const int d = g.n;
  const CycField fld{1};
  HopfQ H = K;
  H.name = name.empty() ? "(k" + g.name + ")^J" : name;
  H.split_exponent = std::lcm(K.split_exponent, 4);
  // e_chi = (1/4) sum_a chi(a) a, chi = (c1, c2): chi(a1^u a2^v) = (-1)^{c1 u + c2 v}.
  auto e_chi = [&](int c1, int c2) {
    Vec<CycNumber> v(d, fld.zero());
    for (const auto& [a, uv] : elems) v[a] = CycNumber(Rational((c1 * uv[0] + c2 * uv[1]) % 2 ? -1 : 1, 4));
    return v;
  };
  // J and J^{-1} as sparse elements of kG (x) kG: map (i, j) -> coefficient.
  std::map<std::pair<int, int>, CycNumber> J, Jinv;
  for (int c1 = 0; c1 < 2; ++c1)
    for (int c2 = 0; c2 < 2; ++c2)
      for (int d1 = 0; d1 < 2; ++d1)
        for (int d2 = 0; d2 < 2; ++d2) {
          int sgn = trivial_sigma ? 0 : (c1 * d2) % 2;
          CycNumber s = sgn ? CycNumber(-1) : CycNumber(1);
          Vec<CycNumber> x = e_chi(c1, c2), y = e_chi(d1, d2);
          for (int i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
              if (y[j].is_zero()) continue;
              J[{i, j}] += s * x[i] * y[j];
              Jinv[{i, j}] += s * x[i] * y[j];  // sigma = +-1 is its own inverse
            }
          }
        }
  std::erase_if(J, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(Jinv, [](const auto& kv) { return kv.second.is_zero(); });
  for (int h = 0; h < d; ++h) {
    std::map<std::pair<int, int>, CycNumber> out;
    for (const auto& [ij, c] : J)
      for (const auto& [kl, c2] : Jinv)
        out[{g.mul(g.mul(ij.first, h), kl.first), g.mul(g.mul(ij.second, h), kl.second)}] += c * c2;
    H.comult[h].clear();
    for (const auto& [ij, c] : out)
      if (!c.is_zero()) H.comult[h].push_back({ij.first, ij.second, c});
  }
  // S_J(h) = U S(h) U^{-1} with U = J^(1) S(J^(2)) and U^{-1} = S(Jinv^(1)) Jinv^(2).
  Vec<CycNumber> U(d, fld.zero()), Uinv(d, fld.zero());
  for (const auto& [ij, c] : J) U[g.mul(ij.first, g.inverse(ij.second))] += c;
  for (const auto& [ij, c] : Jinv) Uinv[g.mul(g.inverse(ij.first), ij.second)] += c;
  for (int h = 0; h < d; ++h) {
    Vec<CycNumber> sh = K.S(K.basis_vec(h));
    Vec<CycNumber> v = K.mul(K.mul(U, sh), Uinv);
    H.antipode[h].clear();
    for (int k = 0; k < d; ++k)
      if (!v[k].is_zero()) H.antipode[h].push_back({k, v[k]});
  }
  H.canonicalize();
  return H;
}

}  // namespace polyhopf

#endif  // POLYHOPF_BUILDERS_HPP
