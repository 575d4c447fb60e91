#ifndef POLYHOPF_COCYCLE_HPP
#define POLYHOPF_COCYCLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "binary.hpp"
#include "cyclotomic.hpp"
#include "groups.hpp"

namespace polyhopf {

/// Normalized-or-not 2-cochain Gamma x Gamma -> F2.
struct Cocycle2F2 {
  int n = 0;
  std::vector<std::uint8_t> t;

  Cocycle2F2() = default;
  explicit Cocycle2F2(int order) : n(order), t(static_cast<std::size_t>(order) * order, 0) {}

  int operator()(int g, int h) const { return t[g * n + h]; }
  void set(int g, int h, int v) { t[g * n + h] = static_cast<std::uint8_t>(v & 1); }
  friend Cocycle2F2 operator+(const Cocycle2F2& a, const Cocycle2F2& b) {
    Cocycle2F2 r = a;
    for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] ^= b.t[i];
    return r;
  }
  friend bool operator==(const Cocycle2F2&, const Cocycle2F2&) = default;
};

/// Affine system over F2 with bitset rows; the right-hand side is an extra bit.
class F2System {
public:
  explicit F2System(std::size_t vars) : vars_(vars), words_((vars + 64) / 64) {}

  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }

  /// Adds sum_{i in vars} x_i = rhs.
  void add(const std::vector<int>& vars, int rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (int v : vars) row[v / 64] ^= std::uint64_t(1) << (v % 64);
    if (rhs & 1) row[vars_ / 64] ^= std::uint64_t(1) << (vars_ % 64);
    add_row(std::move(row));
  }

  void add_row(std::vector<std::uint64_t> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (bit(row, pivots_[r]))
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= rows_[r][w];
    std::size_t p = 0;
    while (p < vars_ && !bit(row, p)) ++p;
    if (p == vars_) {
      if (bit(row, vars_)) consistent_ = false;
      return;
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
  }

  /// One solution with all free variables zero.
  std::optional<std::vector<std::uint8_t>> solve() const {
    if (!consistent_) return std::nullopt;
    std::vector<std::uint8_t> x(vars_, 0);
    for (std::size_t r = rows_.size(); r-- > 0;) {
      int v = bit(rows_[r], vars_);
      for (std::size_t c = pivots_[r] + 1; c < vars_; ++c)
        if (bit(rows_[r], c)) v ^= x[c];
      x[pivots_[r]] = static_cast<std::uint8_t>(v);
    }
    return x;
  }

  /// Basis of the homogeneous solution space.
  std::vector<std::vector<std::uint8_t>> kernel() const {
    std::vector<char> is_pivot(vars_, 0);
    for (auto p : pivots_) is_pivot[p] = 1;
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t f = 0; f < vars_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint8_t> x(vars_, 0);
      x[f] = 1;
      for (std::size_t r = rows_.size(); r-- > 0;) {
        int v = 0;
        for (std::size_t c = pivots_[r] + 1; c < vars_; ++c)
          if (bit(rows_[r], c)) v ^= x[c];
        x[pivots_[r]] = static_cast<std::uint8_t>(v);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

private:
  static bool bit(const std::vector<std::uint64_t>& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1; }

  std::size_t vars_, words_;
  bool consistent_ = true;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

inline bool is_normalized(const FinGroup& g, const Cocycle2F2& w) {
  for (int s = 0; s < g.n; ++s)
    if (w(g.identity, s) || w(s, g.identity)) return false;
  return true;
}

inline bool is_cocycle(const FinGroup& g, const Cocycle2F2& w) {
  if (w.n != g.n) return false;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if ((w(a, b) ^ w(g.mul(a, b), c)) != (w(b, c) ^ w(a, g.mul(b, c)))) return false;
  return true;
}

inline Cocycle2F2 coboundary(const FinGroup& g, const std::vector<std::uint8_t>& b) {
  Cocycle2F2 w(g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) w.set(x, y, b[x] ^ b[y] ^ b[g.mul(x, y)]);
  return w;
}

/// u(s)u(t) = z^{w(s,t)} u(st).
inline Cocycle2F2 extension_cocycle(const CentralExt& ext) {
  const FinGroup& base = ext.base;
  Cocycle2F2 w(base.n);
  for (int s = 0; s < base.n; ++s)
    for (int t = 0; t < base.n; ++t) {
      int prod = ext.cover.mul(ext.section[s], ext.section[t]);
      int st = ext.section[base.mul(s, t)];
      if (prod == st) continue;
      if (prod != ext.cover.mul(ext.z, st)) throw std::logic_error("extension_cocycle: product outside fibre");
      w.set(s, t, 1);
    }
  return w;
}

/// b with b(e) = 0 and db = w, or nullopt.
inline std::optional<std::vector<std::uint8_t>> coboundary_solve(const FinGroup& g, const Cocycle2F2& w) {
  F2System sys(g.n);
  sys.add({g.identity}, 0);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      std::vector<int> vars;
      // Repeated variables cancel in F2.
      for (int v : {x, y, g.mul(x, y)}) vars.push_back(v);
      sys.add(vars, w(x, y));
      if (!sys.consistent()) return std::nullopt;
    }
  return sys.solve();
}

/// Basis of Hom(Gamma, F2) as 0/1 vectors.
inline std::vector<std::vector<std::uint8_t>> hom_to_f2(const FinGroup& g) {
  F2System sys(g.n);
  sys.add({g.identity}, 0);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) sys.add({x, y, g.mul(x, y)}, 0);
  return sys.kernel();
}

struct Stabilized {
  Cocycle2F2 omega;              // strictly theta-invariant representative
  std::vector<std::uint8_t> b;   // omega = omega_in + db
};

/// Cohomologous representative fixed by theta; throws when the class is not theta-stable.
inline Stabilized theta_stabilize(const FinGroup& g, const Cocycle2F2& w, const GroupAut& theta) {
  if (!(compose(theta, theta) == identity_aut(g))) throw std::invalid_argument("theta_stabilize: theta^2 != id");
  F2System sys(g.n);
  sys.add({g.identity}, 0);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      int tx = theta(x), ty = theta(y);
      sys.add({tx, ty, g.mul(tx, ty), x, y, g.mul(x, y)}, w(tx, ty) ^ w(x, y));
      if (!sys.consistent()) throw std::runtime_error("theta_stabilize: class not theta-stable");
    }
  Stabilized out;
  out.b = *sys.solve();
  out.omega = w + coboundary(g, out.b);
  return out;
}

/// dim_F2 H^2(Gamma, F2), with normalized cochains. The unknowns are the
/// values w(g, s) on a generating set; every other value follows from the
/// cocycle identity along a spanning tree of the Cayley graph.
inline int h2_f2_dim(const FinGroup& g) {
  if (g.n > 60) throw std::invalid_argument("h2_f2_dim: group order above 60");
  std::vector<int> gens = g.n == 1 ? std::vector<int>{} : detail::small_generating_set(g);
  const int k = static_cast<int>(gens.size());
  const int vars = g.n * k;
  const std::size_t words = (vars + 64) / 64;
  using Row = std::vector<std::uint64_t>;
  auto flip = [](Row& r, int v) { r[v / 64] ^= std::uint64_t(1) << (v % 64); };
  // Spanning tree from the identity via right multiplication by generators.
  std::vector<int> parent(g.n, -1), slot(g.n, -1), order{g.identity};
  std::vector<char> seen(g.n, 0);
  seen[g.identity] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int s = 0; s < k; ++s) {
      int x = g.mul(order[i], gens[s]);
      if (!seen[x]) {
        seen[x] = 1;
        parent[x] = order[i];
        slot[x] = s;
        order.push_back(x);
      }
    }
  // expr[a][h] expresses w(a, h); w(a, hp s) = w(a, hp) + w(a hp, s) + w(hp, s).
  std::vector<Row> expr(static_cast<std::size_t>(g.n) * g.n, Row(words, 0));
  for (std::size_t i = 1; i < order.size(); ++i) {
    int h = order[i], hp = parent[h], s = slot[h];
    for (int a = 0; a < g.n; ++a) {
      Row r = expr[a * g.n + hp];
      flip(r, g.mul(a, hp) * k + s);
      if (hp != g.identity) flip(r, hp * k + s);
      else r = Row(words, 0), flip(r, a * k + s);
      expr[a * g.n + h] = std::move(r);
    }
  }
  F2System sys(vars);
  auto add = [&](Row r) {
    r.resize(words, 0);
    sys.add_row(std::move(r));
  };
  for (int h = 0; h < g.n; ++h) add(expr[g.identity * g.n + h]);
  for (int s = 0; s < k; ++s) {
    Row r(words, 0);
    flip(r, g.identity * k + s);
    add(std::move(r));
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c) {
        Row r = expr[a * g.n + b];
        const Row& r2 = expr[g.mul(a, b) * g.n + c];
        const Row& r3 = expr[b * g.n + c];
        const Row& r4 = expr[a * g.n + g.mul(b, c)];
        for (std::size_t w = 0; w < words; ++w) r[w] ^= r2[w] ^ r3[w] ^ r4[w];
        add(std::move(r));
      }
  const int z2 = vars - static_cast<int>(sys.rank());
  const int b2 = (g.n - 1) - static_cast<int>(hom_to_f2(g).size());
  return z2 - b2;
}

/// tau_p(s, t) = (-1)^{w(s,t)} as scalars.
inline std::vector<CycNumber> to_sign_cocycle(const Cocycle2F2& w) {
  std::vector<CycNumber> out(w.t.size());
  for (std::size_t i = 0; i < w.t.size(); ++i) out[i] = CycNumber(w.t[i] ? -1 : 1);
  return out;
}

/// 2-cochain with values in Z4, read as powers of i.
struct Cocycle2Z4 {
  int n = 0;
  std::vector<std::uint8_t> t;

  Cocycle2Z4() = default;
  explicit Cocycle2Z4(int order) : n(order), t(static_cast<std::size_t>(order) * order, 0) {}
  int operator()(int g, int h) const { return t[g * n + h]; }
  void set(int g, int h, int v) { t[g * n + h] = static_cast<std::uint8_t>(((v % 4) + 4) % 4); }
  friend bool operator==(const Cocycle2Z4&, const Cocycle2Z4&) = default;

  /// i^t(g,h) in Q(zeta_N); N must be divisible by 4.
  std::vector<CycNumber> scalars(int conductor) const {
    if (conductor % 4 != 0) throw std::invalid_argument("Cocycle2Z4: conductor must contain i");
    std::vector<CycNumber> out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) out[k] = CycNumber::zeta(conductor, static_cast<long>(t[k]) * (conductor / 4));
    return out;
  }
  bool is_sign_valued() const {
    for (auto v : t)
      if (v & 1) return false;
    return true;
  }
};

/// All psi in Hom(Gamma, F2), not just a basis.
inline std::vector<std::vector<std::uint8_t>> all_homs_to_f2(const FinGroup& g) {
  auto basis = hom_to_f2(g);
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t m = 0; m < (std::size_t(1) << basis.size()); ++m) {
    std::vector<std::uint8_t> v(g.n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((m >> b) & 1)
        for (int i = 0; i < g.n; ++i) v[i] ^= basis[b][i];
    out.push_back(std::move(v));
  }
  return out;
}

/// Lift of the sign cocycle (-1)^w to tau' = (-1)^w dc with c in mu_4, c(e) = 1,
/// satisfying tau'(theta g, theta h) tau'(g, h) = 1.
struct ThetaLift {
  std::vector<std::uint8_t> beta;  // d beta = w o theta + w, beta o theta = beta
  std::vector<int> c;              // c(s) = i^{c[s]}
  Cocycle2Z4 tau;
};

inline ThetaLift theta_lift_from_beta(const FinGroup& g, const Cocycle2F2& w, const GroupAut& theta,
                                      const std::vector<std::uint8_t>& beta) {
  ThetaLift L;
  L.beta = beta;
  L.c.assign(g.n, 0);
  // Fixed points: c = sqrt((-1)^beta) = i^beta. Free orbits {s, theta s}, s smaller:
  // c(s) = (-1)^beta(s), c(theta s) = 1, so that c (c o theta) = (-1)^beta.
  for (int s = 0; s < g.n; ++s) {
    int ts = theta(s);
    if (ts == s) L.c[s] = beta[s] ? 1 : 0;
    else if (s < ts) L.c[s] = beta[s] ? 2 : 0;
  }
  L.tau = Cocycle2Z4(g.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) L.tau.set(a, b, 2 * w(a, b) + L.c[a] + L.c[b] - L.c[g.mul(a, b)]);
  return L;
}

/// Every lift parameterized by beta = beta0 + psi with psi a theta-invariant
/// homomorphism; throws when the class of (-1)^w admits no such lift.
inline std::vector<ThetaLift> theta_lifts(const FinGroup& g, const Cocycle2F2& w, const GroupAut& theta) {
  if (!(compose(theta, theta) == identity_aut(g))) throw std::invalid_argument("theta_lifts: theta^2 != id");
  F2System sys(g.n);
  sys.add({g.identity}, 0);
  for (int x = 0; x < g.n; ++x) {
    sys.add({x, theta(x)}, 0);
    for (int y = 0; y < g.n; ++y) sys.add({x, y, g.mul(x, y)}, w(theta(x), theta(y)) ^ w(x, y));
    if (!sys.consistent()) throw std::runtime_error("theta_lifts: class not theta-stable");
  }
  auto beta0 = *sys.solve();
  std::vector<ThetaLift> out;
  for (const auto& psi : all_homs_to_f2(g)) {
    bool invariant = true;
    for (int x = 0; x < g.n && invariant; ++x) invariant = psi[x] == psi[theta(x)];
    if (!invariant) continue;
    std::vector<std::uint8_t> beta = beta0;
    for (int x = 0; x < g.n; ++x) beta[x] ^= psi[x];
    out.push_back(theta_lift_from_beta(g, w, theta, beta));
  }
  return out;
}

/// tau(theta g, theta h) tau(g, h) = 1 for a Z4-valued cochain.
inline bool is_theta_anti_invariant(const FinGroup& g, const Cocycle2Z4& tau, const GroupAut& theta) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if ((tau(theta(a), theta(b)) + tau(a, b)) % 4 != 0) return false;
  return true;
}

inline bool is_cocycle(const FinGroup& g, const Cocycle2Z4& tau) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if ((tau(a, b) + tau(g.mul(a, b), c)) % 4 != (tau(b, c) + tau(a, g.mul(b, c))) % 4) return false;
  return true;
}

}  // namespace polyhopf

#endif  // POLYHOPF_COCYCLE_HPP
