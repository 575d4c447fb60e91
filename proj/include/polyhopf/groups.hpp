#ifndef POLYHOPF_GROUPS_HPP
#define POLYHOPF_GROUPS_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhopf {

enum class PolyKind { cyclic, dihedral, tetra, octa, icosa };

inline std::string kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::cyclic: return "cyclic";
    case PolyKind::dihedral: return "dihedral";
    case PolyKind::tetra: return "tetra";
    case PolyKind::octa: return "octa";
    case PolyKind::icosa: return "icosa";
  }
  return "?";
}

inline PolyKind parse_kind(const std::string& s) {
  if (s == "cyclic") return PolyKind::cyclic;
  if (s == "dihedral") return PolyKind::dihedral;
  if (s == "tetra") return PolyKind::tetra;
  if (s == "octa") return PolyKind::octa;
  if (s == "icosa") return PolyKind::icosa;
  throw std::invalid_argument("unknown polyhedral kind '" + s + "'");
}

/// Finite group given by its Cayley table on indices 0..n-1.
struct FinGroup {
  int n = 1;
  std::vector<int> table{0};  // table[a*n + b] = ab
  int identity = 0;
  std::vector<int> inv{0};
  std::vector<int> generators;
  std::string name;

  int mul(int a, int b) const { return table[a * n + b]; }
  int inverse(int a) const { return inv[a]; }
  int order() const { return n; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Exhaustive check of closure, associativity, identity and inverses.
  bool is_valid() const {
    if (static_cast<int>(table.size()) != n * n || static_cast<int>(inv.size()) != n) return false;
    for (int x : table)
      if (x < 0 || x >= n) return false;
    for (int a = 0; a < n; ++a) {
      if (mul(identity, a) != a || mul(a, identity) != a) return false;
      if (mul(a, inv[a]) != identity || mul(inv[a], a) != identity) return false;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    }
    return true;
  }

  /// Elements of the subgroup generated by gens, in BFS order from the identity.
  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<int> out{identity};
    std::vector<char> seen(n, 0);
    seen[identity] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int g : gens) {
        int x = mul(out[i], g);
        if (!seen[x]) {
          seen[x] = 1;
          out.push_back(x);
        }
      }
    return out;
  }

  std::vector<int> center() const {
    std::vector<int> out;
    for (int a = 0; a < n; ++a) {
      bool central = true;
      for (int b = 0; b < n && central; ++b) central = mul(a, b) == mul(b, a);
      if (central) out.push_back(a);
    }
    return out;
  }

  static FinGroup from_table(int n, std::vector<int> table, std::string name = {}) {
    FinGroup g;
    g.n = n;
    g.table = std::move(table);
    g.name = std::move(name);
    g.identity = -1;
    for (int e = 0; e < n && g.identity < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
      if (ok) g.identity = e;
    }
    if (g.identity < 0) throw std::invalid_argument("FinGroup: table has no identity");
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.mul(a, b) == g.identity) g.inv[a] = b;
    for (int a = 0; a < n; ++a)
      if (g.inv[a] < 0) throw std::invalid_argument("FinGroup: element without inverse");
    return g;
  }

  /// Subgroup on the given closed element list, in that order.
  /// embed[i] is the ambient index of subgroup element i.
  FinGroup subgroup(const std::vector<int>& elems, std::vector<int>* embed = nullptr) const {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    const int m = static_cast<int>(elems.size());
    std::vector<int> t(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        auto it = pos.find(mul(elems[i], elems[j]));
        if (it == pos.end()) throw std::invalid_argument("FinGroup::subgroup: not closed");
        t[i * m + j] = it->second;
      }
    if (embed) *embed = elems;
    return from_table(m, std::move(t));
  }
};

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& a, const Perm& b) {
  // (ab)(i) = a(b(i)): apply b first.
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

/// Group generated by permutations; elements sorted lexicographically with
/// the identity first. elements_out receives the permutations.
inline FinGroup group_from_permutations(const std::vector<Perm>& gens, std::string name,
                                        std::vector<Perm>* elements_out = nullptr) {
  const std::size_t deg = gens.empty() ? 1 : gens[0].size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm x = perm_mul(p, g);
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  std::vector<Perm> elems(seen.begin(), seen.end());  // identity sorts first
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = index[perm_mul(elems[i], elems[j])];
  FinGroup g = FinGroup::from_table(n, std::move(t), std::move(name));
  for (const auto& p : gens) g.generators.push_back(index[p]);
  if (elements_out) *elements_out = std::move(elems);
  return g;
}

inline FinGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  FinGroup g = FinGroup::from_table(n, std::move(t), "Z" + std::to_string(n));
  if (n > 1) g.generators = {1};
  return g;
}

/// D_n on elements r^k s^f (index k + n*f), generated by s_+ = s and
/// s_- = s r, so that s_+^2 = s_-^2 = (s_+ s_-)^n = 1.
inline FinGroup dihedral_group(int n) {
  if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
  const int m = 2 * n;
  std::vector<int> t(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int k1 = a % n, f1 = a / n, k2 = b % n, f2 = b / n;
      int k = ((k1 + (f1 ? -k2 : k2)) % n + n) % n;
      t[a * m + b] = k + n * (f1 ^ f2);
    }
  FinGroup g = FinGroup::from_table(m, std::move(t), "D" + std::to_string(n));
  g.generators = {n, (n - 1) + n};  // s_+, s_-
  return g;
}

inline FinGroup alternating_group(int deg) {
  std::vector<Perm> gens;
  if (deg == 4) gens = {{1, 2, 0, 3}, {0, 2, 3, 1}};
  else if (deg == 5) gens = {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}};
  else throw std::invalid_argument("alternating_group: only degree 4 and 5");
  return group_from_permutations(gens, "A" + std::to_string(deg));
}

inline FinGroup symmetric_group(int deg) {
  Perm cyc(deg), tr(deg);
  std::iota(cyc.begin(), cyc.end(), 1);
  cyc[deg - 1] = 0;
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  return group_from_permutations({cyc, tr}, "S" + std::to_string(deg));
}

/// The polyhedral groups: Z_n, D_n, T = A4, O = S4, I = A5.
inline FinGroup polyhedral(PolyKind kind, int n = 0) {
  switch (kind) {
    case PolyKind::cyclic: return cyclic_group(n);
    case PolyKind::dihedral: return dihedral_group(n);
    case PolyKind::tetra: return alternating_group(4);
    case PolyKind::octa: return symmetric_group(4);
    case PolyKind::icosa: return alternating_group(5);
  }
  throw std::invalid_argument("polyhedral: bad kind");
}

inline FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const int n = a.n * b.n;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = a.mul(x / b.n, y / b.n) * b.n + b.mul(x % b.n, y % b.n);
  FinGroup g = FinGroup::from_table(n, std::move(t), a.name + "x" + b.name);
  for (int s : a.generators) g.generators.push_back(s * b.n + b.identity);
  for (int s : b.generators) g.generators.push_back(a.identity * b.n + s);
  return g;
}

// ---------------------------------------------------------------------------
// Invariants and catalog identification

struct GroupInvariants {
  int order = 1;
  bool abelian = true;
  std::vector<int> spectrum;  // sorted element orders
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

inline GroupInvariants iso_invariants(const FinGroup& g) {
  GroupInvariants inv;
  inv.order = g.n;
  inv.abelian = g.is_abelian();
  for (int a = 0; a < g.n; ++a) inv.spectrum.push_back(g.element_order(a));
  std::sort(inv.spectrum.begin(), inv.spectrum.end());
  return inv;
}

/// Names Z_n, D_n (D2 is the Klein group), A4, S4, A5 by invariants.
inline std::optional<std::string> catalog_match(const FinGroup& g) {
  const GroupInvariants inv = iso_invariants(g);
  std::vector<FinGroup> candidates{cyclic_group(g.n)};
  if (g.n % 2 == 0 && g.n >= 4) candidates.push_back(dihedral_group(g.n / 2));
  if (g.n == 12) candidates.push_back(alternating_group(4));
  if (g.n == 24) candidates.push_back(symmetric_group(4));
  if (g.n == 60) candidates.push_back(alternating_group(5));
  for (const auto& c : candidates)
    if (iso_invariants(c) == inv) return c.name;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Automorphisms

struct GroupAut {
  std::vector<int> perm;
  int operator()(int a) const { return perm[a]; }
  friend bool operator==(const GroupAut&, const GroupAut&) = default;
  friend bool operator<(const GroupAut& a, const GroupAut& b) { return a.perm < b.perm; }
};

inline GroupAut identity_aut(const FinGroup& g) {
  GroupAut a;
  a.perm.resize(g.n);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

inline GroupAut compose(const GroupAut& a, const GroupAut& b) {
  GroupAut r;
  r.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
  return r;
}

inline GroupAut invert(const GroupAut& a) {
  GroupAut r;
  r.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[a.perm[i]] = static_cast<int>(i);
  return r;
}

inline bool is_automorphism(const FinGroup& g, const GroupAut& a) {
  if (static_cast<int>(a.perm.size()) != g.n) return false;
  std::vector<char> hit(g.n, 0);
  for (int x : a.perm) {
    if (x < 0 || x >= g.n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (a(g.mul(x, y)) != g.mul(a(x), a(y))) return false;
  return true;
}

inline GroupAut conjugation(const FinGroup& g, int h) {
  GroupAut a;
  a.perm.resize(g.n);
  for (int x = 0; x < g.n; ++x) a.perm[x] = g.mul(g.mul(h, x), g.inverse(h));
  return a;
}

namespace detail {

/// Smallest generating set found among single elements, then pairs, then triples.
inline std::vector<int> small_generating_set(const FinGroup& g) {
  if (g.n == 1) return {};
  for (int x = 0; x < g.n; ++x)
    if (static_cast<int>(g.closure({x}).size()) == g.n) return {x};
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y)
      if (static_cast<int>(g.closure({x, y}).size()) == g.n) return {x, y};
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y)
      for (int z = y + 1; z < g.n; ++z)
        if (static_cast<int>(g.closure({x, y, z}).size()) == g.n) return {x, y, z};
  throw std::runtime_error("automorphisms: no generating set of size <= 3");
}

}  // namespace detail

/// Full automorphism group: every assignment of generator images with
/// matching orders is extended along a spanning tree and kept when it
/// respects right multiplication by generators and is bijective.
inline std::vector<GroupAut> automorphisms(const FinGroup& g) {
  if (g.n > 120) throw std::invalid_argument("automorphisms: group order above 120");
  const std::vector<int> gens = detail::small_generating_set(g);
  if (gens.empty()) return {identity_aut(g)};
  // Spanning tree: word[x] = (parent, generator slot).
  std::vector<int> parent(g.n, -1), slot(g.n, -1), order_seen;
  std::vector<int> bfs{g.identity};
  std::vector<char> seen(g.n, 0);
  seen[g.identity] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int x = g.mul(bfs[i], gens[s]);
      if (!seen[x]) {
        seen[x] = 1;
        parent[x] = bfs[i];
        slot[x] = static_cast<int>(s);
        bfs.push_back(x);
      }
    }
  std::vector<std::vector<int>> options(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    int o = g.element_order(gens[s]);
    for (int x = 0; x < g.n; ++x)
      if (g.element_order(x) == o) options[s].push_back(x);
  }
  std::vector<GroupAut> out;
  std::vector<int> images(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == gens.size()) {
      GroupAut a;
      a.perm.assign(g.n, -1);
      a.perm[g.identity] = g.identity;
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        int x = bfs[i];
        a.perm[x] = g.mul(a.perm[parent[x]], images[slot[x]]);
      }
      std::vector<char> hit(g.n, 0);
      for (int v : a.perm) {
        if (hit[v]) return;
        hit[v] = 1;
      }
      for (int x = 0; x < g.n; ++x)
        for (std::size_t t = 0; t < gens.size(); ++t)
          if (a.perm[g.mul(x, gens[t])] != g.mul(a.perm[x], images[t])) return;
      out.push_back(std::move(a));
      return;
    }
    for (int x : options[s]) {
      images[s] = x;
      rec(s + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Conjugacy classes (under Aut) of automorphisms of order exactly 2. Each
/// class is sorted; classes are ordered by their smallest member.
inline std::vector<std::vector<GroupAut>> order2_classes(const FinGroup& g,
                                                         const std::vector<GroupAut>& auts) {
  const GroupAut id = identity_aut(g);
  std::set<GroupAut> involutions;
  for (const auto& a : auts)
    if (!(a == id) && compose(a, a) == id) involutions.insert(a);
  std::vector<std::vector<GroupAut>> classes;
  std::set<GroupAut> done;
  for (const auto& t : involutions) {
    if (done.count(t)) continue;
    std::set<GroupAut> cls;
    for (const auto& a : auts) cls.insert(compose(compose(a, t), invert(a)));
    for (const auto& c : cls) done.insert(c);
    classes.emplace_back(cls.begin(), cls.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

inline std::vector<std::vector<GroupAut>> order2_classes(const FinGroup& g) {
  return order2_classes(g, automorphisms(g));
}

/// Elements fixed by theta (a subgroup).
inline std::vector<int> fixed_points(const FinGroup& g, const GroupAut& theta) {
  std::vector<int> out;
  for (int x = 0; x < g.n; ++x)
    if (theta(x) == x) out.push_back(x);
  return out;
}

inline FinGroup fixed_subgroup(const FinGroup& g, const GroupAut& theta) {
  if (!(compose(theta, theta) == identity_aut(g))) throw std::invalid_argument("fixed_subgroup: theta^2 != id");
  return g.subgroup(fixed_points(g, theta));
}

}  // namespace polyhopf

#endif  // POLYHOPF_GROUPS_HPP
