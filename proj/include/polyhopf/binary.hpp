#ifndef POLYHOPF_BINARY_HPP
#define POLYHOPF_BINARY_HPP

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "groups.hpp"

namespace polyhopf {

/// 2x2 matrix over Q(zeta_N), entries (a, b; c, d) row-major.
struct Mat2 {
  std::array<CycNumber, 4> e;

  const CycNumber& operator()(int i, int j) const { return e[2 * i + j]; }
  CycNumber& operator()(int i, int j) { return e[2 * i + j]; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = x.e[k] + y.e[k];
    return r;
  }
  Mat2 scaled(const CycNumber& s) const {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] * s;
    return r;
  }
  Mat2 operator-() const { return scaled(CycNumber(-1)); }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    for (int k = 0; k < 4; ++k)
      if (!(x.e[k] == y.e[k])) return false;
    return true;
  }
  CycNumber det() const { return e[0] * e[3] - e[1] * e[2]; }
  std::string str() const {
    return "[" + e[0].str() + ", " + e[1].str() + "; " + e[2].str() + ", " + e[3].str() + "]";
  }

  static Mat2 make(CycNumber a, CycNumber b, CycNumber c, CycNumber d) {
    Mat2 m;
    m.e = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return m;
  }
  static Mat2 identity() { return make(1, 0, 0, 1); }
};

/// Binary cover Gamma~ of a polyhedral group as a subgroup of SL2(Q(zeta_N)).
struct CentralExt {
  PolyKind kind = PolyKind::dihedral;
  int n = 0;
  int conductor = 1;
  FinGroup cover;
  std::vector<Mat2> matrices;  // matrices[g] for g in cover
  FinGroup base;
  int z = -1;                  // index of -I in cover
  std::vector<int> proj;       // cover -> base
  std::vector<int> section;    // base -> cover, section[e] = e

  std::string name() const {
    switch (kind) {
      case PolyKind::dihedral: return "2D" + std::to_string(n);
      case PolyKind::tetra: return "2T";
      case PolyKind::octa: return "2O";
      case PolyKind::icosa: return "2I";
      default: return "?";
    }
  }
};

inline int default_conductor(PolyKind kind, int n) {
  switch (kind) {
    case PolyKind::dihedral: return std::lcm(2 * n, 4);
    case PolyKind::tetra: return 4;
    case PolyKind::octa: return 8;
    case PolyKind::icosa: return 20;
    default: throw std::invalid_argument("no binary cover for cyclic groups");
  }
}

/// Standard SL2 generators of the binary polyhedral group, over conductor N.
inline std::vector<Mat2> binary_generators(PolyKind kind, int n, int conductor) {
  auto zeta = [&](int order, int k) {
    if (conductor % order != 0)
      throw std::invalid_argument("conductor " + std::to_string(conductor) + " does not contain zeta_" +
                                  std::to_string(order));
    return CycNumber::zeta(conductor, static_cast<long>(k) * (conductor / order));
  };
  const Mat2 rot = Mat2::make(0, -1, 1, 0);
  if (kind == PolyKind::dihedral) {
    if (n < 2) throw std::invalid_argument("binary dihedral needs n >= 2");
    return {Mat2::make(zeta(2 * n, 1), 0, 0, zeta(2 * n, -1)), rot};
  }
  const CycNumber i = zeta(4, 1);
  const Mat2 one = Mat2::identity();
  const Mat2 e1 = Mat2::make(-i, 0, 0, i);
  const Mat2 e2 = rot;
  const Mat2 e3 = e1 * e2;
  const Mat2 w = (one + e1 + e2 + e3).scaled(CycNumber(Rational(-1, 2)));
  if (kind == PolyKind::tetra) return {e1, e2, w};
  if (kind == PolyKind::octa) {
    const CycNumber sqrt2 = zeta(8, 1) - zeta(8, 3);
    return {e1, e2, w, (one + e1).scaled(sqrt2.inverse())};
  }
  if (kind == PolyKind::icosa) {
    const CycNumber z5 = zeta(5, 1);
    const CycNumber phi = CycNumber(1) + z5 + z5 * z5 * z5 * z5;
    const CycNumber phi_inv = phi - CycNumber(1);
    const Mat2 g = (one.scaled(phi) + e1.scaled(phi_inv) + e2).scaled(CycNumber(Rational(1, 2)));
    return {e1, e2, w, g};
  }
  throw std::invalid_argument("no binary cover for cyclic groups");
}

inline int base_order(PolyKind kind, int n) {
  switch (kind) {
    case PolyKind::dihedral: return 2 * n;
    case PolyKind::tetra: return 12;
    case PolyKind::octa: return 24;
    case PolyKind::icosa: return 60;
    default: return n;
  }
}

/// Matrix closure of the standard generators together with the quotient by
/// {+-I}. Base elements are numbered by first appearance in the cover.
inline CentralExt binary_cover(PolyKind kind, int n = 0, int conductor = 0) {
  if (kind == PolyKind::cyclic) throw std::invalid_argument("binary_cover: cyclic groups are excluded");
  if (kind == PolyKind::dihedral && n < 2) throw std::invalid_argument("binary_cover: dihedral needs n >= 2");
  CentralExt ext;
  ext.kind = kind;
  ext.n = kind == PolyKind::dihedral ? n : 0;
  ext.conductor = conductor > 0 ? conductor : default_conductor(kind, n);
  const int target = 2 * base_order(kind, n);
  const auto gens = binary_generators(kind, n, ext.conductor);
  for (const auto& g : gens)
    if (!(g.det() == CycNumber(1))) throw std::logic_error("binary_cover: generator not in SL2");

  std::map<std::string, int> index;
  std::vector<Mat2>& mats = ext.matrices;
  mats.push_back(Mat2::identity());
  index[mats[0].str()] = 0;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (const auto& g : gens) {
      Mat2 x = mats[i] * g;
      auto key = x.str();
      if (index.count(key)) continue;
      index[key] = static_cast<int>(mats.size());
      mats.push_back(std::move(x));
      if (static_cast<int>(mats.size()) > target)
        throw std::logic_error("binary_cover: closure exceeds 2|Gamma|");
    }
  if (static_cast<int>(mats.size()) != target) throw std::logic_error("binary_cover: closure has wrong order");
  const int m = target;
  std::vector<int> t(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a * m + b] = index.at((mats[a] * mats[b]).str());
  ext.cover = FinGroup::from_table(m, std::move(t), ext.name());
  ext.z = index.at((-Mat2::identity()).str());
  for (const auto& g : gens) ext.cover.generators.push_back(index.at(g.str()));

  ext.proj.assign(m, -1);
  std::vector<std::array<int, 2>> fibres;
  for (int a = 0; a < m; ++a) {
    if (ext.proj[a] >= 0) continue;
    int b = ext.cover.mul(a, ext.z);
    ext.proj[a] = ext.proj[b] = static_cast<int>(fibres.size());
    fibres.push_back({a, b});
  }
  const int nb = static_cast<int>(fibres.size());
  ext.section.resize(nb);
  for (int s = 0; s < nb; ++s) {
    auto [a, b] = fibres[s];
    ext.section[s] = s == 0 ? ext.cover.identity : (mats[a].str() < mats[b].str() ? a : b);
  }
  std::vector<int> bt(nb * nb);
  for (int s = 0; s < nb; ++s)
    for (int u = 0; u < nb; ++u) bt[s * nb + u] = ext.proj[ext.cover.mul(ext.section[s], ext.section[u])];
  ext.base = FinGroup::from_table(nb, std::move(bt), std::string(ext.name()).substr(1));
  for (int g : ext.cover.generators) ext.base.generators.push_back(ext.proj[g]);
  return ext;
}

}  // namespace polyhopf

#endif  // POLYHOPF_BINARY_HPP
