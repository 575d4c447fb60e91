#ifndef POLYHOPF_PRIME_FIELD_HPP
#define POLYHOPF_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace polyhopf {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

/// Residue modulo a prime q < 2^31. The modulus travels with the value.
class Fq {
public:
  Fq() = default;
  Fq(std::uint32_t q, std::int64_t v) : q_(q) {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + q : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return q_; }
  bool is_zero() const { return v_ == 0; }

  friend Fq operator+(Fq a, Fq b) {
    std::uint32_t q = mod(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
    return raw(q, static_cast<std::uint32_t>(s >= q ? s - q : s));
  }
  friend Fq operator-(Fq a, Fq b) {
    std::uint32_t q = mod(a, b);
    return raw(q, a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + q - b.v_);
  }
  Fq operator-() const { return raw(q_, v_ == 0 ? 0 : q_ - v_); }
  friend Fq operator*(Fq a, Fq b) {
    std::uint32_t q = mod(a, b);
    return raw(q, static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % q));
  }
  Fq inverse() const {
    if (v_ == 0) throw std::domain_error("Fq: inverse of zero");
    return raw(q_, static_cast<std::uint32_t>(pow_mod(v_, q_ - 2, q_)));
  }
  friend Fq operator/(Fq a, Fq b) { return a * b.inverse(); }
  Fq& operator+=(Fq b) { return *this = *this + b; }
  Fq& operator-=(Fq b) { return *this = *this - b; }
  Fq& operator*=(Fq b) { return *this = *this * b; }
  Fq pow(std::uint64_t e) const { return raw(q_, static_cast<std::uint32_t>(pow_mod(v_, e, q_))); }

  friend bool operator==(Fq a, Fq b) { return a.v_ == b.v_; }
  friend bool operator!=(Fq a, Fq b) { return a.v_ != b.v_; }

  /// Symmetric lift to (-q/2, q/2].
  std::int64_t signed_value() const {
    return v_ > q_ / 2 ? static_cast<std::int64_t>(v_) - q_ : static_cast<std::int64_t>(v_);
  }

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, Fq x) { return os << x.v_; }

private:
  static Fq raw(std::uint32_t q, std::uint32_t v) {
    Fq r;
    r.q_ = q;
    r.v_ = v;
    return r;
  }
  static std::uint32_t mod(Fq a, Fq b) {
    // A default-constructed zero (q = 0) adopts the other operand's modulus.
    if (a.q_ == b.q_) return a.q_;
    if (a.q_ == 0) return b.q_;
    if (b.q_ == 0) return a.q_;
    throw std::invalid_argument("Fq: mixed moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t q_ = 0;
};

/// Field descriptor for F_q.
struct PrimeField {
  std::uint32_t q = 2;

  Fq zero() const { return Fq(q, 0); }
  Fq one() const { return Fq(q, 1); }
  Fq from_int(std::int64_t n) const { return Fq(q, n); }
  Fq from_rational(const Rational& r) const {
    if (r.den() % static_cast<std::int64_t>(q) == 0)
      throw std::domain_error("rational " + r.str() + " has denominator divisible by " + std::to_string(q));
    return Fq(q, r.num()) / Fq(q, r.den());
  }
  std::string str(const Fq& x) const { return x.str(); }
  Fq parse(const std::string& s) const { return Fq(q, std::stoll(s)); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q == b.q; }
};

/// Fixed embedding zeta_N -> w in F_q with w of exact multiplicative order N.
struct Embedding {
  int conductor = 1;
  std::uint32_t q = 2;
  std::uint32_t w = 1;
  PrimeField field() const { return PrimeField{q}; }
};

/// Smallest residue of exact order N modulo q.
inline Embedding fq_embed(int n, std::uint32_t q) {
  if (n < 1) throw std::invalid_argument("fq_embed: N must be >= 1");
  if (!is_prime(q)) throw std::invalid_argument("fq_embed: " + std::to_string(q) + " is not prime");
  if ((q - 1) % n != 0)
    throw std::invalid_argument("fq_embed: " + std::to_string(q) + " is not 1 mod " + std::to_string(n));
  auto ps = prime_factors(static_cast<std::uint64_t>(n));
  for (std::uint32_t w = 1; w < q; ++w) {
    if (pow_mod(w, n, q) != 1) continue;
    bool exact = true;
    for (auto p : ps)
      if (pow_mod(w, n / p, q) == 1) exact = false;
    if (exact) return Embedding{n, q, w};
  }
  throw std::logic_error("fq_embed: no element of the requested order");
}

/// Ring homomorphism Z[1/d][zeta_N] -> F_q determined by the embedding.
inline Fq reduce_scalar(const CycNumber& a, const Embedding& emb) {
  if (!a.is_rational() && a.conductor() != emb.conductor)
    throw std::invalid_argument("reduce_scalar: conductor mismatch");
  PrimeField f{emb.q};
  Fq acc = f.zero();
  Fq wk = f.one();
  Fq w = f.from_int(emb.w);
  for (const auto& c : a.coeffs()) {
    if (!c.is_zero()) acc += f.from_rational(c) * wk;
    wk *= w;
  }
  return acc;
}

/// Smallest prime q = 1 (mod N), q > floor, not dividing avoid.
inline std::uint32_t next_good_prime(int n, std::uint64_t avoid, std::uint32_t floor = 2) {
  for (std::uint64_t q = floor + 1;; ++q) {
    if ((q - 1) % n != 0 || !is_prime(q)) continue;
    if (avoid != 0 && avoid % q == 0) continue;
    return static_cast<std::uint32_t>(q);
  }
}

}  // namespace polyhopf

#endif  // POLYHOPF_PRIME_FIELD_HPP
