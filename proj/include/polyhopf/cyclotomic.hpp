#ifndef POLYHOPF_CYCLOTOMIC_HPP
#define POLYHOPF_CYCLOTOMIC_HPP

#include <boost/container/small_vector.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace polyhopf {

/// Reduction data for Q(zeta_N): the N-th cyclotomic polynomial and the
/// power-basis images of zeta^k for k < max(N, 2*phi - 1).
struct CycContext {
  int conductor = 1;
  int degree = 1;                          // phi(N)
  std::vector<std::int64_t> cyclotomic;    // Phi_N, low to high, monic
  std::vector<std::vector<Rational>> pow;  // pow[k] = zeta^k reduced, length degree

  static const CycContext& get(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[n];
    if (!slot) slot = std::unique_ptr<CycContext>(new CycContext(n));
    return *slot;
  }

  static std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact integer division.
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto den = cyclotomic_polynomial(d);
      std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
      for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        std::int64_t c = num[i];
        int shift = i - static_cast<int>(den.size()) + 1;
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
      }
      num = std::move(quot);
    }
    return num;
  }

private:
  explicit CycContext(int n) : conductor(n) {
    cyclotomic = cyclotomic_polynomial(n);
    degree = static_cast<int>(cyclotomic.size()) - 1;
    int count = std::max(n, 2 * degree);
    pow.assign(count, std::vector<Rational>(degree, Rational(0)));
    for (int k = 0; k < count; ++k) {
      if (k < degree) {
        pow[k][k] = 1;
        continue;
      }
      // zeta^k = zeta * zeta^{k-1}; shift then reduce the top coefficient.
      const auto& prev = pow[k - 1];
      Rational top = prev[degree - 1];
      for (int i = degree - 1; i >= 1; --i) pow[k][i] = prev[i - 1];
      pow[k][0] = 0;
      for (int i = 0; i < degree; ++i) pow[k][i] -= top * Rational(cyclotomic[i]);
    }
  }
};

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
/// Trailing zero coefficients are trimmed, so equality is coefficientwise.
/// A null context denotes a rational constant that coerces to any conductor.
class CycNumber {
public:
  using Coeffs = boost::container::small_vector<Rational, 8>;

  CycNumber() = default;
  CycNumber(std::int64_t n) { if (n != 0) c_.push_back(Rational(n)); }  // NOLINT(implicit)
  CycNumber(const Rational& r) { if (!r.is_zero()) c_.push_back(r); }  // NOLINT(implicit)
  CycNumber(const CycContext* ctx, Coeffs c) : ctx_(ctx), c_(std::move(c)) { trim(); }

  /// Reduce an arbitrary polynomial in zeta_N modulo Phi_N.
  static CycNumber make(int n, const std::vector<Rational>& poly) {
    const auto& ctx = CycContext::get(n);
    Coeffs out(ctx.degree, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k].is_zero()) continue;
      const auto& z = ctx.pow[k % ctx.conductor];
      for (int i = 0; i < ctx.degree; ++i)
        if (!z[i].is_zero()) out[i] += poly[k] * z[i];
    }
    return CycNumber(&ctx, std::move(out));
  }

  static CycNumber zeta(int n, long k = 1) {
    const auto& ctx = CycContext::get(n);
    long r = ((k % n) + n) % n;
    const auto& z = ctx.pow[r];
    return CycNumber(&ctx, Coeffs(z.begin(), z.end()));
  }

  int conductor() const { return ctx_ ? ctx_->conductor : 1; }
  const CycContext* context() const { return ctx_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNumber: not rational");
    return c_.empty() ? Rational(0) : c_[0];
  }

  CycNumber operator-() const {
    CycNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    const CycContext* ctx = join(a, b);
    const CycNumber& lo = a.c_.size() < b.c_.size() ? a : b;
    const CycNumber& hi = a.c_.size() < b.c_.size() ? b : a;
    CycNumber r;
    r.ctx_ = ctx;
    r.c_ = hi.c_;
    for (std::size_t i = 0; i < lo.c_.size(); ++i) r.c_[i] += lo.c_[i];
    r.trim();
    return r;
  }
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    const CycContext* ctx = join(a, b);
    CycNumber r;
    r.ctx_ = ctx;
    if (a.c_.empty() || b.c_.empty()) return r;
    if (a.c_.size() == 1 || b.c_.size() == 1) {
      const CycNumber& s = a.c_.size() == 1 ? a : b;
      const CycNumber& v = a.c_.size() == 1 ? b : a;
      r.c_ = v.c_;
      for (auto& x : r.c_) x *= s.c_[0];
      r.trim();
      return r;
    }
    // Both non-rational, so ctx is non-null.
    std::size_t len = a.c_.size() + b.c_.size() - 1;
    Coeffs prod(len, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const int deg = ctx->degree;
    if (static_cast<int>(len) > deg) {
      Coeffs out(prod.begin(), prod.begin() + deg);
      for (std::size_t k = deg; k < len; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& z = ctx->pow[k];
        for (int i = 0; i < deg; ++i)
          if (!z[i].is_zero()) out[i] += prod[k] * z[i];
      }
      r.c_ = std::move(out);
    } else {
      r.c_ = std::move(prod);
    }
    r.trim();
    return r;
  }

  /// Multiplicative inverse, by solving (multiplication by *this) x = 1 over Q.
  CycNumber inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber: inverse of zero");
    if (is_rational()) {
      CycNumber r(c_[0].inverse());
      r.ctx_ = ctx_;
      return r;
    }
    const int deg = ctx_->degree;
    // Column j of M is (*this) * zeta^j.
    std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
    for (int j = 0; j < deg; ++j) {
      CycNumber col = *this * CycNumber::zeta(ctx_->conductor, j);
      for (std::size_t i = 0; i < col.c_.size(); ++i) m[i][j] = col.c_[i];
    }
    m[0][deg] = 1;
    for (int col = 0, row = 0; col < deg; ++col, ++row) {
      int piv = row;
      while (piv < deg && m[piv][col].is_zero()) ++piv;
      if (piv == deg) throw std::logic_error("CycNumber: singular multiplication matrix");
      std::swap(m[piv], m[row]);
      Rational inv = m[row][col].inverse();
      for (int k = col; k <= deg; ++k) m[row][k] *= inv;
      for (int i = 0; i < deg; ++i) {
        if (i == row || m[i][col].is_zero()) continue;
        Rational f = m[i][col];
        for (int k = col; k <= deg; ++k) m[i][k] -= f * m[row][k];
      }
    }
    Coeffs x(deg, Rational(0));
    for (int i = 0; i < deg; ++i) x[i] = m[i][deg];
    return CycNumber(ctx_, std::move(x));
  }

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
  CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
  CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.c_.size() > 1 && a.ctx_ != b.ctx_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// "c0 + c1*z + c2*z^2 + ...", zero terms omitted, "0" for zero.
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << c_[k].str();
      if (k == 1) os << "*z";
      if (k > 1) os << "*z^" << k;
    }
    return os.str();
  }

  static CycNumber parse(int n, const std::string& s) {
    std::vector<Rational> poly;
    std::size_t pos = 0;
    auto trim_ws = [](std::string t) {
      auto b = t.find_first_not_of(' ');
      auto e = t.find_last_not_of(' ');
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    while (pos <= s.size()) {
      auto next = s.find(" + ", pos);
      std::string term = trim_ws(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
      if (term.empty()) throw std::invalid_argument("CycNumber: empty term in '" + s + "'");
      std::size_t k = 0;
      std::string coeff = term;
      auto star = term.find("*z");
      if (star != std::string::npos) {
        coeff = term.substr(0, star);
        std::string rest = term.substr(star + 2);
        if (rest.empty()) k = 1;
        else if (rest[0] == '^') k = std::stoul(rest.substr(1));
        else throw std::invalid_argument("CycNumber: bad term '" + term + "'");
      }
      if (poly.size() <= k) poly.resize(k + 1, Rational(0));
      poly[k] += Rational::parse(coeff);
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return make(n, poly);
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.str(); }

private:
  static const CycContext* join(const CycNumber& a, const CycNumber& b) {
    if (a.ctx_ == b.ctx_) return a.ctx_;
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_) return a.ctx_;
    throw std::invalid_argument("CycNumber: mixed conductors " + std::to_string(a.ctx_->conductor) +
                                " and " + std::to_string(b.ctx_->conductor));
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  const CycContext* ctx_ = nullptr;
  Coeffs c_;
};

/// Field descriptor for Q(zeta_N).
struct CycField {
  int conductor = 1;

  CycNumber zero() const { return CycNumber::make(conductor, {}); }
  CycNumber one() const { return from_int(1); }
  CycNumber from_int(std::int64_t n) const { return CycNumber::make(conductor, {Rational(n)}); }
  CycNumber from_rational(const Rational& r) const { return CycNumber::make(conductor, {r}); }
  CycNumber zeta(long k = 1) const { return CycNumber::zeta(conductor, k); }
  std::string str(const CycNumber& x) const { return x.str(); }
  CycNumber parse(const std::string& s) const { return CycNumber::parse(conductor, s); }
  friend bool operator==(const CycField& a, const CycField& b) { return a.conductor == b.conductor; }
};

inline CycNumber cyc_make(int n, const std::vector<Rational>& poly) { return CycNumber::make(n, poly); }

}  // namespace polyhopf

#endif  // POLYHOPF_CYCLOTOMIC_HPP
