#ifndef REMIXED_QPOLY_HPP
#define REMIXED_QPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "remixed/error.hpp"
#include "remixed/qrat.hpp"

namespace remixed {

/// Dense polynomial in q over the integers, lowest degree first.
///
/// The stored coefficient list is always normalized: the last entry is
/// nonzero, and the zero polynomial stores nothing. Negative powers of q are
/// never representable; callers that need them carry an explicit exponent and
/// go through times_q_power().
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
  QPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static QPoly constant(const BigInt& v) { return QPoly(std::vector<BigInt>{v}); }
  static QPoly one() { return constant(1); }
  /// coeff * q^deg
  static QPoly monomial(const BigInt& coeff, std::size_t deg) {
    std::vector<BigInt> c(deg + 1);
    c[deg] = coeff;
    return QPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// std::nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::span<const BigInt> coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& operator*=(const BigInt& k) {
    if (k == 0) { c_.clear(); return *this; }
    for (auto& v : c_) v *= k;
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(out));
  }
  friend QPoly operator*(QPoly a, const BigInt& k) { return a *= k; }
  friend QPoly operator*(const BigInt& k, QPoly a) { return a *= k; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Multiplies by q^k. A negative k divides by q^-k and requires the low
  /// coefficients to vanish.
  QPoly times_q_power(long k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
      std::vector<BigInt> out(static_cast<std::size_t>(k));
      out.insert(out.end(), c_.begin(), c_.end());
      return QPoly(std::move(out));
    }
    auto drop = static_cast<std::size_t>(-k);
    for (std::size_t i = 0; i < std::min(drop, c_.size()); ++i)
      if (c_[i] != 0) throw Error(Errc::not_divisible, "q^" + std::to_string(-k) + " does not divide " + to_string());
    if (drop >= c_.size()) return {};
    return QPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end()));
  }

  /// Horner evaluation at an exact point.
  QRat eval(const QRat& q0) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= q0.raw();
      acc += *it;
    }
    return QRat(std::move(acc));
  }

  BigInt eval(const BigInt& q0) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
  }

  /// q^d * a(1/q): coefficient list reversed inside a window of d + 1.
  QPoly reverse(std::size_t d) const {
    if (is_zero()) return {};
    if (*degree() > d)
      throw Error(Errc::degree_too_high,
                  "degree " + std::to_string(*degree()) + " exceeds window " + std::to_string(d));
    std::vector<BigInt> out(d + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) out[d - i] = c_[i];
    return QPoly(std::move(out));
  }

  bool all_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v >= 0; });
  }

  /// Human-readable expanded form, e.g. "1+2q+q^2".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const BigInt& v = c_[i];
      if (v == 0) continue;
      BigInt mag = abs(v);
      if (v < 0) s += '-';
      else if (!s.empty()) s += '+';
      if (i == 0 || mag != 1) s += mag.get_str();
      if (i >= 1) s += 'q';
      if (i >= 2) s += '^' + std::to_string(i);
    }
    return s;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Returns c with b * c == a, or throws NotDivisible.
inline QPoly divexact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(Errc::not_divisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  auto bc = b.coeffs();
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) throw Error(Errc::not_divisible, a.to_string() + " by " + b.to_string());
  std::vector<BigInt> quot(rem.size() - db);
  const BigInt& lead = bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(Errc::not_divisible, a.to_string() + " by " + b.to_string());
    BigInt f = top / lead;
    quot[k] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * bc[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw Error(Errc::not_divisible, a.to_string() + " by " + b.to_string());
  return QPoly(std::move(quot));
}

inline QPoly pow(const QPoly& base, unsigned e) {
  QPoly acc = QPoly::one();
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

}  // namespace remixed

#endif  // REMIXED_QPOLY_HPP
