#ifndef REMIXED_QRAT_HPP
#define REMIXED_QRAT_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "remixed/error.hpp"

namespace remixed {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class QRat {
 public:
  QRat() = default;
  QRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  QRat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  QRat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::bad_rational, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit QRat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "a", "-a", "a/b"; decimals and whitespace are rejected.
  static QRat parse(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
      throw Error(Errc::bad_rational, "expected an integer or a/b, got '" + std::string(text) + "'");
    BigInt n(std::string(num), 10), d(std::string(den), 10);
    if (text.front() == '-') n = -n;
    return QRat(n, d);
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Nearest double, only for reporting (sigma distances and the like).
  double to_double() const { return v_.get_d(); }

  QRat& operator+=(const QRat& o) { v_ += o.v_; return *this; }
  QRat& operator-=(const QRat& o) { v_ -= o.v_; return *this; }
  QRat& operator*=(const QRat& o) { v_ *= o.v_; return *this; }
  QRat& operator/=(const QRat& o) {
    if (o.v_ == 0) throw Error(Errc::bad_rational, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend QRat operator-(const QRat& a) { return QRat(mpq_class(-a.v_)); }

  friend bool operator==(const QRat& a, const QRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const QRat& a, const QRat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

}  // namespace remixed

#endif  // REMIXED_QRAT_HPP
