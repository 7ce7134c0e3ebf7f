#ifndef REMIXED_QCALC_HPP
#define REMIXED_QCALC_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "remixed/error.hpp"
#include "remixed/qpoly.hpp"
#include "remixed/qrat.hpp"
#include "remixed/tseries.hpp"

namespace remixed {

inline long choose2(long k) { return k * (k - 1) / 2; }

/// [a] = 1 + q + ... + q^(a-1); [0] = 0.
inline QPoly q_int(std::size_t a) { return QPoly(std::vector<BigInt>(a, BigInt(1))); }

/// [n]! = [1][2]...[n]
inline QPoly q_factorial(std::size_t n) {
  QPoly acc = QPoly::one();
  for (std::size_t i = 2; i <= n; ++i) acc *= q_int(i);
  return acc;
}

/// Gaussian binomial, zero outside 0 <= k <= n.
inline QPoly q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
  return divexact(q_factorial(un), q_factorial(uk) * q_factorial(un - uk));
}

/// (t;q)_n = (1-t)(1-tq)...(1-tq^(n-1)), truncated to trunc terms in t.
/// Built as the direct product; the q-binomial expansion is checked in tests.
inline TSeries q_pochhammer(std::size_t n, std::size_t trunc) {
  TSeries acc(trunc);
  if (trunc == 0) return acc;
  acc[0] = QPoly::one();
  for (std::size_t i = 0; i < n; ++i) {
    TSeries factor(trunc);
    factor[0] = QPoly::one();
    if (trunc > 1) factor[1] = -QPoly::monomial(1, i);
    acc = acc * factor;
  }
  return acc;
}

inline QPoly poly_add(const QPoly& a, const QPoly& b) { return a + b; }
inline QPoly poly_sub(const QPoly& a, const QPoly& b) { return a - b; }
inline QPoly poly_mul(const QPoly& a, const QPoly& b) { return a * b; }
inline QPoly poly_divexact(const QPoly& a, const QPoly& b) { return divexact(a, b); }
inline QRat poly_eval(const QPoly& a, const QRat& q0) { return a.eval(q0); }
inline QPoly poly_reverse(const QPoly& a, std::size_t d) { return a.reverse(d); }

/// Unique polynomial of degree < points.size() through the given points,
/// required to have integer coefficients. Newton divided differences, then
/// expansion to the monomial basis.
inline QPoly interpolate(const std::vector<std::pair<QRat, QRat>>& points) {
  const std::size_t m = points.size();
  if (m == 0) throw Error(Errc::empty, "interpolation needs at least one point");
  std::vector<mpq_class> xs(m), dd(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = points[i].first.raw();
    dd[i] = points[i].second.raw();
  }
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      mpq_class dx = xs[i] - xs[i - level];
      if (dx == 0) throw Error(Errc::bad_rational, "interpolation abscissae must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  // Horner on the Newton form: p = dd[0] + (x - x0)(dd[1] + (x - x1)(...)).
  std::vector<mpq_class> poly{dd[m - 1]};
  for (std::size_t k = m - 1; k-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<BigInt> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1)
      throw Error(Errc::non_integer_coefficients,
                  "coefficient of q^" + std::to_string(i) + " is " + poly[i].get_str());
    out[i] = poly[i].get_num();
  }
  return QPoly(std::move(out));
}

}  // namespace remixed

#endif  // REMIXED_QCALC_HPP
