#ifndef REMIXED_TSERIES_HPP
#define REMIXED_TSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "remixed/error.hpp"
#include "remixed/qpoly.hpp"

namespace remixed {

/// Power series in t with QPoly coefficients, known modulo t^trunc.
class TSeries {
 public:
  TSeries() = default;
  explicit TSeries(std::size_t trunc) : t_(trunc) {}
  /// Terms beyond trunc are dropped, missing ones are zero.
  TSeries(std::size_t trunc, std::vector<QPoly> terms) : t_(std::move(terms)) { t_.resize(trunc); }

  std::size_t trunc() const { return t_.size(); }
  const QPoly& operator[](std::size_t j) const { return t_[j]; }
  QPoly& operator[](std::size_t j) { return t_[j]; }
  /// Coefficient of t^j, zero beyond the truncation.
  QPoly coeff(std::size_t j) const { return j < t_.size() ? t_[j] : QPoly{}; }
  const std::vector<QPoly>& terms() const { return t_; }

  TSeries truncated(std::size_t k) const { return TSeries(std::min(k, trunc()), t_); }

  TSeries& operator+=(const TSeries& o) {
    t_.resize(std::min(trunc(), o.trunc()));
    for (std::size_t j = 0; j < t_.size(); ++j) t_[j] += o.t_[j];
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    t_.resize(std::min(trunc(), o.trunc()));
    for (std::size_t j = 0; j < t_.size(); ++j) t_[j] -= o.t_[j];
    return *this;
  }
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }

  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    std::size_t k = std::min(a.trunc(), b.trunc());
    TSeries out(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (a.t_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < k; ++j) out.t_[i + j] += a.t_[i] * b.t_[j];
    }
    return out;
  }
  friend TSeries operator*(TSeries a, const QPoly& p) {
    for (auto& c : a.t_) c *= p;
    return a;
  }

  /// Multiplies by t^k, keeping the truncation.
  TSeries times_t_power(std::size_t k) const {
    TSeries out(trunc());
    for (std::size_t j = 0; j + k < trunc(); ++j) out.t_[j + k] = t_[j];
    return out;
  }

  friend bool operator==(const TSeries& a, const TSeries& b) = default;

 private:
  std::vector<QPoly> t_;
};

inline TSeries series_mul(const TSeries& a, const TSeries& b) { return a * b; }

/// True iff the t-coefficients of index < k coincide.
inline bool series_equal_mod(const TSeries& a, const TSeries& b, std::size_t k) {
  if (k > a.trunc() || k > b.trunc())
    throw Error(Errc::truncation_too_short,
                "k=" + std::to_string(k) + " exceeds truncation " +
                    std::to_string(std::min(a.trunc(), b.trunc())));
  for (std::size_t j = 0; j < k; ++j)
    if (a[j] != b[j]) return false;
  return true;
}

}  // namespace remixed

#endif  // REMIXED_TSERIES_HPP
