#ifndef REMIXED_ENGINE_HPP
#define REMIXED_ENGINE_HPP

// Two independent exact evaluators of A_c(q) = [n]! * P(c fills [1;n]).
//
// remixed_exact follows the ball-drop definition: a dynamic program over the
// occupied set at a fixed rational q, lifted to a polynomial by interpolation
// at q = 0..n(n-1)/2.
//
// remixed_induction is the final-step recursion. Conditioning on the site k
// where the last ball u_n (rightmost ball) comes to rest, the other n-1 balls,
// d = c - {u_n}, must fill [1;n] \ {k} without ever touching k. That forces
// d to have exactly k-1 balls on [1;k-1] and none on site k, and the two sides
// then evolve independently:
//
//   A_c = sum_k wt(k, u_n) * A(d_1..d_{k-1}) * A(d_{k+1}..d_n)
//   wt(k, u) = qbin(n,k) [u]                        if k >= u
//            = q^(u-k) qbin(n,k-1) [n+1-u]          if k <  u
//
// The sub-configurations are windows of d (not of c), and the split condition
// is H_{d,k-1} = 0 together with d_k = 0. Reading the windows off c with the
// condition H_{d,k} = 0 disagrees with the drop-dynamics oracle already at
// n = 2; see engine_test.cpp.

#include <algorithm>
#include <bit>
#include <optional>
#include <span>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "remixed/config.hpp"
#include "remixed/error.hpp"
#include "remixed/qcalc.hpp"

namespace remixed {

using OccupiedSet = std::uint64_t;  ///< bit j-1 set <=> site j occupied

struct OccupiedState {
  OccupiedSet occupied = 0;
  int balls_dropped = 0;
};

/// One outcome of dropping a ball on an occupied site: it lands on
/// landing_site with weight numerator/denominator.
struct BigStepWeight {
  int landing_site = 0;
  QPoly numerator;
  QPoly denominator;
};

inline bool is_occupied(OccupiedSet s, int j) { return j >= 1 && j <= 64 && ((s >> (j - 1)) & 1u); }

/// Distances a, b to the nearest holes left and right of site j; sites outside
/// [1;n] always count as holes.
inline std::pair<int, int> hole_distances(OccupiedSet occupied, int j, int n) {
  int a = 0, b = 0;
  while (j - a >= 1 && is_occupied(occupied, j - a)) ++a;
  while (j + b <= n && is_occupied(occupied, j + b)) ++b;
  return {a, b};
}

/// Landing distribution of a ball dropped at j. Branches that land outside
/// [1;n] are omitted: they are failure mass.
inline std::vector<BigStepWeight> big_step_weights(OccupiedSet occupied, int j, int n) {
  if (!is_occupied(occupied, j)) return {{j, QPoly::one(), QPoly::one()}};
  auto [a, b] = hole_distances(occupied, j, n);
  std::vector<BigStepWeight> out;
  QPoly den = q_int(static_cast<std::size_t>(a + b));
  if (j - a >= 1) out.push_back({j - a, q_int(static_cast<std::size_t>(b)).times_q_power(a), den});
  if (j + b <= n) out.push_back({j + b, q_int(static_cast<std::size_t>(a)), den});
  return out;
}

namespace detail {

/// Left/right landing probabilities at a fixed q for every (a, b) pair,
/// obtained by evaluating the big-step weights.
class BigStepTable {
 public:
  BigStepTable(int n, const QRat& q0) : n_(n), q0_(q0), cache_(static_cast<std::size_t>((n + 2) * (n + 2))) {}

  const std::pair<mpq_class, mpq_class>& operator()(int a, int b) {
    auto& slot = cache_[static_cast<std::size_t>(a * (n_ + 2) + b)];
    if (!slot) {
      QRat den = q_int(static_cast<std::size_t>(a + b)).eval(q0_);
      QRat left = q_int(static_cast<std::size_t>(b)).times_q_power(a).eval(q0_) / den;
      QRat right = q_int(static_cast<std::size_t>(a)).eval(q0_) / den;
      slot.emplace(left.raw(), right.raw());
    }
    return *slot;
  }

 private:
  int n_;
  QRat q0_;
  std::vector<std::optional<std::pair<mpq_class, mpq_class>>> cache_;
};

inline QRat drop_probability(int n, std::span<const int> order, const QRat& q0) {
  if (q0.sign() < 0) throw Error(Errc::bad_rational, "q must be non-negative");
  if (n > 62) throw Error(Errc::shift_out_of_range, "drop dynamics supports at most 62 sites");
  BigStepTable table(n, q0);
  std::map<OccupiedSet, mpq_class> dist{{0, mpq_class(1)}};
  for (int u : order) {
    std::map<OccupiedSet, mpq_class> next;
    const OccupiedSet bit = OccupiedSet{1} << (u - 1);
    for (const auto& [s, p] : dist) {
      if (!(s & bit)) {
        next[s | bit] += p;
        continue;
      }
      auto [a, b] = hole_distances(s, u, n);
      const auto& [left, right] = table(a, b);
      if (u - a >= 1 && sgn(left) != 0) next[s | (OccupiedSet{1} << (u - a - 1))] += p * left;
      if (u + b <= n && sgn(right) != 0) next[s | (OccupiedSet{1} << (u + b - 1))] += p * right;
    }
    dist = std::move(next);
  }
  auto full = dist.find(n == 64 ? ~OccupiedSet{0} : (OccupiedSet{1} << n) - 1);
  return full == dist.end() ? QRat(0) : QRat(full->second);
}

}  // namespace detail

/// Exact probability that dropping the balls left to right fills [1;n].
inline QRat success_probability(const Configuration& c, const QRat& q0) {
  auto u = left_to_right_order(c);
  return detail::drop_probability(c.n(), u, q0);
}

/// Same probability for an arbitrary drop order with content c.
inline QRat drop_order_check(const Configuration& c, std::span<const int> order, const QRat& q0) {
  std::vector<int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != left_to_right_order(c))
    throw Error(Errc::bad_content, "drop order does not have the content of " + c.to_string());
  return detail::drop_probability(c.n(), order, q0);
}

/// A_c(q) from the drop dynamics: [n]! * P at q = 0..n(n-1)/2, interpolated.
inline QPoly remixed_exact(const Configuration& c) {
  const int n = c.n();
  const long d = choose2(n);
  const QPoly fact = q_factorial(static_cast<std::size_t>(n));
  std::vector<std::pair<QRat, QRat>> points;
  points.reserve(static_cast<std::size_t>(d + 1));
  for (long x = 0; x <= d; ++x) {
    QRat q0(x);
    points.emplace_back(q0, fact.eval(q0) * success_probability(c, q0));
  }
  QPoly a = interpolate(points);
  if (!a.all_nonnegative())
    throw Error(Errc::non_integer_coefficients, "negative coefficient in A_c for " + c.to_string());
  return a;
}

/// Memoized final-step recursion. One instance may be reused across many
/// evaluations; it is not safe for concurrent use.
class InductionEvaluator {
 public:
  QPoly operator()(const Configuration& c) { return eval(std::vector<int>(c.counts().begin(), c.counts().end())); }

  /// Weight of the split where the last ball rests on site k.
  QPoly weight(int n, int k, int last) {
    if (k >= last) return qbin(n, k) * q_int(static_cast<std::size_t>(last));
    return (qbin(n, k - 1) * q_int(static_cast<std::size_t>(n + 1 - last))).times_q_power(last - k);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const QPoly& qbin(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = qbin_.find(key);
    if (it == qbin_.end()) it = qbin_.emplace(key, q_binomial(n, k)).first;
    return it->second;
  }

  QPoly eval(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) return QPoly::one();
    if (n == 1) return c[0] == 1 ? QPoly::one() : QPoly{};
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;

    int last = n;
    while (c[static_cast<std::size_t>(last - 1)] == 0) --last;
    std::vector<int> d = c;
    d[static_cast<std::size_t>(last - 1)] -= 1;

    QPoly total;
    int left_balls = 0;  // balls of d on [1;k-1]
    for (int k = 1; k <= n; ++k) {
      if (left_balls == k - 1 && d[static_cast<std::size_t>(k - 1)] == 0) {
        std::vector<int> lhs(d.begin(), d.begin() + (k - 1));
        std::vector<int> rhs(d.begin() + k, d.end());
        QPoly term = weight(n, k, last) * eval(lhs);
        if (!term.is_zero()) term *= eval(rhs);
        total += term;
      }
      left_balls += d[static_cast<std::size_t>(k - 1)];
    }
    memo_.emplace(c, total);
    return total;
  }

  std::map<std::vector<int>, QPoly> memo_;
  std::map<std::pair<int, int>, QPoly> qbin_;
};

inline QPoly remixed_induction(const Configuration& c) {
  InductionEvaluator ev;
  return ev(c);
}

}  // namespace remixed

#endif  // REMIXED_ENGINE_HPP
