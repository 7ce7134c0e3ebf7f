#ifndef REMIXED_SIMULATE_HPP
#define REMIXED_SIMULATE_HPP

// Monte Carlo of the ball dynamics, one site per step.
//
// Randomness: std::mt19937_64, whose output sequence is fixed by the standard.
// A step goes left iff the raw 64-bit draw is below
//   floor(2^64 * q/(1+q)),
// computed exactly from the rational q, so results are bit-reproducible across
// platforms. Trials run in batches of kBatchSize; batch b is seeded with
// mix_seed(seed, b) (splitmix64 finalizer), so counts do not depend on how
// batches are scheduled.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "remixed/config.hpp"
#include "remixed/qrat.hpp"

namespace remixed {

struct SimResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  QRat q;
  std::uint64_t seed = 0;

  QRat estimate() const { return QRat(BigInt(static_cast<unsigned long>(successes)), BigInt(static_cast<unsigned long>(trials))); }
  friend bool operator==(const SimResult&, const SimResult&) = default;
};

inline constexpr std::uint64_t kBatchSize = 1u << 14;

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t batch) {
  std::uint64_t z = seed + (batch + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// floor(2^64 * q/(1+q)) for q >= 0.
inline std::uint64_t left_threshold(const QRat& q0) {
  if (q0.sign() < 0) throw Error(Errc::bad_rational, "q must be non-negative");
  BigInt a = q0.num(), b = q0.den();
  BigInt t = (a << 64) / (a + b);
  std::uint64_t hi = mpz_class(t >> 32).get_ui(), lo = mpz_class(t & 0xFFFFFFFFul).get_ui();
  return (hi << 32) | lo;
}

namespace detail {

class Line {
 public:
  explicit Line(int n) : n_(n), cells_(static_cast<std::size_t>(3 * n + 3), 0) {}
  int& at(int site) { return cells_[static_cast<std::size_t>(site + n_ + 1)]; }
  int lo() const { return -n_; }
  int hi() const { return 2 * n_ + 1; }

 private:
  int n_;
  std::vector<int> cells_;
};

}  // namespace detail

/// All balls start on their sites; the leftmost overloaded site sends one ball
/// one step at a time until every site holds at most one ball. Returns the
/// final support in increasing order (it may leave [1;n]).
inline std::vector<int> run_once(const Configuration& c, std::uint64_t threshold, std::mt19937_64& rng) {
  const int n = c.n();
  detail::Line line(n);
  for (int j = 1; j <= n; ++j) line.at(j) = c.at(j);
  int s = 1;
  while (true) {
    while (s <= line.hi() && line.at(s) <= 1) ++s;
    if (s > line.hi()) break;
    line.at(s) -= 1;
    int to = rng() < threshold ? s - 1 : s + 1;
    line.at(to) += 1;
    s = std::max(line.lo(), s - 1);
  }
  std::vector<int> support;
  for (int j = line.lo(); j <= line.hi(); ++j)
    if (line.at(j)) support.push_back(j);
  return support;
}

inline std::vector<int> run_once(const Configuration& c, const QRat& q0, std::mt19937_64& rng) {
  return run_once(c, left_threshold(q0), rng);
}

/// Balls dropped one at a time in the given order; each one walks single
/// steps until it reaches an empty site.
inline std::vector<int> run_once_ordered(int n, std::span<const int> order, std::uint64_t threshold,
                                         std::mt19937_64& rng) {
  detail::Line line(n);
  for (int u : order) {
    int pos = u;
    while (line.at(pos) > 0) pos += rng() < threshold ? -1 : 1;
    line.at(pos) = 1;
  }
  std::vector<int> support;
  for (int j = line.lo(); j <= line.hi(); ++j)
    if (line.at(j)) support.push_back(j);
  return support;
}

namespace detail {

inline bool fills_interval(const std::vector<int>& support, int n) {
  if (static_cast<int>(support.size()) != n) return false;
  return support.front() == 1 && support.back() == n;
}

template <typename RunFn>
SimResult estimate(int n, const QRat& q0, std::uint64_t trials, std::uint64_t seed, RunFn&& run) {
  if (trials < 1) throw Error(Errc::empty, "trials must be at least 1");
  SimResult res{trials, 0, q0, seed};
  const std::uint64_t threshold = left_threshold(q0);
  for (std::uint64_t batch = 0, done = 0; done < trials; ++batch) {
    std::mt19937_64 rng(mix_seed(seed, batch));
    std::uint64_t here = std::min(kBatchSize, trials - done);
    for (std::uint64_t t = 0; t < here; ++t)
      if (fills_interval(run(threshold, rng), n)) ++res.successes;
    done += here;
  }
  return res;
}

}  // namespace detail

/// Fraction of trials whose final support is exactly [1;n].
inline SimResult estimate_success(const Configuration& c, const QRat& q0, std::uint64_t trials, std::uint64_t seed) {
  return detail::estimate(c.n(), q0, trials, seed,
                          [&](std::uint64_t th, std::mt19937_64& rng) { return run_once(c, th, rng); });
}

inline SimResult estimate_success_ordered(const Configuration& c, std::span<const int> order, const QRat& q0,
                                          std::uint64_t trials, std::uint64_t seed) {
  std::vector<int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != left_to_right_order(c)) throw Error(Errc::bad_content, "drop order does not match " + c.to_string());
  return detail::estimate(c.n(), q0, trials, seed,
                          [&](std::uint64_t th, std::mt19937_64& rng) { return run_once_ordered(c.n(), order, th, rng); });
}

}  // namespace remixed

#endif  // REMIXED_SIMULATE_HPP
