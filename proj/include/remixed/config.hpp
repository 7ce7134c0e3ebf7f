#ifndef REMIXED_CONFIG_HPP
#define REMIXED_CONFIG_HPP

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "remixed/error.hpp"

namespace remixed {

/// n balls on sites 1..n: c[i] balls at site i + 1, with sum(c) == n >= 1.
class Configuration {
 public:
  explicit Configuration(std::vector<int> counts) : c_(std::move(counts)) {
    if (c_.empty()) throw Error(Errc::empty, "a configuration needs at least one site");
    long sum = 0;
    for (int v : c_) {
      if (v < 0) throw Error(Errc::negative, "site count " + std::to_string(v) + " is negative");
      sum += v;
    }
    if (sum != static_cast<long>(c_.size()))
      throw Error(Errc::bad_sum, "ball count " + std::to_string(sum) + " differs from site count " +
                                     std::to_string(c_.size()));
  }

  int n() const { return static_cast<int>(c_.size()); }
  /// Balls at site j, 1-based.
  int at(int j) const { return c_[static_cast<std::size_t>(j - 1)]; }
  std::span<const int> counts() const { return c_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.c_ <=> b.c_; }

 private:
  std::vector<int> c_;
};

/// Site counts with no constraint tying balls to sites. Produced by add_ball
/// and remove_ball as transients inside inductions.
class LoadedConfiguration {
 public:
  explicit LoadedConfiguration(std::vector<int> counts) : c_(std::move(counts)) {}
  int sites() const { return static_cast<int>(c_.size()); }
  int balls() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  int at(int j) const { return c_[static_cast<std::size_t>(j - 1)]; }
  std::span<const int> counts() const { return c_; }
  friend bool operator==(const LoadedConfiguration&, const LoadedConfiguration&) = default;

 private:
  std::vector<int> c_;
};

struct CoreDecomposition {
  int k = 0;                ///< leading empty sites
  std::vector<int> gamma;   ///< first and last entries are positive
  int right_zeros = 0;
};

struct OneHoleShape {
  std::vector<int> alpha;   ///< block left of the hole, no zero entry
  std::vector<int> beta;    ///< block right of the hole, no zero entry
  int ell = 0, m = 0;       ///< sites of alpha, beta
  int p = 0, r = 0;         ///< balls of alpha, beta
};

struct Flags {
  bool is_lukasiewicz = false;
  std::optional<int> almost_defect;  ///< 1-based site of the single negative height
  bool is_connected = false;
  bool is_weakly_lukasiewicz = false;
  bool is_one_hole = false;
  friend bool operator==(const Flags&, const Flags&) = default;
};

/// "0,3,0,2,0" -> Configuration. Whitespace is ignored.
inline Configuration parse_config(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw Error(Errc::empty, "empty configuration");
  std::vector<int> counts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = compact.find(',', pos);
    std::string field = compact.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool neg = !field.empty() && field[0] == '-';
    std::string digits = neg ? field.substr(1) : field;
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw Error(Errc::syntax, "bad configuration entry '" + field + "'");
    int v = std::stoi(digits);
    counts.push_back(neg ? -v : v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Configuration(std::move(counts));
}

/// H_{c,k} = sum_{i<=k} (c_i - 1) for k = 1..n.
inline std::vector<long> heights(std::span<const int> counts) {
  std::vector<long> h;
  h.reserve(counts.size());
  long acc = 0;
  for (int v : counts) {
    acc += v - 1;
    h.push_back(acc);
  }
  return h;
}
inline std::vector<long> heights(const Configuration& c) { return heights(c.counts()); }

/// The non-decreasing ball sequence u_1..u_n with c_i copies of i.
inline std::vector<int> left_to_right_order(std::span<const int> counts) {
  std::vector<int> u;
  for (std::size_t i = 0; i < counts.size(); ++i) u.insert(u.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i + 1));
  return u;
}
inline std::vector<int> left_to_right_order(const Configuration& c) { return left_to_right_order(c.counts()); }

inline CoreDecomposition core(std::span<const int> counts) {
  auto first = std::find_if(counts.begin(), counts.end(), [](int v) { return v > 0; });
  auto last = std::find_if(counts.rbegin(), counts.rend(), [](int v) { return v > 0; }).base();
  assert(first < last);
  CoreDecomposition d;
  d.k = static_cast<int>(first - counts.begin());
  d.gamma.assign(first, last);
  d.right_zeros = static_cast<int>(counts.end() - last);
  return d;
}
inline CoreDecomposition core(const Configuration& c) { return core(c.counts()); }

inline Configuration reverse(const Configuration& c) {
  std::vector<int> r(c.counts().rbegin(), c.counts().rend());
  return Configuration(std::move(r));
}

/// c + {j}
inline LoadedConfiguration add_ball(const Configuration& c, int j) {
  std::vector<int> v(c.counts().begin(), c.counts().end());
  v.at(static_cast<std::size_t>(j - 1)) += 1;
  return LoadedConfiguration(std::move(v));
}

/// c - {j}
inline LoadedConfiguration remove_ball(const Configuration& c, int j) {
  std::vector<int> v(c.counts().begin(), c.counts().end());
  int& slot = v.at(static_cast<std::size_t>(j - 1));
  if (slot == 0) throw Error(Errc::empty_site, "site " + std::to_string(j) + " holds no ball");
  slot -= 1;
  return LoadedConfiguration(std::move(v));
}

/// (0^i, gamma, 0^(n - m - i))
inline Configuration shifted(std::span<const int> gamma, int i, int n) {
  int m = static_cast<int>(gamma.size());
  if (i < 0 || i > n - m)
    throw Error(Errc::shift_out_of_range, "shift " + std::to_string(i) + " outside [0," + std::to_string(n - m) + "]");
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::copy(gamma.begin(), gamma.end(), v.begin() + i);
  return Configuration(std::move(v));
}

/// Weakly-Lukasiewicz characterization on a left-to-right order:
/// u_j <= max(u_{j-1} + 1, j) for every j >= 2.
inline bool weakly_lukasiewicz_order(std::span<const int> u) {
  for (std::size_t j = 2; j <= u.size(); ++j)
    if (u[j - 1] > std::max(u[j - 2] + 1, static_cast<int>(j))) return false;
  return true;
}

inline Flags classify(const Configuration& c) {
  Flags f;
  auto h = heights(c);
  long negatives = std::count_if(h.begin(), h.end(), [](long v) { return v < 0; });
  f.is_lukasiewicz = negatives == 0;
  if (negatives == 1) {
    auto it = std::find_if(h.begin(), h.end(), [](long v) { return v < 0; });
    assert(*it == -1);
    f.almost_defect = static_cast<int>(it - h.begin()) + 1;
  }
  auto cd = core(c);
  long holes = std::count(cd.gamma.begin(), cd.gamma.end(), 0);
  f.is_connected = holes == 0;
  f.is_one_hole = holes == 1;
  f.is_weakly_lukasiewicz = weakly_lukasiewicz_order(left_to_right_order(c));
  return f;
}

/// Largest k such that (0^k, gamma, 0^(n-m-k)) is weakly Lukasiewicz.
inline int max_weakly_shift(std::span<const int> gamma, int n) {
  int m = static_cast<int>(gamma.size());
  if (m == 0 || gamma.front() == 0 || gamma.back() == 0)
    throw Error(Errc::wrong_family, "core must have positive end sites");
  int best = -1;
  for (int k = 0; k <= n - m; ++k)
    if (weakly_lukasiewicz_order(left_to_right_order(shifted(gamma, k, n).counts()))) best = k;
  if (best < 0) throw Error(Errc::no_weakly_shift, "no shift of the core is weakly Lukasiewicz");
  return best;
}

inline OneHoleShape one_hole_decompose(const Configuration& c) {
  auto cd = core(c);
  auto hole = std::find(cd.gamma.begin(), cd.gamma.end(), 0);
  if (hole == cd.gamma.end() || std::find(hole + 1, cd.gamma.end(), 0) != cd.gamma.end())
    throw Error(Errc::not_one_hole, c.to_string() + " does not have exactly one hole in its core");
  OneHoleShape s;
  s.alpha.assign(cd.gamma.begin(), hole);
  s.beta.assign(hole + 1, cd.gamma.end());
  s.ell = static_cast<int>(s.alpha.size());
  s.m = static_cast<int>(s.beta.size());
  s.p = std::accumulate(s.alpha.begin(), s.alpha.end(), 0);
  s.r = std::accumulate(s.beta.begin(), s.beta.end(), 0);
  return s;
}

/// All configurations of size n in lexicographic order of their count tuples.
inline std::vector<Configuration> all_configurations(int n) {
  std::vector<Configuration> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Configuration& c) { return os << c.to_string(); }

}  // namespace remixed

#endif  // REMIXED_CONFIG_HPP
