#ifndef REMIXED_FORMULAS_HPP
#define REMIXED_FORMULAS_HPP

// Closed forms for A_c(q) on the families where the final-step recursion
// collapses, plus the generating-series machinery they come from.
//
// Indices inside a core gamma are 1-based: MSet(gamma) holds a with
// multiplicity gamma_a. Shifted configurations (0^i, gamma, 0^(n-len-i)) keep
// balls equal to sites, so the padding is always derived from n and the core
// length.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "remixed/config.hpp"
#include "remixed/engine.hpp"
#include "remixed/error.hpp"
#include "remixed/qcalc.hpp"

namespace remixed {

namespace detail {

inline int ball_count(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

/// prod_{a in MSet(counts)} [shift + a]
inline QPoly mset_product(std::span<const int> counts, long shift) {
  QPoly acc = QPoly::one();
  for (std::size_t a = 0; a < counts.size(); ++a) {
    long idx = shift + static_cast<long>(a) + 1;
    if (counts[a] == 0) continue;
    if (idx <= 0) return {};
    acc *= pow(q_int(static_cast<std::size_t>(idx)), static_cast<unsigned>(counts[a]));
  }
  return acc;
}

/// "[1]^3[4]^2" for a multiset of bracket arguments; "1" when empty.
inline std::string bracket_string(const std::map<long, int>& mult) {
  std::string s;
  for (const auto& [a, k] : mult) {
    if (k == 0) continue;
    s += "[" + std::to_string(a) + "]";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

inline std::map<long, int> mset_brackets(std::span<const int> counts, long shift) {
  std::map<long, int> m;
  for (std::size_t a = 0; a < counts.size(); ++a)
    if (counts[a]) m[shift + static_cast<long>(a) + 1] += counts[a];
  return m;
}

inline std::string qpow_string(long e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

inline void require_core(std::span<const int> gamma, int n) {
  if (gamma.empty() || gamma.front() <= 0 || gamma.back() <= 0)
    throw Error(Errc::wrong_family, "core must be nonempty with positive end sites");
  if (std::any_of(gamma.begin(), gamma.end(), [](int v) { return v < 0; }))
    throw Error(Errc::wrong_family, "core entries must be non-negative");
  if (ball_count(gamma) != n)
    throw Error(Errc::wrong_family, "core holds " + std::to_string(ball_count(gamma)) + " balls, expected " +
                                        std::to_string(n));
}

}  // namespace detail

/// sum_{j=0}^{i} (-1)^(i+j) q^C(i-j,2) qbin(n+1, i-j) prod_{a in MSet(gamma)} [j+a]
///
/// Coefficient of t^i in (t;q)_{n+1} * sum_j t^j prod [j+a].
inline QPoly shifted_alternating_sum(std::span<const int> gamma, int i, int n) {
  QPoly total;
  for (int j = 0; j <= i; ++j) {
    QPoly term = (q_binomial(n + 1, i - j) * detail::mset_product(gamma, j)).times_q_power(choose2(i - j));
    if ((i + j) % 2) total -= term;
    else total += term;
  }
  return total;
}

inline std::string shifted_alternating_string(std::span<const int> gamma, int i, int n) {
  std::string s;
  for (int j = i; j >= 0; --j) {
    s += (i + j) % 2 ? " - " : (s.empty() ? "" : " + ");
    std::string q = detail::qpow_string(choose2(i - j));
    if (!q.empty()) s += q + "*";
    if (i - j > 0) s += "qbin(" + std::to_string(n + 1) + "," + std::to_string(i - j) + ")*";
    s += detail::bracket_string(detail::mset_brackets(gamma, j));
  }
  return s;
}

/// Lukasiewicz configurations: A_c = prod_{a in MSet(c)} [a].
inline QPoly a_lukasiewicz(const Configuration& c) {
  if (!classify(c).is_lukasiewicz) throw Error(Errc::wrong_family, c.to_string() + " is not Lukasiewicz");
  return detail::mset_product(c.counts(), 0);
}

/// Connected configurations (0^i, gamma, 0^(n-m-i)), gamma without holes.
inline QPoly a_connected(std::span<const int> gamma, int i, int n) {
  detail::require_core(gamma, n);
  if (std::find(gamma.begin(), gamma.end(), 0) != gamma.end())
    throw Error(Errc::wrong_family, "core has a hole");
  int m = static_cast<int>(gamma.size());
  if (i < 0 || i > n - m)
    throw Error(Errc::shift_out_of_range, "shift " + std::to_string(i) + " outside [0," + std::to_string(n - m) + "]");
  QPoly a = shifted_alternating_sum(gamma, i, n);
  if (!a.all_nonnegative()) throw Error(Errc::wrong_family, "alternating sum did not cancel to a positive polynomial");
  return a;
}

/// (t;q)_{n+1} * sum_{j<trunc} t^j prod_{a in MSet(gamma)} [j+a]
inline TSeries pochhammer_times_products(std::span<const int> gamma, int n, std::size_t trunc) {
  TSeries rhs(trunc);
  for (std::size_t j = 0; j < trunc; ++j) rhs[j] = detail::mset_product(gamma, static_cast<long>(j));
  return q_pochhammer(static_cast<std::size_t>(n + 1), trunc) * rhs;
}

/// Generating series of the shifted connected numbers, sum_i t^i A_(0^i,gamma,...).
inline TSeries connected_series(std::span<const int> gamma, int n, std::size_t trunc) {
  detail::require_core(gamma, n);
  if (std::find(gamma.begin(), gamma.end(), 0) != gamma.end())
    throw Error(Errc::wrong_family, "core has a hole");
  return pochhammer_times_products(gamma, n, trunc);
}

/// Almost-Lukasiewicz configurations with defect j:
/// prod [a] - qbin(n+1, j) prod_{a<j} [a] prod_{b>j} [b-j].
inline QPoly a_almost_lukasiewicz(const Configuration& c) {
  auto defect = classify(c).almost_defect;
  if (!defect) throw Error(Errc::wrong_family, c.to_string() + " is not almost Lukasiewicz");
  const int j = *defect;
  auto counts = c.counts();
  QPoly lhs = detail::mset_product(counts, 0);
  QPoly rhs = q_binomial(c.n() + 1, j) * detail::mset_product(counts.first(static_cast<std::size_t>(j - 1)), 0) *
              detail::mset_product(counts.subspan(static_cast<std::size_t>(j)), 0);
  return lhs - rhs;
}

/// Weakly-Lukasiewicz shifts: same alternating sum as the connected case, valid
/// for every shift up to the largest weakly-Lukasiewicz one.
inline QPoly a_weakly_lukasiewicz(std::span<const int> gamma, int i, int n) {
  detail::require_core(gamma, n);
  int m = static_cast<int>(gamma.size());
  if (i < 0 || i > n - m)
    throw Error(Errc::shift_out_of_range, "shift " + std::to_string(i) + " outside [0," + std::to_string(n - m) + "]");
  int k = max_weakly_shift(gamma, n);
  if (i > k)
    throw Error(Errc::shift_beyond_weakly_bound,
                "shift " + std::to_string(i) + " exceeds the maximal weakly Lukasiewicz shift " + std::to_string(k));
  return shifted_alternating_sum(gamma, i, n);
}

namespace detail {

struct OneHolePrefactor {
  QPoly poly;      ///< prod_{a in MSet(alpha)} [ell+1-a] * prod_{b in MSet(beta)} [b]
  long q_shift;    ///< sum_{a in MSet(alpha)} (a - ell), never positive
};

inline OneHolePrefactor one_hole_prefactor(std::span<const int> alpha, std::span<const int> beta) {
  const long ell = static_cast<long>(alpha.size());
  OneHolePrefactor f{QPoly::one(), 0};
  for (long a = 1; a <= ell; ++a) {
    int mult = alpha[static_cast<std::size_t>(a - 1)];
    f.poly *= pow(q_int(static_cast<std::size_t>(ell + 1 - a)), static_cast<unsigned>(mult));
    f.q_shift += mult * (a - ell);
  }
  f.poly *= mset_product(beta, 0);
  return f;
}

inline void require_block(std::span<const int> block, const char* name) {
  if (block.empty() || std::any_of(block.begin(), block.end(), [](int v) { return v <= 0; }))
    throw Error(Errc::wrong_family, std::string(name) + " must be nonempty with no empty site");
}

}  // namespace detail

/// Closed form of the corrective series P_gamma for gamma = (alpha, 0, beta):
///
///   t^(p-ell) prod_alpha [ell+1-a] q^(a-ell) prod_beta [b]
///     * sum_{i=0}^{r} (-1)^i t^i q^(C(p,2) + p i + C(i+1,2)) qbin(n+1, r-i)
///
/// The q^(a-ell) factors have non-positive exponents; they are accumulated as a
/// single integer shift and each coefficient is checked to land in Z[q]. The
/// returned series is exact: its truncation is deg_t + 1 = p - ell + r + 1.
inline TSeries corrective_series(std::span<const int> alpha, std::span<const int> beta, int n) {
  detail::require_block(alpha, "alpha");
  detail::require_block(beta, "beta");
  const long ell = static_cast<long>(alpha.size());
  const long p = detail::ball_count(alpha), r = detail::ball_count(beta);
  if (p + r != n) throw Error(Errc::wrong_family, "alpha and beta must hold n balls together");
  auto pre = detail::one_hole_prefactor(alpha, beta);
  TSeries out(static_cast<std::size_t>(p - ell + r + 1));
  for (long i = 0; i <= r; ++i) {
    long e = choose2(p) + p * i + choose2(i + 1) + pre.q_shift;
    QPoly term = (pre.poly * q_binomial(n + 1, r - i)).times_q_power(e);
    out[static_cast<std::size_t>(p - ell + i)] = i % 2 ? -term : term;
  }
  return out;
}

/// Corrective series from its definition: (t;q)_{n+1} sum_j t^j prod [j+a]
/// minus sum_i t^i A_(0^i,gamma,...), given the shifted values A (index = shift).
inline TSeries corrective_series_from_values(std::span<const int> gamma, int n, std::span<const QPoly> shifted_values,
                                             std::size_t trunc) {
  TSeries s = pochhammer_times_products(gamma, n, trunc);
  for (std::size_t i = 0; i < shifted_values.size() && i < trunc; ++i) s[i] -= shifted_values[i];
  return s;
}

/// One-hole configurations: the connected-style alternating sum minus the
/// t^i coefficient of the corrective series (nonzero only for i >= p - ell).
inline QPoly a_one_hole(const Configuration& c) {
  auto shape = one_hole_decompose(c);
  auto cd = core(c);
  const int i = cd.k;
  QPoly a = shifted_alternating_sum(cd.gamma, i, c.n());
  if (i >= shape.p - shape.ell) {
    TSeries pg = corrective_series(shape.alpha, shape.beta, c.n());
    a -= pg.coeff(static_cast<std::size_t>(i));
  }
  return a;
}

inline std::string one_hole_string(const Configuration& c) {
  auto shape = one_hole_decompose(c);
  auto cd = core(c);
  const int i = cd.k, n = c.n();
  std::string s = shifted_alternating_string(cd.gamma, i, n);
  if (i >= shape.p - shape.ell) {
    auto pre = detail::one_hole_prefactor(shape.alpha, shape.beta);
    long ip = i - (shape.p - shape.ell);
    long e = choose2(shape.p) + shape.p * ip + choose2(ip + 1) + pre.q_shift;
    std::map<long, int> br;
    for (int a = 1; a <= shape.ell; ++a) br[shape.ell + 1 - a] += shape.alpha[static_cast<std::size_t>(a - 1)];
    for (int b = 1; b <= shape.m; ++b) br[b] += shape.beta[static_cast<std::size_t>(b - 1)];
    br.erase(1);
    s += ip % 2 ? " + " : " - ";
    std::string q = detail::qpow_string(e);
    if (!q.empty()) s += q + "*";
    s += "qbin(" + std::to_string(n + 1) + "," + std::to_string(i + shape.ell + 1) + ")*" + detail::bracket_string(br);
  }
  return s;
}

// ---------------------------------------------------------------------------
// q-hit numbers

struct HitIndex {
  std::vector<int> lambda;  ///< weakly decreasing, padded with zeros to length n
  int i = 0;
  int n = 0;
};

namespace detail {

inline std::vector<int> checked_partition(std::span<const int> lambda, int n) {
  if (n < 1) throw Error(Errc::bad_partition, "size must be positive");
  if (static_cast<int>(lambda.size()) > n) throw Error(Errc::bad_partition, "more parts than n");
  std::vector<int> l(lambda.begin(), lambda.end());
  l.resize(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    int v = l[static_cast<std::size_t>(k - 1)];
    if (v < 0) throw Error(Errc::bad_partition, "negative part");
    if (k > 1 && v > l[static_cast<std::size_t>(k - 2)]) throw Error(Errc::bad_partition, "parts must be weakly decreasing");
    if (v > n + 1 - k) throw Error(Errc::bad_partition, "partition does not fit the staircase");
  }
  return l;
}

/// Factor offsets i - lambda_{n+1-i}, i = 1..n.
inline std::vector<int> hit_offsets(const std::vector<int>& lambda, int n) {
  std::vector<int> f;
  for (int i = 1; i <= n; ++i) f.push_back(i - lambda[static_cast<std::size_t>(n - i)]);
  return f;
}

}  // namespace detail

/// H_0..H_n for the partition lambda. trunc_guard extra coefficients of the
/// numerator are computed and must vanish.
inline std::vector<QPoly> q_hit_row(std::span<const int> lambda, int n, int trunc_guard = 0) {
  auto l = detail::checked_partition(lambda, n);
  auto f = detail::hit_offsets(l, n);
  const auto trunc = static_cast<std::size_t>(n + 1 + trunc_guard);
  TSeries rhs(trunc);
  for (std::size_t j = 0; j < trunc; ++j) {
    QPoly prod = QPoly::one();
    for (int off : f) prod *= q_int(j + static_cast<std::size_t>(off));
    rhs[j] = std::move(prod);
  }
  TSeries num = q_pochhammer(static_cast<std::size_t>(n + 1), trunc) * rhs;
  for (std::size_t j = static_cast<std::size_t>(n + 1); j < trunc; ++j)
    if (!num[j].is_zero()) throw Error(Errc::bad_partition, "numerator does not terminate at degree n");
  num = num.truncated(static_cast<std::size_t>(n + 1));
  return num.terms();
}

inline QPoly q_hit(const HitIndex& h, int trunc_guard = 0) {
  if (h.i < 0 || h.i > h.n) throw Error(Errc::bad_partition, "hit index outside [0,n]");
  return q_hit_row(h.lambda, h.n, trunc_guard)[static_cast<std::size_t>(h.i)];
}

struct ConnectedMatch {
  std::vector<int> gamma;
  int shift = 0;
  int n = 0;
};

/// Connected configuration with A_c == H_i(lambda). The offsets i - lambda_{n+1-i}
/// form a contiguous range starting at 0 or 1; lifted to start at 1 they are
/// the ball multiset of the core, and a lift by one costs one shift
/// (sum_j t^j prod [j + f] = t sum_j t^j prod [j + f + 1] when min f = 0).
/// The match is verified before it is returned.
inline ConnectedMatch hit_to_connected(const HitIndex& h) {
  auto l = detail::checked_partition(h.lambda, h.n);
  auto f = detail::hit_offsets(l, h.n);
  int lo = *std::min_element(f.begin(), f.end());
  int hi = *std::max_element(f.begin(), f.end());
  int lift = 1 - lo;
  ConnectedMatch out;
  out.n = h.n;
  out.gamma.assign(static_cast<std::size_t>(hi + lift), 0);
  for (int v : f) out.gamma[static_cast<std::size_t>(v + lift - 1)] += 1;
  out.shift = h.i - lift;
  int m = static_cast<int>(out.gamma.size());
  if (out.shift < 0 || out.shift > h.n - m || std::find(out.gamma.begin(), out.gamma.end(), 0) != out.gamma.end())
    throw Error(Errc::no_match, "no connected configuration matches H_" + std::to_string(h.i));
  if (a_connected(out.gamma, out.shift, h.n) != q_hit(h))
    throw Error(Errc::no_match, "constructed configuration does not reproduce H_" + std::to_string(h.i));
  return out;
}

// ---------------------------------------------------------------------------
// Carlitz-Scoville generalized Eulerian numbers

struct CSParams {
  int r = 0, s = 0;
  int x = 1, y = 1;
};

inline void validate(const CSParams& p) {
  if (p.r < 0 || p.s < 0 || p.x < 1 || p.y < 1)
    throw Error(Errc::wrong_family, "Carlitz-Scoville parameters need r,s >= 0 and x,y >= 1");
}

/// (0^r, 1^(y-1), r+s+1, 1^(x-1), 0^s)
inline Configuration cs_configuration(const CSParams& p) {
  validate(p);
  std::vector<int> v(static_cast<std::size_t>(p.r), 0);
  v.insert(v.end(), static_cast<std::size_t>(p.y - 1), 1);
  v.push_back(p.r + p.s + 1);
  v.insert(v.end(), static_cast<std::size_t>(p.x - 1), 1);
  v.insert(v.end(), static_cast<std::size_t>(p.s), 0);
  return Configuration(std::move(v));
}

/// A(r,s|x,y)_q = sum_{j=0}^{r} (-1)^(r+j) q^C(r-j,2) qbin(j+x+y-1, j)
///                qbin(r+s+x+y, r-j) [j+y]^(r+s)
inline QPoly carlitz_scoville_q(const CSParams& p) {
  validate(p);
  QPoly total;
  for (int j = 0; j <= p.r; ++j) {
    QPoly term = q_binomial(j + p.x + p.y - 1, j) * q_binomial(p.r + p.s + p.x + p.y, p.r - j) *
                 pow(q_int(static_cast<std::size_t>(j + p.y)), static_cast<unsigned>(p.r + p.s));
    term = term.times_q_power(choose2(p.r - j));
    if ((p.r + j) % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Configuration-side definition: A_c / [x+y-1]! via the connected closed form.
inline QPoly carlitz_scoville_from_config(const CSParams& p) {
  auto c = cs_configuration(p);
  auto cd = core(c);
  return divexact(a_connected(cd.gamma, cd.k, c.n()), q_factorial(static_cast<std::size_t>(p.x + p.y - 1)));
}

// ---------------------------------------------------------------------------
// dispatch

enum class Method { lukasiewicz, almost_lukasiewicz, connected, one_hole, weakly_lukasiewicz, induction, exact };
enum class CrossCheck { pass, skip, fail };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::lukasiewicz: return "lukasiewicz";
    case Method::almost_lukasiewicz: return "almost_lukasiewicz";
    case Method::connected: return "connected";
    case Method::one_hole: return "one_hole";
    case Method::weakly_lukasiewicz: return "weakly_lukasiewicz";
    case Method::induction: return "induction";
    case Method::exact: return "exact";
  }
  return "unknown";
}

inline std::string_view to_string(CrossCheck c) {
  switch (c) {
    case CrossCheck::pass: return "pass";
    case CrossCheck::skip: return "skip";
    case CrossCheck::fail: return "fail";
  }
  return "unknown";
}

struct EvalReport {
  Configuration config;
  Method method = Method::induction;
  QPoly poly;
  Flags flags;
  CrossCheck crosscheck = CrossCheck::skip;
  std::optional<std::string> factored;  ///< bracket form when the method produced one
  std::optional<QPoly> oracle;          ///< remixed_exact, when cross-checked
};

/// Most specific closed formula for c, if any family applies.
inline std::optional<EvalReport> closed_form(const Configuration& c) {
  Flags f = classify(c);
  auto cd = core(c);
  auto make = [&](Method m, QPoly p, std::string s) {
    return EvalReport{c, m, std::move(p), f, CrossCheck::skip, std::move(s), std::nullopt};
  };
  if (f.is_lukasiewicz)
    return make(Method::lukasiewicz, a_lukasiewicz(c), detail::bracket_string(detail::mset_brackets(c.counts(), 0)));
  if (f.almost_defect) {
    int j = *f.almost_defect;
    auto counts = c.counts();
    auto left = detail::mset_brackets(counts.first(static_cast<std::size_t>(j - 1)), 0);
    auto right = detail::mset_brackets(counts.subspan(static_cast<std::size_t>(j)), 0);
    for (auto [a, k] : right) left[a] += k;
    left.erase(1);
    std::string s = detail::bracket_string(detail::mset_brackets(counts, 0)) + " - qbin(" + std::to_string(c.n() + 1) +
                    "," + std::to_string(j) + ")*" + detail::bracket_string(left);
    return make(Method::almost_lukasiewicz, a_almost_lukasiewicz(c), s);
  }
  if (f.is_connected)
    return make(Method::connected, a_connected(cd.gamma, cd.k, c.n()), shifted_alternating_string(cd.gamma, cd.k, c.n()));
  if (f.is_one_hole) return make(Method::one_hole, a_one_hole(c), one_hole_string(c));
  if (f.is_weakly_lukasiewicz)
    return make(Method::weakly_lukasiewicz, a_weakly_lukasiewicz(cd.gamma, cd.k, c.n()),
                shifted_alternating_string(cd.gamma, cd.k, c.n()));
  return std::nullopt;
}

/// Closed formula when one applies, final-step recursion otherwise; with
/// crosscheck the drop-dynamics oracle is compared as well.
inline EvalReport dispatch(const Configuration& c, bool crosscheck = false) {
  EvalReport rep = closed_form(c).value_or(
      EvalReport{c, Method::induction, remixed_induction(c), classify(c), CrossCheck::skip, std::nullopt, std::nullopt});
  if (crosscheck) {
    rep.oracle = remixed_exact(c);
    rep.crosscheck = *rep.oracle == rep.poly ? CrossCheck::pass : CrossCheck::fail;
  }
  return rep;
}

}  // namespace remixed

#endif  // REMIXED_FORMULAS_HPP
