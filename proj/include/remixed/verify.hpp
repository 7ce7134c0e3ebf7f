#ifndef REMIXED_VERIFY_HPP
#define REMIXED_VERIFY_HPP

// Exhaustive identity sweeps shared by the CLI `verify` command and the test
// suite. Every property counts how many instances it checked, how many failed,
// and keeps the first failing instance as a readable example.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "remixed/config.hpp"
#include "remixed/engine.hpp"
#include "remixed/formulas.hpp"
#include "remixed/qcalc.hpp"

namespace remixed {

struct PropertyResult {
  explicit PropertyResult(std::string property) : name(std::move(property)) {}

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> example;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failures;
    if (!example) example = what;
  }
};

/// remixed_exact memoized per configuration.
class ExactCache {
 public:
  const QPoly& operator()(const Configuration& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, remixed_exact(c)).first;
    return it->second;
  }

  /// Exact values of (0^i, gamma, 0^(n-len-i)) for i = 0..n-len.
  std::vector<QPoly> shifts(const std::vector<int>& gamma, int n) {
    std::vector<QPoly> out;
    for (int i = 0; i + static_cast<int>(gamma.size()) <= n; ++i) out.push_back((*this)(shifted(gamma, i, n)));
    return out;
  }

 private:
  std::map<Configuration, QPoly> cache_;
};

namespace detail {

/// Cores of size n (positive end entries), each listed once, lexicographically.
inline std::vector<std::vector<int>> all_cores(int n) {
  std::vector<std::vector<int>> out;
  for (const auto& c : all_configurations(n)) {
    auto cd = core(c);
    if (cd.k == 0) out.push_back(cd.gamma);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string cfg_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline int one_hole_index(const std::vector<int>& gamma) {
  return static_cast<int>(std::find(gamma.begin(), gamma.end(), 0) - gamma.begin());
}

}  // namespace detail

/// Closed forms against the drop-dynamics oracle, plus the final-step recursion
/// and dispatch, over every configuration with n <= nmax.
inline std::vector<PropertyResult> verify_families(int nmax, ExactCache& exact) {
  PropertyResult luka{"lukasiewicz"}, almost{"almost_lukasiewicz"}, conn{"connected"}, weak{"weakly_lukasiewicz"},
      hole{"one_hole"}, induction{"induction"}, disp{"dispatch"};
  for (int n = 1; n <= nmax; ++n) {
    InductionEvaluator ind;
    for (const auto& c : all_configurations(n)) {
      const QPoly& a = exact(c);
      const std::string name = c.to_string();
      Flags f = classify(c);
      auto cd = core(c);
      if (f.is_lukasiewicz) luka.record(a_lukasiewicz(c) == a, name);
      if (f.almost_defect) almost.record(a_almost_lukasiewicz(c) == a, name);
      if (f.is_connected) conn.record(a_connected(cd.gamma, cd.k, n) == a, name);
      if (f.is_weakly_lukasiewicz) weak.record(a_weakly_lukasiewicz(cd.gamma, cd.k, n) == a, name);
      if (f.is_one_hole) hole.record(a_one_hole(c) == a, name);
      induction.record(ind(c) == a, name);
      disp.record(dispatch(c).poly == a, name);
    }
  }
  return {luka, almost, conn, weak, hole, induction, disp};
}

/// For every weakly-Lukasiewicz core with maximal shift k, the shifted exact
/// values agree with (t;q)_{n+1} sum_j t^j prod [j+a] modulo t^(k+1).
inline std::vector<PropertyResult> verify_congruence(int nmax, ExactCache& exact) {
  PropertyResult cong{"weakly_congruence"};
  for (int n = 1; n <= nmax; ++n) {
    for (const auto& gamma : detail::all_cores(n)) {
      if (!classify(shifted(gamma, 0, n)).is_weakly_lukasiewicz) continue;
      const int k = max_weakly_shift(gamma, n);
      const auto trunc = static_cast<std::size_t>(k + 1);
      auto vals = exact.shifts(gamma, n);
      TSeries lhs(trunc);
      for (std::size_t i = 0; i < trunc; ++i) lhs[i] = vals[i];
      cong.record(series_equal_mod(lhs, pochhammer_times_products(gamma, n, trunc), trunc),
                  detail::cfg_string(gamma) + " n=" + std::to_string(n));
    }
  }
  return {cong};
}

/// Corrective-series closed form against its definition, and the reduction of
/// a general one-hole core to the two-column core (p, 0, r).
inline std::vector<PropertyResult> verify_corrective(int nmax, ExactCache& exact) {
  PropertyResult def{"corrective_definition"}, cols{"corrective_two_columns"};
  for (int n = 2; n <= nmax; ++n) {
    for (const auto& gamma : detail::all_cores(n)) {
      if (std::count(gamma.begin(), gamma.end(), 0) != 1) continue;
      const int h = detail::one_hole_index(gamma);
      std::vector<int> alpha(gamma.begin(), gamma.begin() + h), beta(gamma.begin() + h + 1, gamma.end());
      const std::string name = detail::cfg_string(gamma);

      auto vals = exact.shifts(gamma, n);
      TSeries closed = corrective_series(alpha, beta, n);
      def.record(series_equal_mod(closed, corrective_series_from_values(gamma, n, vals, closed.trunc()), closed.trunc()),
                 name);

      const int ell = static_cast<int>(alpha.size());
      const int p = detail::ball_count(alpha), r = detail::ball_count(beta);
      std::vector<int> two{p, 0, r};
      auto pre = detail::one_hole_prefactor(alpha, beta);
      TSeries rhs = corrective_series(std::vector<int>{p}, std::vector<int>{r}, n) * pre.poly;
      TSeries lhs = closed.times_t_power(ell - 1);
      TSeries lhs_shifted(lhs.trunc());
      bool ok = true;
      try {
        for (std::size_t i = 0; i < lhs.trunc(); ++i) lhs_shifted[i] = lhs[i].times_q_power(-pre.q_shift);
      } catch (const Error&) {
        ok = false;
      }
      ok = ok && series_equal_mod(lhs_shifted, rhs, std::min(lhs_shifted.trunc(), rhs.trunc()));
      cols.record(ok, name + " vs " + detail::cfg_string(two));
    }
  }
  return {def, cols};
}

/// Drop-order independence, palindromicity and non-negativity.
inline std::vector<PropertyResult> verify_abelian(int nmax, ExactCache& exact) {
  PropertyResult abel{"abelian_orders"}, palin{"palindromic"}, nonneg{"nonnegative"};
  std::mt19937_64 rng(0x5eed);
  const QRat qs[] = {QRat(1, 3), QRat(1), QRat(2)};
  for (int n = 1; n <= nmax; ++n) {
    auto configs = all_configurations(n);
    for (const auto& c : configs) {
      const QPoly& a = exact(c);
      palin.record(a == exact(reverse(c)).reverse(static_cast<std::size_t>(choose2(n))), c.to_string());
      nonneg.record(a.all_nonnegative(), c.to_string());
    }
    const std::size_t samples = std::min<std::size_t>(configs.size(), 12);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto& c = configs[rng() % configs.size()];
      auto order = left_to_right_order(c);
      for (int rep = 0; rep < 5; ++rep) {
        std::shuffle(order.begin(), order.end(), rng);
        for (const auto& q0 : qs)
          abel.record(drop_order_check(c, order, q0) == success_probability(c, q0),
                      c.to_string() + " q=" + q0.to_string());
      }
    }
  }
  return {abel, palin, nonneg};
}

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"families", "congruence", "corrective", "abelian"};
  return names;
}

/// suite is one of verify_suites() or "all"; nmax must be at least 1.
inline std::vector<PropertyResult> run_verify(const std::string& suite, int nmax) {
  if (nmax < 1) throw Error(Errc::negative, "nmax must be at least 1");
  if (nmax > 10) throw Error(Errc::shift_out_of_range, "nmax above 10 is not supported");
  ExactCache exact;
  std::vector<PropertyResult> out;
  auto add = [&](std::vector<PropertyResult> r) { out.insert(out.end(), r.begin(), r.end()); };
  bool any = false;
  if (suite == "families" || suite == "all") add(verify_families(nmax, exact)), any = true;
  if (suite == "congruence" || suite == "all") add(verify_congruence(nmax, exact)), any = true;
  if (suite == "corrective" || suite == "all") add(verify_corrective(nmax, exact)), any = true;
  if (suite == "abelian" || suite == "all") add(verify_abelian(nmax, exact)), any = true;
  if (!any) throw Error(Errc::syntax, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace remixed

#endif  // REMIXED_VERIFY_HPP
