#ifndef REMIXED_IO_HPP
#define REMIXED_IO_HPP

// JSON forms of the public value types:
//   QPoly         {"coeffs": ["<int>", ...]}   decimal strings, lowest degree first
//   TSeries       {"trunc": k, "tcoeffs": [<QPoly>, ...]}
//   Configuration {"c": [0,3,0,2,0]}
//   SimResult     {"trials": N, "successes": S, "q": "a/b", "seed": "0x..."}
//   EvalReport    {"config": [...], "method": ..., "poly": {...}, "flags": {...}, "crosscheck": ...}

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "remixed/config.hpp"
#include "remixed/formulas.hpp"
#include "remixed/qpoly.hpp"
#include "remixed/simulate.hpp"
#include "remixed/tseries.hpp"

namespace remixed {

using json = nlohmann::json;

inline void to_json(json& j, const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  j = json{{"coeffs", std::move(arr)}};
}

inline void from_json(const json& j, QPoly& p) {
  std::vector<BigInt> cs;
  for (const auto& v : j.at("coeffs")) {
    BigInt b;
    if (b.set_str(v.get<std::string>(), 10) != 0) throw Error(Errc::syntax, "bad coefficient " + v.dump());
    cs.push_back(std::move(b));
  }
  p = QPoly(std::move(cs));
}

inline void to_json(json& j, const TSeries& s) {
  j = json{{"trunc", s.trunc()}, {"tcoeffs", s.terms()}};
}

inline void from_json(const json& j, TSeries& s) {
  auto terms = j.at("tcoeffs").get<std::vector<QPoly>>();
  auto trunc = j.at("trunc").get<std::size_t>();
  if (terms.size() != trunc) throw Error(Errc::syntax, "tcoeffs length differs from trunc");
  s = TSeries(trunc, std::move(terms));
}

inline void to_json(json& j, const Configuration& c) {
  j = json{{"c", std::vector<int>(c.counts().begin(), c.counts().end())}};
}

inline Configuration configuration_from_json(const json& j) { return Configuration(j.at("c").get<std::vector<int>>()); }

inline void to_json(json& j, const Flags& f) {
  j = json{{"lukasiewicz", f.is_lukasiewicz},
           {"almost_defect", f.almost_defect ? json(*f.almost_defect) : json(nullptr)},
           {"connected", f.is_connected},
           {"weakly_lukasiewicz", f.is_weakly_lukasiewicz},
           {"one_hole", f.is_one_hole}};
}

inline std::string hex_seed(std::uint64_t seed) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(seed));
  return buf;
}

inline void to_json(json& j, const SimResult& r) {
  j = json{{"trials", r.trials}, {"successes", r.successes}, {"q", r.q.to_string()}, {"seed", hex_seed(r.seed)}};
}

inline void to_json(json& j, const EvalReport& r) {
  j = json{{"config", std::vector<int>(r.config.counts().begin(), r.config.counts().end())},
           {"method", std::string(to_string(r.method))},
           {"poly", r.poly},
           {"flags", r.flags},
           {"crosscheck", std::string(to_string(r.crosscheck))}};
}

}  // namespace remixed

#endif  // REMIXED_IO_HPP
