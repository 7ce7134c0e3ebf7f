// remixed: command-line front end for the remixed Eulerian library.
//
//   remixed eval 0,3,0,2,0 --method formula --pretty
//   remixed classify 1,0,3,0,1
//   remixed table connected --gamma 1,2,2 --n 5 --format csv
//   remixed verify families --nmax 7
//   remixed simulate 2,0 --q 1 --trials 100000 --seed 42
//
// Every successful command prints one JSON envelope
//   {"command": ..., "inputs": {...}, "result": {...}, "version": ...}
// Exit codes: 0 success, 2 usage or parse error, 3 crosscheck mismatch,
// 4 verification failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "remixed/remixed.hpp"

#ifndef REMIXED_VERSION
#define REMIXED_VERSION "0.0.0"
#endif

namespace {

using remixed::json;

constexpr int kUsage = 2;
constexpr int kCrosscheck = 3;
constexpr int kVerifyFailed = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError(std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

void emit(const std::string& command, json inputs, json result) {
  json env{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"version", REMIXED_VERSION}};
  std::cout << env.dump(2) << '\n';
}

json poly_json(const remixed::QPoly& p) {
  json j = p;
  j["expanded"] = p.to_string();
  return j;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string config;
  std::string method = "auto";
  bool crosscheck = false;
  std::string q;
  bool pretty = false;
};

int run_eval(const EvalArgs& a) {
  auto c = remixed::parse_config(a.config);
  json inputs{{"config", a.config}, {"method", a.method}, {"crosscheck", a.crosscheck}, {"pretty", a.pretty}};
  if (!a.q.empty()) inputs["q"] = a.q;
  std::optional<remixed::QRat> q0;
  if (!a.q.empty()) q0 = remixed::QRat::parse(a.q);

  remixed::EvalReport rep{c, remixed::Method::induction, {}, remixed::classify(c), remixed::CrossCheck::skip, {}, {}};
  if (a.method == "auto") {
    rep = remixed::dispatch(c);
  } else if (a.method == "formula") {
    auto cf = remixed::closed_form(c);
    if (!cf) throw UsageError(c.to_string() + " is in no family with a closed formula");
    rep = *cf;
  } else if (a.method == "exact") {
    rep.method = remixed::Method::exact;
    rep.poly = remixed::remixed_exact(c);
  } else if (a.method == "induction") {
    rep.poly = remixed::remixed_induction(c);
  } else {
    throw UsageError("unknown method '" + a.method + "'");
  }
  if (a.crosscheck) {
    rep.oracle = rep.method == remixed::Method::exact ? rep.poly : remixed::remixed_exact(c);
    rep.crosscheck = *rep.oracle == rep.poly ? remixed::CrossCheck::pass : remixed::CrossCheck::fail;
  }

  json result = rep;
  result["poly"] = poly_json(rep.poly);
  if (q0) result["value"] = rep.poly.eval(*q0).to_string();
  if (a.pretty && rep.factored) result["factored"] = *rep.factored;
  if (rep.crosscheck == remixed::CrossCheck::fail) {
    json err{{"error", "CrosscheckMismatch"}, {"method", result["method"]}, {"poly", poly_json(rep.poly)},
             {"oracle", poly_json(*rep.oracle)}};
    std::cerr << err.dump(2) << '\n';
    return kCrosscheck;
  }
  emit("eval", std::move(inputs), std::move(result));
  return 0;
}

int run_classify(const std::string& config) {
  auto c = remixed::parse_config(config);
  auto cd = remixed::core(c);
  json result{{"config", std::vector<int>(c.counts().begin(), c.counts().end())},
              {"flags", remixed::classify(c)},
              {"core", cd.gamma},
              {"shift", cd.k}};
  emit("classify", json{{"config", config}}, std::move(result));
  return 0;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::string gamma;
  int n = 0;
  int x = 1, y = 1;
  int rsmax = -1;
  std::string lambda;
  std::string format = "json";
};

struct Row {
  std::string index;
  remixed::QPoly poly;
};

std::vector<Row> table_rows(const TableArgs& a, json& inputs) {
  std::vector<Row> rows;
  auto need_n = [&] {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    inputs["n"] = a.n;
  };
  if (a.kind == "connected" || a.kind == "weakly" || a.kind == "one-hole") {
    if (a.gamma.empty()) throw UsageError("--gamma is required");
    need_n();
    auto gamma = parse_int_list(a.gamma, "gamma");
    inputs["gamma"] = gamma;
    remixed::detail::require_core(gamma, a.n);
    int last = a.n - static_cast<int>(gamma.size());
    if (a.kind == "weakly") last = remixed::max_weakly_shift(gamma, a.n);
    for (int i = 0; i <= last; ++i) {
      remixed::QPoly p;
      if (a.kind == "connected") p = remixed::a_connected(gamma, i, a.n);
      else if (a.kind == "weakly") p = remixed::a_weakly_lukasiewicz(gamma, i, a.n);
      else p = remixed::a_one_hole(remixed::shifted(gamma, i, a.n));
      rows.push_back({std::to_string(i), std::move(p)});
    }
  } else if (a.kind == "cs") {
    if (a.rsmax < 0) throw UsageError("--rsmax must be given and non-negative");
    inputs["x"] = a.x;
    inputs["y"] = a.y;
    inputs["rsmax"] = a.rsmax;
    for (int total = 0; total <= a.rsmax; ++total)
      for (int r = 0; r <= total; ++r) {
        remixed::CSParams p{r, total - r, a.x, a.y};
        rows.push_back({std::to_string(r) + ":" + std::to_string(total - r), remixed::carlitz_scoville_q(p)});
      }
  } else if (a.kind == "hit") {
    need_n();
    auto lambda = a.lambda.empty() ? std::vector<int>{} : parse_int_list(a.lambda, "lambda");
    inputs["lambda"] = lambda;
    auto row = remixed::q_hit_row(lambda, a.n);
    for (std::size_t i = 0; i < row.size(); ++i) rows.push_back({std::to_string(i), row[i]});
  } else {
    throw UsageError("unknown table kind '" + a.kind + "'");
  }
  return rows;
}

int run_table(const TableArgs& a) {
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  json inputs{{"kind", a.kind}, {"format", a.format}};
  auto rows = table_rows(a, inputs);
  if (a.format == "csv") {
    std::size_t width = 1;
    for (const auto& r : rows) width = std::max(width, r.poly.coeffs().size());
    std::cout << "index";
    for (std::size_t d = 0; d < width; ++d) std::cout << ",coeff" << d;
    std::cout << '\n';
    for (const auto& r : rows) {
      std::cout << r.index;
      for (std::size_t d = 0; d < width; ++d) std::cout << ',' << r.poly.coeff(d).get_str();
      std::cout << '\n';
    }
    return 0;
  }
  json out = json::array();
  for (const auto& r : rows) out.push_back(json{{"index", r.index}, {"poly", poly_json(r.poly)}});
  emit("table", std::move(inputs), json{{"kind", a.kind}, {"rows", std::move(out)}});
  return 0;
}

// ---------------------------------------------------------------------------

int run_verify_cmd(const std::string& suite, int nmax) {
  if (nmax < 1) throw UsageError("--nmax must be at least 1");
  auto results = remixed::run_verify(suite, nmax);
  bool all = true;
  json props = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    json p{{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"passed", r.passed()}};
    if (r.example) p["example"] = *r.example;
    props.push_back(std::move(p));
  }
  emit("verify", json{{"suite", suite}, {"nmax", nmax}}, json{{"passed", all}, {"properties", std::move(props)}});
  return all ? 0 : kVerifyFailed;
}

int run_simulate(const std::string& config, const std::string& q, std::int64_t trials, std::uint64_t seed) {
  auto c = remixed::parse_config(config);
  if (trials < 1) throw UsageError("--trials must be at least 1");
  auto q0 = remixed::QRat::parse(q);
  auto res = remixed::estimate_success(c, q0, static_cast<std::uint64_t>(trials), seed);
  json result = res;
  result["estimate"] = res.estimate().to_string();
  if (c.n() <= 10) {
    auto exact = remixed::success_probability(c, q0);
    double p = exact.to_double();
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    double diff = (res.estimate() - exact).to_double();
    result["exact"] = exact.to_string();
    result["sigma"] = sigma;
    // a degenerate exact value (0 or 1) has sigma 0; any miss is then unbounded
    if (sigma > 0) result["deviation_sigma"] = std::fabs(diff) / sigma;
    else result["deviation_sigma"] = diff == 0 ? json(0.0) : json(nullptr);
  }
  emit("simulate", json{{"config", config}, {"q", q}, {"trials", trials}, {"seed", seed}}, std::move(result));
  return 0;
}

void report(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remixed Eulerian numbers A_c(q): exact evaluation, tables, identity sweeps, simulation"};
  app.set_version_flag("--version", std::string(REMIXED_VERSION));
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Compute A_c(q) for a configuration");
  eval->add_option("config", ev.config, "Configuration, e.g. 0,3,0,2,0")->required();
  eval->add_option("--method", ev.method, "auto | exact | induction | formula");
  eval->add_flag("--crosscheck", ev.crosscheck, "Compare against the drop-dynamics oracle");
  eval->add_option("--q", ev.q, "Also evaluate at this rational q (a or a/b)");
  eval->add_flag("--pretty", ev.pretty, "Include the bracket form when the method has one");

  std::string cl_config;
  auto* cls = app.add_subcommand("classify", "Family flags of a configuration");
  cls->add_option("config", cl_config, "Configuration")->required();

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Tabulate a family");
  table->add_option("kind", tb.kind, "connected | weakly | one-hole | cs | hit")->required();
  table->add_option("--gamma", tb.gamma, "Core, comma separated");
  table->add_option("--n", tb.n, "Number of sites");
  table->add_option("--x", tb.x, "Carlitz-Scoville x");
  table->add_option("--y", tb.y, "Carlitz-Scoville y");
  table->add_option("--rsmax", tb.rsmax, "Largest r+s");
  table->add_option("--lambda", tb.lambda, "Partition, comma separated");
  table->add_option("--format", tb.format, "json | csv");

  std::string suite;
  int nmax = 6;
  auto* verify = app.add_subcommand("verify", "Run identity sweeps over all configurations up to nmax");
  verify->add_option("suite", suite, "families | congruence | corrective | abelian | all")->required();
  verify->add_option("--nmax", nmax, "Largest n (default 6)");

  std::string sim_config, sim_q = "1";
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the filling probability");
  sim->add_option("config", sim_config, "Configuration")->required();
  sim->add_option("--q", sim_q, "Bias q (a or a/b)");
  sim->add_option("--trials", trials, "Number of trials");
  sim->add_option("--seed", seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*cls) return run_classify(cl_config);
    if (*table) return run_table(tb);
    if (*verify) return run_verify_cmd(suite, nmax);
    if (*sim) return run_simulate(sim_config, sim_q, trials, seed);
  } catch (const UsageError& e) {
    report("Usage", e.what());
    return kUsage;
  } catch (const remixed::Error& e) {
    report(std::string(remixed::to_string(e.code())), e.what());
    return kUsage;
  }
  return kUsage;
}
