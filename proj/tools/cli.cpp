#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "fraclap/error.hpp"
#include "fraclap/laplace.hpp"

namespace fraclap::cli {

namespace {

using json = nlohmann::json;
using Row = std::vector<std::string>;

const std::vector<std::string> kCommands = {"eval-power", "eval-operator", "kernel", "verify", "indices", "asymptotics"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(Complex z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

json complex_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

Complex json_complex(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return parse_complex(j.get<std::string>(), field);
  throw ValidationError(field + ": expected a number, [re, im] or a string like \"1+2i\"");
}

double parse_real(const std::string& text, const std::string& field) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw ValidationError(field + ": cannot parse number '" + text + "'");
  return v;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
  }
  return parts;
}

std::vector<unsigned> parse_multiplicities(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& p : split_csv(text)) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("m: multiplicities must be nonnegative integers, got '" + p + "'");
    out.push_back(static_cast<unsigned>(std::stoul(p)));
  }
  return out;
}

std::vector<Complex> parse_complex_list(const std::string& text, const std::string& field) {
  std::vector<Complex> out;
  for (const auto& p : split_csv(text)) out.push_back(parse_complex(p, field));
  return out;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const ConditionError*>(&e) ||
      dynamic_cast<const DomainError*>(&e) || dynamic_cast<const PoleError*>(&e) ||
      dynamic_cast<const ShapeError*>(&e))
    return 2;
  if (dynamic_cast<const NonConvergenceError*>(&e) || dynamic_cast<const OverflowError*>(&e) ||
      dynamic_cast<const UnderflowError*>(&e))
    return 3;
  return 1;
}

// Runs fn(i) for i in [0, n) on up to worker_count() threads and returns the
// row groups in index order.
std::vector<Row> parallel_rows(std::size_t n, const std::function<std::vector<Row>(std::size_t)>& fn) {
  std::vector<std::vector<Row>> groups(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        groups[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Row> rows;
  for (auto& g : groups)
    for (auto& r : g) rows.push_back(std::move(r));
  return rows;
}

struct Report {
  Row header;
  std::vector<Row> rows;
  std::vector<std::string> summary;
};

Report eval_power(const RunConfig& cfg, const OperatorParams& P) {
  PowerImage img = cfg.side == "I" ? power_image_I(P, cfg.lambda) : power_image_J(P, cfg.lambda);
  Report r;
  r.header = {"x", "exponent_re", "exponent_im", "coefficient_re", "coefficient_im", "value_re", "value_im"};
  for (double x : cfg.x.points()) {
    Complex v = img.coefficient * std::exp(img.exponent * std::log(x));
    r.rows.push_back({fmt(x), fmt(img.exponent.real()), fmt(img.exponent.imag()), fmt(img.coefficient.real()),
                      fmt(img.coefficient.imag()), fmt(v.real()), fmt(v.imag())});
  }
  r.summary.push_back("power image (side " + cfg.side + "): x^(" + fmt_short(img.exponent) + ") * (" +
                      fmt_short(img.coefficient) + ")");
  return r;
}

Report eval_operator(const RunConfig& cfg, const OperatorParams& P) {
  TestFunction phi{cfg.phi_c, cfg.phi_p, cfg.phi_q};
  OperatorEvaluator ev(P, cfg.side == "I" ? Side::I : Side::J, QuadratureOptions{cfg.tol, 4, TanhSinhTable::kMaxLevel});
  ev.check_integrable(phi);
  auto xs = cfg.x.points();
  Report r;
  r.header = {"x", "value_re", "value_im"};
  r.rows = parallel_rows(xs.size(), [&](std::size_t i) -> std::vector<Row> {
    Complex v = ev(phi, xs[i]);
    return {{fmt(xs[i]), fmt(v.real()), fmt(v.imag())}};
  });
  r.summary.push_back("operator " + cfg.side + " evaluated at " + std::to_string(xs.size()) + " points, " +
                      std::to_string(ev.evaluations()) + " integrand evaluations");
  return r;
}

Report kernel(const RunConfig& cfg, const OperatorParams& P) {
  const bool first = cfg.which == "KI";
  for (Complex s : cfg.s) first ? check_kernel_KI(P, cfg.lambda, s) : check_kernel_KJ(P, cfg.lambda, s);
  auto xs = cfg.x.points();
  Report r;
  r.header = {"s_re", "s_im", "x", "value_re", "value_im"};
  r.rows = parallel_rows(cfg.s.size() * xs.size(), [&](std::size_t i) -> std::vector<Row> {
    Complex s = cfg.s[i / xs.size()];
    double x = xs[i % xs.size()];
    Complex v = first ? kernel_KI(P, cfg.lambda, s, x) : kernel_KJ(P, cfg.lambda, s, x);
    return {{fmt(s.real()), fmt(s.imag()), fmt(x), fmt(v.real()), fmt(v.imag())}};
  });
  r.summary.push_back("kernel " + cfg.which + " on " + std::to_string(r.rows.size()) + " (s, x) points");
  return r;
}

Report verify(const RunConfig& cfg, const OperatorParams& P) {
  std::vector<LaplaceQuery> queries;
  for (Complex s : cfg.s) {
    LaplaceQuery q;
    q.lambda = cfg.lambda;
    q.s = s;
    q.params = P;
    q.phi = TestFunction{cfg.phi_c, cfg.phi_p, cfg.phi_q};
    q.side = cfg.side == "I" ? TheoremSide::I_side : TheoremSide::J_side;
    check_query(q);
    queries.push_back(q);
  }
  LaplaceOptions opts;
  opts.quad.rel_tol = std::max(cfg.tol, 1e-9);
  Report r;
  r.header = {"s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "lhs_cost", "rhs_cost"};
  double worst = 0.0;
  std::mutex m;
  r.rows = parallel_rows(queries.size(), [&](std::size_t i) -> std::vector<Row> {
    VerificationReport v = verify_theorem(queries[i], opts);
    {
      std::lock_guard<std::mutex> lock(m);
      worst = std::max(worst, v.rel_err);
    }
    return {{fmt(queries[i].s.real()), fmt(queries[i].s.imag()), fmt(v.lhs.real()), fmt(v.lhs.imag()),
             fmt(v.rhs.real()), fmt(v.rhs.imag()), fmt(v.abs_err), fmt(v.rel_err),
             std::to_string(v.lhs_quadrature_cost), std::to_string(v.rhs_quadrature_cost)}};
  });
  r.summary.push_back("verify side " + cfg.side + ": " + std::to_string(queries.size()) + " queries, max rel_err " +
                      fmt(worst));
  return r;
}

Report indices(const RunConfig& cfg, const OperatorParams& P) {
  Report r;
  r.header = {"k", "a_star", "delta_cap", "delta_star", "mu_star_re", "mu_star_im", "a1_star"};
  for (unsigned k = 0; k <= P.m(); ++k) {
    HFunctionSpec spec = cfg.which == "KI" ? ki_h_spec(P, cfg.lambda, k) : kj_h_spec(P, cfg.lambda, k);
    HIndices ix = h_indices(spec);
    r.rows.push_back({std::to_string(k), fmt(ix.a_star), fmt(ix.delta_cap), fmt(ix.delta_star),
                      fmt(ix.mu_star.real()), fmt(ix.mu_star.imag()), fmt(ix.a1_star)});
    std::ostringstream os;
    os << cfg.which << " k = " << k << ": Delta = " << ix.delta_cap << ", a* = " << ix.a_star
       << ", a1* = " << ix.a1_star << ", delta* = " << ix.delta_star << ", mu* = " << fmt_short(ix.mu_star);
    r.summary.push_back(os.str());
  }
  return r;
}

Report asymptotics(const RunConfig& cfg, const OperatorParams& P) {
  const Kernel which = cfg.which == "KI" ? Kernel::KI : Kernel::KJ;
  std::vector<Regime> regimes;
  if (cfg.regime != "inf") regimes.push_back(Regime::ZeroPlus);
  if (cfg.regime != "zero") regimes.push_back(Regime::Infinity);
  Report r;
  r.header = {"s_re", "s_im", "kernel", "regime", "window_lo", "window_hi", "fitted_rate", "target_rate",
              "expected_rate", "rho"};
  std::vector<AsymptoticEstimate> ests(cfg.s.size() * regimes.size());
  r.rows = parallel_rows(ests.size(), [&](std::size_t i) -> std::vector<Row> {
    Complex s = cfg.s[i / regimes.size()];
    Regime reg = regimes[i % regimes.size()];
    AsymptoticEstimate e = probe_asymptotics(P, cfg.lambda, s, which, reg);
    ests[i] = e;
    std::string rho;
    for (std::size_t k = 0; k < e.rho_values.size(); ++k) rho += (k ? ";" : "") + fmt(e.rho_values[k]);
    return {{fmt(s.real()), fmt(s.imag()), to_string(which), to_string(reg), fmt(e.window.first),
             fmt(e.window.second), fmt(e.fitted_rate), fmt(e.target_rate), fmt(e.expected_rate), rho}};
  });
  for (std::size_t i = 0; i < ests.size(); ++i) {
    std::ostringstream os;
    os.precision(6);
    os << to_string(which) << " " << to_string(regimes[i % regimes.size()]) << " s = " << fmt_short(cfg.s[i / regimes.size()])
       << ": fitted " << ests[i].fitted_rate << ", target " << ests[i].target_rate << ", expected "
       << ests[i].expected_rate;
    r.summary.push_back(os.str());
  }
  return r;
}

void write_csv(std::ostream& os, const RunConfig& cfg, const Report& r) {
  os << "# fraclap " << cfg.command << "\n";
  os << "# config " << cfg.to_json().dump() << "\n";
  for (std::size_t i = 0; i < r.header.size(); ++i) os << (i ? "," : "") << r.header[i];
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) {
    double t = count == 1 ? 0.0 : double(i) / double(count - 1);
    xs.push_back(spacing == "geometric" ? start * std::pow(stop / start, t) : start + t * (stop - start));
  }
  return xs;
}

Complex parse_complex(const std::string& text, const std::string& field) {
  auto fail = [&]() -> Complex { throw ValidationError(field + ": cannot parse complex value '" + text + "'"); };
  const char* begin = text.c_str();
  char* end = nullptr;
  double first = std::strtod(begin, &end);
  if (end == begin) {
    if (text == "i" || text == "+i") return {0.0, 1.0};
    if (text == "-i") return {0.0, -1.0};
    return fail();
  }
  if (*end == '\0') return first;
  if (end[0] == 'i' && end[1] == '\0') return {0.0, first};
  if (*end != '+' && *end != '-') return fail();
  const char* rest = end;
  double second;
  if ((rest[1] == 'i') && rest[2] == '\0') {
    second = *rest == '-' ? -1.0 : 1.0;
  } else {
    second = std::strtod(rest, &end);
    if (end == rest || end[0] != 'i' || end[1] != '\0') return fail();
  }
  return {first, second};
}

unsigned worker_count() {
  const char* env = std::getenv("FRACLAP_THREADS");
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (!env || !*env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return hw;
  return v == 0 ? hw : static_cast<unsigned>(v);
}

json RunConfig::to_json() const {
  json j;
  j["command"] = command;
  j["mu"] = complex_json(mu);
  j["a"] = complex_json(a);
  j["b"] = complex_json(b);
  j["h"] = h;
  j["nu"] = nu;
  j["delta"] = complex_json(delta);
  j["f"] = json::array();
  for (auto v : f) j["f"].push_back(complex_json(v));
  j["m"] = m;
  j["lambda"] = complex_json(lambda);
  j["s"] = json::array();
  for (auto v : s) j["s"].push_back(complex_json(v));
  j["side"] = side;
  j["which"] = which;
  j["regime"] = regime;
  j["x_start"] = x.start;
  j["x_stop"] = x.stop;
  j["x_count"] = x.count;
  j["x_spacing"] = x.spacing;
  j["phi_c"] = complex_json(phi_c);
  j["phi_p"] = complex_json(phi_p);
  j["phi_q"] = complex_json(phi_q);
  j["tol"] = tol;
  j["seed"] = seed;
  j["out"] = out;
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: top level must be a JSON object");
  RunConfig c;
  auto num = [&](const char* key, double& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw ValidationError(std::string(key) + ": expected a number");
    dst = j[key].get<double>();
  };
  auto cpx = [&](const char* key, Complex& dst) {
    if (j.contains(key)) dst = json_complex(j[key], key);
  };
  auto str = [&](const char* key, std::string& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_string()) throw ValidationError(std::string(key) + ": expected a string");
    dst = j[key].get<std::string>();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::vector<std::string> known = {"command", "mu",     "a",      "b",       "h",       "nu",
                                                   "delta",   "f",      "m",      "lambda",  "s",       "side",
                                                   "which",   "regime", "x_start", "x_stop", "x_count", "x_spacing",
                                                   "phi_c",   "phi_p",  "phi_q",  "tol",     "seed",    "out"};
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ValidationError("config: unknown field '" + it.key() + "'");
  }
  str("command", c.command);
  cpx("mu", c.mu);
  cpx("a", c.a);
  cpx("b", c.b);
  num("h", c.h);
  num("nu", c.nu);
  cpx("delta", c.delta);
  if (j.contains("f")) {
    if (!j["f"].is_array()) throw ValidationError("f: expected a list");
    c.f.clear();
    for (const auto& v : j["f"]) c.f.push_back(json_complex(v, "f"));
  }
  if (j.contains("m")) {
    if (!j["m"].is_array()) throw ValidationError("m: expected a list");
    c.m.clear();
    for (const auto& v : j["m"]) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ValidationError("m: multiplicities must be nonnegative integers");
      c.m.push_back(v.get<unsigned>());
    }
  }
  cpx("lambda", c.lambda);
  if (j.contains("s")) {
    c.s.clear();
    if (j["s"].is_array()) {
      for (const auto& v : j["s"]) c.s.push_back(json_complex(v, "s"));
    } else {
      c.s.push_back(json_complex(j["s"], "s"));
    }
  }
  str("side", c.side);
  str("which", c.which);
  str("regime", c.regime);
  num("x_start", c.x.start);
  num("x_stop", c.x.stop);
  if (j.contains("x_count")) {
    if (!j["x_count"].is_number_integer()) throw ValidationError("x_count: expected an integer");
    c.x.count = j["x_count"].get<int>();
  }
  str("x_spacing", c.x.spacing);
  cpx("phi_c", c.phi_c);
  cpx("phi_p", c.phi_p);
  cpx("phi_q", c.phi_q);
  num("tol", c.tol);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ValidationError("seed: expected a nonnegative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  str("out", c.out);
  return c;
}

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw ValidationError("command: unknown command '" + command + "'");
  if (side != "I" && side != "J") throw ValidationError("side: must be I or J, got '" + side + "'");
  if (which != "KI" && which != "KJ") throw ValidationError("which: must be KI or KJ, got '" + which + "'");
  if (regime != "zero" && regime != "inf" && regime != "both")
    throw ValidationError("regime: must be zero, inf or both, got '" + regime + "'");
  if (x.count < 1) throw ValidationError("x_count: must be >= 1, got " + std::to_string(x.count));
  if (x.spacing != "linear" && x.spacing != "geometric")
    throw ValidationError("x_spacing: must be linear or geometric, got '" + x.spacing + "'");
  if (!(x.start > 0.0) || !std::isfinite(x.start)) throw ValidationError("x_start: must be a finite value > 0");
  if (!(x.stop > 0.0) || !std::isfinite(x.stop)) throw ValidationError("x_stop: must be a finite value > 0");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("tol: must be a finite value > 0");
  if (s.empty()) throw ValidationError("s: at least one value is required");
  if (f.size() != m.size())
    throw ValidationError("m: must have the same length as f (" + std::to_string(f.size()) + " values)");
  params();
}

OperatorParams RunConfig::params() const { return OperatorParams::make(mu, a, b, h, nu, delta, f, m); }

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const OperatorParams P = cfg.params();
    Report r;
    if (cfg.command == "eval-power")
      r = eval_power(cfg, P);
    else if (cfg.command == "eval-operator")
      r = eval_operator(cfg, P);
    else if (cfg.command == "kernel")
      r = kernel(cfg, P);
    else if (cfg.command == "verify")
      r = verify(cfg, P);
    else if (cfg.command == "indices")
      r = indices(cfg, P);
    else
      r = asymptotics(cfg, P);

    std::ostream* summary = &err;
    if (cfg.out.empty()) {
      write_csv(out, cfg, r);
    } else {
      std::ofstream file(cfg.out);
      if (!file) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
      write_csv(file, cfg, r);
      if (!file) throw std::runtime_error("write to '" + cfg.out + "' failed");
      summary = &out;
    }
    for (const auto& line : r.summary) *summary << line << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized fractional integral operators: power images, kernels and Laplace verification",
               "fraclap"};
  app.set_help_flag("--help", "Print this help message and exit");
  std::string command, config_path;
  app.add_option("command", command, "eval-power | eval-operator | kernel | verify | indices | asymptotics");
  app.add_option("--config", config_path, "JSON config; flags override its fields");

  struct Flag {
    const char* name;
    const char* key;
    const char* help;
    std::string value;
  };
  std::vector<Flag> flags = {
      {"--mu", "mu", "order mu (complex, Re mu > 0)", {}},
      {"--a", "a", "kernel parameter a", {}},
      {"--b", "b", "kernel parameter b", {}},
      {"--h", "h", "h >= 0", {}},
      {"--nu", "nu", "nu > 0", {}},
      {"--delta", "delta", "delta", {}},
      {"--f", "f", "comma-separated f values", {}},
      {"--m", "m", "comma-separated multiplicities", {}},
      {"--lambda", "lambda", "power lambda", {}},
      {"--s", "s", "comma-separated Laplace variables", {}},
      {"--side", "side", "I | J", {}},
      {"--which", "which", "KI | KJ", {}},
      {"--regime", "regime", "zero | inf | both", {}},
      {"--x-start", "x_start", "first grid point", {}},
      {"--x-stop", "x_stop", "last grid point", {}},
      {"--x-count", "x_count", "number of grid points", {}},
      {"--x-spacing", "x_spacing", "linear | geometric", {}},
      {"--phi-c", "phi_c", "test function scale C", {}},
      {"--phi-p", "phi_p", "test function power p", {}},
      {"--phi-q", "phi_q", "test function decay q", {}},
      {"--tol", "tol", "quadrature tolerance", {}},
      {"--seed", "seed", "seed recorded with the run", {}},
      {"--out", "out", "CSV output path (stdout when empty)", {}},
  };
  std::vector<CLI::Option*> opts;
  for (auto& f : flags) opts.push_back(app.add_option(f.name, f.value, f.help));

  std::vector<const char*> argv = {"fraclap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        err << "error: cannot read config file '" << config_path << "'\n";
        return 1;
      }
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
      }
      cfg = RunConfig::from_json(j);
    }
    if (!command.empty()) cfg.command = command;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (opts[i]->count() == 0) continue;
      const std::string key = flags[i].key;
      const std::string& v = flags[i].value;
      if (key == "mu") cfg.mu = parse_complex(v, key);
      else if (key == "a") cfg.a = parse_complex(v, key);
      else if (key == "b") cfg.b = parse_complex(v, key);
      else if (key == "h") cfg.h = parse_real(v, key);
      else if (key == "nu") cfg.nu = parse_real(v, key);
      else if (key == "delta") cfg.delta = parse_complex(v, key);
      else if (key == "f") cfg.f = v.empty() ? std::vector<Complex>{} : parse_complex_list(v, key);
      else if (key == "m") cfg.m = v.empty() ? std::vector<unsigned>{} : parse_multiplicities(v);
      else if (key == "lambda") cfg.lambda = parse_complex(v, key);
      else if (key == "s") cfg.s = parse_complex_list(v, key);
      else if (key == "side") cfg.side = v;
      else if (key == "which") cfg.which = v;
      else if (key == "regime") cfg.regime = v;
      else if (key == "x_start") cfg.x.start = parse_real(v, key);
      else if (key == "x_stop") cfg.x.stop = parse_real(v, key);
      else if (key == "x_count") {
        double c = parse_real(v, key);
        if (c != std::floor(c) || std::abs(c) > 1e9) throw ValidationError("x_count: expected an integer");
        cfg.x.count = static_cast<int>(c);
      }
      else if (key == "x_spacing") cfg.x.spacing = v;
      else if (key == "phi_c") cfg.phi_c = parse_complex(v, key);
      else if (key == "phi_p") cfg.phi_p = parse_complex(v, key);
      else if (key == "phi_q") cfg.phi_q = parse_complex(v, key);
      else if (key == "tol") cfg.tol = parse_real(v, key);
      else if (key == "seed") {
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
          throw ValidationError("seed: expected a nonnegative integer");
        cfg.seed = std::stoull(v);
      }
      else if (key == "out") cfg.out = v;
    }
    if (cfg.command.empty()) throw ValidationError("command: missing (give it positionally or in the config)");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return run_config(cfg, out, err);
}

}  // namespace fraclap::cli
