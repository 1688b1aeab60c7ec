#include "fraclap/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

constexpr double kUnitTMax = 6.0;
constexpr double kTailTMin = -5.0;

UnitNode make_unit_node(double t) {
  double s = kPi * std::sinh(t);
  double e = std::exp(-std::abs(s));
  double u, v;
  if (s >= 0) {
    u = 1.0 / (1.0 + e);
    v = e / (1.0 + e);
  } else {
    u = e / (1.0 + e);
    v = 1.0 / (1.0 + e);
  }
  return {u, v, kPi * std::cosh(t) * u * v};
}

struct LevelState {
  Complex sum{0.0, 0.0};
  double l1 = 0.0;
  long evaluations = 0;
};

template <class LevelFn>
QuadratureResult run_levels(LevelFn&& add_level, double step0, const QuadratureOptions& opts,
                            const char* what) {
  LevelState st;
  Complex prev{0.0, 0.0};
  QuadratureResult res;
  for (int L = 0; L <= opts.max_level; ++L) {
    add_level(L, st);
    double h = step0 / double(1L << L);
    Complex cur = h * st.sum;
    double l1 = h * st.l1;
    double err = std::abs(cur - prev);
    res.value = cur;
    res.error_estimate = err;
    res.evaluations = st.evaluations;
    res.level = L;
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag())) {
      throw NonConvergenceError(std::string(what) + ": integrand produced a non-finite value");
    }
    if (L >= opts.min_level && (err <= opts.rel_tol * std::abs(cur) || err <= 1e-15 * l1)) return res;
    prev = cur;
  }
  std::ostringstream os;
  os << what << ": no convergence after level " << opts.max_level << " (estimate " << res.error_estimate
     << ", value magnitude " << std::abs(res.value) << ")";
  throw NonConvergenceError(os.str());
}

}  // namespace

TanhSinhTable::TanhSinhTable() {
  levels_.resize(kMaxLevel + 1);
  for (int L = 0; L <= kMaxLevel; ++L) {
    double h = step(L);
    long jmax = static_cast<long>(std::floor(kUnitTMax / h));
    auto& nodes = levels_[static_cast<std::size_t>(L)];
    for (long j = -jmax; j <= jmax; ++j) {
      if (L > 0 && j % 2 == 0) continue;
      nodes.push_back(make_unit_node(double(j) * h));
    }
  }
}

const TanhSinhTable& TanhSinhTable::instance() {
  static const TanhSinhTable table;
  return table;
}

QuadratureResult tanh_sinh_indexed(const IndexedIntegrand& f, const QuadratureOptions& opts) {
  if (opts.max_level > TanhSinhTable::kMaxLevel) throw ValidationError("tanh_sinh: max_level too large");
  const auto& table = TanhSinhTable::instance();
  auto add_level = [&](int L, LevelState& st) {
    const auto& nodes = table.level(L);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const UnitNode& n = nodes[i];
      if (n.weight == 0.0 || n.u == 0.0 || n.v == 0.0) continue;
      Complex val = f(L, i, n) * n.weight;
      st.sum += val;
      st.l1 += std::abs(val);
      ++st.evaluations;
    }
  };
  return run_levels(add_level, 1.0, opts, "tanh_sinh");
}

QuadratureResult tanh_sinh(const UnitIntegrand& f, const QuadratureOptions& opts) {
  return tanh_sinh_indexed([&](int, std::size_t, const UnitNode& n) { return f(n.u, n.v); }, opts);
}

QuadratureResult exp_sinh_tail(const RealIntegrand& f, double rate, const QuadratureOptions& opts,
                               double w_max) {
  if (!(rate > 0.0)) throw ValidationError("exp_sinh_tail: decay rate must be positive");
  const double t_max = std::asinh(2.0 * std::log(w_max) / kPi);
  auto add_level = [&](int L, LevelState& st) {
    double h = 1.0 / double(1L << L);
    long jlo = static_cast<long>(std::ceil(kTailTMin / h));
    long jhi = static_cast<long>(std::floor(t_max / h));
    for (long j = jlo; j <= jhi; ++j) {
      if (L > 0 && j % 2 == 0) continue;
      double t = double(j) * h;
      double w = std::exp(0.5 * kPi * std::sinh(t));
      double dw = 0.5 * kPi * std::cosh(t) * w;
      Complex val = f(1.0 + w / rate) * (dw / rate);
      st.sum += val;
      st.l1 += std::abs(val);
      ++st.evaluations;
    }
  };
  return run_levels(add_level, 1.0, opts, "exp_sinh_tail");
}

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[static_cast<std::size_t>(i)] = x;
    r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 512) throw ValidationError("gauss_legendre: unsupported order");
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(compute_gauss_legendre(n));
  return *slot;
}

}  // namespace fraclap
