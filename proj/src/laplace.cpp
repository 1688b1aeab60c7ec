#include "fraclap/laplace.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Least squares y ~ c0 + c1 x + c2 / x; returns c1.
double slope_with_inverse(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::array<std::array<double, 4>, 3> m{};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::array<double, 3> f = {1.0, xs[i], 1.0 / xs[i]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += f[r] * f[c];
      m[r][3] += f[r] * ys[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return m[1][3] / m[1][1];
}

}  // namespace

const char* to_string(Kernel k) { return k == Kernel::KI ? "KI" : "KJ"; }
const char* to_string(Regime r) { return r == Regime::ZeroPlus ? "ZeroPlus" : "Infinity"; }
const char* to_string(TheoremSide s) { return s == TheoremSide::I_side ? "I" : "J"; }

LaplaceResult integrate_half_line(const std::function<Complex(double)>& g, double rate, const LaplaceOptions& opts) {
  if (!(rate > 0.0)) throw DomainError("half-line integral needs a positive decay rate");
  QuadratureResult head = tanh_sinh([&](double u, double) { return g(u); }, opts.quad);
  QuadratureResult tail = exp_sinh_tail(g, rate, opts.quad);
  return {head.value + tail.value, head.evaluations + tail.evaluations};
}

LaplaceResult laplace_detailed(const std::function<Complex(double)>& f, Complex s, const LaplaceOptions& opts,
                               double extra_rate) {
  if (!(s.real() > 0.0)) throw DomainError("Laplace transform needs Re(s) > 0");
  auto g = [&](double t) -> Complex {
    Complex ft = f(t);
    if (ft == 0.0) return 0.0;
    return std::exp(-s * t) * ft;
  };
  return integrate_half_line(g, s.real() + extra_rate, opts);
}

Complex laplace(const std::function<Complex(double)>& f, Complex s, const LaplaceOptions& opts) {
  return laplace_detailed(f, s, opts).value;
}

void check_query(const LaplaceQuery& q) {
  q.params.validate();
  if (!(q.s.real() > 0.0)) throw ConditionError("verification needs Re(s) > 0");
  if (!q.phi.admissible(q.params, q.lambda))
    throw ConditionError("test function not admissible: need Re q > 0 and Re(lambda - delta + p) > -1 (got Re q = " +
                         num(q.phi.decay.real()) + ", Re(lambda - delta + p) = " +
                         num((q.lambda - q.params.delta + q.phi.power).real()) + ")");
  if (q.side == TheoremSide::I_side)
    check_kernel_KI(q.params, q.lambda, q.s);
  else
    check_kernel_KJ(q.params, q.lambda, q.s);
}

VerificationReport verify_theorem(const LaplaceQuery& q, const LaplaceOptions& opts) {
  check_query(q);
  VerificationReport rep;
  if (q.phi.scale == 0.0) return rep;

  const bool first = q.side == TheoremSide::I_side;
  OperatorEvaluator op(q.params, first ? Side::I : Side::J, QuadratureOptions{1e-11, 4, 10});
  op.check_integrable(q.phi);
  const TestFunctionSum phi{q.phi};
  auto lhs_f = [&](double x) { return op.weighted(phi, x, q.lambda); };
  // The second-kind image inherits the exp(-q x) decay of phi.
  double lhs_extra = first ? 0.0 : q.phi.decay.real();
  LaplaceResult lhs = laplace_detailed(lhs_f, q.s, opts, lhs_extra);

  // phi(x) = C x^p exp(-q x); its power joins the kernel's x^{lambda - delta}.
  auto rhs_g = [&](double x) -> Complex {
    Complex k = first ? weighted_kernel_KI(q.params, q.lambda, q.s, x, q.phi.power)
                      : weighted_kernel_KJ(q.params, q.lambda, q.s, x, q.phi.power);
    return k * q.phi.scale * std::exp(-q.phi.decay * x);
  };
  double rhs_rate = first ? q.s.real() + q.phi.decay.real() : q.phi.decay.real();
  LaplaceResult rhs = integrate_half_line(rhs_g, rhs_rate, opts);

  rep.lhs = lhs.value;
  rep.rhs = rhs.value;
  rep.abs_err = std::abs(rep.lhs - rep.rhs);
  rep.rel_err = rep.abs_err / std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
  rep.lhs_quadrature_cost = lhs.evaluations;
  rep.rhs_quadrature_cost = rhs.evaluations;
  return rep;
}

std::vector<double> rho_star_values(const OperatorParams& params, Complex lambda) {
  const double nu = params.nu;
  const double c2 = params.c2(lambda).real();
  const double pm = params.p(params.m()).real();
  double r = std::min({0.0, nu * c2, nu * c2 + nu * pm});
  return std::vector<double>(params.m() + 1, r);
}

std::vector<double> rho_values(const OperatorParams& params, Complex lambda) {
  const double c1 = params.c1(lambda).real();
  const double pm = params.p(params.m()).real();
  double r = -params.nu * std::min(c1, c1 + pm);
  return std::vector<double>(params.m() + 1, r);
}

double zero_plus_correction(const OperatorParams& params, Complex lambda) {
  const double c2 = params.c2(lambda).real();
  const double pm = params.p(params.m()).real();
  return std::min({0.0, c2, c2 + pm});
}

AsymptoticEstimate probe_asymptotics(const OperatorParams& params, Complex lambda, Complex s, Kernel which,
                                     Regime regime, const ProbeOptions& opts) {
  if (opts.points < 3) throw ValidationError("asymptotic probe needs at least 3 points");
  if (which == Kernel::KI)
    check_kernel_KI(params, lambda, s);
  else
    check_kernel_KJ(params, lambda, s);

  const double ld = (lambda - params.delta).real();
  AsymptoticEstimate est;
  est.regime = regime;
  const bool exponential = which == Kernel::KI && regime == Regime::Infinity;
  est.window = exponential ? opts.exponential_window
                           : (regime == Regime::ZeroPlus ? opts.zero_window : opts.infinity_window);

  auto kernel = [&](double x) {
    return which == Kernel::KI ? kernel_KI(params, lambda, s, x) : kernel_KJ(params, lambda, s, x);
  };

  std::vector<double> xs, ys;
  const int n = opts.points;
  for (int i = 0; i < n; ++i) {
    double t = double(i) / double(n - 1);
    double x = exponential ? est.window.first + t * (est.window.second - est.window.first)
                           : est.window.first * std::pow(est.window.second / est.window.first, t);
    double mag = std::abs(kernel(x));
    if (!(mag >= 1e-280))
      throw UnderflowError("asymptotic probe: kernel magnitude " + num(mag) + " below 1e-280 at x = " + num(x));
    if (exponential) {
      xs.push_back(x);
      ys.push_back(std::log(mag) - (ld - params.mu.real()) * std::log(x));
    } else {
      xs.push_back(std::log(x));
      ys.push_back(std::log(mag));
    }
  }

  if (which == Kernel::KI) {
    est.rho_values = rho_star_values(params, lambda);
    if (regime == Regime::ZeroPlus) {
      est.target_rate = ld + params.nu * zero_plus_correction(params, lambda);
      est.expected_rate = est.target_rate;
    } else {
      est.target_rate = std::abs(s) * std::cos(kPi + std::arg(s));
      est.expected_rate = est.target_rate;
    }
  } else {
    est.rho_values = rho_values(params, lambda);
    est.target_rate = ld;
    est.expected_rate = regime == Regime::ZeroPlus ? ld : ld + est.rho_values.front();
  }
  est.fitted_rate = exponential ? slope_with_inverse(xs, ys) : slope(xs, ys);
  return est;
}

}  // namespace fraclap
