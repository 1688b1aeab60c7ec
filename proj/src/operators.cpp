#include "fraclap/operators.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

double kernel_endpoint_exponent(const OperatorParams& p) { return p.nu * std::min(0.0, p.p(p.m()).real()); }

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

PowerImage power_image(const OperatorParams& params, Complex lambda, Complex c, const char* name) {
  if (!shift_condition(params, c))
    throw ConditionError(std::string(name) + ": condition Re(c) > -min(0, Re p_m) fails (Re c = " +
                         num(c.real()) + ", Re p_m = " + num(params.p(params.m()).real()) + ")");
  Complex coef = 0.0;
  for (unsigned k = 0; k <= params.m(); ++k) {
    Complex w = params.term_weight(k);
    if (w == 0.0) continue;
    Complex pk = params.p(k);
    coef += w * gamma_ratio({{c, c + pk}, {c + params.mu - params.a, c + params.mu - params.b}});
  }
  return {lambda - params.delta, coef};
}

}  // namespace

Complex TestFunction::operator()(double x) const {
  if (scale == 0.0) return 0.0;
  return scale * std::exp(power * std::log(x) - decay * x);
}

bool TestFunction::admissible(const OperatorParams& params, Complex lambda) const {
  if (scale == 0.0) return true;
  return decay.real() > 0.0 && (lambda - params.delta + power).real() > -1.0;
}

bool shift_condition(const OperatorParams& params, Complex c) {
  return c.real() > -std::min(0.0, params.p(params.m()).real());
}

PowerImage power_image_I(const OperatorParams& params, Complex lambda) {
  return power_image(params, lambda, params.c1(lambda), "power_image_I");
}

PowerImage power_image_J(const OperatorParams& params, Complex lambda) {
  return power_image(params, lambda, params.c2(lambda), "power_image_J");
}

OperatorEvaluator::OperatorEvaluator(const OperatorParams& params, Side side, QuadratureOptions opts)
    : params_(params), side_(side), opts_(opts), kernel_(params) {
  params_.validate();
  if (opts_.max_level > TanhSinhTable::kMaxLevel) opts_.max_level = TanhSinhTable::kMaxLevel;
  const double nu = params_.nu;
  base_exponent_ = side == Side::I ? Complex(nu * (params_.h + 1.0) - 1.0)
                                   : params_.delta + nu * (params_.h + 1.0) - 2.0;
  prefactor_ = nu * rgamma(params_.mu);
  level_once_.resize(TanhSinhTable::kMaxLevel + 1);
  for (auto& f : level_once_) f = std::make_unique<std::once_flag>();
  cache_.resize(TanhSinhTable::kMaxLevel + 1);
}

void OperatorEvaluator::check_integrable(const TestFunction& phi) const {
  if (phi.scale == 0.0) return;
  const double kexp = kernel_endpoint_exponent(params_);
  if (side_ == Side::I) {
    double e = (base_exponent_ + phi.power).real() + kexp;
    if (!(e > -1.0))
      throw ConditionError("first-kind operator: integrand not integrable at s = 0 (exponent " + num(e) +
                           " <= -1)");
  } else {
    if (phi.decay.real() > 0.0) return;
    if (phi.decay != 0.0)
      throw ConditionError("second-kind operator: oscillating test function without decay is not supported");
    double e = (base_exponent_ - phi.power).real() + kexp;
    if (!(e > -1.0))
      throw ConditionError("second-kind operator: integral over (x, inf) diverges (tail exponent " + num(e) +
                           " <= -1)");
  }
}

const OperatorEvaluator::NodeValue& OperatorEvaluator::node(int level, std::size_t index, const UnitNode&) const {
  auto L = static_cast<std::size_t>(level);
  std::call_once(*level_once_[L], [&] {
    const auto& nodes = TanhSinhTable::instance().level(level);
    std::vector<NodeValue> vals(nodes.size());
    const Complex mu1 = params_.mu - 1.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const UnitNode& n = nodes[i];
      if (n.u == 0.0 || n.v == 0.0) continue;
      double log_u = n.u < 0.5 ? std::log(n.u) : std::log1p(-n.v);
      double nl = params_.nu * log_u;
      double w = std::exp(nl);
      double one_minus_w = -std::expm1(nl);
      ScaledComplex k = kernel_.eval(one_minus_w, w, nl);
      Complex e = mu1 * std::log(one_minus_w);
      k.mant *= std::exp(Complex(0.0, e.imag()));
      k.log_scale += e.real();
      vals[i] = {k, log_u};
    }
    cache_[L] = std::move(vals);
  });
  return cache_[L][index];
}

Complex OperatorEvaluator::weighted(const TestFunctionSum& phi, double x, Complex extra_power) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("operator evaluation needs x > 0");
  bool any = false;
  for (const auto& t : phi) {
    check_integrable(t);
    any = any || t.scale != 0.0;
  }
  if (!any) return 0.0;
  const double log_x = std::log(x);
  std::vector<Complex> lead(phi.size()), expo(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    lead[i] = (phi[i].power + extra_power - params_.delta) * log_x;
    expo[i] = side_ == Side::I ? base_exponent_ + phi[i].power : base_exponent_ - phi[i].power;
  }
  const bool first = side_ == Side::I;
  auto integrand = [&](int level, std::size_t index, const UnitNode& n) -> Complex {
    ++evaluations_;
    const NodeValue& nv = node(level, index, n);
    if (nv.kernel.mant == 0.0) return 0.0;
    Complex acc = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i].scale == 0.0) continue;
      Complex arg = expo[i] * nv.log_u + lead[i] + nv.kernel.log_scale;
      arg -= first ? phi[i].decay * (x * n.u) : phi[i].decay * (x / n.u);
      if (arg.real() < -745.0) continue;
      acc += phi[i].scale * std::exp(arg);
    }
    return acc * nv.kernel.mant;
  };
  // Second kind, small x: a term whose u-exponent (kernel growth included)
  // is below -1 puts all its mass in a bump at u ~ q x / |e + 1|, cut off
  // only by exp(-q x / u). Far from u = 1 the fixed nodes miss it, so split
  // (0, 1) just above the bump and evaluate the kernel directly.
  double split = 1.0;
  if (!first) {
    const double kexp = kernel_endpoint_exponent(params_);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      double e = expo[i].real() + kexp;
      double q = phi[i].decay.real();
      if (phi[i].scale == 0.0 || !(q > 0.0) || !(e < -1.0)) continue;
      double peak = q * x / (-1.0 - e);
      if (peak < 1e-3) split = std::min(split, 30.0 * peak);
    }
  }
  if (split < 1.0) {
    const Complex mu1 = params_.mu - 1.0;
    auto direct = [&](double v, double log_u, double log_jac) -> Complex {
      ++evaluations_;
      double nl = params_.nu * log_u;
      double w = std::exp(nl);
      double one_minus_w = v < 0.5 ? -std::expm1(nl) : 1.0 - w;
      ScaledComplex k = kernel_.eval(one_minus_w, w, nl);
      if (k.mant == 0.0) return 0.0;
      Complex ke = mu1 * std::log(one_minus_w);
      Complex acc = 0.0;
      for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i].scale == 0.0) continue;
        Complex arg =
            expo[i] * log_u + lead[i] + log_jac + k.log_scale + ke - phi[i].decay * std::exp(log_x - log_u);
        if (arg.real() < -745.0) continue;
        acc += phi[i].scale * std::exp(arg);
      }
      return acc * k.mant;
    };
    const double log_split = std::log(split);
    auto lower = [&](double a, double b) {
      double log_a = a < 0.5 ? std::log(a) : std::log1p(-b);
      double u = split * a;
      return direct(1.0 - u, log_split + log_a, log_split);
    };
    // log u = (1 - a) log(split): the power-law decay away from the split
    // becomes an exponential one in a.
    auto upper = [&](double, double b) {
      double log_u = b * log_split;
      return direct(-std::expm1(log_u), log_u, log_u + std::log(-log_split));
    };
    return prefactor_ * (tanh_sinh(lower, opts_).value + tanh_sinh(upper, opts_).value);
  }
  // Away from the bump the x power is taken outside the integral, so the
  // integrand stays finite at nodes near u = 0.
  double outside = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i].scale != 0.0) outside = std::max(outside, lead[i].real());
  for (auto& l : lead) l -= outside;
  QuadratureResult r = tanh_sinh_indexed(integrand, opts_);
  return prefactor_ * r.value * std::exp(outside);
}

Complex eval_I(const OperatorParams& params, const TestFunctionSum& phi, double x, const QuadratureOptions& opts) {
  return OperatorEvaluator(params, Side::I, opts)(phi, x);
}

Complex eval_J(const OperatorParams& params, const TestFunctionSum& phi, double x, const QuadratureOptions& opts) {
  return OperatorEvaluator(params, Side::J, opts)(phi, x);
}

Complex eval_I(const OperatorParams& params, const TestFunction& phi, double x, const QuadratureOptions& opts) {
  return eval_I(params, TestFunctionSum{phi}, x, opts);
}

Complex eval_J(const OperatorParams& params, const TestFunction& phi, double x, const QuadratureOptions& opts) {
  return eval_J(params, TestFunctionSum{phi}, x, opts);
}

HFunctionSpec ki_h_spec(const OperatorParams& params, Complex lambda, unsigned k) {
  const double inv = 1.0 / params.nu;
  const Complex c2 = params.c2(lambda);
  HFunctionSpec s;
  s.m = 3;
  s.n = 0;
  const Complex u1 = c2 + params.mu - params.a, u2 = c2 + params.mu - params.b;
  // c2 + p_k rebuilt from the stored entries as u1 + u2 - c2 - mu - k, so the
  // index sums see a single rounding.
  CompensatedSum re, im;
  for (double v : {u1.real(), u2.real(), -c2.real(), -params.mu.real(), -double(k)}) re.add(v);
  for (double v : {u1.imag(), u2.imag(), -c2.imag(), -params.mu.imag()}) im.add(v);
  s.upper = {{u1, inv}, {u2, inv}};
  s.lower = {{0.0, 1.0}, {c2, inv}, {Complex(re.value(), im.value()), inv}};
  return s;
}

HFunctionSpec kj_h_spec(const OperatorParams& params, Complex lambda, unsigned k) {
  const double inv = 1.0 / params.nu;
  const Complex c1 = params.c1(lambda);
  HFunctionSpec s;
  s.m = 1;
  s.n = 2;
  s.upper = {{1.0 - c1, inv}, {1.0 - c1 - params.p(k), inv}};
  s.lower = {{0.0, 1.0}, {1.0 - c1 - params.mu + params.a, inv}, {1.0 - c1 - params.mu + params.b, inv}};
  return s;
}

FoxWrightSpec kj_fox_wright_spec(const OperatorParams& params, Complex lambda, unsigned k) {
  const double inv = 1.0 / params.nu;
  const Complex c1 = params.c1(lambda);
  FoxWrightSpec s;
  s.upper = {{c1, inv}, {c1 + params.p(k), inv}};
  s.lower = {{c1 + params.mu - params.a, inv}, {c1 + params.mu - params.b, inv}};
  return s;
}

void check_kernel_KI(const OperatorParams& params, Complex lambda, Complex s) {
  if (!(s.real() > 0.0)) throw ConditionError("kernel K_I needs Re(s) > 0");
  Complex c2 = params.c2(lambda);
  if (!shift_condition(params, c2))
    throw ConditionError("kernel K_I: condition Re(c2(lambda)) > -min(0, Re p_m) fails (Re c2 = " +
                         num(c2.real()) + ", Re p_m = " + num(params.p(params.m()).real()) + ")");
}

void check_kernel_KJ(const OperatorParams& params, Complex lambda, Complex s) {
  if (!(s.real() > 0.0)) throw ConditionError("kernel K_J needs Re(s) > 0");
  Complex c1 = params.c1(lambda);
  if (!shift_condition(params, c1))
    throw ConditionError("kernel K_J: condition Re(c1(lambda)) > -min(0, Re p_m) fails (Re c1 = " +
                         num(c1.real()) + ", Re p_m = " + num(params.p(params.m()).real()) + ")");
}

Complex kernel_KI(const OperatorParams& params, Complex lambda, Complex s, double x, const ContourConfig& contour) {
  return weighted_kernel_KI(params, lambda, s, x, 0.0, contour);
}

Complex kernel_KJ(const OperatorParams& params, Complex lambda, Complex s, double x) {
  return weighted_kernel_KJ(params, lambda, s, x, 0.0);
}

Complex weighted_kernel_KI(const OperatorParams& params, Complex lambda, Complex s, double x, Complex extra_power,
                           const ContourConfig& contour) {
  check_kernel_KI(params, lambda, s);
  if (!(x > 0.0)) throw ValidationError("kernel K_I needs x > 0");
  Complex sum = 0.0;
  for (unsigned k = 0; k <= params.m(); ++k) {
    Complex w = params.term_weight(k);
    if (w == 0.0) continue;
    sum += w * h_function(ki_h_spec(params, lambda, k), s * x, contour);
  }
  return std::exp((lambda - params.delta + extra_power) * std::log(x)) * sum;
}

Complex weighted_kernel_KJ(const OperatorParams& params, Complex lambda, Complex s, double x, Complex extra_power) {
  check_kernel_KJ(params, lambda, s);
  if (!(x > 0.0)) throw ValidationError("kernel K_J needs x > 0");
  const Complex z = s * x;
  const bool series = std::abs(z) <= kKJSeriesThreshold;
  Complex sum = 0.0;
  for (unsigned k = 0; k <= params.m(); ++k) {
    Complex w = params.term_weight(k);
    if (w == 0.0) continue;
    sum += w * (series ? fox_wright(kj_fox_wright_spec(params, lambda, k), -z)
                       : h_function(kj_h_spec(params, lambda, k), z));
  }
  return std::exp((lambda - params.delta + extra_power) * std::log(x)) * sum;
}

OperatorParams classical_reduction(ClassicalKind kind, Complex mu) {
  switch (kind) {
    case ClassicalKind::RiemannLiouville:
      return OperatorParams::make(mu, 0.0, 0.0, 0.0, 1.0, -mu);
  }
  throw ValidationError("unknown classical reduction");
}

}  // namespace fraclap
