#include "fraclap/mellin.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fraclap/error.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_real(Complex z) { return z.imag() == 0.0; }

// log Gamma that reports poles as +inf magnitude instead of throwing.
Complex lg_or_pole(Complex z, bool& pole) {
  if (is_gamma_pole(z)) {
    pole = true;
    return {kInf, 0.0};
  }
  return log_gamma(z);
}

}  // namespace

void HFunctionSpec::validate() const {
  if (m > q()) throw ValidationError("H-function: m exceeds q");
  if (n > p()) throw ValidationError("H-function: n exceeds p");
  bool any_positive = false;
  for (const auto& pr : upper) {
    if (!(pr.scale >= 0.0)) throw ValidationError("H-function: scales A_i must be nonnegative");
    any_positive = any_positive || pr.scale > 0.0;
  }
  for (const auto& pr : lower) {
    if (!(pr.scale >= 0.0)) throw ValidationError("H-function: scales B_j must be nonnegative");
    any_positive = any_positive || pr.scale > 0.0;
  }
  if (!any_positive) throw ValidationError("H-function: at least one scale must be positive");
}

HIndices h_indices(const HFunctionSpec& spec) {
  spec.validate();
  CompensatedSum a_star, delta, log_delta_star, mu_re, mu_im, a1;
  for (std::size_t i = 0; i < spec.p(); ++i) {
    const auto& pr = spec.upper[i];
    a_star.add(i < spec.n ? pr.scale : -pr.scale);
    delta.add(-pr.scale);
    if (pr.scale > 0.0) log_delta_star.add(-pr.scale * std::log(pr.scale));
    mu_re.add(-pr.value.real());
    mu_im.add(-pr.value.imag());
    if (i >= spec.n) a1.add(-pr.scale);
  }
  for (std::size_t j = 0; j < spec.q(); ++j) {
    const auto& pr = spec.lower[j];
    a_star.add(j < spec.m ? pr.scale : -pr.scale);
    delta.add(pr.scale);
    if (pr.scale > 0.0) log_delta_star.add(pr.scale * std::log(pr.scale));
    mu_re.add(pr.value.real());
    mu_im.add(pr.value.imag());
    if (j < spec.m) a1.add(pr.scale);
  }
  mu_re.add((double(spec.p()) - double(spec.q())) / 2.0);
  HIndices out;
  out.a_star = a_star.value();
  out.delta_cap = delta.value();
  out.delta_star = std::exp(log_delta_star.value());
  out.mu_star = {mu_re.value(), mu_im.value()};
  out.a1_star = a1.value();
  return out;
}

std::pair<double, double> separation_window(const HFunctionSpec& spec) {
  spec.validate();
  double lo = -kInf, hi = kInf;
  for (std::size_t j = 0; j < spec.m; ++j) {
    const auto& pr = spec.lower[j];
    if (pr.scale > 0.0) lo = std::max(lo, -pr.value.real() / pr.scale);
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto& pr = spec.upper[i];
    if (pr.scale > 0.0) hi = std::min(hi, (1.0 - pr.value.real()) / pr.scale);
  }
  if (!(lo < hi)) {
    std::ostringstream os;
    os << "H-function: pole families overlap, no separating line (left poles reach " << lo
       << ", right poles start at " << hi << ")";
    throw DomainError(os.str());
  }
  return {lo, hi};
}

Complex h_log_theta(const HFunctionSpec& spec, Complex s) {
  Complex acc = 0.0;
  bool num_pole = false, den_pole = false;
  for (std::size_t j = 0; j < spec.q(); ++j) {
    const auto& pr = spec.lower[j];
    if (j < spec.m)
      acc += lg_or_pole(pr.value + pr.scale * s, num_pole);
    else
      acc -= lg_or_pole(1.0 - pr.value - pr.scale * s, den_pole);
  }
  for (std::size_t i = 0; i < spec.p(); ++i) {
    const auto& pr = spec.upper[i];
    if (i < spec.n)
      acc += lg_or_pole(1.0 - pr.value - pr.scale * s, num_pole);
    else
      acc -= lg_or_pole(pr.value + pr.scale * s, den_pole);
  }
  if (num_pole) throw PoleError("H-function: contour passes through a pole of the integrand");
  if (den_pole) return {-kInf, 0.0};
  return acc;
}

namespace {

struct ContourIntegrator {
  const HFunctionSpec& spec;
  Complex log_z;
  double c;
  double angle;
  double rel_tol;
  const GaussRule& g32;
  const GaussRule& g16;
  long evaluations = 0;

  // Ray direction e = exp(i dir (pi/2 + angle)); the upper ray runs outward,
  // the lower one inward, hence the sign dir. Includes ds/(2 pi i).
  Complex direction = {0.0, 1.0};
  int dir = 1;

  Complex g(double t) {
    ++evaluations;
    Complex s = c + t * direction;
    Complex lt = h_log_theta(spec, s);
    if (std::isinf(lt.real()) && lt.real() < 0) return 0.0;
    Complex e = lt - s * log_z;
    if (e.real() < -745.0) return 0.0;
    return std::exp(e) * direction * double(dir) / Complex(0.0, 2.0 * kPi);
  }

  Complex rule(const GaussRule& r, double a, double b, double* l1) {
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    Complex sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      Complex v = r.weights[i] * g(mid + half * r.nodes[i]);
      sum += v;
      abs_sum += std::abs(v);
    }
    if (l1) *l1 = abs_sum * std::abs(half);
    return sum * half;
  }

  Complex panel(double a, double b, double scale, int depth, double& l1) {
    double l1_high = 0.0;
    Complex hi = rule(g32, a, b, &l1_high);
    Complex lo = rule(g16, a, b, nullptr);
    double err = std::abs(hi - lo);
    if (depth >= 12 || err <= rel_tol * std::max(std::abs(hi), scale) || err <= 1e-17 * l1_high) {
      l1 = l1_high;
      return hi;
    }
    double mid = 0.5 * (a + b);
    double l1a = 0.0, l1b = 0.0;
    Complex left = panel(a, mid, scale, depth + 1, l1a);
    Complex right = panel(mid, b, std::max(scale, std::abs(left)), depth + 1, l1b);
    l1 = l1a + l1b;
    return left + right;
  }

  // Integrates along the upper (d = +1) or lower (d = -1) half of the contour.
  Complex side(int d, const ContourConfig& cfg, Complex prior, double& l1_total, double& reached) {
    dir = d;
    direction = std::exp(Complex(0.0, d * (0.5 * kPi + angle)));
    Complex acc = 0.0;
    int quiet = 0;
    double t = 0.0;
    while (true) {
      if (t >= cfg.max_height)
        throw NonConvergenceError("H-function: integrand did not decay before height " +
                                  std::to_string(cfg.max_height) + " (non-decay)");
      double l1 = 0.0;
      Complex val = panel(t, t + cfg.panel_height, std::abs(prior + acc), 0, l1);
      acc += val;
      l1_total += l1;
      t += cfg.panel_height;
      double ref = std::abs(prior + acc);
      if (t >= cfg.height && (l1 <= cfg.rel_tol * ref || l1 <= 1e-17 * l1_total)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
    reached = std::max(reached, t);
    return acc;
  }
};

double choose_abscissa(const HFunctionSpec& spec, double lo, double hi, double log_abs_z, double abs_z) {
  if (!std::isfinite(lo) && !std::isfinite(hi)) {
    lo = -1.0;
    hi = 1.0;
  } else if (!std::isfinite(hi)) {
    hi = lo + 2.0 + 2.0 * abs_z;
  } else if (!std::isfinite(lo)) {
    lo = hi - 2.0 - 2.0 * abs_z;
  }
  auto phi = [&](double c) {
    Complex lt = h_log_theta(spec, Complex(c, 0.0));
    return lt.real() - c * log_abs_z;
  };
  const int N = 64;
  double width = hi - lo;
  double best_c = lo + 0.5 * width, best = HUGE_VAL;
  int best_i = N / 2;
  for (int i = 0; i < N; ++i) {
    double c = lo + width * (i + 0.5) / N;
    double v;
    try {
      v = phi(c);
    } catch (const PoleError&) {
      continue;
    }
    if (v < best) {
      best = v;
      best_c = c;
      best_i = i;
    }
  }
  double a = lo + width * (std::max(best_i - 1, 0) + 0.5) / N;
  double b = lo + width * (std::min(best_i + 1, N - 1) + 0.5) / N;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = phi(x1), f2 = phi(x2);
  for (int it = 0; it < 60 && (b - a) > 1e-10 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = phi(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = phi(x2);
    }
  }
  double c = 0.5 * (a + b);
  return phi(c) <= best ? c : best_c;
}

}  // namespace

HResult h_function_detailed(const HFunctionSpec& spec, Complex z, const ContourConfig& contour) {
  spec.validate();
  if (z == 0.0) throw DomainError("H-function: z = 0 is not supported by the contour evaluator");
  if (!(contour.panel_height > 0.0) || !(contour.rel_tol > 0.0))
    throw ValidationError("contour: panel height and tolerance must be positive");
  if (contour.nodes != 32) throw ValidationError("contour: only 32-node panels are supported");
  auto [lo, hi] = separation_window(spec);
  const double abs_z = std::abs(z);
  const Complex log_z = std::log(z);

  double c;
  if (contour.c) {
    c = *contour.c;
    if (!(c > lo && c < hi)) {
      std::ostringstream os;
      os << "H-function: abscissa c = " << c << " does not separate the poles (window " << lo << ", " << hi
         << ")";
      throw DomainError(os.str());
    }
  } else {
    c = choose_abscissa(spec, lo, hi, log_z.real(), abs_z);
  }

  double angle = 0.0;
  const HIndices idx = h_indices(spec);
  if (contour.bend && abs_z < 1.0 && idx.delta_cap > 0.0) {
    // Each ray must pass to the right of the first left pole on its way up.
    double tan_max = std::tan(contour.bend_angle);
    for (std::size_t j = 0; j < spec.m; ++j) {
      const auto& pr = spec.lower[j];
      if (pr.scale <= 0.0 || pr.value.imag() == 0.0) continue;
      double tj = std::abs(pr.value.imag()) / pr.scale;
      double room = c + pr.value.real() / pr.scale;
      tan_max = std::min(tan_max, 0.5 * room / tj);
    }
    angle = std::atan(tan_max);
  }

  bool symmetric = is_real(z) && z.real() > 0.0;
  for (const auto& pr : spec.upper) symmetric = symmetric && is_real(pr.value);
  for (const auto& pr : spec.lower) symmetric = symmetric && is_real(pr.value);

  ContourIntegrator ci{spec, log_z, c, angle, contour.rel_tol, gauss_legendre(32), gauss_legendre(16)};
  double l1_total = 0.0, reached = 0.0;
  HResult res;
  if (symmetric) {
    Complex half = ci.side(+1, contour, 0.0, l1_total, reached);
    res.value = {2.0 * half.real(), 0.0};
  } else {
    Complex up = ci.side(+1, contour, 0.0, l1_total, reached);
    Complex down = ci.side(-1, contour, up, l1_total, reached);
    res.value = up + down;
  }
  res.c = c;
  res.angle = angle;
  res.height = reached;
  res.evaluations = ci.evaluations;
  return res;
}

Complex h_function(const HFunctionSpec& spec, Complex z, const ContourConfig& contour) {
  return h_function_detailed(spec, z, contour).value;
}

double FoxWrightSpec::delta_prime() const {
  CompensatedSum acc;
  for (const auto& pr : lower) acc.add(pr.scale);
  for (const auto& pr : upper) acc.add(-pr.scale);
  return acc.value();
}

Complex fox_wright(const FoxWrightSpec& spec, Complex z) {
  const double dp = spec.delta_prime();
  if (!(dp > -1.0)) {
    std::ostringstream os;
    os << "fox_wright: Delta' = " << dp << " <= -1, series is not entire";
    throw DomainError(os.str());
  }
  const Complex log_z = z == 0.0 ? Complex(0.0) : std::log(z);
  Complex sum = 0.0;
  int small = 0;
  constexpr unsigned kCap = 200000;
  for (unsigned k = 0; k < kCap; ++k) {
    Complex lt = 0.0;
    auto pole = [&](Complex arg, const char* where) {
      std::ostringstream os;
      os << "fox_wright: " << where << " Gamma(" << arg.real() << ") hits a pole at k = " << k;
      throw PoleError(os.str());
    };
    for (const auto& pr : spec.upper) {
      Complex arg = pr.value + pr.scale * double(k);
      if (is_gamma_pole(arg)) pole(arg, "numerator");
      lt += log_gamma(arg);
    }
    for (const auto& pr : spec.lower) {
      Complex arg = pr.value + pr.scale * double(k);
      if (is_gamma_pole(arg)) pole(arg, "denominator");
      lt -= log_gamma(arg);
    }
    if (k > 0) {
      if (z == 0.0) return sum;
      lt += double(k) * log_z - std::lgamma(double(k) + 1.0);
    }
    Complex t = std::exp(lt);
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) throw OverflowError("fox_wright: term overflow");
    sum += t;
    if (std::abs(t) <= 1e-16 * std::abs(sum)) {
      if (++small >= 3) return sum;
    } else {
      small = 0;
    }
  }
  throw NonConvergenceError("fox_wright: term cap reached");
}

FoxWrightReduction reduce_h_to_fox_wright(const HFunctionSpec& spec) {
  spec.validate();
  const std::size_t p = spec.p();
  if (spec.m != 1 || spec.n != p || spec.q() < 1)
    throw ShapeError("reduce_h_to_fox_wright: spec must have m = 1 and n = p");
  const auto& lead = spec.lower[0];
  if (lead.value != Complex(0.0, 0.0) || lead.scale != 1.0)
    throw ShapeError("reduce_h_to_fox_wright: leading lower pair must be (0, 1)");
  FoxWrightReduction red;
  for (const auto& pr : spec.upper) red.spec.upper.push_back({1.0 - pr.value, pr.scale});
  for (std::size_t j = 1; j < spec.q(); ++j) red.spec.lower.push_back({1.0 - spec.lower[j].value, spec.lower[j].scale});
  red.argument_sign = -1.0;
  return red;
}

}  // namespace fraclap
