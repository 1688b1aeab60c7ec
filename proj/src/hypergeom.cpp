#include "fraclap/hypergeom.hpp"

#include <cmath>
#include <sstream>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Plain 2F1 series; used for |x| <= 1/2 or terminating parameters.
Complex series_2f1(Complex a, Complex b, Complex c, Complex x) {
  Complex term = 1.0, sum = 1.0;
  int small = 0;
  for (int n = 0; n < 20000; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * x;
    if (term == 0.0) return sum;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      if (++small >= 3) return sum;
    } else {
      small = 0;
    }
  }
  throw NonConvergenceError("2F1 series did not converge for c = " + fmt(c));
}

// Levin u-transform (beta = 1) of the partial sums S_n..S_{n+k} with terms
// t_n..t_{n+k}; the vectors hold indices n, n+1, ... from position 0.
Complex levin_u(const std::vector<Complex>& S, const std::vector<Complex>& t, std::size_t n, int k) {
  Complex num = 0.0, den = 0.0;
  double binom = 1.0;
  const double base = double(n + k) + 1.0;
  for (int j = 0; j <= k; ++j) {
    double nj = double(n + j) + 1.0;
    double scale = std::pow(nj / base, k - 1);
    Complex omega = nj * t[j];
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    Complex wgt = sign * binom * scale / omega;
    num += wgt * S[j];
    den += wgt;
    binom = binom * double(k - j) / double(j + 1);
  }
  return num / den;
}

}  // namespace

const char* to_string(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::Bounded:
      return "Bounded";
    case BehaviorKind::PowerBlowup:
      return "PowerBlowup";
    case BehaviorKind::LogBlowup:
      return "LogBlowup";
  }
  return "?";
}

PfqResult pfq_detailed(const PFQSpec& spec, Complex z, const PfqOptions& opts) {
  for (const auto& b : spec.lower)
    if (is_gamma_pole(b)) throw PoleError("pfq: lower parameter " + fmt(b) + " is a nonpositive integer");
  PfqResult res;
  res.value = 1.0;
  if (z == 0.0) return res;

  bool terminating = false;
  for (const auto& a : spec.upper)
    if (is_gamma_pole(a)) terminating = true;

  const std::size_t p = spec.upper.size(), q = spec.lower.size();
  const double az = std::abs(z);
  Complex psi = 0.0;
  for (const auto& b : spec.lower) psi += b;
  for (const auto& a : spec.upper) psi -= a;
  if (!terminating) {
    if (p > q + 1) throw DomainError("pfq: p > q+1 series diverges for z != 0");
    if (p == q + 1) {
      if (az > 1.0) throw DomainError("pfq: |z| > 1 outside the disk of convergence");
      if (az > 1.0 - opts.eta && !(psi.real() > 0.0))
        throw DomainError("pfq: |z| = " + std::to_string(az) +
                          " too close to 1 for Re(psi) <= 0 (psi = " + fmt(psi) + ")");
    }
  }

  const bool use_levin = !terminating && p == q + 1 && az > 0.9;
  std::size_t n0 = 0;
  constexpr int kLevinMax = 30;
  if (use_levin) {
    double d = std::abs(1.0 - z);
    // Start where n |1 - z| is about 10. When that is beyond the term cap the
    // partial sums look like those at z = 1: start at 0 if that series
    // converges, otherwise as late as the cap allows.
    double want = d > 0.0 ? 10.0 / d : HUGE_VAL;
    double room = std::max(0.0, double(opts.term_cap) - kLevinMax - 2.0);
    if (want <= room)
      n0 = static_cast<std::size_t>(want);
    else
      n0 = psi.real() > 0.0 ? 0 : static_cast<std::size_t>(room);
  }

  std::vector<Complex> partial, terms;
  if (use_levin) {
    partial.reserve(kLevinMax + 2);
    terms.reserve(kLevinMax + 2);
    if (n0 == 0) {
      partial.push_back(1.0);
      terms.push_back(1.0);
    }
  }

  Complex term = 1.0, sum = 1.0;
  int small = 0;
  for (unsigned n = 0; n < opts.term_cap; ++n) {
    Complex ratio = z / double(n + 1);
    for (const auto& a : spec.upper) ratio *= a + double(n);
    for (const auto& b : spec.lower) ratio /= b + double(n);
    term *= ratio;
    sum += term;
    res.terms = n + 1;
    if (term == 0.0 && terminating) {
      res.value = sum;
      return res;
    }
    if (use_levin && n + 1 >= n0) {
      partial.push_back(sum);
      terms.push_back(term);
    }
    if (term != 0.0 && std::abs(term) < 1e-16 * std::abs(sum)) {
      if (++small >= 3) {
        res.value = sum;
        return res;
      }
    } else {
      small = 0;
    }
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
      throw OverflowError("pfq: partial sums overflowed");
    if (use_levin && partial.size() >= kLevinMax + 1) break;
  }
  if (!use_levin)
    throw NonConvergenceError("pfq: term cap " + std::to_string(opts.term_cap) + " reached at z = " + fmt(z));

  Complex prev = levin_u(partial, terms, n0, 1);
  double best_diff = HUGE_VAL;
  Complex best = prev;
  for (int k = 2; k <= kLevinMax; ++k) {
    Complex cur = levin_u(partial, terms, n0, k);
    double diff = std::abs(cur - prev);
    if (std::isfinite(diff) && diff < best_diff) {
      best_diff = diff;
      best = cur;
    }
    prev = cur;
  }
  res.value = best;
  res.error_estimate = best_diff;
  res.accelerated = true;
  if (!(best_diff <= opts.accel_tol * std::abs(best))) {
    std::ostringstream os;
    os << "pfq: Levin acceleration estimate " << best_diff << " exceeds tolerance at z = " << fmt(z);
    throw NonConvergenceError(os.str());
  }
  return res;
}

Complex pfq(const PFQSpec& spec, Complex z, const PfqOptions& opts) { return pfq_detailed(spec, z, opts).value; }

BehaviorClass classify_near_unit(const PFQSpec& spec) {
  if (spec.upper.size() != spec.lower.size() + 1)
    throw ShapeError("classify_near_unit: need p = q+1, got p = " + std::to_string(spec.upper.size()) +
                     ", q = " + std::to_string(spec.lower.size()));
  CompensatedSum re, im;
  for (const auto& b : spec.lower) {
    re.add(b.real());
    im.add(b.imag());
  }
  for (const auto& a : spec.upper) {
    re.add(-a.real());
    im.add(-a.imag());
  }
  BehaviorClass bc;
  bc.psi = {re.value(), im.value()};
  if (std::abs(bc.psi) < 1e-12)
    bc.kind = BehaviorKind::LogBlowup;
  else if (bc.psi.real() < 0.0)
    bc.kind = BehaviorKind::PowerBlowup;
  else
    bc.kind = BehaviorKind::Bounded;
  return bc;
}

Hyp2F1::Hyp2F1(Complex a, Complex b, Complex c) : a_(a), b_(b), c_(c) {
  if (is_gamma_pole(c)) throw PoleError("2F1: lower parameter " + fmt(c) + " is a nonpositive integer");
  if (is_gamma_pole(a) || is_gamma_pole(b)) {
    mode_ = Mode::Terminating;
    return;
  }
  d_ = c - a - b;
  double n = std::round(d_.real());
  if (std::abs(d_ - Complex(n, 0.0)) < 1e-9) {
    if (n >= 0) {
      mode_ = Mode::LogPositive;
      m_ = int(n);
      la_ = a;
      lb_ = b;
    } else {
      // Euler: F(a,b;c;z) = w^{c-a-b} F(c-a, c-b; c; z)
      mode_ = Mode::LogNegative;
      m_ = int(-n);
      la_ = c - a;
      lb_ = c - b;
      if (is_gamma_pole(la_) || is_gamma_pole(lb_)) return;
    }
    log_pref_ = gamma(la_ + lb_ + double(m_));
    log_finite_ = rgamma(la_ + double(m_)) * rgamma(lb_ + double(m_));
    log_infinite_ = rgamma(la_) * rgamma(lb_);
    psi_am_ = digamma(la_ + double(m_));
    psi_bm_ = digamma(lb_ + double(m_));
    return;
  }
  mode_ = Mode::Connection;
  g1_ = gamma_ratio({{c, d_}, {c - a, c - b}});
  g2_ = gamma_ratio({{c, -d_}, {a, b}});
}

Complex Hyp2F1::series_z(double z) const { return series_2f1(a_, b_, c_, z); }

ScaledComplex operator+(const ScaledComplex& x, const ScaledComplex& y) {
  if (x.mant == 0.0) return y;
  if (y.mant == 0.0) return x;
  double e = std::max(x.log_scale, y.log_scale);
  return {x.mant * std::exp(x.log_scale - e) + y.mant * std::exp(y.log_scale - e), e};
}

ScaledComplex operator*(Complex c, const ScaledComplex& x) { return {c * x.mant, x.log_scale}; }

Complex Hyp2F1::log_case(double w, double log_w) const {
  const int m = m_;
  const Complex la = la_, lb = lb_;
  Complex finite = 0.0;
  if (m > 0) {
    Complex poch = 1.0;  // (la)_k (lb)_k / k! * (-w)^k
    double fact = std::tgamma(double(m));  // (m-1)!
    for (int k = 0; k < m; ++k) {
      finite += poch * fact;
      poch *= (la + double(k)) * (lb + double(k)) / double(k + 1) * (-w);
      if (m - k - 1 > 0) fact /= double(m - k - 1);
    }
    finite *= log_finite_;
  }
  const double lw = log_w;
  Complex infinite = 0.0;
  Complex coef = 1.0 / std::tgamma(double(m) + 1.0);  // (la+m)_k (lb+m)_k / (k! (k+m)!) w^k
  double psi_k1 = -kEulerGamma;                        // psi(k+1)
  double psi_km1 = -kEulerGamma;                       // psi(k+m+1)
  for (int j = 1; j <= m; ++j) psi_km1 += 1.0 / j;
  Complex psi_a = psi_am_, psi_b = psi_bm_;
  int small = 0;
  for (int k = 0; k < 5000; ++k) {
    Complex t = coef * (lw - psi_k1 - psi_km1 + psi_a + psi_b);
    infinite += t;
    if (std::abs(t) < 1e-17 * std::abs(infinite)) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
    Complex xa = la + double(k + m), xb = lb + double(k + m);
    coef *= xa * xb / (double(k + 1) * double(k + m + 1)) * w;
    psi_a += 1.0 / xa;
    psi_b += 1.0 / xb;
    psi_k1 += 1.0 / double(k + 1);
    psi_km1 += 1.0 / double(k + m + 1);
    if (k == 4999) throw NonConvergenceError("2F1 logarithmic series did not converge");
  }
  Complex sign_wm = std::pow(-w, m);
  return log_pref_ * (finite - sign_wm * log_infinite_ * infinite);
}

ScaledComplex Hyp2F1::eval(double z, double w, double log_w) const {
  if (mode_ == Mode::Terminating || w >= 0.5) return {series_z(z), 0.0};
  if (!(log_w > -HUGE_VAL)) {
    if (mode_ == Mode::Connection && d_.real() > 0.0) return {g1_, 0.0};
    throw DomainError("2F1: argument 1 with Re(c-a-b) <= 0");
  }
  switch (mode_) {
    case Mode::Connection: {
      ScaledComplex t1{g1_ == 0.0 ? Complex(0.0) : g1_ * series_2f1(a_, b_, 1.0 - d_, w), 0.0};
      ScaledComplex t2;
      if (g2_ != 0.0) {
        Complex e = d_ * log_w;
        t2.mant = g2_ * std::exp(Complex(0.0, e.imag())) * series_2f1(c_ - a_, c_ - b_, 1.0 + d_, w);
        t2.log_scale = e.real();
      }
      return t1 + t2;
    }
    case Mode::LogPositive:
      return {log_case(w, log_w), 0.0};
    case Mode::LogNegative: {
      double e = -double(m_) * log_w;
      if (is_gamma_pole(la_) || is_gamma_pole(lb_)) return {series_2f1(la_, lb_, c_, z), e};
      return {log_case(w, log_w), e};
    }
    case Mode::Terminating:
      break;
  }
  return {series_z(z), 0.0};
}

KernelF::KernelF(const OperatorParams& params)
    : a_(params.a), b_(params.b), mu_(params.mu), m_(params.m()), sigma_(params.table.sigma) {
  a0_ = params.table.a_coeffs[0];
  if (a0_ == 0.0) throw ValidationError("kernel: A_0 vanishes");
  coef_.resize(m_ + 1);
  parts_.reserve(m_ + 1);
  for (unsigned k = 0; k <= m_; ++k) {
    coef_[k] = params.table.a_coeffs[k] / a0_ * pochhammer(a_, k) * pochhammer(b_, k) / pochhammer(mu_, k);
    parts_.emplace_back(a_ + double(k), b_ + double(k), mu_ + double(k));
  }
}

Complex KernelF::direct(double z) const {
  Complex base = 1.0;  // (a)_n (b)_n / ((mu)_n n!) z^n
  Complex sum = 0.0;
  int small = 0;
  for (unsigned n = 0; n < 100000; ++n) {
    Complex poly = 0.0;  // prod (f_i + n)_{m_i} = sum_j sigma_{m-j} n^j
    for (unsigned j = 0; j <= m_; ++j) poly = poly * double(n) + sigma_[j];
    Complex t = base * poly / a0_;
    sum += t;
    if (base == 0.0) return sum;
    if (t != 0.0 && std::abs(t) < 1e-16 * std::abs(sum)) {
      if (++small >= 3) return sum;
    } else {
      small = 0;
    }
    base *= (a_ + double(n)) * (b_ + double(n)) / ((mu_ + double(n)) * double(n + 1)) * z;
  }
  throw NonConvergenceError("kernel series did not converge");
}

ScaledComplex KernelF::eval(double z, double w, double log_w) const {
  if (z == 0.0) return {1.0, 0.0};
  if (w >= 0.5) return {direct(z), 0.0};
  ScaledComplex sum;
  double zk = 1.0;
  for (unsigned k = 0; k <= m_; ++k) {
    if (coef_[k] != 0.0) sum = sum + (coef_[k] * zk) * parts_[k].eval(z, w, log_w);
    zk *= z;
  }
  return sum;
}

Complex kernel_f(const OperatorParams& params, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw ValidationError("kernel_f: u must lie in [0, 1]");
  return KernelF(params).at(u);
}

PFQSpec kernel_spec(const OperatorParams& params) {
  PFQSpec s;
  s.upper = {params.a, params.b};
  s.lower = {params.mu};
  for (std::size_t i = 0; i < params.f_values.size(); ++i) {
    s.upper.push_back(params.f_values[i] + double(params.multiplicities[i]));
    s.lower.push_back(params.f_values[i]);
  }
  return s;
}

}  // namespace fraclap
