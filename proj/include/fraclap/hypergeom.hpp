#pragma once

#include <vector>

#include "fraclap/numerics.hpp"
#include "fraclap/params.hpp"

namespace fraclap {

struct PFQSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
};

struct PfqOptions {
  // p = q+1 series are accepted for |z| <= 1 - eta (|z| <= 1 when Re psi > 0).
  double eta = 1e-3;
  unsigned term_cap = 100000;
  // Levin estimates above accel_tol * |value| are reported as non-convergence.
  double accel_tol = 1e-7;
};

struct PfqResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  unsigned terms = 0;
  bool accelerated = false;
};

PfqResult pfq_detailed(const PFQSpec& spec, Complex z, const PfqOptions& opts = {});
Complex pfq(const PFQSpec& spec, Complex z, const PfqOptions& opts = {});

enum class BehaviorKind { Bounded, PowerBlowup, LogBlowup };

struct BehaviorClass {
  Complex psi{0.0, 0.0};
  BehaviorKind kind = BehaviorKind::Bounded;
};

// Behaviour of a p = q+1 series as its argument tends to 1.
BehaviorClass classify_near_unit(const PFQSpec& spec);

const char* to_string(BehaviorKind kind);

// mant * exp(log_scale); keeps kernel values representable when w = u^nu
// underflows and 2F1 grows like a negative power of w.
struct ScaledComplex {
  Complex mant{0.0, 0.0};
  double log_scale = 0.0;
  Complex value() const { return mant == 0.0 ? Complex(0.0) : mant * std::exp(log_scale); }
};

ScaledComplex operator+(const ScaledComplex& x, const ScaledComplex& y);
ScaledComplex operator*(Complex c, const ScaledComplex& x);

// 2F1(a, b; c; z) for real z in [0, 1], given w = 1 - z to full precision.
// Uses the series in z for w >= 1/2 and the connection formula in w below
// that (with the logarithmic form when c - a - b is an integer). All
// z-independent gamma factors are computed once at construction.
class Hyp2F1 {
 public:
  Hyp2F1(Complex a, Complex b, Complex c);
  Complex operator()(double z, double w) const { return eval(z, w, std::log(w)).value(); }
  // log_w = log(w) must be supplied; w itself may have underflowed to 0.
  ScaledComplex eval(double z, double w, double log_w) const;

 private:
  enum class Mode { Terminating, Connection, LogPositive, LogNegative };
  Complex series_z(double z) const;
  Complex log_case(double w, double log_w) const;

  Complex a_, b_, c_;
  Mode mode_ = Mode::Connection;
  int m_ = 0;                // |c - a - b| in the logarithmic modes
  Complex d_{0.0, 0.0};      // c - a - b
  Complex g1_{0.0, 0.0}, g2_{0.0, 0.0};
  // logarithmic case data, for parameters (la, lb) with c = la + lb + m
  Complex la_{0.0, 0.0}, lb_{0.0, 0.0};
  Complex log_pref_{0.0, 0.0};     // Gamma(la+lb+m)
  Complex log_finite_{0.0, 0.0};   // 1/(Gamma(la+m) Gamma(lb+m))
  Complex log_infinite_{0.0, 0.0}; // 1/(Gamma(la) Gamma(lb))
  Complex psi_am_{0.0, 0.0}, psi_bm_{0.0, 0.0};
};

// The operator kernel r+2Fr+1[a, b, (f+m); mu, (f); z] with z = 1 - w.
// Pairs with m_i = 0 cancel and are dropped. Near z = 1 it is expanded as
// sum_k (A_k/A_0)(a)_k(b)_k/(mu)_k z^k 2F1(a+k, b+k; mu+k; z).
class KernelF {
 public:
  explicit KernelF(const OperatorParams& params);
  Complex operator()(double z, double w) const { return eval(z, w, std::log(w)).value(); }
  ScaledComplex eval(double z, double w, double log_w) const;
  Complex at(double w) const { return (*this)(1.0 - w, w); }
  unsigned terms_m() const { return m_; }

 private:
  Complex direct(double z) const;

  Complex a_, b_, mu_;
  unsigned m_ = 0;
  std::vector<Complex> sigma_;  // sigma_0..sigma_m
  Complex a0_{1.0, 0.0};
  std::vector<Complex> coef_;   // (A_k/A_0)(a)_k(b)_k/(mu)_k
  std::vector<Hyp2F1> parts_;
};

// kernel_f(params, u) = r+2Fr+1[...; 1 - u].
Complex kernel_f(const OperatorParams& params, double u);

// The kernel's pFq spec with all pairs kept (including m_i = 0).
PFQSpec kernel_spec(const OperatorParams& params);

}  // namespace fraclap
