#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fraclap/operators.hpp"

namespace fraclap {

struct LaplaceOptions {
  QuadratureOptions quad{1e-9, 4, 10};
};

struct LaplaceResult {
  Complex value{0.0, 0.0};
  long evaluations = 0;
};

// int_0^inf e^{-s t} f(t) dt, split at t = 1: tanh-sinh on (0, 1) and an
// exp-sinh rule on (1, inf) with t = 1 + w / Re(s). extra_rate adds known
// decay of f to the tail substitution.
LaplaceResult laplace_detailed(const std::function<Complex(double)>& f, Complex s, const LaplaceOptions& opts = {},
                               double extra_rate = 0.0);
Complex laplace(const std::function<Complex(double)>& f, Complex s, const LaplaceOptions& opts = {});

// int_0^inf g(x) dx for g decaying like exp(-rate x), same split.
LaplaceResult integrate_half_line(const std::function<Complex(double)>& g, double rate,
                                  const LaplaceOptions& opts = {});

enum class TheoremSide { I_side, J_side };

struct LaplaceQuery {
  Complex lambda{0.0, 0.0};
  Complex s{1.0, 0.0};
  OperatorParams params;
  TestFunction phi;
  TheoremSide side = TheoremSide::I_side;
};

struct VerificationReport {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;
  long lhs_quadrature_cost = 0;
  long rhs_quadrature_cost = 0;
};

// Throws ConditionError when the query fails Re s > 0, admissibility of phi,
// or the side's kernel condition. Runs before any quadrature.
void check_query(const LaplaceQuery& q);

// LHS = L[x^lambda (I phi or J phi)](s) by operator-then-Laplace quadrature;
// RHS = int_0^inf K(s, x) phi(x) dx with the matching kernel.
VerificationReport verify_theorem(const LaplaceQuery& q, const LaplaceOptions& opts = {});

enum class Kernel { KI, KJ };
enum class Regime { ZeroPlus, Infinity };

struct AsymptoticEstimate {
  double fitted_rate = 0.0;
  double target_rate = 0.0;
  Regime regime = Regime::ZeroPlus;
  std::pair<double, double> window{0.0, 0.0};
  std::vector<double> rho_values;
  // Exponent the kernel actually follows; differs from target_rate where
  // the stated rate is only an upper bound.
  double expected_rate = 0.0;
};

struct ProbeOptions {
  // Geometric window for power-law fits; the exponential fit for K_I at
  // infinity uses a linear grid on [5, 20].
  std::pair<double, double> zero_window{1e-4, 1e-2};
  std::pair<double, double> infinity_window{10.0, 100.0};
  std::pair<double, double> exponential_window{5.0, 20.0};
  int points = 20;
};

AsymptoticEstimate probe_asymptotics(const OperatorParams& params, Complex lambda, Complex s, Kernel which,
                                     Regime regime, const ProbeOptions& opts = {});

// rho*_k = min[0, nu Re c2, nu Re c2 + nu Re p_m] for k = 0..m.
std::vector<double> rho_star_values(const OperatorParams& params, Complex lambda);
// rho_k = -nu min[Re c1, Re c1 + Re p_m] for k = 0..m.
std::vector<double> rho_values(const OperatorParams& params, Complex lambda);
// min[0, Re c2, Re c2 + Re p_m], which vanishes whenever the first kernel's
// condition holds.
double zero_plus_correction(const OperatorParams& params, Complex lambda);

const char* to_string(Kernel k);
const char* to_string(Regime r);
const char* to_string(TheoremSide s);

}  // namespace fraclap
