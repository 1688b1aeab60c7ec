#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include "fraclap/hypergeom.hpp"
#include "fraclap/mellin.hpp"
#include "fraclap/params.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

// phi(x) = C x^p exp(-q x). q may be complex (a Laplace kernel e^{-sx} is a
// test function with q = s) but needs Re q >= 0.
struct TestFunction {
  Complex scale{1.0, 0.0};
  Complex power{0.0, 0.0};
  Complex decay{0.0, 0.0};

  Complex operator()(double x) const;
  // x^{lambda - delta} phi in L^1(0, inf).
  bool admissible(const OperatorParams& params, Complex lambda) const;
};

using TestFunctionSum = std::vector<TestFunction>;

struct PowerImage {
  Complex exponent;
  Complex coefficient;
};

PowerImage power_image_I(const OperatorParams& params, Complex lambda);
PowerImage power_image_J(const OperatorParams& params, Complex lambda);

// Power-image condition Re(c) > -min(0, Re p_m).
bool shift_condition(const OperatorParams& params, Complex c);

enum class Side { I, J };

// Evaluates I phi or J phi by tanh-sinh quadrature after mapping the
// integration range to (0, 1). The kernel factor (1-u^nu)^{mu-1} F(1-u^nu)
// depends only on the node, so it is cached per node and reused across x and
// across test functions. Thread safe.
class OperatorEvaluator {
 public:
  OperatorEvaluator(const OperatorParams& params, Side side, QuadratureOptions opts = {});

  Complex operator()(const TestFunctionSum& phi, double x) const { return weighted(phi, x, 0.0); }
  Complex operator()(const TestFunction& phi, double x) const { return weighted(TestFunctionSum{phi}, x, 0.0); }
  // x^{extra_power} times the image at x. The powers are combined before
  // exponentiation, so the product stays finite where the factors alone
  // would overflow or underflow.
  Complex weighted(const TestFunctionSum& phi, double x, Complex extra_power) const;

  // Integrand evaluations performed so far.
  long evaluations() const { return evaluations_.load(); }
  const OperatorParams& params() const { return params_; }
  Side side() const { return side_; }

  // Throws ConditionError when the integral over (0, 1) diverges for a term.
  void check_integrable(const TestFunction& phi) const;

 private:
  struct NodeValue {
    ScaledComplex kernel;  // (1-w)^{mu-1} F(1-w)
    double log_u;
  };
  const NodeValue& node(int level, std::size_t index, const UnitNode& n) const;

  OperatorParams params_;
  Side side_;
  QuadratureOptions opts_;
  KernelF kernel_;
  // u-exponent without the test-function power: nu(h+1)-1 for I and
  // delta + nu(h+1) - 2 for J.
  Complex base_exponent_;
  Complex prefactor_;  // nu / Gamma(mu)
  mutable std::vector<std::unique_ptr<std::once_flag>> level_once_;
  mutable std::vector<std::vector<NodeValue>> cache_;
  mutable std::atomic<long> evaluations_{0};
};

Complex eval_I(const OperatorParams& params, const TestFunction& phi, double x, const QuadratureOptions& opts = {});
Complex eval_J(const OperatorParams& params, const TestFunction& phi, double x, const QuadratureOptions& opts = {});
Complex eval_I(const OperatorParams& params, const TestFunctionSum& phi, double x,
               const QuadratureOptions& opts = {});
Complex eval_J(const OperatorParams& params, const TestFunctionSum& phi, double x,
               const QuadratureOptions& opts = {});

// H^{3,0}_{2,3} of the first kernel for term k.
HFunctionSpec ki_h_spec(const OperatorParams& params, Complex lambda, unsigned k);
// H^{1,2}_{2,3} of the second kernel for term k, and its 2Psi2 form.
HFunctionSpec kj_h_spec(const OperatorParams& params, Complex lambda, unsigned k);
FoxWrightSpec kj_fox_wright_spec(const OperatorParams& params, Complex lambda, unsigned k);

// Laplace kernels. The second kernel uses the 2Psi2 series for |s x| <= the
// threshold and the contour integral beyond it, where the series cancels.
inline constexpr double kKJSeriesThreshold = 5.0;

Complex kernel_KI(const OperatorParams& params, Complex lambda, Complex s, double x,
                  const ContourConfig& contour = {});
Complex kernel_KJ(const OperatorParams& params, Complex lambda, Complex s, double x);
// x^{extra_power} K(s, x), formed as one power of x.
Complex weighted_kernel_KI(const OperatorParams& params, Complex lambda, Complex s, double x, Complex extra_power,
                           const ContourConfig& contour = {});
Complex weighted_kernel_KJ(const OperatorParams& params, Complex lambda, Complex s, double x, Complex extra_power);

// Throws ConditionError unless condition (first kernel) and Re s > 0 hold.
void check_kernel_KI(const OperatorParams& params, Complex lambda, Complex s);
void check_kernel_KJ(const OperatorParams& params, Complex lambda, Complex s);

enum class ClassicalKind { RiemannLiouville };

// Riemann-Liouville: r = 0, a = b = 0, nu = 1, h = 0, delta = -mu, so that
// I phi(x) = (1/Gamma(mu)) int_0^x (x-s)^{mu-1} phi(s) ds.
OperatorParams classical_reduction(ClassicalKind kind, Complex mu);

}  // namespace fraclap
