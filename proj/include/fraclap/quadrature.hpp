#pragma once

#include <functional>
#include <vector>

#include "fraclap/numerics.hpp"

namespace fraclap {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  int min_level = 4;
  int max_level = 10;
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  int level = 0;
};

// One abscissa of the tanh-sinh rule on (0, 1). v = 1 - u is stored
// separately because it underflows long before 1 - u would round to zero.
struct UnitNode {
  double u;
  double v;
  double weight;  // du/dt, multiply by the level step
};

// Tanh-sinh nodes u = 1/(1 + exp(-pi sinh t)), |t| <= 6. Level 0 uses the
// integer t; level L > 0 adds the odd multiples of 2^-L. The table is
// built once and shared.
class TanhSinhTable {
 public:
  static constexpr int kMaxLevel = 12;
  static const TanhSinhTable& instance();

  const std::vector<UnitNode>& level(int L) const { return levels_.at(static_cast<std::size_t>(L)); }
  static double step(int L) { return 1.0 / double(1L << L); }

 private:
  TanhSinhTable();
  std::vector<std::vector<UnitNode>> levels_;
};

// f(u, 1 - u) integrated over (0, 1).
using UnitIntegrand = std::function<Complex(double, double)>;
QuadratureResult tanh_sinh(const UnitIntegrand& f, const QuadratureOptions& opts = {});

// Same, but f receives the index of the node within its level so callers can
// cache node-dependent factors: f(level, index, node).
using IndexedIntegrand = std::function<Complex(int, std::size_t, const UnitNode&)>;
QuadratureResult tanh_sinh_indexed(const IndexedIntegrand& f, const QuadratureOptions& opts = {});

// Integral of f over (1, inf) for integrands decaying like exp(-rate x),
// via x = 1 + w/rate and an exp-sinh rule in w. Nodes with w > w_max are
// dropped.
using RealIntegrand = std::function<Complex(double)>;
QuadratureResult exp_sinh_tail(const RealIntegrand& f, double rate, const QuadratureOptions& opts = {},
                               double w_max = 90.0);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule with n points, computed by Newton iteration and cached
// for the sizes used internally (16, 32).
const GaussRule& gauss_legendre(int n);

}  // namespace fraclap
