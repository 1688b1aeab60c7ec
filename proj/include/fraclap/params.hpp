#pragma once

#include <vector>

#include "fraclap/combinatorics.hpp"
#include "fraclap/numerics.hpp"

namespace fraclap {

// Parameters of the operator pair I/J together with the coefficient table
// A_k. Build with make(); a constructed value is immutable in practice and
// safe to share between threads.
struct OperatorParams {
  Complex mu{1.0, 0.0};
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double h = 0.0;
  double nu = 1.0;
  Complex delta{0.0, 0.0};
  std::vector<Complex> f_values;
  std::vector<unsigned> multiplicities;
  CoefficientTable table;

  // Validates and fills the table. h = 0 is accepted (the Riemann-Liouville
  // case needs it) even though the operators are usually stated for h > 0.
  static OperatorParams make(Complex mu, Complex a, Complex b, double h, double nu, Complex delta,
                             std::vector<Complex> f_values = {}, std::vector<unsigned> multiplicities = {});

  void validate() const;

  unsigned m() const { return table.m; }
  Complex c1(Complex t) const { return 1.0 + h + t / nu; }
  Complex c2(Complex t) const { return c1(delta - 1.0) - t / nu; }
  Complex p(unsigned k) const { return mu - a - b - double(k); }

  // (A_k/A_0) (a)_k (b)_k, the weight of term k in every finite sum.
  Complex term_weight(unsigned k) const;
};

}  // namespace fraclap
