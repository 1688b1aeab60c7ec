#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fraclap/numerics.hpp"

namespace fraclap {

struct ParamPair {
  Complex value;
  double scale;
};

// H^{m,n}_{p,q}[z | (a_i, A_i)_{1..p}; (b_j, B_j)_{1..q}]; p and q are the
// list lengths.
struct HFunctionSpec {
  unsigned m = 0;
  unsigned n = 0;
  std::vector<ParamPair> upper;
  std::vector<ParamPair> lower;

  std::size_t p() const { return upper.size(); }
  std::size_t q() const { return lower.size(); }
  void validate() const;
};

struct HIndices {
  double a_star = 0.0;
  double delta_cap = 0.0;   // Delta
  double delta_star = 0.0;
  Complex mu_star{0.0, 0.0};
  double a1_star = 0.0;
};

HIndices h_indices(const HFunctionSpec& spec);

struct ContourConfig {
  // Abscissa of the contour where it crosses the real axis. When empty it is
  // chosen by minimising |integrand| over the separation window.
  std::optional<double> c;
  // Integration continues at least to this height before the tail test.
  double height = 8.0;
  // Gauss-Legendre points per panel (an order-16 rule gives the error
  // estimate for adaptive bisection).
  int nodes = 32;
  double panel_height = 4.0;
  double max_height = 5120.0;
  double rel_tol = 1e-13;
  // When |z| < 1 and the integrand decays to the left (Delta > 0), replace
  // the vertical line by two rays c + t exp(+-i(pi/2 + angle)), t >= 0.
  // The oscillation of z^{-s} then stays bounded however small |z| is.
  bool bend = true;
  double bend_angle = 0.7853981633974483;
};

struct HResult {
  Complex value{0.0, 0.0};
  double c = 0.0;
  double angle = 0.0;  // tilt of the rays from the vertical
  double height = 0.0;
  long evaluations = 0;
};

// Open interval (c_L, c_R) of abscissas separating the left poles
// Gamma(b_j + B_j s), j <= m, from the right poles Gamma(1 - a_i - A_i s),
// i <= n. Infinite ends when a family is empty. Throws DomainError when the
// families overlap.
std::pair<double, double> separation_window(const HFunctionSpec& spec);

HResult h_function_detailed(const HFunctionSpec& spec, Complex z, const ContourConfig& contour = {});
Complex h_function(const HFunctionSpec& spec, Complex z, const ContourConfig& contour = {});

// log of the Mellin-Barnes integrand ratio Theta(s) (without z^{-s}).
// Returns -inf real part when a denominator gamma sits on a pole.
Complex h_log_theta(const HFunctionSpec& spec, Complex s);

struct FoxWrightSpec {
  std::vector<ParamPair> upper;
  std::vector<ParamPair> lower;
  double delta_prime() const;
};

// Throws DomainError when Delta' <= -1 and PoleError when any Gamma
// argument, upper or lower, lands on a pole at a summed k.
Complex fox_wright(const FoxWrightSpec& spec, Complex z);

struct FoxWrightReduction {
  FoxWrightSpec spec;
  // H(z) = pPsi_q(argument_sign * z); always -1 for this reduction.
  double argument_sign = -1.0;
};

// H^{1,p}_{p,q+1}[(1-a_i, alpha_i); (0,1), (1-b_j, beta_j)] -> pPsi_q.
FoxWrightReduction reduce_h_to_fox_wright(const HFunctionSpec& spec);

}  // namespace fraclap
