#pragma once

#include <cstdint>
#include <vector>

#include "fraclap/numerics.hpp"

namespace fraclap {

inline constexpr unsigned kMaxStirlingN = 64;

/// Stirling number of the second kind {n brace k}, n, k <= 64.
/// Throws OverflowError when the value does not fit in 64 bits.
std::uint64_t stirling2(unsigned n, unsigned k);

/// sigma_0..sigma_m where sigma_{m-j} is the coefficient of x^j in
/// prod_i (f_i + x)_{m_i}.
std::vector<Complex> sigma_coefficients(const std::vector<Complex>& f_values,
                                        const std::vector<unsigned>& multiplicities);

struct CoefficientTable {
  std::vector<Complex> f_values;
  std::vector<unsigned> multiplicities;
  unsigned m = 0;
  std::vector<Complex> sigma;     // sigma_0..sigma_m
  std::vector<Complex> a_coeffs;  // A_0..A_m
};

/// A_k = sum_{j=k}^m {j brace k} sigma_{m-j}.
CoefficientTable build_coefficient_table(const std::vector<Complex>& f_values,
                                         const std::vector<unsigned>& multiplicities);

}  // namespace fraclap
