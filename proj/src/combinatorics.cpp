#include "fraclap/combinatorics.hpp"

#include <array>
#include <string>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

struct StirlingTriangle {
  // value[n][k]; overflowed[n][k] marks entries that left uint64.
  std::array<std::array<std::uint64_t, kMaxStirlingN + 1>, kMaxStirlingN + 1> value{};
  std::array<std::array<bool, kMaxStirlingN + 1>, kMaxStirlingN + 1> overflowed{};

  StirlingTriangle() {
    value[0][0] = 1;
    for (unsigned n = 1; n <= kMaxStirlingN; ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        bool of = overflowed[n - 1][k] || overflowed[n - 1][k - 1];
        std::uint64_t prod = 0, sum = 0;
        of = of || __builtin_mul_overflow(std::uint64_t(k), value[n - 1][k], &prod);
        of = of || __builtin_add_overflow(prod, value[n - 1][k - 1], &sum);
        overflowed[n][k] = of;
        value[n][k] = of ? 0 : sum;
      }
    }
  }
};

const StirlingTriangle& triangle() {
  static const StirlingTriangle t;
  return t;
}

}  // namespace

std::uint64_t stirling2(unsigned n, unsigned k) {
  if (n > kMaxStirlingN || k > kMaxStirlingN)
    throw ValidationError("stirling2: n and k must not exceed " + std::to_string(kMaxStirlingN));
  if (k > n) return 0;
  const auto& t = triangle();
  if (t.overflowed[n][k])
    throw OverflowError("stirling2: {" + std::to_string(n) + " brace " + std::to_string(k) +
                        "} exceeds 64-bit range");
  return t.value[n][k];
}

std::vector<Complex> sigma_coefficients(const std::vector<Complex>& f_values,
                                        const std::vector<unsigned>& multiplicities) {
  if (f_values.size() != multiplicities.size())
    throw ValidationError("sigma_coefficients: f and m lists differ in length");
  // poly[j] = coefficient of x^j
  std::vector<Complex> poly{Complex(1.0, 0.0)};
  for (std::size_t i = 0; i < f_values.size(); ++i) {
    for (unsigned l = 0; l < multiplicities[i]; ++l) {
      Complex root = f_values[i] + double(l);
      std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += root * poly[j];
        next[j + 1] += poly[j];
      }
      poly = std::move(next);
    }
  }
  std::size_t m = poly.size() - 1;
  std::vector<Complex> sigma(m + 1);
  for (std::size_t i = 0; i <= m; ++i) sigma[i] = poly[m - i];
  return sigma;
}

CoefficientTable build_coefficient_table(const std::vector<Complex>& f_values,
                                         const std::vector<unsigned>& multiplicities) {
  CoefficientTable t;
  t.f_values = f_values;
  t.multiplicities = multiplicities;
  t.sigma = sigma_coefficients(f_values, multiplicities);
  std::size_t msz = t.sigma.size() - 1;
  if (msz > kMaxStirlingN) throw ValidationError("build_coefficient_table: total multiplicity exceeds 64");
  t.m = static_cast<unsigned>(msz);
  t.a_coeffs.assign(msz + 1, Complex(0.0, 0.0));
  for (unsigned k = 0; k <= t.m; ++k) {
    Complex acc = 0.0;
    for (unsigned j = k; j <= t.m; ++j) acc += double(stirling2(j, k)) * t.sigma[t.m - j];
    t.a_coeffs[k] = acc;
  }
  return t;
}

}  // namespace fraclap
