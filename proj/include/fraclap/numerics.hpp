#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace fraclap {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Absolute distance below which an argument is treated as sitting on a
// Gamma pole {0, -1, -2, ...}.
inline constexpr double kPoleTolerance = 1e-14;

// Returns the pole index n >= 0 when z is within kPoleTolerance of -n.
std::optional<long> nonpositive_integer_index(Complex z);

inline bool is_gamma_pole(Complex z) { return nonpositive_integer_index(z).has_value(); }

/// Principal branch of log Gamma(z): analytic on C minus (-inf, 0], real on
/// the positive axis. Lanczos (g = 607/128, 15 terms) for Re z >= 0.5 and the
/// reflection formula with a branch correction below that.
/// Throws PoleError when z is a nonpositive integer.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)). Throws PoleError at the poles.
Complex gamma(Complex z);

/// 1/Gamma(z); exactly zero at the poles.
Complex rgamma(Complex z);

/// Digamma psi(z) = Gamma'(z)/Gamma(z). Throws PoleError at the poles.
Complex digamma(Complex z);

/// Principal log of sin(pi z), stable for large |Im z|.
Complex log_sinpi(Complex z);

/// cot(pi z), stable for large |Im z|.
Complex cotpi(Complex z);

/// Rising factorial (a)_k. For k <= 64 it is an explicit product so that a
/// nonpositive-integer a gives an exact zero. (a)_0 = 1 for every a,
/// including a = 0, which the usual textbook convention leaves undefined.
Complex pochhammer(Complex a, unsigned k);

struct GammaRatioSpec {
  std::vector<Complex> numerator_args;
  std::vector<Complex> denominator_args;
};

/// prod Gamma(num) / prod Gamma(den), evaluated in log space.
/// Exact 0 when a denominator argument is a pole; PoleError when a
/// numerator argument is.
Complex gamma_ratio(const GammaRatioSpec& spec);

// Neumaier-compensated sum; used where closed-form identities between
// parameter sums must survive rounding.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fraclap
