#include "fraclap/numerics.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoef = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

[[noreturn]] void throw_pole(const char* what, Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": argument " << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
     << "i is a pole of Gamma";
  throw PoleError(os.str());
}

// sin(pi x) and cos(pi x) with exact argument reduction.
double sinpi_real(double x) {
  double r = std::fmod(x, 2.0);  // exact
  if (r < 0) r += 2.0;
  if (r > 1.0) return -sinpi_real(r - 1.0);
  if (r > 0.5) r = 1.0 - r;
  return std::sin(kPi * r);
}

double cospi_real(double x) { return sinpi_real(x + 0.5); }

Complex lanczos_log_gamma(Complex z) {
  Complex x = z - 1.0;
  Complex acc = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) acc += kLanczosCoef[i] / (x + double(i));
  Complex t = x + kLanczosG + 0.5;
  return kHalfLog2Pi + (x + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

std::optional<long> nonpositive_integer_index(Complex z) {
  double n = std::round(z.real());
  if (n > 0.0) return std::nullopt;
  if (std::abs(z - Complex(n, 0.0)) > kPoleTolerance) return std::nullopt;
  return static_cast<long>(-n);
}

Complex log_sinpi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double sp = sinpi_real(x);
  double cp = cospi_real(x);
  // At half-integers take the limit from the right, which is the side the
  // floor() branch term in log_gamma rounds to.
  if (cp == 0.0) cp = std::copysign(0.0, -sp);
  const double py = kPi * std::abs(y);
  if (py > 350.0) {
    // cosh ~ sinh ~ e^{py}/2; anything else is lost to rounding.
    double logmod = py - std::log(2.0);
    double arg = std::atan2(cp * (y > 0 ? 1.0 : -1.0), sp);
    return {logmod, arg};
  }
  Complex s(sp * std::cosh(kPi * y), cp * std::sinh(kPi * y));
  return std::log(s);
}

Complex cotpi(Complex z) {
  double x = z.real();
  double y = z.imag();
  x -= std::round(x);  // cot has period 1
  if (std::abs(y) < 20.0) {
    Complex w(x, y);
    w *= kPi;
    return std::cos(w) / std::sin(w);
  }
  // |e^{2 pi i z}| = e^{-2 pi |y|} is tiny here.
  bool flip = y < 0.0;
  Complex zz(x, std::abs(y));
  Complex w = std::exp(Complex(0.0, 2.0 * kPi) * zz);
  Complex c = Complex(0.0, -1.0) * (1.0 + w) / (1.0 - w);
  return flip ? std::conj(c) : c;
}

Complex log_gamma(Complex z) {
  if (is_gamma_pole(z)) throw_pole("log_gamma", z);
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::lgamma(z.real()), 0.0};
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection. The floor term selects the branch that keeps the result
  // continuous away from the negative real axis.
  double im_sign = std::copysign(1.0, z.imag());
  double k = std::floor(0.5 * z.real() + 0.25);
  Complex correction(0.0, 2.0 * kPi * im_sign * k);
  return kLogPi + correction - log_sinpi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
  if (is_gamma_pole(z)) throw_pole("gamma", z);
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0) return {std::tgamma(z.real()), 0.0};
  return std::exp(log_gamma(z));
}

Complex rgamma(Complex z) {
  if (is_gamma_pole(z)) return {0.0, 0.0};
  return std::exp(-log_gamma(z));
}

Complex digamma(Complex z) {
  if (is_gamma_pole(z)) throw_pole("digamma", z);
  if (z.real() < 0.5) return digamma(1.0 - z) - kPi * cotpi(z);
  Complex shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  static constexpr std::array<double, 8> kB2n = {1.0 / 6,   -1.0 / 30,  1.0 / 42,      -1.0 / 30,
                                                  5.0 / 66,  -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  Complex inv2 = 1.0 / (z * z);
  Complex pow = inv2;
  Complex series = 0.0;
  for (std::size_t n = 1; n <= kB2n.size(); ++n) {
    series += kB2n[n - 1] / double(2 * n) * pow;
    pow *= inv2;
  }
  return shift + std::log(z) - 0.5 / z - series;
}

Complex pochhammer(Complex a, unsigned k) {
  if (k == 0) return {1.0, 0.0};
  if (k <= 64) {
    Complex p = a;
    for (unsigned i = 1; i < k; ++i) p *= a + double(i);
    return p;
  }
  if (auto n = nonpositive_integer_index(a)) {
    if (static_cast<unsigned long>(*n) < k) return {0.0, 0.0};
    // (-n)_k = (-1)^k n!/(n-k)!
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    double lg = std::lgamma(double(*n) + 1.0) - std::lgamma(double(*n - long(k)) + 1.0);
    return {sign * std::exp(lg), 0.0};
  }
  return std::exp(log_gamma(a + double(k)) - log_gamma(a));
}

Complex gamma_ratio(const GammaRatioSpec& spec) {
  for (const auto& z : spec.numerator_args)
    if (is_gamma_pole(z)) throw_pole("gamma_ratio numerator", z);
  for (const auto& z : spec.denominator_args)
    if (is_gamma_pole(z)) return {0.0, 0.0};
  Complex acc = 0.0;
  for (const auto& z : spec.numerator_args) acc += log_gamma(z);
  for (const auto& z : spec.denominator_args) acc -= log_gamma(z);
  return std::exp(acc);
}

void CompensatedSum::add(double v) {
  double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    comp_ += (sum_ - t) + v;
  else
    comp_ += (v - t) + sum_;
  sum_ = t;
}

}  // namespace fraclap
