#include "fraclap/params.hpp"

#include <cmath>
#include <sstream>

#include "fraclap/error.hpp"

namespace fraclap {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

OperatorParams OperatorParams::make(Complex mu, Complex a, Complex b, double h, double nu, Complex delta,
                                    std::vector<Complex> f_values, std::vector<unsigned> multiplicities) {
  OperatorParams p;
  p.mu = mu;
  p.a = a;
  p.b = b;
  p.h = h;
  p.nu = nu;
  p.delta = delta;
  p.f_values = std::move(f_values);
  p.multiplicities = std::move(multiplicities);
  if (p.f_values.size() != p.multiplicities.size())
    throw ValidationError("f and m must have the same length (got " + std::to_string(p.f_values.size()) +
                          " and " + std::to_string(p.multiplicities.size()) + ")");
  p.table = build_coefficient_table(p.f_values, p.multiplicities);
  p.validate();
  return p;
}

void OperatorParams::validate() const {
  if (!finite(mu) || !finite(a) || !finite(b) || !finite(delta) || !std::isfinite(h) || !std::isfinite(nu))
    throw ValidationError("operator parameters must be finite");
  for (const auto& f : f_values)
    if (!finite(f)) throw ValidationError("f values must be finite");
  if (!(nu > 0.0)) throw ValidationError("nu must be strictly positive (nu > 0), got " + std::to_string(nu));
  if (!(h >= 0.0)) throw ValidationError("h must be nonnegative, got " + std::to_string(h));
  if (!(mu.real() > 0.0))
    throw ValidationError("Re(mu) must be strictly positive, got " + std::to_string(mu.real()));
  if (f_values.size() != multiplicities.size()) throw ValidationError("f and m must have the same length");
  if (table.a_coeffs.size() != table.m + 1) throw ValidationError("coefficient table is inconsistent");
  if (std::abs(table.a_coeffs[0]) == 0.0)
    throw ValidationError("A_0 = prod (f_i)_{m_i} vanishes; some f_i is a nonpositive integer with m_i too large");
}

Complex OperatorParams::term_weight(unsigned k) const {
  return table.a_coeffs.at(k) / table.a_coeffs[0] * pochhammer(a, k) * pochhammer(b, k);
}

}  // namespace fraclap
