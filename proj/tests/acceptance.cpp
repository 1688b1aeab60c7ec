#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fraclap/combinatorics.hpp"
#include "fraclap/error.hpp"
#include "fraclap/laplace.hpp"
#include "fraclap/mellin.hpp"
#include "fraclap/operators.hpp"
#include "generators.hpp"

using namespace fraclap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s | %s | %.1f s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), dt);
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome power_image_equivalence() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(42);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto P = gen::random_params(rng);
    Complex li = gen::lambda_for_c(rng, P, true);
    Complex lj = gen::lambda_for_c(rng, P, false);
    auto ii = power_image_I(P, li);
    auto jj = power_image_J(P, lj);
    OperatorEvaluator I(P, Side::I), J(P, Side::J);
    for (double x : {0.5, 1.0, 2.0}) {
      double lx = std::log(x);
      worst = std::max(worst, rel(I(TestFunction{1.0, li, 0.0}, x), ii.coefficient * std::exp(ii.exponent * lx)));
      worst = std::max(worst, rel(J(TestFunction{1.0, lj, 0.0}, x), jj.coefficient * std::exp(jj.exponent * lx)));
    }
  }
  double dt = seconds_since(t0);
  return {worst <= 1e-8 && dt < 60.0, "max rel err " + fmt("%.2e", worst) + " (tol 1e-8), runtime " + fmt("%.1f", dt) +
                                          " s (limit 60 s)"};
}

Outcome theorem_identity(TheoremSide side) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(side == TheoremSide::I_side ? 42 : 43);
  const Complex grid[] = {Complex(0.5, 0.0), Complex(1.2, 0.5), Complex(2.5, -0.5), Complex(4.0, 0.0)};
  double worst = 0.0;
  int count = 0;
  for (int i = 0; i < 10; ++i) {
    auto q = gen::random_query(rng, side);
    for (Complex s : grid) {
      q.s = s;
      worst = std::max(worst, verify_theorem(q).rel_err);
      ++count;
    }
  }
  double dt = seconds_since(t0);
  return {worst <= 1e-5 && dt < 300.0, std::to_string(count) + " (query, s) pairs, max rel err " + fmt("%.2e", worst) +
                                           " (tol 1e-5), runtime " + fmt("%.1f", dt) + " s (limit 300 s)"};
}

Outcome kernel_duality() {
  std::mt19937_64 rng(42);
  double worst = 0.0;
  int sets = 0;
  while (sets < 3) {
    auto P = gen::random_params(rng);
    Complex lambda = gen::lambda_for_c(rng, P, false);
    if (!(P.c1(lambda).real() > gen::condition_threshold(P) + 0.1)) continue;
    ++sets;
    OperatorEvaluator I(P, Side::I), J(P, Side::J);
    for (Complex s : {Complex(0.5), Complex(1.0, 0.5), Complex(2.0), Complex(3.0, -1.0), Complex(4.0)})
      for (double x : {0.1, 0.5, 1.0, 3.0, 8.0}) {
        TestFunction phi{1.0, lambda, s};
        worst = std::max(worst, rel(kernel_KI(P, lambda, s, x), J(phi, x)));
        worst = std::max(worst, rel(kernel_KJ(P, lambda, s, x), I(phi, x)));
      }
  }
  return {worst <= 1e-6, "3 parameter sets x 5x5 (s, x) grid, max rel err " + fmt("%.2e", worst) + " (tol 1e-6)"};
}

Outcome fox_wright_reduction() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> R(0.2, 6.0), A(-1.2, 1.2);
  double worst = 0.0;
  bool exact_zero = true;
  for (int i = 0; i < 20; ++i) {
    auto P = gen::random_params(rng);
    Complex lambda = gen::lambda_for_c(rng, P, true);
    unsigned k = static_cast<unsigned>(i) % (P.m() + 1);
    auto fw = kj_fox_wright_spec(P, lambda, k);
    exact_zero = exact_zero && fw.delta_prime() == 0.0;
    auto red = reduce_h_to_fox_wright(kj_h_spec(P, lambda, k));
    exact_zero = exact_zero && red.spec.delta_prime() == 0.0;
    Complex z = std::polar(R(rng), A(rng));
    worst = std::max(worst, rel(h_function(kj_h_spec(P, lambda, k), z), fox_wright(fw, red.argument_sign * z)));
  }
  return {worst <= 1e-8 && exact_zero, "20 z values, max rel err " + fmt("%.2e", worst) +
                                           " (tol 1e-8); Delta' exactly 0: " + (exact_zero ? "yes" : "no")};
}

Outcome index_identities() {
  std::mt19937_64 rng(42);
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    auto P = gen::random_params(rng);
    Complex lambda = gen::lambda_for_c(rng, P, false);
    for (unsigned k = 0; k <= P.m(); ++k) {
      auto ix = h_indices(ki_h_spec(P, lambda, k));
      for (double v : {ix.delta_cap, ix.a_star, ix.a1_star, ix.delta_star}) worst = std::max(worst, std::abs(v - 1.0));
      worst = std::max(worst, std::abs(ix.mu_star - (-P.mu - double(k) - 0.5)));
      ++checked;
    }
  }
  return {worst <= 1e-15, std::to_string(checked) + " (tuple, k) pairs, max abs deviation " + fmt("%.2e", worst) +
                              " (tol 1e-15)"};
}

Outcome riemann_liouville() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> Pd(-0.6, 3.0), Md(0.2, 2.5);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    double p = Pd(rng), mu = Md(rng), x = 1.7;
    auto P = classical_reduction(ClassicalKind::RiemannLiouville, mu);
    double want = std::exp(std::lgamma(p + 1.0) - std::lgamma(p + mu + 1.0)) * std::pow(x, p + mu);
    worst = std::max(worst, rel(eval_I(P, TestFunction{1.0, p, 0.0}, x), want));
  }
  double semi = 0.0;
  for (int i = 0; i < 5; ++i) {
    double mu1 = Md(rng), mu2 = Md(rng), p = Pd(rng), x = 1.3;
    auto inner = power_image_I(classical_reduction(ClassicalKind::RiemannLiouville, mu2), p);
    Complex composed = eval_I(classical_reduction(ClassicalKind::RiemannLiouville, mu1),
                              TestFunction{inner.coefficient, inner.exponent, 0.0}, x);
    auto direct = power_image_I(classical_reduction(ClassicalKind::RiemannLiouville, mu1 + mu2), p);
    semi = std::max(semi, rel(composed, direct.coefficient * std::exp(direct.exponent * std::log(x))));
  }
  return {worst <= 1e-10 && semi <= 1e-8, "power images max rel err " + fmt("%.2e", worst) +
                                              " (tol 1e-10), semigroup max rel err " + fmt("%.2e", semi) +
                                              " (tol 1e-8)"};
}

Outcome asymptotics() {
  std::string detail;
  bool pass = true;
  auto note = [&](const std::string& name, bool ok, const std::string& s) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += name + (ok ? " ok " : " MISS ") + s;
  };

  auto P_I = OperatorParams::make(0.8, 0.1, 0.3, 0.2, 1.0, 2.0);
  auto P_J = OperatorParams::make(0.8, 0.1, 0.3, 0.2, 1.0, 0.5);
  auto P_Ic = OperatorParams::make(Complex(1.1, 0.2), 0.3, 0.2, 0.6, 1.5, Complex(0.8, 0.1), {1.2}, {1});
  const Complex lambda_I = 0.5, lambda_J = 1.0, lambda_Ic(0.4, 0.2);

  double zero_dev = 0.0;
  for (double s : {1.0, 2.0, 4.0}) {
    for (auto [P, lam, which] : {std::tuple{P_I, lambda_I, Kernel::KI}, std::tuple{P_Ic, lambda_Ic, Kernel::KI},
                                  std::tuple{P_J, lambda_J, Kernel::KJ}}) {
      auto est = probe_asymptotics(P, lam, s, which, Regime::ZeroPlus);
      zero_dev = std::max(zero_dev, std::abs(est.fitted_rate - (lam - P.delta).real()));
    }
  }
  note("zero-plus slopes", zero_dev <= 0.02, "max |fit - Re(lambda-delta)| " + fmt("%.4f", zero_dev) + " (tol 0.02)");

  double exp_dev = 0.0;
  for (double s : {1.0, 2.0, 4.0})
    for (auto [P, lam] : {std::pair{P_I, lambda_I}, std::pair{P_Ic, lambda_Ic}}) {
      auto est = probe_asymptotics(P, lam, s, Kernel::KI, Regime::Infinity);
      exp_dev = std::max(exp_dev, std::abs(est.fitted_rate + s) / s);
    }
  note("K_I exponential rate", exp_dev <= 0.01, "max rel deviation from -Re s " + fmt("%.4f", exp_dev) + " (tol 1%)");

  double inf_dev = 0.0;
  std::string rates;
  for (double s : {1.0, 2.0, 4.0}) {
    auto est = probe_asymptotics(P_J, lambda_J, s, Kernel::KJ, Regime::Infinity);
    inf_dev = std::max(inf_dev, std::abs(est.fitted_rate - est.target_rate));
    if (rates.empty())
      rates = "fitted " + fmt("%.4f", est.fitted_rate) + ", target " + fmt("%.4f", est.target_rate) + ", expected " +
              fmt("%.4f", est.expected_rate);
  }
  note("K_J power rate at infinity", inf_dev <= 0.02,
       "max |fit - Re(lambda-delta)| " + fmt("%.4f", inf_dev) + " (tol 0.02; " + rates + ")");
  return {pass, detail};
}

Outcome combinatorics() {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> nr(0, 3), nm(0, 3);
  std::uniform_real_distribution<double> fv(-3.0, 3.0);
  double worst = 0.0;
  bool leading_exact = true;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> f;
    std::vector<unsigned> m;
    int r = nr(rng);
    for (int i = 0; i < r; ++i) {
      f.emplace_back(fv(rng), fv(rng));
      m.push_back(static_cast<unsigned>(nm(rng)));
    }
    auto t = build_coefficient_table(f, m);
    Complex a0 = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i) a0 *= pochhammer(f[i], m[i]);
    worst = std::max(worst, std::abs(t.a_coeffs[0] - a0) / std::max(1.0, std::abs(a0)));
    leading_exact = leading_exact && t.a_coeffs[t.m] == Complex(1.0);
  }
  std::vector<std::vector<std::uint64_t>> s(13, std::vector<std::uint64_t>(13, 0));
  s[0][0] = 1;
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  bool stirling_exact = true;
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= 12; ++k) stirling_exact = stirling_exact && stirling2(n, k) == s[n][k];
  return {worst <= 1e-12 && leading_exact && stirling_exact,
          "A_0 max rel err " + fmt("%.2e", worst) + " (tol 1e-12), A_m == 1: " + (leading_exact ? "yes" : "no") +
              ", Stirling n <= 12 exact: " + (stirling_exact ? "yes" : "no")};
}

Outcome mellin_sanity() {
  HFunctionSpec exp_spec{1, 0, {}, {{0.0, 1.0}}};
  double worst = 0.0, shift = 0.0;
  for (double z : {0.5, 1.0, 2.0, 5.0}) {
    worst = std::max(worst, rel(h_function(exp_spec, z), std::exp(-z)));
    Complex ref;
    bool first = true;
    for (double c : {0.3, 1.0, 2.5}) {
      ContourConfig cc;
      cc.c = c;
      Complex v = h_function(exp_spec, z, cc);
      if (first)
        ref = v, first = false;
      else
        shift = std::max(shift, rel(v, ref));
    }
  }
  return {worst <= 1e-10 && shift <= 1e-10, "exp spec max rel err " + fmt("%.2e", worst) +
                                                " (tol 1e-10), contour shift max rel diff " + fmt("%.2e", shift) +
                                                " (tol 1e-10)"};
}

}  // namespace

int main() {
  report(1, "power-image closed forms vs quadrature", power_image_equivalence);
  report(2, "Laplace identity for the first operator", [] { return theorem_identity(TheoremSide::I_side); });
  report(3, "Laplace identity for the second operator", [] { return theorem_identity(TheoremSide::J_side); });
  report(4, "kernel duality", kernel_duality);
  report(5, "H to Fox-Wright reduction", fox_wright_reduction);
  report(6, "first-kernel H-function indices", index_identities);
  report(7, "Riemann-Liouville reduction", riemann_liouville);
  report(8, "kernel asymptotics", asymptotics);
  report(9, "combinatorics exactness", combinatorics);
  report(10, "Mellin-Barnes sanity", mellin_sanity);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
