#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "fraclap/params.hpp"

namespace fraclap::cli {

struct GridSpec {
  double start = 1.0;
  double stop = 1.0;
  int count = 1;
  std::string spacing = "linear";  // linear | geometric

  std::vector<double> points() const;
};

struct RunConfig {
  std::string command;
  Complex mu{1.0, 0.0};
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double h = 0.0;
  double nu = 1.0;
  Complex delta{0.0, 0.0};
  std::vector<Complex> f;
  std::vector<unsigned> m;
  Complex lambda{0.0, 0.0};
  std::vector<Complex> s{Complex(1.0, 0.0)};
  std::string side = "I";       // I | J
  std::string which = "KI";     // KI | KJ
  std::string regime = "both";  // zero | inf | both
  GridSpec x;
  Complex phi_c{1.0, 0.0};
  Complex phi_p{0.0, 0.0};
  Complex phi_q{1.0, 0.0};
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::string out;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  // Throws ValidationError naming the offending field.
  void validate() const;
  OperatorParams params() const;
};

// "1.5", "-2e-3", "0.25i", "1.5-0.2i".
Complex parse_complex(const std::string& text, const std::string& field);

// Worker count from FRACLAP_THREADS; 0 or unset means hardware concurrency.
unsigned worker_count();

// Exit status: 0 success, 2 invalid input or violated condition, 3 numerical
// failure, 1 anything else (I/O).
int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fraclap::cli
