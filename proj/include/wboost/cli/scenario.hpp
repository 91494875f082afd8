#pragma once

// Sweep scenario files: flat `key = value` lines, `#` starts a comment.
//
//   two_s       = 1                      required
//   omega       = <real>                 either omega ...
//   eta, xi     = <real>                 ... or both rapidity magnitudes
//   eta_direction, xi_direction = x, y, z   defaults 0,0,1 and 1,0,0
//   state       = param_a | param_b | coefficients | fixture
//   theta, phi  = <real>                 param_a / param_b angles
//   m, n        = <int>                  param_b labels
//   coefficient = m, alpha, (re,im)      repeatable, state = coefficients
//   fixture     = <name>                 state = fixture
//   method      = closed_form | brute_force
//   output      = <path>
//   format      = csv | json
//
// Reals accept plain numbers or multiples of pi: `pi`, `-pi/2`, `3*pi/8`.
// omega, eta, xi, theta and phi may also be ranges `start:stop:count`;
// range-valued keys become sweep axes in the order they appear.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wboost/errors.hpp"
#include "wboost/invariants.hpp"

namespace wboost::cli {

class ScenarioError : public InputError {
 public:
  using InputError::InputError;
};

/// A scalar or an evenly spaced inclusive range.
struct ParamValue {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool is_range = false;

  static ParamValue scalar(double v) { return {v, v, 1, false}; }
  std::vector<double> values() const;
};

enum class StateKind { ParamA, ParamB, Coefficients, Fixture };
enum class Method { ClosedForm, BruteForce };
enum class OutputFormat { Csv, Json };

struct Scenario {
  Spin spin{1};
  std::optional<ParamValue> omega;
  std::optional<ParamValue> eta;
  std::optional<ParamValue> xi;
  Vec3 eta_direction = Vec3::UnitZ();
  Vec3 xi_direction = Vec3::UnitX();

  StateKind state = StateKind::ParamA;
  ParamValue theta;
  ParamValue phi;
  int m = 0;
  int n = 0;
  CoefficientSet coefficients;
  std::string fixture;

  Method method = Method::ClosedForm;
  std::string output;
  OutputFormat format = OutputFormat::Csv;

  /// Names of range-valued keys in declaration order.
  std::vector<std::string> axes;

  /// Wigner rotation axis of the scenario geometry (canonical sign).
  Vec3 wigner_axis() const;
};

/// Parses and validates. Errors carry `source:line` and the field name.
/// Near-normalized coefficient lists are renormalized with a note on `warnings`.
Scenario parse_scenario(std::istream& in, const std::string& source, std::ostream& warnings);

Scenario load_scenario(const std::string& path, std::ostream& warnings);

/// Text that parses back to an equivalent scenario.
std::string serialize_scenario(const Scenario& scenario);

const char* to_string(StateKind kind);
const char* to_string(Method method);

/// Parses `(re,im)`.
Complex parse_complex(const std::string& text);
/// Plain real or multiple of pi.
double parse_real(const std::string& text);
/// 17 significant digits; reads back bit-exactly.
std::string format_real(double v);

}  // namespace wboost::cli
