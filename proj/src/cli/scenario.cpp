#include "wboost/cli/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

namespace wboost::cli {

namespace {

// Coefficient norms within this of 1 are accepted untouched; beyond
// kRenormalizeLimit the scenario is rejected.
constexpr double kExactNormSlack = 1e-12;
constexpr double kRenormalizeLimit = 1e-6;
constexpr double kPerpendicularTolerance = 1e-9;

const std::set<std::string> kSweepableKeys = {"omega", "eta", "xi", "theta", "phi"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw InputError("expected an integer, got '" + t + "'");
  }
  return value;
}

Vec3 parse_vec3(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3) throw InputError("expected three comma-separated components");
  Vec3 v(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]));
  if (!(v.norm() > 0.0)) throw InputError("direction must be nonzero");
  return v;
}

ParamValue parse_param(const std::string& key, const std::string& text) {
  if (text.find(':') == std::string::npos) return ParamValue::scalar(parse_real(text));
  if (!kSweepableKeys.contains(key)) throw InputError("ranges are not allowed for this field");
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) throw InputError("range must be start:stop:count");
  ParamValue p{parse_real(parts[0]), parse_real(parts[1]), parse_int(parts[2]), true};
  if (p.count < 1) throw InputError("range count must be at least 1");
  return p;
}

std::string format_param(const ParamValue& p) {
  if (!p.is_range) return format_real(p.start);
  return format_real(p.start) + ":" + format_real(p.stop) + ":" + std::to_string(p.count);
}

std::string format_complex(Complex c) {
  return "(" + format_real(c.real()) + "," + format_real(c.imag()) + ")";
}

std::string format_vec3(const Vec3& v) {
  return format_real(v.x()) + ", " + format_real(v.y()) + ", " + format_real(v.z());
}

class Parser {
 public:
  Parser(std::string source, std::ostream& warnings)
      : source_(std::move(source)), warnings_(warnings) {}

  Scenario run(std::istream& in) {
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto hash = raw.find('#');
      const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail(line_no, "", "expected 'key = value'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail(line_no, "", "missing key before '='");
      if (key != "coefficient" && !lines_.emplace(key, line_no).second) {
        fail(line_no, key, "given more than once (first on line " +
                               std::to_string(lines_.at(key)) + ")");
      }
      try {
        assign(key, value, line_no);
      } catch (const ScenarioError&) {
        throw;
      } catch (const InputError& e) {
        fail(line_no, key, e.what());
      }
    }
    validate();
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail(int line, const std::string& key, const std::string& msg) const {
    std::string where = source_;
    if (line > 0) where += ":" + std::to_string(line);
    if (!key.empty()) where += ": field '" + key + "'";
    throw ScenarioError(where + ": " + msg);
  }

  [[noreturn]] void fail_field(const std::string& key, const std::string& msg) const {
    auto it = lines_.find(key);
    fail(it == lines_.end() ? 0 : it->second, key, msg);
  }

  void set_param(const std::string& key, const std::string& value, ParamValue& target) {
    target = parse_param(key, value);
    if (target.is_range) s_.axes.push_back(key);
  }

  void assign(const std::string& key, const std::string& value, int line) {
    if (key == "two_s") {
      s_.spin = Spin(parse_int(value));
    } else if (key == "omega") {
      set_param(key, value, s_.omega.emplace());
    } else if (key == "eta") {
      set_param(key, value, s_.eta.emplace());
    } else if (key == "xi") {
      set_param(key, value, s_.xi.emplace());
    } else if (key == "eta_direction") {
      s_.eta_direction = parse_vec3(value);
    } else if (key == "xi_direction") {
      s_.xi_direction = parse_vec3(value);
    } else if (key == "state") {
      static const std::map<std::string, StateKind> kinds = {
          {"param_a", StateKind::ParamA},
          {"param_b", StateKind::ParamB},
          {"coefficients", StateKind::Coefficients},
          {"fixture", StateKind::Fixture}};
      auto it = kinds.find(value);
      if (it == kinds.end()) throw InputError("unknown state '" + value + "'");
      s_.state = it->second;
    } else if (key == "theta") {
      set_param(key, value, s_.theta);
    } else if (key == "phi") {
      set_param(key, value, s_.phi);
    } else if (key == "m") {
      s_.m = parse_int(value);
    } else if (key == "n") {
      s_.n = parse_int(value);
    } else if (key == "coefficient") {
      const auto open = value.find('(');
      if (open == std::string::npos) throw InputError("expected 'm, alpha, (re,im)'");
      const std::vector<std::string> head = split(value.substr(0, open), ',');
      if (head.size() != 3 || !head[2].empty()) throw InputError("expected 'm, alpha, (re,im)'");
      const int m = parse_int(head[0]);
      const int alpha = parse_int(head[1]);
      if (s_.coefficients.amplitudes().contains({m, alpha})) {
        throw InputError("coefficient (" + head[0] + ", " + head[1] + ") given twice");
      }
      s_.coefficients.set(m, alpha, parse_complex(value.substr(open)));
      if (first_coefficient_line_ == 0) first_coefficient_line_ = line;
    } else if (key == "fixture") {
      s_.fixture = value;
    } else if (key == "method") {
      if (value == "closed_form") {
        s_.method = Method::ClosedForm;
      } else if (value == "brute_force") {
        s_.method = Method::BruteForce;
      } else {
        throw InputError("unknown method '" + value + "'");
      }
    } else if (key == "output") {
      if (value.empty()) throw InputError("empty path");
      s_.output = value;
    } else if (key == "format") {
      if (value == "csv") {
        s_.format = OutputFormat::Csv;
      } else if (value == "json") {
        s_.format = OutputFormat::Json;
      } else {
        throw InputError("unknown format '" + value + "'");
      }
    } else {
      throw InputError("unknown field");
    }
  }

  bool given(const std::string& key) const { return lines_.contains(key); }

  void require(const std::string& key, const std::string& why) const {
    if (!given(key)) fail(0, key, "missing (" + why + ")");
  }

  void reject(const std::string& key, const std::string& why) const {
    if (given(key)) fail_field(key, "not used " + why);
  }

  void check_non_negative(const std::string& key, const ParamValue& p) const {
    if (p.start < 0.0 || p.stop < 0.0 || !std::isfinite(p.start) || !std::isfinite(p.stop)) {
      fail_field(key, "rapidity magnitudes must be finite and non-negative");
    }
  }

  void validate() {
    require("two_s", "spin is mandatory");

    if (given("omega") == (given("eta") || given("xi"))) {
      fail(0, "omega", "give exactly one of 'omega' or the pair 'eta' and 'xi'");
    }
    if (given("eta") != given("xi")) fail(0, given("eta") ? "xi" : "eta", "missing (eta and xi go together)");
    if (given("omega")) {
      reject("eta_direction", "with 'omega'");
      reject("xi_direction", "with 'omega'");
    } else {
      check_non_negative("eta", *s_.eta);
      check_non_negative("xi", *s_.xi);
      const double cosine = s_.eta_direction.normalized().dot(s_.xi_direction.normalized());
      if (std::abs(cosine) > kPerpendicularTolerance) {
        fail_field(given("xi_direction") ? "xi_direction" : "eta_direction",
                   "boost direction must be perpendicular to the momentum direction");
      }
    }

    const int two_s = s_.spin.two_s();
    switch (s_.state) {
      case StateKind::ParamA:
        if (two_s < 1) fail_field("two_s", "parametrization A needs two_s >= 1");
        reject("m", "by state param_a");
        reject("n", "by state param_a");
        break;
      case StateKind::ParamB:
        require("m", "state param_b");
        require("n", "state param_b");
        if (s_.m == s_.n) fail_field("n", "m and n must differ");
        if (s_.method == Method::BruteForce && (std::abs(s_.m) > two_s || std::abs(s_.n) > two_s)) {
          fail_field("m", "brute_force needs |m|, |n| <= two_s");
        }
        break;
      case StateKind::Coefficients:
      case StateKind::Fixture:
        reject("theta", "by this state");
        reject("phi", "by this state");
        reject("m", "by this state");
        reject("n", "by this state");
        break;
    }

    if (s_.state == StateKind::Coefficients) {
      if (s_.coefficients.amplitudes().empty()) fail(0, "coefficient", "missing (state coefficients)");
      validate_coefficients();
    } else if (given("coefficient")) {
      fail(first_coefficient_line_, "coefficient", "only used by state coefficients");
    }

    if (s_.state == StateKind::Fixture) {
      require("fixture", "state fixture");
      std::map<std::string, ComplexVector> fixtures;
      try {
        fixtures = fixture_states(s_.spin);
      } catch (const InputError& e) {
        fail_field("two_s", e.what());
      }
      if (!fixtures.contains(s_.fixture)) fail_field("fixture", "unknown fixture '" + s_.fixture + "'");
    } else {
      reject("fixture", "unless state = fixture");
    }
  }

  void validate_coefficients() {
    for (const auto& [key, c] : s_.coefficients.amplitudes()) {
      if (key.second < 0 || key.second >= expected_multiplicity(s_.spin, key.first)) {
        fail(first_coefficient_line_, "coefficient",
             "(m=" + std::to_string(key.first) + ", alpha=" + std::to_string(key.second) +
                 ") does not exist for two_s = " + std::to_string(s_.spin.two_s()));
      }
    }
    const double norm2 = s_.coefficients.norm_squared();
    const double deviation = std::abs(std::sqrt(norm2) - 1.0);
    if (deviation <= kExactNormSlack) return;
    if (deviation > kRenormalizeLimit) {
      fail(first_coefficient_line_, "coefficient",
           "coefficients are not normalized (norm^2 = " + format_real(norm2) + ")");
    }
    warnings_ << source_ << ": warning: renormalized coefficients (norm^2 was "
              << format_real(norm2) << ")\n";
    s_.coefficients = s_.coefficients.normalized();
  }

  std::string source_;
  std::ostream& warnings_;
  Scenario s_;
  std::map<std::string, int> lines_;
  int first_coefficient_line_ = 0;
};

}  // namespace

std::vector<double> ParamValue::values() const {
  if (!is_range || count == 1) return {start};
  std::vector<double> out(count);
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = start + i * step;
  out.back() = stop;
  return out;
}

Vec3 Scenario::wigner_axis() const {
  if (omega) return kCanonicalEprAxis;
  return AxisAngle::make(eta_direction.cross(xi_direction), 1.0).canonical().axis;
}

Scenario parse_scenario(std::istream& in, const std::string& source, std::ostream& warnings) {
  return Parser(source, warnings).run(in);
}

Scenario load_scenario(const std::string& path, std::ostream& warnings) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path + ": cannot open scenario file");
  return parse_scenario(in, path, warnings);
}

const char* to_string(StateKind kind) {
  switch (kind) {
    case StateKind::ParamA: return "param_a";
    case StateKind::ParamB: return "param_b";
    case StateKind::Coefficients: return "coefficients";
    case StateKind::Fixture: return "fixture";
  }
  return "?";
}

const char* to_string(Method method) {
  return method == Method::ClosedForm ? "closed_form" : "brute_force";
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  std::vector<std::pair<std::string, ParamValue>> params;
  auto add_param = [&](const std::string& key, const std::optional<ParamValue>& p) {
    if (p) params.emplace_back(key, *p);
  };

  out << "two_s = " << s.spin.two_s() << "\n";
  add_param("omega", s.omega);
  add_param("eta", s.eta);
  add_param("xi", s.xi);
  if (!s.omega) {
    out << "eta_direction = " << format_vec3(s.eta_direction) << "\n";
    out << "xi_direction = " << format_vec3(s.xi_direction) << "\n";
  }
  out << "state = " << to_string(s.state) << "\n";
  switch (s.state) {
    case StateKind::ParamA:
      add_param("theta", s.theta);
      add_param("phi", s.phi);
      break;
    case StateKind::ParamB:
      out << "m = " << s.m << "\nn = " << s.n << "\n";
      add_param("theta", s.theta);
      add_param("phi", s.phi);
      break;
    case StateKind::Coefficients:
      for (const auto& [key, c] : s.coefficients.amplitudes()) {
        out << "coefficient = " << key.first << ", " << key.second << ", " << format_complex(c)
            << "\n";
      }
      break;
    case StateKind::Fixture:
      out << "fixture = " << s.fixture << "\n";
      break;
  }
  out << "method = " << to_string(s.method) << "\n";
  if (!s.output.empty()) out << "output = " << s.output << "\n";
  out << "format = " << (s.format == OutputFormat::Csv ? "csv" : "json") << "\n";

  // scalars first, then ranges in axis order so the axes reload identically
  for (const auto& [key, p] : params) {
    if (!p.is_range) out << key << " = " << format_param(p) << "\n";
  }
  for (const std::string& axis : s.axes) {
    for (const auto& [key, p] : params) {
      if (key == axis) out << key << " = " << format_param(p) << "\n";
    }
  }
  return out.str();
}

Complex parse_complex(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
    throw InputError("expected a complex number '(re,im)', got '" + t + "'");
  }
  const std::vector<std::string> parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 2) throw InputError("expected a complex number '(re,im)', got '" + t + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (!t.empty() && ec == std::errc() && ptr == t.data() + t.size()) {
    if (!std::isfinite(value)) throw InputError("value must be finite");
    return value;
  }
  static const std::regex pi_expr(R"(^([+-]?)(?:([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*\*\s*)?pi(?:\s*/\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?))?$)");
  std::smatch match;
  if (!std::regex_match(t, match, pi_expr)) throw InputError("expected a real number, got '" + t + "'");
  double factor = match[2].matched ? std::stod(match[2].str()) : 1.0;
  const double divisor = match[3].matched ? std::stod(match[3].str()) : 1.0;
  if (divisor == 0.0) throw InputError("division by zero in '" + t + "'");
  if (match[1].str() == "-") factor = -factor;
  return factor * std::numbers::pi / divisor;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace wboost::cli
