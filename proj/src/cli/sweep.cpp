#include "wboost/cli/sweep.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "json.hpp"

namespace wboost::cli {

namespace {

double signed_wigner_angle(double eta, double xi, const Scenario& s, const Vec3& axis) {
  const AxisAngle w = wigner_rotation_from_rapidities(Rapidity{eta * s.eta_direction.normalized()},
                                                      Rapidity{xi * s.xi_direction.normalized()});
  if (w.angle == 0.0) return 0.0;
  return w.axis.dot(axis) >= 0.0 ? w.angle : -w.angle;
}

bool omega_is_axis(const SweepResult& r) {
  return std::any_of(r.axes.begin(), r.axes.end(),
                     [](const SweepAxis& a) { return a.name == "omega"; });
}

}  // namespace

SweepResult run_sweep(const Scenario& s) {
  SweepResult result;
  for (const std::string& name : s.axes) {
    const ParamValue* p = nullptr;
    if (name == "omega") p = &*s.omega;
    if (name == "eta") p = &*s.eta;
    if (name == "xi") p = &*s.xi;
    if (name == "theta") p = &s.theta;
    if (name == "phi") p = &s.phi;
    result.axes.push_back({name, p->values()});
  }

  const Vec3 axis = s.wigner_axis();
  std::optional<InvariantBasis> basis;
  if (s.method == Method::BruteForce) basis = build_invariant_basis(s.spin, axis);

  std::optional<CoefficientSet> fixed;
  if (s.state == StateKind::Coefficients) fixed = s.coefficients;
  if (s.state == StateKind::Fixture) {
    const InvariantBasis& b = basis ? *basis : basis.emplace(build_invariant_basis(s.spin, axis));
    fixed = coefficients_of(fixture_states(s.spin).at(s.fixture), b);
  }

  const std::size_t n = result.grid_size();
  result.omega.resize(n);
  result.entanglement.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> coords = result.coordinates(i);
    auto value = [&](const std::string& key, const ParamValue& scalar) {
      for (std::size_t k = 0; k < result.axes.size(); ++k) {
        if (result.axes[k].name == key) return coords[k];
      }
      return scalar.start;
    };

    const double omega = s.omega ? value("omega", *s.omega)
                                 : signed_wigner_angle(value("eta", *s.eta), value("xi", *s.xi), s, axis);
    const double theta = value("theta", s.theta);
    const double phi = value("phi", s.phi);

    CoefficientSet c;
    switch (s.state) {
      case StateKind::ParamA: c = param_a_state(theta, phi, s.spin); break;
      case StateKind::ParamB: c = param_b_state(theta, phi, s.m, s.n); break;
      default: c = *fixed; break;
    }

    double e = 0.0;
    if (s.method == Method::BruteForce) {
      e = brute_force_entropy(c, omega, *basis);
    } else if (s.state == StateKind::ParamB) {
      e = param_b_entropy(theta, s.m, s.n, omega);
    } else {
      e = closed_form_entropy(c, omega);
    }
    result.omega[i] = omega;
    result.entanglement[i] = e;
  }

  result.metadata["two_s"] = std::to_string(s.spin.two_s());
  result.metadata["state"] = to_string(s.state);
  result.metadata["method"] = to_string(s.method);
  result.metadata["wigner_axis"] = format_real(axis.x()) + "," + format_real(axis.y()) + "," +
                                   format_real(axis.z());
  if (s.omega && !s.omega->is_range) result.metadata["omega"] = format_real(s.omega->start);
  if (s.state == StateKind::ParamB) {
    result.metadata["m"] = std::to_string(s.m);
    result.metadata["n"] = std::to_string(s.n);
  }
  if (s.state == StateKind::Fixture) result.metadata["fixture"] = s.fixture;
  return result;
}

void write_csv(const SweepResult& r, std::ostream& out) {
  const bool omega_column = !omega_is_axis(r);
  for (const SweepAxis& a : r.axes) out << a.name << ",";
  if (omega_column) out << "omega,";
  out << "E\n";
  for (std::size_t i = 0; i < r.grid_size(); ++i) {
    for (double c : r.coordinates(i)) out << format_real(c) << ",";
    if (omega_column) out << format_real(r.omega[i]) << ",";
    out << format_real(r.entanglement[i]) << "\n";
  }
}

void write_json(const SweepResult& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["metadata"] = r.metadata;
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (const SweepAxis& a : r.axes) columns.push_back(a.name);
  const bool omega_column = !omega_is_axis(r);
  if (omega_column) columns.push_back("omega");
  columns.push_back("E");
  j["columns"] = columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.grid_size(); ++i) {
    nlohmann::ordered_json row = r.coordinates(i);
    if (omega_column) row.push_back(r.omega[i]);
    row.push_back(r.entanglement[i]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

void write_sweep(const SweepResult& result, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    write_json(result, out);
  } else {
    write_csv(result, out);
  }
}

}  // namespace wboost::cli
