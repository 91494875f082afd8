#include "wboost/cli/reports.hpp"

#include <cmath>
#include <ostream>

#include "wboost/cli/scenario.hpp"

namespace wboost::cli {

AngleReport angle_report(double eta, double xi) {
  AngleReport r;
  r.eta = eta;
  r.xi = xi;
  r.closed_form = wigner_angle(eta, xi);
  const AxisAngle w =
      wigner_rotation_from_rapidities(Rapidity{eta * Vec3::UnitZ()}, Rapidity{xi * Vec3::UnitX()});
  // z cross x = +y; report the angle about that axis
  r.composition = w.axis.dot(Vec3::UnitY()) >= 0.0 ? w.angle : -w.angle;
  r.delta = std::abs(r.closed_form - r.composition);
  return r;
}

void print_angle_report(const AngleReport& r, std::ostream& out) {
  out << "eta = " << format_real(r.eta) << "\n"
      << "xi = " << format_real(r.xi) << "\n"
      << "omega_closed_form = " << format_real(r.closed_form) << "\n"
      << "omega_composition = " << format_real(r.composition) << "\n"
      << "delta = " << format_real(r.delta) << "\n";
}

nlohmann::ordered_json basis_to_json(const InvariantBasis& basis) {
  nlohmann::ordered_json j;
  j["two_s"] = basis.spin.two_s();
  j["axis"] = {basis.axis.x(), basis.axis.y(), basis.axis.z()};
  j["ordering"] =
      "product basis |sigma1, sigma2>, index = row1 * (two_s + 1) + row2, row 0 is sigma = +s";
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& [m, vectors] : basis.blocks) {
    nlohmann::ordered_json block;
    block["m"] = m;
    block["multiplicity"] = vectors.size();
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (std::size_t alpha = 0; alpha < vectors.size(); ++alpha) {
      nlohmann::ordered_json amps = nlohmann::ordered_json::array();
      for (Eigen::Index k = 0; k < vectors[alpha].size(); ++k) {
        amps.push_back({vectors[alpha](k).real(), vectors[alpha](k).imag()});
      }
      vs.push_back({{"alpha", alpha}, {"amplitudes", std::move(amps)}});
    }
    block["vectors"] = std::move(vs);
    blocks.push_back(std::move(block));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace wboost::cli
