#include "wboost/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "wboost/errors.hpp"

namespace wboost {

namespace {

constexpr double kIntegerEigenTolerance = 1e-6;
constexpr double kMinAxisNorm = 1e-12;

Vec3 unit_axis(const Vec3& axis) {
  const double n = axis.norm();
  if (!(n > kMinAxisNorm) || !std::isfinite(n)) {
    throw InputError("EPR operations need a well-defined rotation axis (boost not collinear "
                     "with the momentum)");
  }
  return axis / n;
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

// Index and magnitude of the largest component; the lowest index wins ties.
std::pair<Eigen::Index, double> largest_component(const ComplexVector& v) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v(k));
    if (mag > best_mag + 1e-12) {
      best = k;
      best_mag = mag;
    }
  }
  return {best, best_mag};
}

// Deterministic orthonormal basis of the column span of `eigvecs`.
std::vector<ComplexVector> canonical_block(const ComplexMatrix& eigvecs) {
  const Eigen::Index dim = eigvecs.rows();
  const Eigen::Index count = eigvecs.cols();
  const ComplexMatrix projector = eigvecs * eigvecs.adjoint();

  std::vector<ComplexVector> out;
  std::vector<bool> used(dim, false);
  for (Eigen::Index step = 0; step < count; ++step) {
    Eigen::Index pick = -1;
    double pick_norm = -1.0;
    ComplexVector pick_vec;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (used[k]) continue;
      ComplexVector r = projector.col(k);
      for (int pass = 0; pass < 2; ++pass) {
        for (const ComplexVector& u : out) r -= u * u.dot(r);
      }
      const double rn = r.norm();
      if (rn > pick_norm + 1e-12) {
        pick = k;
        pick_norm = rn;
        pick_vec = std::move(r);
      }
    }
    if (pick < 0 || pick_norm < 1e-8) {
      throw ToleranceError("invariant block lost rank during orthonormalization");
    }
    used[pick] = true;
    out.push_back(pick_vec / pick_norm);
  }

  for (ComplexVector& v : out) {
    const auto [k, mag] = largest_component(v);
    v *= std::conj(v(k)) / mag;
    v(k) = Complex(v(k).real(), 0.0);
  }

  std::vector<std::tuple<long long, Eigen::Index, ComplexVector>> keyed;
  for (ComplexVector& v : out) {
    const auto [k, mag] = largest_component(v);
    keyed.emplace_back(-std::llround(mag * 1e9), k, std::move(v));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  out.clear();
  for (auto& entry : keyed) out.push_back(std::move(std::get<2>(entry)));
  return out;
}

}  // namespace

ComplexMatrix epr_spin_operator(Spin s, double omega, const Vec3& axis) {
  const Vec3 n = unit_axis(axis);
  return kron(rep_matrix(s, {n, omega}), rep_matrix(s, {n, -omega}));
}

int expected_multiplicity(Spin s, int m) {
  const int two_s = s.two_s();
  return std::abs(m) <= two_s ? two_s + 1 - std::abs(m) : 0;
}

int InvariantBasis::multiplicity(int m) const {
  auto it = blocks.find(m);
  return it == blocks.end() ? 0 : static_cast<int>(it->second.size());
}

const ComplexVector& InvariantBasis::vector(int m, int alpha) const {
  auto it = blocks.find(m);
  if (it == blocks.end() || alpha < 0 || alpha >= static_cast<int>(it->second.size())) {
    throw InputError("no basis vector |m=" + std::to_string(m) + ", alpha=" +
                     std::to_string(alpha) + ">");
  }
  return it->second[alpha];
}

ComplexMatrix InvariantBasis::as_matrix() const {
  const int d2 = spin.dim() * spin.dim();
  int cols = 0;
  for (const auto& [m, vs] : blocks) cols += static_cast<int>(vs.size());
  ComplexMatrix out(d2, cols);
  int c = 0;
  for (const auto& [m, vs] : blocks) {
    for (const ComplexVector& v : vs) out.col(c++) = v;
  }
  return out;
}

InvariantBasis build_invariant_basis(Spin s, const Vec3& axis) {
  const Vec3 n = unit_axis(axis);
  const int d = s.dim();
  const ComplexMatrix nj = angular_momentum_operators(s).along(n);
  const ComplexMatrix generator = kron(nj, identity(d)) - kron(identity(d), nj);

  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(generator);
  const Eigen::VectorXd& lambda = eig.eigenvalues();

  std::map<int, std::vector<Eigen::Index>> columns;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double rounded = std::round(lambda(k));
    if (std::abs(lambda(k) - rounded) > kIntegerEigenTolerance) {
      throw ToleranceError("generator eigenvalue " + std::to_string(lambda(k)) +
                           " is not an integer");
    }
    columns[-static_cast<int>(rounded)].push_back(k);
  }

  InvariantBasis basis;
  basis.spin = s;
  basis.axis = n;
  for (const auto& [m, cols] : columns) {
    ComplexMatrix block(generator.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) block.col(j) = eig.eigenvectors().col(cols[j]);
    basis.blocks[m] = canonical_block(block);
  }
  return basis;
}

CoefficientSet::CoefficientSet(std::map<Key, Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {}

Complex CoefficientSet::get(int m, int alpha) const {
  auto it = amplitudes_.find({m, alpha});
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double CoefficientSet::norm_squared() const {
  double acc = 0.0;
  for (const auto& [key, c] : amplitudes_) acc += std::norm(c);
  return acc;
}

std::map<int, double> CoefficientSet::weights() const {
  std::map<int, double> w;
  for (const auto& [key, c] : amplitudes_) {
    if (std::norm(c) > 0.0) w[key.first] += std::norm(c);
  }
  return w;
}

CoefficientSet CoefficientSet::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (!(n > 0.0)) throw InputError("coefficient set is all zero");
  std::map<Key, Complex> out;
  for (const auto& [key, c] : amplitudes_) out[key] = c / n;
  return CoefficientSet(std::move(out));
}

void CoefficientSet::check_against(const InvariantBasis& basis) const {
  for (const auto& [key, c] : amplitudes_) {
    if (key.second < 0 || key.second >= basis.multiplicity(key.first)) {
      throw InputError("coefficient (m=" + std::to_string(key.first) + ", alpha=" +
                       std::to_string(key.second) + ") has no basis vector for two_s = " +
                       std::to_string(basis.spin.two_s()));
    }
  }
}

ComplexVector spin_vector(const CoefficientSet& c, const InvariantBasis& basis) {
  c.check_against(basis);
  const int d2 = basis.spin.dim() * basis.spin.dim();
  ComplexVector v = ComplexVector::Zero(d2);
  for (const auto& [key, amp] : c.amplitudes()) v += amp * basis.vector(key.first, key.second);
  return v;
}

CoefficientSet coefficients_of(const ComplexVector& v, const InvariantBasis& basis) {
  const int d2 = basis.spin.dim() * basis.spin.dim();
  if (v.size() != d2) throw InputError("spin vector length does not match the basis");
  CoefficientSet out;
  for (const auto& [m, vs] : basis.blocks) {
    for (std::size_t a = 0; a < vs.size(); ++a) out.set(m, static_cast<int>(a), vs[a].dot(v));
  }
  return out;
}

double closed_form_entropy(const CoefficientSet& c, double omega) {
  if (std::abs(std::sqrt(c.norm_squared()) - 1.0) > kNormTolerance) {
    throw InputError("closed-form entropy needs normalized coefficients");
  }
  const std::map<int, double> w = c.weights();
  double overlap = 0.0;
  for (const auto& [m, wm] : w) {
    for (const auto& [mp, wmp] : w) {
      const double cosine = std::cos((m - mp) * omega);
      overlap += wm * wmp * cosine * cosine;
    }
  }
  return 2.0 * (1.0 - overlap);
}

TwoParticleState epr_initial_state(const CoefficientSet& c, const InvariantBasis& basis,
                                   const MomentumLabel& plus, const MomentumLabel& minus) {
  return epr_final_state(c, 0.0, basis, plus, minus);
}

TwoParticleState epr_final_state(const CoefficientSet& c, double omega, const InvariantBasis& basis,
                                 const MomentumLabel& plus, const MomentumLabel& minus) {
  c.check_against(basis);
  const int d2 = basis.spin.dim() * basis.spin.dim();
  ComplexVector forward = ComplexVector::Zero(d2);
  ComplexVector backward = ComplexVector::Zero(d2);
  for (const auto& [key, amp] : c.amplitudes()) {
    const ComplexVector& v = basis.vector(key.first, key.second);
    const double phase = key.first * omega;
    forward += std::polar(1.0, phase) * amp * v;
    backward += std::polar(1.0, -phase) * amp * v;
  }
  const double r = std::numbers::sqrt2 / 2.0;
  return TwoParticleState(basis.spin, {{plus, minus, r * forward}, {minus, plus, r * backward}});
}

double brute_force_entropy(const CoefficientSet& c, double omega, const InvariantBasis& basis) {
  const FourVector p = FourVector::on_shell(1.0, Vec3::UnitZ());
  const TwoParticleState psi =
      epr_final_state(c, omega, basis, {"+p", p}, {"-p", p.spatially_reflected()});
  const int momentum_side[] = {kMomentum1, kMomentum2};
  return linear_entropy_bipartite(psi.to_state_vector(), momentum_side);
}

CoefficientSet param_a_state(double theta, double phi, Spin s) {
  if (s.two_s() < 1) throw InputError("parametrization A needs s >= 1/2");
  CoefficientSet c;
  c.set(1, 0, std::sin(theta) * std::cos(phi));
  c.set(0, 0, std::sin(theta) * std::sin(phi));
  c.set(-1, 0, std::cos(theta));
  return c;
}

CoefficientSet param_b_state(double theta, double phi, int m, int n) {
  if (m == n) throw InputError("parametrization B needs two different labels m != n");
  CoefficientSet c;
  c.set(m, 0, std::cos(theta));
  c.set(n, 0, std::polar(std::sin(theta), phi));
  return c;
}

double param_b_entropy(double theta, int m, int n, double omega) {
  const double a = std::sin(2.0 * theta);
  const double b = std::sin((m - n) * omega);
  return a * a * b * b;
}

std::map<std::string, ComplexVector> fixture_states(Spin s) {
  const Complex i(0.0, 1.0);
  std::map<std::string, ComplexVector> out;
  if (s.two_s() == 1) {
    // index = row1 * 2 + row2, row 0 is +z
    auto ket = [](int a, int b) {
      ComplexVector v = ComplexVector::Zero(4);
      v(a * 2 + b) = 1.0;
      return v;
    };
    const double r = std::numbers::sqrt2 / 2.0;
    out["psi+"] = r * (ket(0, 1) + ket(1, 0));
    out["psi-"] = r * (ket(0, 1) - ket(1, 0));
    out["phi+"] = r * (ket(0, 0) + ket(1, 1));
    out["phi-"] = r * (ket(0, 0) - ket(1, 1));
    out["chi+"] = r * (out["phi+"] + i * out["psi-"]);
    out["chi-"] = r * (out["phi+"] - i * out["psi-"]);
    return out;
  }
  if (s.two_s() == 2) {
    // rows: 0 -> +1, 1 -> 0, 2 -> -1
    auto single = [](int row) {
      ComplexVector v = ComplexVector::Zero(3);
      v(row) = 1.0;
      return v;
    };
    auto product = [](const ComplexVector& a, const ComplexVector& b) {
      return tensor(StateVector(a), StateVector(b)).amplitudes();
    };
    const ComplexVector up = single(0);
    const ComplexVector zero = single(1);
    const ComplexVector down = single(2);
    const ComplexVector even = up + down;  // Jy-eigenvalue-0 direction, unnormalized
    const double r3 = 1.0 / std::sqrt(3.0);
    out["psi1"] = r3 * (product(up, up) - product(zero, zero) + product(down, down));
    out["psi2"] = r3 * (product(up, down) + product(zero, zero) + product(down, up));
    out["psi3"] = 0.5 * product(even, even);
    out["beta1"] = std::numbers::sqrt2 / 2.0 * (product(up, down) - product(down, up));
    out["beta2"] = 0.5 * (product(zero, even) + product(even, zero));
    return out;
  }
  throw InputError("fixture states exist only for s = 1/2 and s = 1");
}

std::size_t SweepResult::grid_size() const {
  std::size_t n = 1;
  for (const SweepAxis& a : axes) n *= a.values.size();
  return n;
}

std::vector<double> SweepResult::coordinates(std::size_t index) const {
  std::vector<double> out(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t len = axes[k].values.size();
    out[k] = axes[k].values[index % len];
    index /= len;
  }
  return out;
}

}  // namespace wboost
