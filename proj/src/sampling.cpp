#include "wboost/sampling.hpp"

#include <numbers>
#include <string>

namespace wboost::sampling {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Vec3 unit_vector(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    const double x = normal(rng);
    const double y = normal(rng);
    const double z = normal(rng);
    v = Vec3(x, y, z);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

Vec3 perpendicular_unit_vector(Rng& rng, const Vec3& v) {
  const Vec3 n = v.normalized();
  Vec3 w;
  do {
    w = unit_vector(rng);
    w -= n * n.dot(w);
  } while (w.norm() < 1e-3);
  return w.normalized();
}

ComplexVector normalized_vector(Rng& rng, int dim) {
  ComplexVector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = complex_normal(rng);
  return v.normalized();
}

ComplexMatrix unitary(Rng& rng, int dim) {
  ComplexMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = complex_normal(rng);
  const Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

CoefficientSet coefficients(Rng& rng, const InvariantBasis& basis) {
  CoefficientSet c;
  for (const auto& [m, vs] : basis.blocks) {
    for (std::size_t a = 0; a < vs.size(); ++a) c.set(m, static_cast<int>(a), complex_normal(rng));
  }
  return c.normalized();
}

LorentzMatrix lorentz(Rng& rng, double max_rapidity) {
  const AxisAngle r{unit_vector(rng), uniform(rng, -std::numbers::pi, std::numbers::pi)};
  const Rapidity xi{uniform(rng, 0.0, max_rapidity) * unit_vector(rng)};
  return boost_from_rapidity(xi) * LorentzMatrix::rotation(r);
}

TwoParticleState two_particle_state(Rng& rng, Spin spin, int terms, double max_rapidity,
                                    double mass) {
  const int d2 = spin.dim() * spin.dim();
  std::vector<PairTerm> out;
  double norm2 = 0.0;
  for (int k = 0; k < terms; ++k) {
    const Rapidity e1{uniform(rng, 0.0, max_rapidity) * unit_vector(rng)};
    const Rapidity e2{uniform(rng, 0.0, max_rapidity) * unit_vector(rng)};
    ComplexVector spin_part(d2);
    for (int i = 0; i < d2; ++i) spin_part(i) = complex_normal(rng);
    norm2 += spin_part.squaredNorm();
    out.push_back({{"a" + std::to_string(k), momentum_from_rapidity(mass, e1)},
                   {"b" + std::to_string(k), momentum_from_rapidity(mass, e2)},
                   std::move(spin_part)});
  }
  for (PairTerm& t : out) t.spin /= std::sqrt(norm2);
  return TwoParticleState(spin, std::move(out));
}

}  // namespace wboost::sampling
