#pragma once

// Random generators for property checks. All draws come from a caller-owned
// std::mt19937_64, so results are reproducible for a fixed seed.

#include <random>

#include "wboost/boostmap.hpp"
#include "wboost/invariants.hpp"

namespace wboost::sampling {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
Complex complex_normal(Rng& rng);

Vec3 unit_vector(Rng& rng);
/// Unit vector orthogonal to `v`.
Vec3 perpendicular_unit_vector(Rng& rng, const Vec3& v);

ComplexVector normalized_vector(Rng& rng, int dim);
/// Haar-distributed unitary via QR of a complex Gaussian matrix.
ComplexMatrix unitary(Rng& rng, int dim);

/// Gaussian amplitudes on every (m, alpha) of the basis, normalized.
CoefficientSet coefficients(Rng& rng, const InvariantBasis& basis);

/// Random rotation followed by a boost of rapidity magnitude up to `max_rapidity`.
LorentzMatrix lorentz(Rng& rng, double max_rapidity);

/// `terms` momentum-label pairs with momenta of rapidity up to `max_rapidity`
/// and random spin vectors, normalized overall.
TwoParticleState two_particle_state(Rng& rng, Spin spin, int terms, double max_rapidity,
                                    double mass = 1.0);

}  // namespace wboost::sampling
