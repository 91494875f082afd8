#pragma once

// Finite-dimensional multipartite states: tensor products, density
// matrices, partial traces and the linear-entropy entanglement measure.
//
// Amplitudes are stored row-major over the factor list: the last factor
// varies fastest.

#include <span>
#include <vector>

#include "wboost/spinrep.hpp"

namespace wboost {

inline constexpr double kNormTolerance = 1e-12;

class StateVector {
 public:
  /// Throws InputError if the product of `dims` differs from the amplitude
  /// count or any dimension is < 1.
  StateVector(ComplexVector amplitudes, std::vector<int> dims);

  /// Single-factor state.
  explicit StateVector(ComplexVector amplitudes);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const std::vector<int>& dims() const { return dims_; }
  int factor_count() const { return static_cast<int>(dims_.size()); }

  double norm() const { return amplitudes_.norm(); }
  bool is_normalized(double tol = kNormTolerance) const;
  /// Throws InputError for the zero vector.
  StateVector normalized() const;

 private:
  ComplexVector amplitudes_;
  std::vector<int> dims_;
};

class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix entries, std::vector<int> dims);

  /// |psi><psi|
  static DensityMatrix pure(const StateVector& psi);

  const ComplexMatrix& entries() const { return entries_; }
  const std::vector<int>& dims() const { return dims_; }

  Complex trace() const { return entries_.trace(); }
  /// Tr(rho^2)
  double purity() const;
  /// Hermitian and unit trace within `tol`, eigenvalues >= -1e-10.
  bool is_valid(double tol = kNormTolerance) const;

 private:
  ComplexMatrix entries_;
  std::vector<int> dims_;
};

/// a (x) b with factor lists concatenated.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Kronecker product of operators, first argument acting on the slower index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Applies `op` to a single factor of `psi`.
StateVector apply_local(const StateVector& psi, int factor, const ComplexMatrix& op);

/// Reduced density matrix over the factors in `keep` (any order, no
/// duplicates). Kept factors appear in ascending index order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Tr(rho_keep^2) for the pure state psi.
double reduced_purity(const StateVector& psi, std::span<const int> keep);

/// Sum over both sides of the cut `side` | complement of (1 - Tr rho_i^2).
/// Requires a normalized psi. For pure states both terms coincide.
double linear_entropy_bipartite(const StateVector& psi, std::span<const int> side);

}  // namespace wboost
