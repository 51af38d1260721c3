#pragma once

#include <vector>

#include "fgs/types.hpp"

// Exact dense Fock-space reference: N fermionic modes represented on the
// full 2^N-dimensional space via Jordan-Wigner strings, with every entropy
// quantity computed by brute-force linear algebra.  Mode 1 is the leftmost
// tensor factor.  Intended for verification at desk scale, not production.
namespace fgs::fock {

inline constexpr int kMaxModes = 6;

struct FieldOperators {
  int n_modes;
  std::vector<Matrix> annihilate;  // Psi_j, 2^N x 2^N
  std::vector<Matrix> create;      // Psi_j^dagger = annihilate[j].adjoint()
};

/// Jordan-Wigner representation; the returned operators satisfy the
/// canonical anticommutation relations to round-off.
FieldOperators field_operators(int n_modes);

/// Fermion parity (-1)^{sum_j n_j}.
Matrix parity_operator(int n_modes);

/// The quadratic form sum_{jk} [ A_{jk} Psi^+_j Psi_k + B_{jk} Psi^+_j Psi^+_k
/// - conj(B)_{jk} Psi_j Psi_k - conj(A)_{jk} Psi_j Psi^+_k ].
Matrix quadratic_hamiltonian(const CovarianceMatrix& c);

/// W = exp(-Q) / tr exp(-Q) for the quadratic form of `c`.
Matrix gaussian_density_matrix(const CovarianceMatrix& c);

/// Particle-number diagonal reference state with the given occupations:
/// the tensor product of diag(1 - d_j, d_j) factors.
Matrix diagonal_density_matrix(const RealVector& occupations);

/// U = Psi^dagger(f) + Psi(conj(f)) for a normalized profile f;
/// self-adjoint with U^2 = 1.  Throws NotNormalized.
Matrix excitation_unitary(const Vector& f);

/// -tr(W log W) over the eigenvalues of W, with 0 log 0 = 0.
double von_neumann_entropy(const Matrix& w);

/// tr(W (log W - log W0)); +infinity when W has weight outside the
/// support of W0.
double relative_entropy(const Matrix& w, const Matrix& w0);

/// Reduced one-particle density T_{jk} = tr(X_k^dagger X_j W) over the
/// doubled operator vector X = (Psi_1..Psi_N, Psi^+_1..Psi^+_N).
OneParticleDensity reduced_density(const Matrix& w);

/// Single-mode excitation W = B W0 B / (1 + |f|^2) with
/// B = 1 + Psi(conj(f)) + Psi^dagger(f), f unnormalized, projected onto
/// the even-parity sector.  The projection removes the linear-in-field
/// coherences, which carry no quasi-free two-point data; without it the
/// state would not be Gaussian and none of the closed forms would apply.
Matrix excited_density(const Matrix& w0, const Vector& f);

/// log tr exp(-Q), evaluated stably from the eigenvalues of Q.
double partition_log(const CovarianceMatrix& c);

}  // namespace fgs::fock
