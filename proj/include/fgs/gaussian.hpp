#pragma once

#include "fgs/types.hpp"

namespace fgs {

/// Result of the mode-pairing diagonalization: `transform` maps the
/// covariance to diag(c_1..c_N, -c_1..-c_N), with `modes` = c sorted
/// descending and non-negative.
struct BogoliubovModes {
  BogoliubovTransform transform;
  RealVector modes;
};

/// Checks a raw matrix against the covariance invariants and wraps it.
CovarianceMatrix validate_covariance(const Matrix& m,
                                     const Tolerances& tol = {});

/// Diagonalizes a covariance matrix by a structure-preserving unitary:
/// transform * C * transform^{-1} = diag(c, -c).  Positive-side eigenvectors
/// come from a Hermitian eigensolver; each negative partner is constructed
/// as S conj(psi), which enforces the block symmetry exactly.  Exact kernels
/// are split with the perturbation direction diag(D, -D), D = diag(1..N),
/// escalating the perturbation scale through {1e-8, 1e-6, 1e-4}.
BogoliubovModes bogoliubov_diagonalize(const CovarianceMatrix& c,
                                       const Tolerances& tol = {});

/// T = 1 / (1 + exp(2C)), evaluated on the eigenbasis with an
/// overflow-safe logistic.
OneParticleDensity density_from_covariance(const CovarianceMatrix& c);

/// Inverse map C = -(1/2) log(T / (1-T)).  Eigenvalues are clipped into
/// [eigen_clip, 1 - eigen_clip] before the log; in strict mode any
/// eigenvalue that clipping would alter raises SingularOccupation.
CovarianceMatrix covariance_from_density(const OneParticleDensity& t,
                                         double eigen_clip = 1e-12,
                                         bool strict = false);

/// -sum_i t_i log t_i over all 2N eigenvalues, with 0 log 0 = 0.
double von_neumann_entropy(const OneParticleDensity& t);

/// Relative entropy of the Gaussian states with one-particle densities
/// T (state) and T0 (reference):
///   tr{ T (log T - log T0) } - tr{ (T - T0) log(2 cosh C0) }.
/// Returns +infinity when T has weight where T0 is singular.  The overload
/// without C0 reconstructs log(2 cosh C0) = -(1/2) log(T0 (1 - T0)) from T0.
double relative_entropy(const OneParticleDensity& t,
                        const OneParticleDensity& t0,
                        const CovarianceMatrix& c0,
                        const Tolerances& tol = {});
double relative_entropy(const OneParticleDensity& t,
                        const OneParticleDensity& t0,
                        const Tolerances& tol = {});

/// Shortcut tr{ (T - T0) C0 }, valid when C and C0 are unitarily
/// equivalent; the precondition is checked by comparing the sorted spectra
/// of T and T0 (throws NotUnitarilyEquivalent).
double relative_entropy_unitary(const OneParticleDensity& t,
                                const OneParticleDensity& t0,
                                const CovarianceMatrix& c0,
                                const Tolerances& tol = {});
double relative_entropy_unitary(const OneParticleDensity& t,
                                const OneParticleDensity& t0,
                                const Tolerances& tol = {});

/// log Z = (1/2) sum over the 2N eigenvalues x of log(2 cosh x).
double partition_log(const CovarianceMatrix& c);

}  // namespace fgs
