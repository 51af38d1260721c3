#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace fgs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared by the validation and entropy routines.
/// `sym` is relative (scaled by max(1, ||M||)); the others are absolute.
struct Tolerances {
  double sym = 1e-10;       // structural symmetries (Hermiticity, self-duality)
  double diag = 1e-9;       // diagonalization residuals, eigenvalue pairing
  double num = 1e-8;        // entropy identities
  double eigen_clip = 1e-12;  // occupation clipping for matrix logs
  double support = 1e-13;   // eigenvalues below this count as zero occupation
};

class NotHermitian : public std::runtime_error {
 public:
  explicit NotHermitian(double residual)
      : std::runtime_error("matrix is not Hermitian, max-abs residual " +
                           std::to_string(residual)),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class SelfDualViolation : public std::runtime_error {
 public:
  explicit SelfDualViolation(double residual)
      : std::runtime_error(
            "self-dual block symmetry violated, max-abs residual " +
            std::to_string(residual)),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class DegenerateKernel : public std::runtime_error {
 public:
  explicit DegenerateKernel(const std::string& what)
      : std::runtime_error(what) {}
};

class SingularOccupation : public std::runtime_error {
 public:
  explicit SingularOccupation(const std::string& what)
      : std::runtime_error(what) {}
};

class NotUnitarilyEquivalent : public std::runtime_error {
 public:
  explicit NotUnitarilyEquivalent(double deviation)
      : std::runtime_error(
            "spectra differ, max eigenvalue deviation " +
            std::to_string(deviation)),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class DimensionTooLarge : public std::runtime_error {
 public:
  DimensionTooLarge(int requested, int limit)
      : std::runtime_error("mode count " + std::to_string(requested) +
                           " exceeds the dense Fock-space limit " +
                           std::to_string(limit)) {}
};

class NotNormalized : public std::runtime_error {
 public:
  explicit NotNormalized(double norm_sq)
      : std::runtime_error("profile norm^2 = " + std::to_string(norm_sq) +
                           ", expected 1 within 1e-12") {}
};

class GridTooCoarse : public std::runtime_error {
 public:
  explicit GridTooCoarse(const std::string& what)
      : std::runtime_error(what) {}
};

class QuadratureNotConverged : public std::runtime_error {
 public:
  explicit QuadratureNotConverged(double achieved)
      : std::runtime_error("quadrature did not converge, error estimate " +
                           std::to_string(achieved)),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

class SupportViolation : public std::runtime_error {
 public:
  explicit SupportViolation(const std::string& what)
      : std::runtime_error(what) {}
};

class InvalidRange : public std::runtime_error {
 public:
  explicit InvalidRange(const std::string& what)
      : std::runtime_error(what) {}
};

/// The 2N x 2N block swap  S = (0 1; 1 0)  exchanging the annihilation and
/// creation halves of the doubled mode space.
Matrix block_swap(int n_modes);

double hermitian_residual(const Matrix& m);
double self_dual_residual(const Matrix& m);

/// Quadratic-form matrix of a Gaussian state on the doubled mode space,
/// in block form (A, B; -conj(B), -conj(A)) with A Hermitian and B
/// antisymmetric.  Equivalently: Hermitian with S C S = -conj(C).
class CovarianceMatrix {
 public:
  /// Checks Hermiticity and the self-dual block symmetry; throws
  /// NotHermitian / SelfDualViolation with the max-abs residual.
  static CovarianceMatrix validated(Matrix m, const Tolerances& tol = {});
  static CovarianceMatrix from_blocks(const Matrix& a, const Matrix& b,
                                      const Tolerances& tol = {});
  /// No validation; the caller guarantees the invariants.
  static CovarianceMatrix unchecked(Matrix m);

  int dim_modes() const { return n_; }
  const Matrix& matrix() const { return mat_; }
  Matrix block_a() const { return mat_.topLeftCorner(n_, n_); }
  Matrix block_b() const { return mat_.topRightCorner(n_, n_); }

 private:
  explicit CovarianceMatrix(Matrix m)
      : mat_(std::move(m)), n_(static_cast<int>(mat_.rows()) / 2) {}
  Matrix mat_;
  int n_;
};

/// Reduced one-particle density operator on the doubled mode space:
/// Hermitian, spectrum in [0, 1], eigenvalues paired as (t, 1-t) through
/// S conj(T) S = 1 - T, trace N.
class OneParticleDensity {
 public:
  static OneParticleDensity validated(Matrix m, const Tolerances& tol = {});
  static OneParticleDensity unchecked(Matrix m);

  int dim_modes() const { return n_; }
  const Matrix& matrix() const { return mat_; }

 private:
  explicit OneParticleDensity(Matrix m)
      : mat_(std::move(m)), n_(static_cast<int>(mat_.rows()) / 2) {}
  Matrix mat_;
  int n_;
};

/// Unitary mixing creation and annihilation operators while preserving the
/// anticommutation relations: block form (U, V; conj(V), conj(U)),
/// equivalently S W S = conj(W).
class BogoliubovTransform {
 public:
  static BogoliubovTransform validated(Matrix m, const Tolerances& tol = {});
  static BogoliubovTransform unchecked(Matrix m);

  int dim_modes() const { return n_; }
  const Matrix& matrix() const { return mat_; }
  Matrix block_u() const { return mat_.topLeftCorner(n_, n_); }
  Matrix block_v() const { return mat_.topRightCorner(n_, n_); }

 private:
  explicit BogoliubovTransform(Matrix m)
      : mat_(std::move(m)), n_(static_cast<int>(mat_.rows()) / 2) {}
  Matrix mat_;
  int n_;
};

}  // namespace fgs
