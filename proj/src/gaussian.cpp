#include "fgs/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fgs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::SelfAdjointEigenSolver<Matrix> eigensolve(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  return es;
}

// Occupation 1/(1 + e^{2x}) without overflow.
double logistic_occupation(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-2.0 * x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(2.0 * x));
}

// log(2 cosh x) = |x| + log1p(e^{-2|x|}).
double log_two_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

// Rotates the phase of an eigenvector so its largest component is real
// positive, making the diagonalization deterministic.
void canonicalize_phase(Eigen::Ref<Vector> v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const Complex z = v[imax];
  const double a = std::abs(z);
  if (a > 0.0) v *= std::conj(z) / a;
}

}  // namespace

Matrix block_swap(int n_modes) {
  const int n = n_modes;
  Matrix s = Matrix::Zero(2 * n, 2 * n);
  s.topRightCorner(n, n) = Matrix::Identity(n, n);
  s.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  return s;
}

double hermitian_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double self_dual_residual(const Matrix& m) {
  const Matrix s = block_swap(static_cast<int>(m.rows()) / 2);
  return (s * m * s + m.conjugate()).cwiseAbs().maxCoeff();
}

CovarianceMatrix CovarianceMatrix::validated(Matrix m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
    throw std::invalid_argument("covariance matrix must be square with even dimension");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double rh = hermitian_residual(m);
  if (rh > tol.sym * scale) throw NotHermitian(rh);
  const double rs = self_dual_residual(m);
  if (rs > tol.sym * scale) throw SelfDualViolation(rs);
  return CovarianceMatrix(std::move(m));
}

CovarianceMatrix CovarianceMatrix::from_blocks(const Matrix& a, const Matrix& b,
                                               const Tolerances& tol) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.rows() != n || b.cols() != n) {
    throw std::invalid_argument("blocks must be square and of equal size");
  }
  Matrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = a;
  m.topRightCorner(n, n) = b;
  m.bottomLeftCorner(n, n) = -b.conjugate();
  m.bottomRightCorner(n, n) = -a.conjugate();
  return validated(std::move(m), tol);
}

CovarianceMatrix CovarianceMatrix::unchecked(Matrix m) {
  return CovarianceMatrix(std::move(m));
}

OneParticleDensity OneParticleDensity::validated(Matrix m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
    throw std::invalid_argument("density must be square with even dimension");
  }
  const int n = static_cast<int>(m.rows()) / 2;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double rh = hermitian_residual(m);
  if (rh > tol.sym * scale) throw NotHermitian(rh);
  const Matrix s = block_swap(n);
  const double rp =
      (s * m.conjugate() * s + m - Matrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  if (rp > tol.sym * scale) {
    throw SelfDualViolation(rp);
  }
  const RealVector ev = eigensolve(m).eigenvalues();
  if (ev.minCoeff() < -tol.num || ev.maxCoeff() > 1.0 + tol.num) {
    throw std::invalid_argument("density eigenvalues leave [0, 1]");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - n) > tol.num) {
    throw std::invalid_argument("density trace differs from the mode count");
  }
  return OneParticleDensity(std::move(m));
}

OneParticleDensity OneParticleDensity::unchecked(Matrix m) {
  return OneParticleDensity(std::move(m));
}

BogoliubovTransform BogoliubovTransform::validated(Matrix m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
    throw std::invalid_argument("transform must be square with even dimension");
  }
  const int n = static_cast<int>(m.rows()) / 2;
  const double ru =
      (m * m.adjoint() - Matrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  if (ru > tol.sym * 10.0) {
    throw std::invalid_argument("transform is not unitary, residual " +
                                std::to_string(ru));
  }
  const Matrix s = block_swap(n);
  const double rs = (s * m * s - m.conjugate()).cwiseAbs().maxCoeff();
  if (rs > tol.sym * 10.0) throw SelfDualViolation(rs);
  return BogoliubovTransform(std::move(m));
}

BogoliubovTransform BogoliubovTransform::unchecked(Matrix m) {
  return BogoliubovTransform(std::move(m));
}

CovarianceMatrix validate_covariance(const Matrix& m, const Tolerances& tol) {
  return CovarianceMatrix::validated(m, tol);
}

namespace {

// Splits a kernel subspace into conjugation-paired halves.  The projected
// perturbation diag(D, -D) anticommutes with psi -> S conj(psi), so its
// positive-eigenvalue vectors are automatically orthogonal to the images of
// each other under that map.
std::vector<Vector> split_kernel(const Matrix& kernel_basis, int n_modes,
                                 const Tolerances& tol) {
  const int dim = static_cast<int>(kernel_basis.cols());
  if (dim % 2 != 0) {
    throw DegenerateKernel("kernel dimension is odd: " + std::to_string(dim));
  }
  RealVector direction(2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    direction[j] = static_cast<double>(j + 1);
    direction[n_modes + j] = -static_cast<double>(j + 1);
  }
  const Matrix projected =
      kernel_basis.adjoint() * direction.asDiagonal() * kernel_basis;
  const auto es = eigensolve(projected);

  for (double lambda : {1e-8, 1e-6, 1e-4}) {
    const double split = lambda * es.eigenvalues().cwiseAbs().minCoeff();
    if (split > 10.0 * tol.diag) {
      std::vector<Vector> out;
      for (int i = dim - 1; i >= dim / 2; --i) {  // positive half, descending
        Vector psi = kernel_basis * es.eigenvectors().col(i);
        canonicalize_phase(psi);
        out.push_back(std::move(psi));
      }
      return out;
    }
  }
  throw DegenerateKernel(
      "perturbation schedule failed to split a kernel of dimension " +
      std::to_string(dim));
}

BogoliubovModes diagonalize_with_threshold(const CovarianceMatrix& c,
                                           const Tolerances& tol,
                                           double kernel_cut) {
  const int n = c.dim_modes();
  const Matrix& m = c.matrix();
  const auto es = eigensolve(m);
  const RealVector& ev = es.eigenvalues();  // ascending

  std::vector<int> positive;  // indices with ev > cut, collected descending
  std::vector<int> kernel;
  for (int i = 2 * n - 1; i >= 0; --i) {
    if (ev[i] > kernel_cut) {
      positive.push_back(i);
    } else if (ev[i] >= -kernel_cut) {
      kernel.push_back(i);
    }
  }
  if (static_cast<int>(positive.size() + kernel.size() / 2) != n) {
    throw DegenerateKernel("eigenvalues do not pair across the kernel cut");
  }

  Matrix pos_block(2 * n, n);
  RealVector modes(n);
  int col = 0;
  for (int idx : positive) {
    Vector psi = es.eigenvectors().col(idx);
    canonicalize_phase(psi);
    pos_block.col(col) = psi;
    modes[col] = ev[idx];
    ++col;
  }
  if (!kernel.empty()) {
    Matrix kernel_basis(2 * n, kernel.size());
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      kernel_basis.col(k) = es.eigenvectors().col(kernel[k]);
    }
    for (Vector& psi : split_kernel(kernel_basis, n, tol)) {
      const double rayleigh = (psi.adjoint() * m * psi)(0, 0).real();
      pos_block.col(col) = psi;
      modes[col] = std::max(0.0, rayleigh);
      ++col;
    }
  }

  Matrix basis(2 * n, 2 * n);
  basis.leftCols(n) = pos_block;
  basis.rightCols(n) = block_swap(n) * pos_block.conjugate();
  return BogoliubovModes{BogoliubovTransform::validated(basis.adjoint(), tol),
                         modes};
}

}  // namespace

BogoliubovModes bogoliubov_diagonalize(const CovarianceMatrix& c,
                                       const Tolerances& tol) {
  const double scale = std::max(1.0, c.matrix().cwiseAbs().maxCoeff());
  // Escalate the kernel cut when a near-zero pair is too close to resolve:
  // the paired treatment restores the exact conjugation structure at the
  // cost of a diagonal residual bounded by the cut.
  double cut = tol.diag * scale;
  for (int attempt = 0; attempt < 2; ++attempt, cut *= 100.0) {
    try {
      return diagonalize_with_threshold(c, tol, cut);
    } catch (const std::invalid_argument&) {
    } catch (const DegenerateKernel&) {
    }
  }
  return diagonalize_with_threshold(c, tol, cut);
}

OneParticleDensity density_from_covariance(const CovarianceMatrix& c) {
  const auto es = eigensolve(c.matrix());
  RealVector occ = es.eigenvalues().unaryExpr(&logistic_occupation);
  Matrix t = es.eigenvectors() * occ.asDiagonal() *
             es.eigenvectors().adjoint();
  t = 0.5 * (t + t.adjoint());
  return OneParticleDensity::unchecked(std::move(t));
}

CovarianceMatrix covariance_from_density(const OneParticleDensity& t,
                                         double eigen_clip, bool strict) {
  const auto es = eigensolve(t.matrix());
  RealVector occ = es.eigenvalues();
  for (int i = 0; i < occ.size(); ++i) {
    if (occ[i] < eigen_clip || occ[i] > 1.0 - eigen_clip) {
      if (strict) {
        throw SingularOccupation("eigenvalue " + std::to_string(occ[i]) +
                                 " at the occupation boundary");
      }
      occ[i] = std::clamp(occ[i], eigen_clip, 1.0 - eigen_clip);
    }
  }
  const RealVector c = occ.unaryExpr(
      [](double d) { return 0.5 * std::log((1.0 - d) / d); });
  Matrix m = es.eigenvectors() * c.asDiagonal() * es.eigenvectors().adjoint();
  m = 0.5 * (m + m.adjoint());
  return CovarianceMatrix::unchecked(std::move(m));
}

double von_neumann_entropy(const OneParticleDensity& t) {
  const RealVector ev = eigensolve(t.matrix()).eigenvalues();
  double s = 0.0;
  for (int i = 0; i < ev.size(); ++i) s -= xlogx(ev[i]);
  return s;
}

namespace {

// Quadratic forms <v_j| M |v_j> for all columns of v.
RealVector diagonal_in_basis(const Matrix& m, const Matrix& v) {
  return (v.adjoint() * m * v).diagonal().real();
}

struct RelativeEntropyTerms {
  double cross_entropy_gap;  // tr{ T (log T - log T0) }
  bool infinite;
};

RelativeEntropyTerms kullback_part(
    const Eigen::SelfAdjointEigenSolver<Matrix>& es_t,
    const Eigen::SelfAdjointEigenSolver<Matrix>& es_t0,
    const Tolerances& tol) {
  const RealVector& t = es_t.eigenvalues();
  const RealVector& t0 = es_t0.eigenvalues();
  const Matrix overlap = es_t.eigenvectors().adjoint() * es_t0.eigenvectors();
  const Eigen::MatrixXd w = overlap.cwiseAbs2();

  const RealVector t_pos = t.cwiseMax(0.0);
  double s = 0.0;
  for (int i = 0; i < t.size(); ++i) s += xlogx(t[i]);
  for (int j = 0; j < t0.size(); ++j) {
    const double mass = w.col(j).dot(t_pos);
    if (t0[j] < tol.support) {
      if (mass > 100.0 * tol.support) return {0.0, true};
      continue;  // 0 * log 0
    }
    s -= mass * std::log(t0[j]);
  }
  return {s, false};
}

}  // namespace

double relative_entropy(const OneParticleDensity& t,
                        const OneParticleDensity& t0,
                        const CovarianceMatrix& c0, const Tolerances& tol) {
  const auto es_t = eigensolve(t.matrix());
  const auto es_t0 = eigensolve(t0.matrix());
  const auto terms = kullback_part(es_t, es_t0, tol);
  if (terms.infinite) return kInf;

  const auto es_c0 = eigensolve(c0.matrix());
  const RealVector tt = diagonal_in_basis(t.matrix(), es_c0.eigenvectors());
  const RealVector tt0 = diagonal_in_basis(t0.matrix(), es_c0.eigenvectors());
  double correction = 0.0;
  for (int k = 0; k < tt.size(); ++k) {
    correction += (tt[k] - tt0[k]) * log_two_cosh(es_c0.eigenvalues()[k]);
  }
  return terms.cross_entropy_gap - correction;
}

double relative_entropy(const OneParticleDensity& t,
                        const OneParticleDensity& t0, const Tolerances& tol) {
  const auto es_t = eigensolve(t.matrix());
  const auto es_t0 = eigensolve(t0.matrix());
  const auto terms = kullback_part(es_t, es_t0, tol);
  if (terms.infinite) return kInf;

  // log(2 cosh C0) = -(1/2) log(T0 (1 - T0)) on the eigenbasis of T0.
  const RealVector tt = diagonal_in_basis(t.matrix(), es_t0.eigenvectors());
  double correction = 0.0;
  for (int k = 0; k < tt.size(); ++k) {
    const double d = std::clamp(es_t0.eigenvalues()[k], tol.support,
                                1.0 - tol.support);
    correction += (tt[k] - es_t0.eigenvalues()[k]) *
                  (-0.5) * std::log(d * (1.0 - d));
  }
  return terms.cross_entropy_gap - correction;
}

namespace {

void check_unitary_equivalence(const RealVector& spec_t,
                               const RealVector& spec_t0,
                               const Tolerances& tol) {
  const double dev = (spec_t - spec_t0).cwiseAbs().maxCoeff();
  if (dev > tol.diag) throw NotUnitarilyEquivalent(dev);
}

}  // namespace

double relative_entropy_unitary(const OneParticleDensity& t,
                                const OneParticleDensity& t0,
                                const CovarianceMatrix& c0,
                                const Tolerances& tol) {
  const auto es_t = eigensolve(t.matrix());
  const auto es_t0 = eigensolve(t0.matrix());
  check_unitary_equivalence(es_t.eigenvalues(), es_t0.eigenvalues(), tol);
  return ((t.matrix() - t0.matrix()) * c0.matrix()).trace().real();
}

double relative_entropy_unitary(const OneParticleDensity& t,
                                const OneParticleDensity& t0,
                                const Tolerances& tol) {
  const auto es_t = eigensolve(t.matrix());
  const auto es_t0 = eigensolve(t0.matrix());
  check_unitary_equivalence(es_t.eigenvalues(), es_t0.eigenvalues(), tol);
  const RealVector tt = diagonal_in_basis(t.matrix(), es_t0.eigenvectors());
  double s = 0.0;
  for (int k = 0; k < tt.size(); ++k) {
    const double d = std::clamp(es_t0.eigenvalues()[k], tol.eigen_clip,
                                1.0 - tol.eigen_clip);
    s += (tt[k] - es_t0.eigenvalues()[k]) * 0.5 * std::log((1.0 - d) / d);
  }
  return s;
}

double partition_log(const CovarianceMatrix& c) {
  const RealVector ev = eigensolve(c.matrix()).eigenvalues();
  double s = 0.0;
  for (int i = 0; i < ev.size(); ++i) s += log_two_cosh(ev[i]);
  return 0.5 * s;
}

}  // namespace fgs
