#include "fgs/fock.hpp"

#include <cmath>
#include <limits>

namespace fgs::fock {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void check_modes(int n_modes) {
  if (n_modes < 1 || n_modes > kMaxModes) {
    throw DimensionTooLarge(n_modes, kMaxModes);
  }
}

Eigen::SelfAdjointEigenSolver<Matrix> eigensolve(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  return es;
}

double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

}  // namespace

FieldOperators field_operators(int n_modes) {
  check_modes(n_modes);
  // Single-mode annihilator in the {|0>, |1>} basis and the parity string.
  Matrix lower(2, 2), sign(2, 2), unit(2, 2);
  lower << 0, 1, 0, 0;
  sign << 1, 0, 0, -1;
  unit = Matrix::Identity(2, 2);

  FieldOperators ops;
  ops.n_modes = n_modes;
  for (int j = 0; j < n_modes; ++j) {
    Matrix psi = Matrix::Identity(1, 1);
    for (int k = 0; k < n_modes; ++k) {
      psi = kron(psi, k < j ? sign : (k == j ? lower : unit));
    }
    ops.create.push_back(psi.adjoint());
    ops.annihilate.push_back(std::move(psi));
  }
  return ops;
}

Matrix parity_operator(int n_modes) {
  check_modes(n_modes);
  Matrix sign(2, 2);
  sign << 1, 0, 0, -1;
  Matrix p = Matrix::Identity(1, 1);
  for (int k = 0; k < n_modes; ++k) p = kron(p, sign);
  return p;
}

Matrix quadratic_hamiltonian(const CovarianceMatrix& c) {
  const int n = c.dim_modes();
  check_modes(n);
  const auto ops = field_operators(n);
  const Matrix a = c.block_a();
  const Matrix b = c.block_b();
  const int dim = 1 << n;
  Matrix q = Matrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (a(j, k) != 0.0) {
        q += a(j, k) * ops.create[j] * ops.annihilate[k];
        q -= std::conj(a(j, k)) * ops.annihilate[j] * ops.create[k];
      }
      if (b(j, k) != 0.0) {
        q += b(j, k) * ops.create[j] * ops.create[k];
        q -= std::conj(b(j, k)) * ops.annihilate[j] * ops.annihilate[k];
      }
    }
  }
  return q;
}

Matrix gaussian_density_matrix(const CovarianceMatrix& c) {
  const auto es = eigensolve(quadratic_hamiltonian(c));
  const double shift = es.eigenvalues().minCoeff();
  RealVector boltzmann =
      (-(es.eigenvalues().array() - shift)).exp().matrix();
  boltzmann /= boltzmann.sum();
  Matrix w = es.eigenvectors() * boltzmann.asDiagonal() *
             es.eigenvectors().adjoint();
  return 0.5 * (w + w.adjoint());
}

Matrix diagonal_density_matrix(const RealVector& occupations) {
  const int n = static_cast<int>(occupations.size());
  check_modes(n);
  Matrix w = Matrix::Identity(1, 1);
  for (int j = 0; j < n; ++j) {
    Matrix factor(2, 2);
    factor << 1.0 - occupations[j], 0, 0, occupations[j];
    w = kron(w, factor);
  }
  return w;
}

Matrix excitation_unitary(const Vector& f) {
  const double norm_sq = f.squaredNorm();
  if (std::abs(norm_sq - 1.0) > 1e-12) throw NotNormalized(norm_sq);
  const int n = static_cast<int>(f.size());
  const auto ops = field_operators(n);
  const int dim = 1 << n;
  Matrix u = Matrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    u += f[j] * ops.create[j] + std::conj(f[j]) * ops.annihilate[j];
  }
  return u;
}

double von_neumann_entropy(const Matrix& w) {
  const RealVector ev = eigensolve(w).eigenvalues();
  double s = 0.0;
  for (int i = 0; i < ev.size(); ++i) s -= xlogx(ev[i]);
  return s;
}

double relative_entropy(const Matrix& w, const Matrix& w0) {
  const auto es_w = eigensolve(w);
  const auto es_w0 = eigensolve(w0);
  const RealVector& p = es_w.eigenvalues();
  const RealVector& p0 = es_w0.eigenvalues();
  const Eigen::MatrixXd overlap =
      (es_w.eigenvectors().adjoint() * es_w0.eigenvectors()).cwiseAbs2();
  const RealVector p_pos = p.cwiseMax(0.0);

  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) s += xlogx(p[i]);
  for (int j = 0; j < p0.size(); ++j) {
    const double mass = overlap.col(j).dot(p_pos);
    if (p0[j] < 1e-13) {
      if (mass > 1e-12) return kInf;  // support violation
      continue;
    }
    s -= mass * std::log(p0[j]);
  }
  return s;
}

OneParticleDensity reduced_density(const Matrix& w) {
  const int dim = static_cast<int>(w.rows());
  int n = 0;
  while ((1 << n) < dim) ++n;
  if ((1 << n) != dim) {
    throw std::invalid_argument("density dimension is not a power of two");
  }
  check_modes(n);
  const auto ops = field_operators(n);

  // Doubled operator vector X = (Psi_1..Psi_N, Psi^+_1..Psi^+_N).
  std::vector<const Matrix*> x(2 * n);
  std::vector<const Matrix*> xdag(2 * n);
  for (int j = 0; j < n; ++j) {
    x[j] = &ops.annihilate[j];
    xdag[j] = &ops.create[j];
    x[n + j] = &ops.create[j];
    xdag[n + j] = &ops.annihilate[j];
  }
  Matrix t(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    for (int k = 0; k < 2 * n; ++k) {
      t(j, k) = ((*xdag[k]) * (*x[j]) * w).trace();
    }
  }
  return OneParticleDensity::unchecked(std::move(t));
}

Matrix excited_density(const Matrix& w0, const Vector& f) {
  const int n = static_cast<int>(f.size());
  check_modes(n);
  const auto ops = field_operators(n);
  const int dim = 1 << n;
  if (w0.rows() != dim) {
    throw std::invalid_argument("reference state dimension does not match f");
  }
  Matrix b = Matrix::Identity(dim, dim);
  for (int j = 0; j < n; ++j) {
    b += f[j] * ops.create[j] + std::conj(f[j]) * ops.annihilate[j];
  }
  Matrix w = b * w0 * b;
  const Matrix p = parity_operator(n);
  w = 0.5 * (w + p * w * p);  // even-parity sector
  w /= 1.0 + f.squaredNorm();
  return 0.5 * (w + w.adjoint());
}

double partition_log(const CovarianceMatrix& c) {
  const RealVector ev = eigensolve(quadratic_hamiltonian(c)).eigenvalues();
  const double shift = -ev.minCoeff();
  return std::log((ev.array() * -1.0 - shift).exp().sum()) + shift;
}

}  // namespace fgs::fock
