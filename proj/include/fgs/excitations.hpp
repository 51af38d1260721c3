#pragma once

#include "fgs/types.hpp"

// Closed-form relative entropies of excited states over particle-number
// diagonal reference states.
namespace fgs::excitations {

/// Occupations d_n in [0,1] of a particle-number diagonal state, together
/// with the derived log-ratios s_n = log((1-d_n)/d_n) (+-inf at the
/// endpoints).
class VacuumSpectrum {
 public:
  explicit VacuumSpectrum(RealVector occupations);
  int size() const { return static_cast<int>(d_.size()); }
  const RealVector& occupation() const { return d_; }
  RealVector log_ratio() const;

 private:
  RealVector d_;
};

/// Complex mode profile of an excitation; unit norm is required only on
/// the unitary path.
class ExcitationProfile {
 public:
  explicit ExcitationProfile(Vector amplitudes);
  int size() const { return static_cast<int>(f_.size()); }
  const Vector& amplitudes() const { return f_; }
  double norm_sq() const { return norm_sq_; }

 private:
  Vector f_;
  double norm_sq_;
};

/// Relative entropy of the unitary excitation U = Psi^dagger(f) + Psi(conj f)
/// of the diagonal state:  sum_k |f_k|^2 s_k (1 - 2 d_k).  Requires
/// ||f|| = 1 (NotNormalized otherwise).  Occupations at exactly 0 or 1
/// give +infinity unless the profile vanishes there (0 * inf := 0).
double excite_relative_entropy(const VacuumSpectrum& vacuum,
                               const ExcitationProfile& profile);

/// The 2x2 one-particle densities of the non-unitary excitation
/// (1 + Psi(conj f) + Psi^dagger(f)) applied to an eigenmode of occupation
/// lambda, restricted to the invariant plane spanned by f and conj(f):
///   excited   = diag(lambda + (1-lambda) x,  (1-lambda) + lambda x) / (1+x)
///   reference = diag(lambda, 1 - lambda)
/// with x = |f|^2.  Both have unit trace.
struct TwoModeDensities {
  Eigen::Matrix2d excited;
  Eigen::Matrix2d reference;
};
TwoModeDensities nonunitary_densities(double lambda, double f_norm_sq);

/// tr{ T (log T - log T0) } on the two densities above.  Nondecreasing in
/// |f|^2, exactly 0 at lambda = 1/2 or |f|^2 = 0, with supremum
/// (1 - 2 lambda) log((1-lambda)/lambda) as |f|^2 -> infinity.
double nonunitary_relative_entropy(double lambda, double f_norm_sq);

}  // namespace fgs::excitations
