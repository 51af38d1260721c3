#pragma once

#include <cstdint>

#include "fgs/types.hpp"

namespace fgs {

/// Deterministic generator (splitmix64 + Box-Muller) so that seeded runs
/// produce identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Random valid covariance: A = symmetrized complex Gaussian, B =
/// antisymmetrized, assembled into the self-dual block form and rescaled
/// to the given spectral norm.
CovarianceMatrix random_covariance(Rng& rng, int n_modes,
                                   double spectral_norm = 2.0);

/// Structure-preserving unitary obtained by composing the diagonalizing
/// transforms of two independent random covariances.
BogoliubovTransform random_bogoliubov(Rng& rng, int n_modes);

/// Occupations drawn uniformly from [margin, 1 - margin].
RealVector random_occupations(Rng& rng, int n_modes, double margin = 0.05);

/// Complex mode profile with Gaussian entries, optionally normalized.
Vector random_profile(Rng& rng, int n_modes, bool normalized = true);

}  // namespace fgs
