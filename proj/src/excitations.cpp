#include "fgs/excitations.hpp"

#include <cmath>
#include <limits>

namespace fgs::excitations {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

VacuumSpectrum::VacuumSpectrum(RealVector occupations)
    : d_(std::move(occupations)) {
  if (d_.size() == 0) {
    throw std::invalid_argument("vacuum spectrum must not be empty");
  }
  for (int i = 0; i < d_.size(); ++i) {
    if (!(d_[i] >= 0.0 && d_[i] <= 1.0)) {
      throw std::invalid_argument("occupation " + std::to_string(d_[i]) +
                                  " outside [0, 1]");
    }
  }
}

RealVector VacuumSpectrum::log_ratio() const {
  RealVector s(d_.size());
  for (int i = 0; i < d_.size(); ++i) {
    if (d_[i] == 0.0) {
      s[i] = kInf;
    } else if (d_[i] == 1.0) {
      s[i] = -kInf;
    } else {
      s[i] = std::log((1.0 - d_[i]) / d_[i]);
    }
  }
  return s;
}

ExcitationProfile::ExcitationProfile(Vector amplitudes)
    : f_(std::move(amplitudes)), norm_sq_(f_.squaredNorm()) {
  if (f_.size() == 0) {
    throw std::invalid_argument("excitation profile must not be empty");
  }
}

double excite_relative_entropy(const VacuumSpectrum& vacuum,
                               const ExcitationProfile& profile) {
  if (vacuum.size() != profile.size()) {
    throw std::invalid_argument("vacuum and profile dimensions differ");
  }
  if (std::abs(profile.norm_sq() - 1.0) > 1e-12) {
    throw NotNormalized(profile.norm_sq());
  }
  const RealVector& d = vacuum.occupation();
  double s = 0.0;
  for (int k = 0; k < vacuum.size(); ++k) {
    const double weight = std::norm(profile.amplitudes()[k]);
    if (weight == 0.0) continue;  // 0 * (+-inf) := 0
    if (d[k] == 0.0 || d[k] == 1.0) return kInf;
    s += weight * std::log((1.0 - d[k]) / d[k]) * (1.0 - 2.0 * d[k]);
  }
  return s;
}

TwoModeDensities nonunitary_densities(double lambda, double f_norm_sq) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("eigenvalue must lie in (0, 1)");
  }
  if (!(f_norm_sq >= 0.0)) {
    throw std::invalid_argument("|f|^2 must be non-negative");
  }
  const double x = f_norm_sq;
  TwoModeDensities out;
  out.excited.setZero();
  out.excited(0, 0) = (lambda + (1.0 - lambda) * x) / (1.0 + x);
  out.excited(1, 1) = ((1.0 - lambda) + lambda * x) / (1.0 + x);
  out.reference.setZero();
  out.reference(0, 0) = lambda;
  out.reference(1, 1) = 1.0 - lambda;
  return out;
}

double nonunitary_relative_entropy(double lambda, double f_norm_sq) {
  if (lambda == 0.5 || f_norm_sq == 0.0) return 0.0;
  const auto densities = nonunitary_densities(lambda, f_norm_sq);
  const double t1 = densities.excited(0, 0);
  const double t2 = densities.excited(1, 1);
  return t1 * std::log(t1 / lambda) + t2 * std::log(t2 / (1.0 - lambda));
}

}  // namespace fgs::excitations
