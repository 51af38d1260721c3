#pragma once

#include <functional>

#include "fgs/types.hpp"

// Spectrum of the reduced one-particle density operator of the wedge,
// the rapidity -> boost-momentum transform, the principal-value kernel
// transform behind the wedge overlaps, and the relative-entropy quadrature
// for single excitations.
namespace fgs::rindler {

/// Occupation of the wedge vacuum at boost momentum ell:
/// 1 / (1 + e^{4 pi ell}) = (1 - tanh(2 pi ell)) / 2, overflow-safe.
double vacuum_occupation(double ell);

enum class Region { Minkowski, Rindler };

/// Coefficient multiplying the delta normalization of the boost plane-wave
/// overlaps: 8 pi^2 in Minkowski, 4 pi^2 (1 - tanh(2 pi ell)) in the wedge.
/// Their ratio equals vacuum_occupation(ell).
double gram_coefficient(Region region, double ell);

/// Occupation law sigma = eta(boost momentum) of a quasi-free reference
/// state diagonal in the boost modes.
struct OccupationLaw {
  enum class Kind {
    RindlerVacuum,        // 1 / (1 + e^{4 pi ell})
    Thermal,              // 1 / (1 + e^{beta ell})
    ZeroTemperature,      // step(-ell), 1/2 at ell = 0
    InfiniteTemperature,  // 1/2
    Custom
  };
  Kind kind = Kind::RindlerVacuum;
  double beta = 0.0;
  std::function<double(double)> eta;  // Kind::Custom only

  static OccupationLaw rindler_vacuum() { return {Kind::RindlerVacuum, 0.0, {}}; }
  static OccupationLaw thermal(double beta) { return {Kind::Thermal, beta, {}}; }
  static OccupationLaw zero_temperature() { return {Kind::ZeroTemperature, 0.0, {}}; }
  static OccupationLaw infinite_temperature() { return {Kind::InfiniteTemperature, 0.0, {}}; }
  static OccupationLaw custom(std::function<double(double)> eta) {
    return {Kind::Custom, 0.0, std::move(eta)};
  }
};

double occupation(const OccupationLaw& law, double ell);

/// Mode profile sampled on a uniform rapidity grid; the profile must be
/// negligible at the grid endpoints (compactly supported inside it).
struct RapidityProfile {
  RealVector theta;
  Vector values;

  static RapidityProfile validated(RealVector theta, Vector values);
  double spacing() const { return theta[1] - theta[0]; }
};

/// Mode profile sampled on a strictly increasing boost-momentum grid.
struct BoostModeProfile {
  RealVector ell;
  Vector values;

  static BoostModeProfile validated(RealVector ell, Vector values);
  /// L^2 norm^2 of the samples by the trapezoid rule.
  double norm_sq() const;
};

/// Closed-form Gaussian boost profile with |f(ell)|^2 a unit-mass normal
/// density of mean `center` and standard deviation `width`.
struct GaussianBoostProfile {
  double center = 0.0;
  double width = 1.0;
};

/// f~(ell) = (1/2pi) integral e^{i ell theta} f(theta) dtheta by the
/// trapezoid rule on the rapidity grid.  Throws GridTooCoarse when the
/// requested |ell| exceeds the Nyquist bound pi / dtheta.
BoostModeProfile rapidity_to_boost(const RapidityProfile& f,
                                   const RealVector& ell_grid);

struct PvConfig {
  double abs_tol = 1e-9;
  double cutoff = 40.0;  // kernel tail is < 2 e^{-cutoff}
};

/// Principal-value transform of the wedge overlap kernel,
///   PV integral e^{4 i ell beta} / (e^beta - e^{-beta}) d beta,
/// evaluated by folding out the odd part (the regularized integrand
/// sin(4 ell beta)/sinh(beta) is smooth at 0) plus adaptive quadrature.
/// Closed form: (i pi / 2) tanh(2 pi ell).
Complex pv_kernel_transform(double ell, const PvConfig& config = {});

struct EntropyEstimate {
  double value = 0.0;
  double quad_error = 0.0;  // quadrature-rule error estimate
  double tail_bound = 0.0;  // truncation estimate from the profile decay
};

/// Relative entropy of the single excitation with boost profile f~ over the
/// wedge vacuum:  4 pi integral ell |f~(ell)|^2 tanh(2 pi ell) d ell.
/// The integrand is pointwise non-negative.
EntropyEstimate relative_entropy(const BoostModeProfile& profile);
EntropyEstimate relative_entropy(const GaussianBoostProfile& profile,
                                 double abs_tol = 1e-9);

/// Non-unitary excitation of strength |f|^2 on an eigenmode at boost
/// momentum ell of the reference state eta(H).  Delegates to the
/// two-mode closed form with lambda = eta(ell); throws SupportViolation
/// when eta(ell) is 0 or 1 and the excitation does not vanish.
double general_vacuum_excitation_entropy(const OccupationLaw& law, double ell,
                                         double f_norm_sq);

}  // namespace fgs::rindler
