#pragma once

#include <iosfwd>
#include <string>

#include "fgs/rindler.hpp"
#include "fgs/types.hpp"

// Shared file formats: the JSON matrix schema
//   {"n_modes": N, "re": [[...]], "im": [[...]]}
// for 2N x 2N matrices (and its 1-D variant for mode vectors), plus CSV
// profiles with columns (ell|theta),re,im.  Writers emit; readers validate
// shape, and structural invariants where the target type has them.
namespace fgs::io {

std::string matrix_to_json(const Matrix& m, int n_modes);
Matrix matrix_from_json(const std::string& text);  // shape-checked

std::string vector_to_json(const Vector& v);
Vector vector_from_json(const std::string& text);

void save_matrix(const std::string& path, const Matrix& m, int n_modes);
Matrix load_matrix(const std::string& path);

CovarianceMatrix load_covariance(const std::string& path,
                                 const Tolerances& tol = {});
OneParticleDensity load_density(const std::string& path,
                                const Tolerances& tol = {});

/// A sampled profile parsed from CSV; `axis` is the header of the first
/// column ("ell" or "theta").
struct ProfileData {
  std::string axis;
  RealVector grid;
  Vector values;
};

/// Parse errors carry the 1-based line number.
ProfileData parse_profile_csv(std::istream& in, const std::string& name);
ProfileData load_profile_csv(const std::string& path);
void write_profile_csv(std::ostream& out, const ProfileData& profile);

/// Shortest round-trip decimal formatting used by every emitter.
std::string format_double(double x);

}  // namespace fgs::io
