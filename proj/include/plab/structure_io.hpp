#pragma once

#include <filesystem>
#include <string_view>

#include "plab/poisson.hpp"

namespace plab {

/// Parses the structure-definition text format:
///
///   # comment
///   variables: x, y, z
///   central: a, b, c          (optional)
///   omega:                    (log-canonical form; n rows over `variables`)
///   0 1 -1/2
///   -1 0 2
///   1/2 -2 0
///
/// or, instead of `omega:`, a bracket table over all declared names:
///
///   brackets:
///   x,y: a*z^2
///   x,z: b*y^2
///   y,z: c*x^2
///
/// Unlisted pairs are zero. Duplicate pairs are rejected; a pair given in
/// both orientations must be consistent under skew-symmetry. Pairs involving
/// central symbols must be zero. When validate_jacobi is set the loaded
/// structure is checked on all coordinate triples and a failure raises.
PoissonStructure parse_structure(std::string_view text, bool validate_jacobi = true);

PoissonStructure load_structure(const std::filesystem::path& path, bool validate_jacobi = true);

} // namespace plab
