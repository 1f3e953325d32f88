#pragma once

#include <string>
#include <vector>

#include "apolar/homotopy.hpp"

namespace apolar {

/// Bertini input file: CONFIG block, hom_variable_group / variable_group
/// declarations, one function per equation. The squaring seed, reported
/// parameters and check equations travel in `%` comment lines.
std::string emit_bertini(const PolySystem& sys);
PolySystem parse_bertini(const std::string& text);

std::string system_to_json(const PolySystem& sys);
PolySystem system_from_json(const std::string& text);

/// JSON (leading '{') or Bertini text.
PolySystem parse_system(const std::string& text);

/// {"seed", "paths", "converged", "solutions": [{"path", "params", "residual",
///  "status", "class"}]}. Classes group converged endpoints: modulo the
/// parameter symmetries when six parameters are reported, else by distance.
std::string solutions_to_json(const PolySystem& sys, const std::vector<TrackedSolution>& sols,
                              std::uint64_t seed);

}  // namespace apolar
