#pragma once

#include <string>
#include <vector>

#include "chainlocal/group.hpp"

namespace chainlocal {

// Fixed generator lists for the groups shipped with the artifact.
// Required: S3 S4 S5 A4 A5 D8 D12 Q8 C2xC2 SL(2,3); stretch: S6 A6 PSL(2,7).
GroupHandle resolve_catalog(const std::string& name,
                            const Limits& limits = default_limits());

std::vector<std::string> catalog_names();          // required entries
std::vector<std::string> catalog_stretch_names();  // behind a flag

// One permutation per line in disjoint-cycle notation with 0-based points;
// the degree is the largest point mentioned plus one. Blank lines and lines
// starting with '#' are skipped.
GroupHandle group_from_file(const std::string& path,
                            const Limits& limits = default_limits());

}  // namespace chainlocal
