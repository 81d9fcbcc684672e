#pragma once

#include <string>
#include <vector>

namespace cusp {

enum class LieType { G2, F4, E6, E7, E8 };

std::string to_string(LieType type);
LieType parse_lie_type(const std::string& text);
const std::vector<LieType>& all_lie_types();

// Standard Cartan matrix of the root system (Bourbaki numbering).
std::vector<std::vector<long long>> cartan_matrix(LieType type);

// Determinant by exact fraction-free integer elimination; equals the order
// of the center of the simply connected group.
long long cartan_det(LieType type);

// Point count of the center in characteristic p: the prime-to-p part of the
// Cartan determinant (the etale part of the center has exactly that many
// points).
long long center_points(LieType type, int p);

}  // namespace cusp
