#pragma once

#include <optional>
#include <vector>

#include "dynplanar/edge_list.hpp"

namespace dynplanar {

// Neighbour order per vertex, as produced by the static embedder.
using RotationSystem = std::vector<std::vector<VertexId>>;

// Boyer-Myrvold planarity test. For graphs with at most 9 edges the answer is
// also checked against exhaustive rotation-system enumeration; a disagreement
// throws std::logic_error.
bool is_planar_static(const EdgeListGraph& g);

std::optional<RotationSystem> find_embedding_static(const EdgeListGraph& g);

// Exhaustive check: does some rotation system satisfy Euler's formula on every
// component? Exponential; intended for tiny graphs only.
bool is_planar_by_enumeration(const EdgeListGraph& g);

inline constexpr int kEnumerationEdgeLimit = 9;

// Per vertex: is its connected component planar?
std::vector<bool> component_planarity_static(const EdgeListGraph& g);

}  // namespace dynplanar
