#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dynplanar/types.hpp"

namespace dynplanar {

struct EdgeListGraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Named graphs used throughout tests and scenarios.
namespace named {

EdgeListGraph tri();
EdgeListGraph c4();
EdgeListGraph k4();
EdgeListGraph k5();
EdgeListGraph k33();
EdgeListGraph cube();
// Two triangles sharing vertex 0: (0,1,2) and (0,3,4).
EdgeListGraph bowtie();
// Triangles (0,1,2), (2,3,4), (4,5,6) chained through articulations 2 and 4.
EdgeListGraph chain3();
// Hubs s=0, t=1 joined by paths through x1..x4 = 2..5.
EdgeListGraph k2_4();
EdgeListGraph path(int k);
EdgeListGraph cycle(int k);
EdgeListGraph by_name(const std::string& name);

}  // namespace named

}  // namespace dynplanar
