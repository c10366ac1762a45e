#include "dynplanar/edge_list.hpp"

namespace dynplanar::named {

EdgeListGraph tri() { return {3, {{0, 1}, {1, 2}, {0, 2}}}; }

EdgeListGraph c4() { return cycle(4); }

EdgeListGraph k4() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }

EdgeListGraph k5() {
  EdgeListGraph g{5, {}};
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b) g.edges.emplace_back(a, b);
  return g;
}

EdgeListGraph k33() {
  EdgeListGraph g{6, {}};
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 3; b < 6; ++b) g.edges.emplace_back(a, b);
  return g;
}

EdgeListGraph cube() {
  EdgeListGraph g{8, {}};
  for (VertexId a = 0; a < 8; ++a)
    for (int bit = 0; bit < 3; ++bit) {
      VertexId b = a ^ (1 << bit);
      if (a < b) g.edges.emplace_back(a, b);
    }
  return g;
}

EdgeListGraph bowtie() { return {5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}}; }

EdgeListGraph chain3() {
  return {7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}}};
}

EdgeListGraph k2_4() {
  EdgeListGraph g{6, {}};
  for (VertexId x = 2; x < 6; ++x) {
    g.edges.emplace_back(0, x);
    g.edges.emplace_back(x, 1);
  }
  return g;
}

EdgeListGraph path(int k) {
  EdgeListGraph g{k, {}};
  for (VertexId a = 0; a + 1 < k; ++a) g.edges.emplace_back(a, a + 1);
  return g;
}

EdgeListGraph cycle(int k) {
  EdgeListGraph g = path(k);
  if (k >= 3) g.edges.emplace_back(0, k - 1);
  return g;
}

EdgeListGraph by_name(const std::string& name) {
  if (name == "TRI") return tri();
  if (name == "C4") return c4();
  if (name == "K4") return k4();
  if (name == "K5") return k5();
  if (name == "K3_3") return k33();
  if (name == "CUBE") return cube();
  if (name == "BOWTIE") return bowtie();
  if (name == "CHAIN3") return chain3();
  if (name == "K2_4") return k2_4();
  throw Error(ErrorCode::ParseError, "unknown graph name " + name);
}

}  // namespace dynplanar::named
