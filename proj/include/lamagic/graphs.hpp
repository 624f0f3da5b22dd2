#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamagic/families.hpp"
#include "lamagic/matrix.hpp"

namespace lamagic {

enum class GraphFamily { Kmn, rKmn, K1mn, Custom };

/// Small simple graph with partition tags. Vertex order is canonical:
/// copies outermost, first side then second side; the apex vertex of a
/// three-partition graph comes first.
struct PartiteGraph {
  GraphFamily family = GraphFamily::Custom;
  int m = 0, n = 0, r = 0;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> vertex_names;
};

PartiteGraph make_rkmn(int m, int n, int r);
PartiteGraph make_kmn(int m, int n);
PartiteGraph make_k1mn(int m, int n);
PartiteGraph make_path(int vertices);
PartiteGraph make_custom(int vertices, std::vector<std::pair<int, int>> edges);

/// labels[e] is the label of edges[e]; a valid labeling is a bijection
/// onto 1..|E|.
struct EdgeLabeling {
  PartiteGraph graph;
  std::vector<int> labels;
};

/// Vertex weights (sum of incident labels), their distinct values, and
/// whether the induced coloring is proper.
struct WeightColoring {
  std::vector<long long> weights;
  std::vector<long long> classes;
  bool proper = false;
};

EdgeLabeling labeling_from_matrix_family(const PartiteGraph& g, const MatrixFamily& fam);
EdgeLabeling labeling_from_b_matrix(const PartiteGraph& g, const BlankedMatrix& b);

WeightColoring vertex_weights(const EdgeLabeling& l);

/// Indices of edges whose endpoints get equal weights; empty iff the
/// labeling is local antimagic.
std::vector<int> check_local_antimagic(const EdgeLabeling& l);

/// Bounds on the number of weight classes achievable for a family, with
/// the governing construction or obstruction named. An absent upper
/// bound marks parameters outside the covered cases.
struct ChiBounds {
  int lower = 0;
  std::optional<int> upper;
  std::string lower_reason;
  std::string upper_reason;
};

ChiBounds chi_la_bounds(GraphFamily family, int m, int n, int r = 1);

}  // namespace lamagic
