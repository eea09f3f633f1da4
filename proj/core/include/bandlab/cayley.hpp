#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bandlab/lamp.hpp"

namespace bandlab {

// Finite radius-R portion of the labeled Cayley graph of the lamplighter
// group with the relator cells of levels 0..level-1 attached wherever the
// whole boundary cycle is present.
class Complex2 {
 public:
  struct Edge {
    int from = 0;
    int to = 0;
    char label = 'a';  // 'a' undirected, 'x' directed from -> to
  };
  struct Cell {
    int base = 0;
    int k = 0;                  // relator index; k = 0 is the a^2 cell
    std::vector<int> boundary;  // vertex cycle starting and ending at base
  };

  const std::vector<LampElement>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int radius() const { return radius_; }
  int level() const { return level_; }

  // BFS depth from the identity; exact word-metric distance inside the ball.
  int depth(int vertexId) const { return depth_[static_cast<std::size_t>(vertexId)]; }
  std::optional<int> findVertex(const LampElement& p) const;

  // Neighbour list as (vertex id, letter read) pairs; 'a', 'x' or 'X'.
  const std::vector<std::pair<int, char>>& neighbours(int vertexId) const {
    return adjacency_[static_cast<std::size_t>(vertexId)];
  }

 private:
  friend Complex2 buildBall(int radius, int level);

  std::vector<LampElement> vertices_;
  std::vector<int> depth_;
  std::vector<Edge> edges_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::pair<int, char>>> adjacency_;
  std::unordered_map<LampElement, int, LampHash> index_;
  int radius_ = 0;
  int level_ = 1;
};

Complex2 buildBall(int radius, int level);

// Vertex/edge/cell subset of an ambient complex, closed under the rule
// that a cell belongs as soon as all of its vertices do.
struct SubComplex {
  const Complex2* ambient = nullptr;
  std::vector<int> vertexIds;  // sorted
  std::vector<int> edgeIds;    // sorted indices into ambient edges
  std::vector<int> cellIds;    // sorted indices into ambient cells

  bool containsVertex(int id) const;
};

// Single vertex seed, usually the identity.
SubComplex seed(const Complex2& ambient, const LampElement& p);

// One-step star: everything joined to Q by an edge, then cell closure.
// Throws if Q touches vertices whose neighbourhoods the ambient ball
// truncates ("ambient ball too small").
SubComplex star(const SubComplex& q);
SubComplex starK(const SubComplex& q, int k);

// Smallest K with every subset-combination of the first n lamps (shift 0)
// inside the K-fold star of the identity, i.e. the max BFS distance over
// the 2^n elements.  Throws "ambient ball too small" if one of them is
// not contained in the ambient ball.
int computeK(int n, int ambientRadius);

// Word-metric distance by on-the-fly BFS, std::nullopt once > bound.
std::optional<int> distance(const LampElement& p, const LampElement& q,
                            int bound);

std::string toDotText(const Complex2& c);
std::string toJsonText(const Complex2& c);

}  // namespace bandlab
