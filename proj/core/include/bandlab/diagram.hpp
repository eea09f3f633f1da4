#pragma once

#include <string>
#include <vector>

#include "bandlab/word.hpp"

namespace bandlab {

// Disk diagram over the level-n relator family, stored as a combinatorial
// planar map: half-edges with a rotation system (counterclockwise cyclic
// order of outgoing half-edges at every vertex).  Faces are orbits of
//   nextInFace(h) = rotation-successor of twin(h) at head(h),
// one of which is designated the outer face via the half-edge where the
// boundary traversal starts (its tail is the basepoint).
//
// Twin pairing is index arithmetic: twin(h) == h ^ 1.
class Diagram {
 public:
  struct Face {
    std::vector<int> cycle;  // half-edges in traversal order
    std::string word;        // letters read along the cycle
    int k = -1;              // relator index matched, -1 for no match
    bool outer = false;
  };

  explicit Diagram(int level);

  int level() const { return level_; }

  // --- structure ---------------------------------------------------------
  int addVertex();
  // New edge; returns the half-edge tailA -> tailB reading letterAB.  The
  // caller is responsible for placing both half-edges in rotation lists.
  int addEdge(int tailA, int tailB, char letterAB);

  static int twin(int h) { return h ^ 1; }
  int tail(int h) const { return half_[static_cast<std::size_t>(h)].tail; }
  int head(int h) const { return tail(twin(h)); }
  char letter(int h) const { return half_[static_cast<std::size_t>(h)].letter; }
  bool halfAlive(int h) const { return half_[static_cast<std::size_t>(h)].alive; }
  bool vertexAlive(int v) const { return vertexAlive_[static_cast<std::size_t>(v)]; }
  int vertexLimit() const { return static_cast<int>(rot_.size()); }
  int halfEdgeLimit() const { return static_cast<int>(half_.size()); }
  std::vector<int>& rot(int v) { return rot_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& rot(int v) const { return rot_[static_cast<std::size_t>(v)]; }

  int countVertices() const;
  int countEdges() const;

  // --- outer face --------------------------------------------------------
  void setOuterStart(int h) { outerStart_ = h; }
  int outerStart() const { return outerStart_; }
  int basepoint() const;
  int nextInFace(int h) const;
  std::vector<int> outerCycle() const;  // empty for the edgeless diagram
  Word boundaryWord() const;

  // --- faces -------------------------------------------------------------
  std::vector<Face> faces() const;
  int area() const;  // number of inner faces

  // --- building blocks used by the filling search -------------------------
  // Both return the half-edge at which the new outer boundary traversal
  // starts (the new outer start is set internally as well).
  //
  // Plants stem.str() + cellWord + stem.inverse().str() into the boundary
  // at letter position pos: a path reading stem grows from the boundary
  // vertex there, capped by a cell whose outward side reads cellWord.
  int plantLollipop(int pos, const Word& stem, const std::string& cellWord,
                    const Word& currentBoundary);
  // Covers boundary letters [pos, pos + segLen) with a cell and replaces
  // them by alpha + inverse(beta) read through a fresh apex: the cell's
  // cycle reads segment + beta + inverse(alpha), a relator rotation.
  int glueCellOverSegment(int pos, int segLen, const Word& alpha,
                          const Word& beta, const Word& currentBoundary);
  // Dead-end edge at letter position pos; the boundary gains the pair
  // letter + inverse(letter) there.
  int plantSpur(int pos, char letterOut, const Word& currentBoundary);

  // --- mutation helpers shared by fold/band surgery ------------------------
  void eraseFromRotation(int v, int h);
  void killEdge(int h);      // marks h and twin(h) dead
  void killVertex(int v);
  void setTail(int h, int v) { half_[static_cast<std::size_t>(h)].tail = v; }
  void setBasepoint(int v) { basepoint_ = v; }

 private:
  struct Half {
    int tail = -1;
    char letter = 'a';
    bool alive = true;
  };

  int appendCellCycle(int attach, const std::string& cellWord, int* firstOut,
                      int* lastIn);
  std::vector<int> buildPath(int start, int end, const Word& pathWord,
                             bool pushAtEnd);

  std::vector<Half> half_;
  std::vector<std::vector<int>> rot_;
  std::vector<bool> vertexAlive_;
  int outerStart_ = -1;
  int basepoint_ = -1;
  int level_ = 1;
};

// All distinct cyclic rotations of relator(k); closed under formal
// inversion because the stored inverse of relator(k) is its left rotation
// by one letter.
std::vector<std::string> relatorRotations(int k);

// Structural checks: rotation-system sanity, twin letters, exactly one
// outer face, every inner face a relator rotation for the level,
// connectivity, and the Euler count V - E + F = 2.  Empty on success.
std::vector<std::string> validate(const Diagram& d);

// Conjugate factor u * relator(k)^sign * u^-1.
struct ConjugateFactor {
  Word stem;
  int k = 0;
  int sign = +1;
};

// Wedge of lollipops at a common basepoint; boundary word is the literal
// unreduced concatenation of the factors.
Diagram diagramFromConjugates(const std::vector<ConjugateFactor>& factors,
                              int level);

// Repeatedly removes spurs and folds adjacent boundary pairs reading a
// letter against its inverse at a shared vertex.  Folds that would change
// the topology are skipped: pairs with equal far endpoints, pairs whose
// far sides lie on one inner face, and a-pairs unless both edges border
// the outer face on both sides (stored 'a' cannot tell a from a^-1, so
// folding cell-boundary a-edges can silently change the boundary word).
// The pair wrapping around the basepoint is never folded, keeping the
// boundary anchored.  Inner faces are preserved.
Diagram fold(Diagram d);

std::string toJsonText(const Diagram& d);
std::string toDotText(const Diagram& d);

// Rebuilds a diagram from toJsonText output.  Vertex and half-edge ids are
// reassigned densely, so gaps left in the source diagram by surgery do not
// survive the round trip; faces, boundary and validity are unchanged.
// Throws std::invalid_argument on malformed input.
Diagram diagramFromJsonText(const std::string& text);

}  // namespace bandlab
