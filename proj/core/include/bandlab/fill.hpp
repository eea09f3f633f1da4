#pragma once

#include <optional>
#include <string>

#include "bandlab/diagram.hpp"
#include "bandlab/word.hpp"

namespace bandlab {

enum class FillStatus { Found, NotFoundWithinBound };

struct FillResult {
  FillStatus status = FillStatus::NotFoundWithinBound;
  // On success: a validated diagram whose boundary reads exactly the
  // input word (including any unreduced x-pairs, realized as spurs).
  std::optional<Diagram> diagram;
  int area = 0;
  long statesExplored = 0;
  std::string reason;  // which pre-check answered, or "search exhausted"
};

// Searches for a disk diagram over the level-n relator family whose
// boundary reads w, using at most maxArea cells.
//
// The search walks x-reduced words: one step deletes a contiguous relator
// rotation (with the x-cancellation cascade across the seam) or inserts a
// rotation at any position.  Each step costs one cell.  Intermediate
// words are capped at |reduced(w)| + longest relator length; the bound in
// NotFoundWithinBound covers both the area and that length cap.
//
// Sound pre-checks may answer NotFoundWithinBound immediately: nonzero
// x-exponent sum, odd a-count, nontrivial lamplighter evaluation, and a
// nontrivial infinite-dihedral image for some admissible reflection pair.
// Each is a certificate that no filling exists at all.
FillResult fill(const Word& w, int level, int maxArea);

}  // namespace bandlab
