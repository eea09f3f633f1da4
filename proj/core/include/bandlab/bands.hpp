#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bandlab/diagram.hpp"
#include "bandlab/word.hpp"

namespace bandlab {

// Every cell of a diagram pairs up its a-edges: the square cells
// a x^-k a x^k a x^-k a x^k pair each a-edge with the one two a's further
// around the cell, and the a^2 bigons pair their two a-edges with each
// other.  Following these pairings from cell to cell sweeps out a strip of
// cells -- a band.  A band either ends on the outer boundary at both ends
// or closes up into an annulus.  Bands partition the a-edges of a diagram,
// and their geometry (where they end, whether they cross themselves or
// each other) carries the combinatorial content of a filling.
struct Band {
  // Cells the band runs through, as indices into Diagram::faces() (outer
  // faces excluded from the numbering are still counted; the indices refer
  // to positions in the faces() vector).  In band order; a boundary-to-
  // boundary band lists them end to end, an annulus in cyclic order.
  std::vector<int> cells;

  // The a-edges of the band as even half-edge ids, in band order.  A
  // boundary-to-boundary band has one more edge than cells (its two
  // terminal edges touch the outer face); an annulus has exactly as many
  // edges as cells, edge i joining cell i-1 to cell i cyclically.
  std::vector<int> connectingEdges;

  bool annulus = false;
};

// The a-edge paired with h inside one cell.  h must be a half-edge of the
// face labelled 'a'; the result is the half-edge of the same face two
// a-positions further around (one position for a bigon, which only has
// two).  Throws std::invalid_argument if h is not an a-half of the face.
int oppositeAEdge(const Diagram::Face& face, int h);

// The maximal band through the a-edge containing aHalf (either half of the
// edge is accepted).  Throws std::invalid_argument unless aHalf is a live
// a-labelled half-edge.
Band traceBand(const Diagram& d, int aHalf);

// All bands of the diagram, one per a-edge class.  Together the bands'
// connectingEdges partition the a-edges.  An a-edge with the outer face on
// both sides forms a band with no cells at all.
std::vector<Band> allBands(const Diagram& d);

// A band crosses itself when it runs through some cell twice (a square
// cell has two a-edge pairs and can carry two transverse band segments).
bool selfCrosses(const Band& b);

// The words read along the two sides of the band, i.e. the boundary arcs
// of its cells between consecutive connecting a-edges.  Both sides are
// read with the orientation of the cells they bound, so they traverse the
// band in opposite directions.  Each side has x-exponent sum zero.  A
// band with no cells has two empty sides.
std::pair<Word, Word> bandSideWords(const Diagram& d, const Band& b);

// Removes an annular band: its cells and connecting a-edges are deleted
// and the two freed boundary circles are zipped together, matching edges
// across the vanished strip.  The outer boundary word is unchanged and the
// area drops by the number of removed cells.  Throws std::invalid_argument
// if the band is not an annulus, std::logic_error if the band does not fit
// the diagram.
Diagram removeAnnulus(const Diagram& d, const Band& b);

// JSON report over all bands of the diagram: for each band its cells,
// connecting edges, kind, the two side words and their x-exponent sums.
std::string bandReportJson(const Diagram& d);

}  // namespace bandlab
