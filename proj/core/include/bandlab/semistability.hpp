#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bandlab/bands.hpp"
#include "bandlab/diagram.hpp"
#include "bandlab/trace.hpp"
#include "bandlab/word.hpp"

namespace bandlab {

// One push-out experiment: can the far loop alpha, based at x^baseOffset,
// be traded for a loop beta that lives entirely outside the radius-ballRadius
// ball around the identity?  The trade is mediated by a connector x^push and
// decided exactly in the level-`level` approximation group.
struct ExperimentConfig {
  int level = 1;       // relator levels 0..level-1 are available for filling
  int baseOffset = 0;  // the loop alpha is based at x^baseOffset
  int push = 0;        // connector length: beta is based at x^(baseOffset+push)
  int betaLenMax = 0;  // letter budget for candidate loops
  int ballRadius = 0;  // candidates must avoid the ball of this radius
  int areaBound = 0;   // cell budget when materializing witness diagrams
};

// The level-n commutation loop a x^-n a x^n a x^-n a x^n.  It evaluates to
// the identity in the lamplighter group but is not a consequence of the
// relators available at level n, which is what the experiment probes.
Word alphaLoop(int n);

// The composite loop alpha . x^k . beta^-1 . x^-k, spelled verbatim (no free
// reduction), read at alpha's basepoint.  It bounds a disk exactly when
// alpha can be pushed across the connector onto beta.
Word pushoutWord(const Word& alpha, int k, const Word& beta);

// All words over {a, x, X} of length <= betaLenMax that trace a closed loop
// at x^(baseOffset+push) while every visited vertex stays at word-metric
// distance > ballRadius from the identity.  The empty word is emitted as the
// degenerate loop whenever the basepoint itself qualifies.  Deterministic
// order: depth-first over the alphabet a < x < X, prefixes before
// extensions.
std::vector<Word> enumerateBeta(const ExperimentConfig& cfg);

enum class PushoutStatus { Fillable, NotFillable };

// Exact verdict for one candidate.  The normal form decides; the optional
// dihedral image is an independent nontriviality witness, and the optional
// diagram is a constructive fillability witness.
struct PushoutVerdict {
  PushoutStatus status = PushoutStatus::NotFillable;
  Word beta;
  Word pushout;                           // the queried composite loop
  G1Element normalForm = G1Element::identity(1);
  std::optional<DihedralElement> dinfty;  // recorded only when nonzero
  std::optional<Diagram> diagram;         // materialized on request
  int area = -1;                          // cells of the materialized diagram
};

// Decides whether pushoutWord(alphaLoop(cfg.level), cfg.push, beta) is a
// relator consequence at cfg.level.  The verdict never depends on
// cfg.areaBound; materialize only controls whether a Fillable answer also
// carries a diagram found within that cell budget.
PushoutVerdict checkPushout(const ExperimentConfig& cfg, const Word& beta,
                            bool materialize = false);

// Outcome of sweeping checkPushout over enumerateBeta, plus the positive
// control: the backtracking candidate x^-k . alpha . x^k, checked with the
// ball constraint waived, which is always fillable.
struct ExperimentReport {
  ExperimentConfig config;
  std::vector<PushoutVerdict> verdicts;  // in enumeration order
  long long candidates = 0;
  long long fillable = 0;
  PushoutVerdict control;
  double elapsedSeconds = 0.0;
};

// Runs the sweep with `workers` threads (<= 1 means sequential).  Candidate
// evaluation is pure and aggregation is counting, so the report does not
// depend on the worker count or scheduling order.
ExperimentReport runExperiment(const ExperimentConfig& cfg, int workers = 1,
                               bool materialize = false);

// Report serialization; stable field order, timing carried in a single
// "elapsed_seconds" field so reports are otherwise run-to-run identical.
std::string reportJsonText(const ExperimentReport& report);

// One traced band of a push-out diagram, seeded on an a-edge of the alpha
// segment of the boundary.
struct BandObservation {
  Band band;                // the full band, in chain order
  int startEdge = -1;       // even half id of the seeding boundary a-edge
  int startBoundaryPos = 0; // its position in the outer cycle
  int terminalEdge = -1;    // even half id of the a-edge where the band ends
  int terminalBoundaryPos = -1;  // outer-cycle position of the far end
  bool terminalOnAlpha = false;  // whether the far end lies on the alpha segment
  int terminalAIndex = -1;  // ordinal among that segment's a-edges, 0-based
  int maxDistance = 0;      // word-metric radius of the band's vertices
                            // around the basepoint
  Word sideLeft;            // longitudinal side words; both have zero
  Word sideRight;           // x-exponent sum
};

// A transverse meeting of two of the traced bands inside one commutation
// square: the bands use disjoint rung pairs of the same cell.
struct CrossingObservation {
  int bandA = 0;
  int bandB = 0;
  int cell = -1;          // index into faces() order
  int cellK = 0;          // relator level of the shared square
  int crossingArcXSum = 0;  // x-exponent of the all-descending arc joining
                            // the two rung pairs; always -cellK
};

// Band-structure narration of a diagram whose boundary reads
// alpha . x^k . beta^-1 . x^-k with alpha a commutation loop.  The two
// optional sums trace the same vertex along two routes: down the first band
// from the first a-edge's head, versus along alpha to the second a-edge and
// then down the second band.  On a genuine diagram they agree; the
// experiment's obstruction is that a diagram reaching past the ball would
// need them to differ.
struct ObstructionTrace {
  int n = 0;  // level parsed off the boundary: alpha == alphaLoop(n)
  int k = 0;  // connector length parsed off the boundary
  Word alpha;
  Word beta;
  std::vector<BandObservation> bands;          // the four alpha bands
  std::array<std::array<int, 4>, 4> crossings{};  // transverse meeting counts
  std::vector<CrossingObservation> crossingCells;
  std::optional<int> bandPathXSum;   // x-sum along band 0 to the crossing
  std::optional<int> alphaPathXSum;  // x-sum along alpha then band 1
};

// Parses the boundary, traces the four bands seeded on alpha's a-edges, and
// collects the observations above.  Throws std::invalid_argument when the
// boundary does not parse as a push-out loop.
ObstructionTrace analyzeObstruction(const Diagram& d);

}  // namespace bandlab
