#include "bandlab/semistability.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "bandlab/cayley.hpp"
#include "bandlab/fill.hpp"
#include "bandlab/lamp.hpp"

namespace bandlab {

namespace {

using OrderedJson = nlohmann::ordered_json;

LampElement applyLetter(const LampElement& p, char c) {
  switch (c) {
    case 'a':
      return lampMul(p, LampElement{{0}, 0});
    case 'x':
      return lampMul(p, LampElement{{}, 1});
    case 'X':
      return lampMul(p, LampElement{{}, -1});
    default:
      throw std::invalid_argument("letter outside the lamplighter alphabet");
  }
}

// Memoized "outside the radius-N ball" test.  Cheap certificates first: the
// walker has to realize the shift, reach every lit lamp, and spend a letter
// toggling each one, so each of those quantities bounds the length from
// below.  Only when they are inconclusive does the exact bounded BFS run.
class BallGate {
 public:
  explicit BallGate(int radius) : radius_(radius) {}

  bool outside(const LampElement& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    int lower = std::abs(p.shift);
    for (int lamp : p.lamps) lower = std::max(lower, std::abs(lamp));
    lower = std::max(lower, static_cast<int>(p.lamps.size()));
    bool out;
    if (lower > radius_) {
      out = true;
    } else {
      auto d = distance(p, LampElement::identity(), radius_ + 1);
      out = !d.has_value() || *d > radius_;
    }
    memo_.emplace(p, out);
    return out;
  }

 private:
  int radius_;
  std::unordered_map<LampElement, bool, LampHash> memo_;
};

void betaSearch(const LampElement& pos, const LampElement& base,
                std::string& prefix, int budget, BallGate& gate,
                std::vector<Word>& out) {
  if (pos == base) out.push_back(Word::fromValid(prefix));
  if (budget == 0) return;
  for (char c : {'a', 'x', 'X'}) {
    LampElement next = applyLetter(pos, c);
    if (!gate.outside(next)) continue;
    prefix.push_back(c);
    betaSearch(next, base, prefix, budget - 1, gate, out);
    prefix.pop_back();
  }
}

void requireConfig(const ExperimentConfig& cfg) {
  if (cfg.level < 1) throw std::invalid_argument("experiment level must be >= 1");
  if (cfg.betaLenMax < 0)
    throw std::invalid_argument("candidate length budget must be >= 0");
  if (cfg.ballRadius < 0)
    throw std::invalid_argument("ball radius must be >= 0");
}

OrderedJson verdictJson(const PushoutVerdict& v) {
  OrderedJson j;
  j["beta"] = v.beta.str();
  j["pushout"] = v.pushout.str();
  j["status"] =
      v.status == PushoutStatus::Fillable ? "fillable" : "not-fillable";
  j["normal_form"] = OrderedJson::parse(toJsonText(v.normalForm));
  if (v.dinfty) {
    j["dinfty"] = OrderedJson{{"translation", v.dinfty->translation},
                              {"flip", v.dinfty->flip}};
  }
  if (v.diagram) {
    j["area"] = v.area;
    j["diagram"] = OrderedJson::parse(toJsonText(*v.diagram));
  }
  return j;
}

}  // namespace

Word alphaLoop(int n) {
  if (n < 1) throw std::invalid_argument("alphaLoop needs n >= 1");
  return relator(n);
}

Word pushoutWord(const Word& alpha, int k, const Word& beta) {
  return alpha + powerWord('x', k) + beta.inverse() + powerWord('x', -k);
}

std::vector<Word> enumerateBeta(const ExperimentConfig& cfg) {
  requireConfig(cfg);
  std::vector<Word> out;
  LampElement base{{}, cfg.baseOffset + cfg.push};
  BallGate gate(cfg.ballRadius);
  if (!gate.outside(base)) return out;  // no loop can even start
  std::string prefix;
  betaSearch(base, base, prefix, cfg.betaLenMax, gate, out);
  return out;
}

PushoutVerdict checkPushout(const ExperimentConfig& cfg, const Word& beta,
                            bool materialize) {
  requireConfig(cfg);
  PushoutVerdict v;
  v.beta = beta;
  v.pushout = pushoutWord(alphaLoop(cfg.level), cfg.push, beta);
  v.normalForm = g1FromWord(v.pushout, cfg.level);
  if (g1IsIdentity(v.normalForm)) {
    v.status = PushoutStatus::Fillable;
    if (materialize) {
      FillResult r = fill(v.pushout, cfg.level, cfg.areaBound);
      if (r.status == FillStatus::Found) {
        v.diagram = std::move(r.diagram);
        v.area = r.area;
      }
    }
  } else {
    v.status = PushoutStatus::NotFillable;
    // The loop alpha toggles the lamps at 0 and -level, so that reflection
    // pair is the one with a chance of seeing its image survive.
    DihedralElement image = dinftyImage(v.pushout, 0, -cfg.level, cfg.level);
    if (!image.isIdentity()) v.dinfty = image;
  }
  return v;
}

ExperimentReport runExperiment(const ExperimentConfig& cfg, int workers,
                               bool materialize) {
  requireConfig(cfg);
  auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = cfg;

  std::vector<Word> betas = enumerateBeta(cfg);
  report.candidates = static_cast<long long>(betas.size());
  report.verdicts.resize(betas.size());

  auto evaluate = [&](std::size_t i) {
    report.verdicts[i] = checkPushout(cfg, betas[i], materialize);
  };
  int pool = std::min<int>(std::max(workers, 1),
                           static_cast<int>(betas.size()));
  if (pool <= 1) {
    for (std::size_t i = 0; i < betas.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) {
      threads.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < betas.size();
             i = next.fetch_add(1)) {
          evaluate(i);
        }
      });
    }
    for (auto& th : threads) th.join();
  }
  for (const PushoutVerdict& v : report.verdicts) {
    if (v.status == PushoutStatus::Fillable) ++report.fillable;
  }

  // Positive control with the ball constraint waived: walk back along the
  // connector, run the loop, walk out again.  The composite is freely
  // trivial, so it must come back Fillable if the decision procedure works.
  Word backtrack = powerWord('x', -cfg.push) + alphaLoop(cfg.level) +
                   powerWord('x', cfg.push);
  report.control = checkPushout(cfg, backtrack, materialize);

  report.elapsedSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string reportJsonText(const ExperimentReport& report) {
  OrderedJson j;
  j["config"] = OrderedJson{{"level", report.config.level},
                            {"base", report.config.baseOffset},
                            {"push", report.config.push},
                            {"beta_len_max", report.config.betaLenMax},
                            {"ball_radius", report.config.ballRadius},
                            {"area_bound", report.config.areaBound}};
  j["candidates"] = report.candidates;
  j["fillable"] = report.fillable;
  j["not_fillable"] = report.candidates - report.fillable;
  OrderedJson verdicts = OrderedJson::array();
  for (const PushoutVerdict& v : report.verdicts) {
    verdicts.push_back(verdictJson(v));
  }
  j["verdicts"] = std::move(verdicts);
  j["control"] = verdictJson(report.control);
  j["elapsed_seconds"] = report.elapsedSeconds;
  return j.dump();
}

namespace {

int xExpOf(char c) { return c == 'x' ? 1 : (c == 'X' ? -1 : 0); }

[[noreturn]] void badBoundary(const std::string& why) {
  throw std::invalid_argument("boundary does not parse: " + why);
}

// One passage of a band through a cell, located by the positions of its
// entering and exiting half-edges in the face cycle.
struct CellVisit {
  int face = -1;
  int enterIdx = -1;
  int exitIdx = -1;
};

struct SeedWalk {
  std::vector<CellVisit> visits;
  int terminalOuterHalf = -1;
};

int idxInCycle(const Diagram::Face& f, int h) {
  for (std::size_t i = 0; i < f.cycle.size(); ++i) {
    if (f.cycle[i] == h) return static_cast<int>(i);
  }
  throw std::logic_error("half-edge missing from its face cycle");
}

// Walks the band from a boundary a-edge inward, cell by cell, recording
// each passage until the opposite pairing surfaces on the outer face again.
SeedWalk walkFromBoundary(const Diagram& d,
                          const std::vector<Diagram::Face>& faces,
                          const std::vector<int>& faceOfHalf, int outerIdx,
                          int seedOuterHalf) {
  SeedWalk walk;
  int cur = Diagram::twin(seedOuterHalf);
  int guard = d.halfEdgeLimit() + 2;
  while (faceOfHalf[static_cast<std::size_t>(cur)] != outerIdx) {
    if (--guard < 0) throw std::logic_error("band walk does not terminate");
    int fi = faceOfHalf[static_cast<std::size_t>(cur)];
    const Diagram::Face& f = faces[static_cast<std::size_t>(fi)];
    int exit = oppositeAEdge(f, cur);
    walk.visits.push_back(CellVisit{fi, idxInCycle(f, cur), idxInCycle(f, exit)});
    cur = Diagram::twin(exit);
  }
  walk.terminalOuterHalf = cur;
  return walk;
}

// x-exponent sum of the letters strictly between two positions of a face
// cycle, read forward (cyclically) from `from` to `to`.
int arcXSum(const Diagram::Face& f, int from, int to) {
  int size = static_cast<int>(f.cycle.size());
  int sum = 0;
  for (int p = (from + 1) % size; p != to; p = (p + 1) % size) {
    sum += xExpOf(f.word[static_cast<std::size_t>(p)]);
  }
  return sum;
}

bool disjointPairs(const CellVisit& a, const CellVisit& b) {
  return a.enterIdx != b.enterIdx && a.enterIdx != b.exitIdx &&
         a.exitIdx != b.enterIdx && a.exitIdx != b.exitIdx;
}

// The descending arc joining the two rung pairs of a shared commutation
// square.  Adjacent rungs always belong to opposite pairs, and half the
// gaps between adjacent rungs read X^k; the first of those is reported.
int crossingArcXSum(const Diagram::Face& f, const CellVisit& a,
                    const CellVisit& b) {
  std::vector<int> rungs = {a.enterIdx, a.exitIdx, b.enterIdx, b.exitIdx};
  std::sort(rungs.begin(), rungs.end());
  int size = static_cast<int>(f.cycle.size());
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    int from = rungs[i];
    int to = rungs[(i + 1) % rungs.size()];
    bool descending = true;
    int len = 0;
    for (int p = (from + 1) % size; p != to; p = (p + 1) % size) {
      ++len;
      if (f.word[static_cast<std::size_t>(p)] != 'X') {
        descending = false;
        break;
      }
    }
    if (descending && len > 0) return -len;
  }
  throw std::logic_error("shared square has no descending arc");
}

// Vertex labels relative to the basepoint, with the BFS depth kept as a
// certified upper bound for the later exact distance queries.
struct VertexLabel {
  LampElement element;
  int depth = 0;
};

std::unordered_map<int, VertexLabel> labelVertices(const Diagram& d) {
  std::unordered_map<int, VertexLabel> label;
  int base = d.basepoint();
  label.emplace(base, VertexLabel{LampElement::identity(), 0});
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const VertexLabel& here = label.at(v);
    LampElement current = here.element;
    int depth = here.depth;
    for (int h : d.rot(v)) {
      if (!d.halfAlive(h)) continue;
      int to = d.head(h);
      if (label.count(to)) continue;
      label.emplace(to, VertexLabel{applyLetter(current, d.letter(h)),
                                    depth + 1});
      queue.push_back(to);
    }
  }
  return label;
}

}  // namespace

ObstructionTrace analyzeObstruction(const Diagram& d) {
  const std::string s = d.boundaryWord().str();
  if (s.size() < 8 || s[0] != 'a') badBoundary("no commutation loop prefix");
  int n = 0;
  {
    std::size_t i = 1;
    while (i < s.size() && s[i] == 'X') {
      ++n;
      ++i;
    }
  }
  if (n < 1) badBoundary("no descending run after the first a");
  ObstructionTrace trace;
  trace.n = n;
  trace.alpha = alphaLoop(n);
  const std::string& alphaStr = trace.alpha.str();
  if (s.size() < alphaStr.size() ||
      s.compare(0, alphaStr.size(), alphaStr) != 0) {
    badBoundary("prefix is not a commutation loop");
  }
  std::size_t rest = alphaStr.size();
  int runForward = 0;
  while (rest + static_cast<std::size_t>(runForward) < s.size() &&
         s[rest + static_cast<std::size_t>(runForward)] == 'x') {
    ++runForward;
  }
  int runBack = 0;
  while (static_cast<std::size_t>(runBack) < s.size() - rest &&
         s[s.size() - 1 - static_cast<std::size_t>(runBack)] == 'X') {
    ++runBack;
  }
  int k = std::min({runForward, runBack,
                    static_cast<int>(s.size() - rest) / 2});
  trace.k = k;
  std::string betaInv =
      s.substr(rest + static_cast<std::size_t>(k),
               s.size() - rest - 2 * static_cast<std::size_t>(k));
  if (s != alphaStr + std::string(static_cast<std::size_t>(k), 'x') + betaInv +
               std::string(static_cast<std::size_t>(k), 'X')) {
    badBoundary("connector runs do not match");
  }
  trace.beta = Word::fromValid(betaInv).inverse();

  const std::vector<int> outer = d.outerCycle();
  std::vector<int> posOfOuterHalf(static_cast<std::size_t>(d.halfEdgeLimit()),
                                  -1);
  for (std::size_t p = 0; p < outer.size(); ++p) {
    posOfOuterHalf[static_cast<std::size_t>(outer[p])] = static_cast<int>(p);
  }

  const std::vector<Diagram::Face> faces = d.faces();
  int outerIdx = -1;
  std::vector<int> faceOfHalf(static_cast<std::size_t>(d.halfEdgeLimit()), -1);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (faces[fi].outer) outerIdx = static_cast<int>(fi);
    for (int h : faces[fi].cycle) {
      faceOfHalf[static_cast<std::size_t>(h)] = static_cast<int>(fi);
    }
  }
  if (outerIdx < 0) throw std::logic_error("diagram has no outer face");

  // a-edge positions: the four rungs of alpha, then beta's in boundary order.
  const std::array<int, 4> alphaA = {0, n + 1, 2 * n + 2, 3 * n + 3};
  std::vector<int> betaA;
  for (std::size_t p = rest + static_cast<std::size_t>(k);
       p < s.size() - static_cast<std::size_t>(k); ++p) {
    if (s[p] == 'a') betaA.push_back(static_cast<int>(p));
  }

  auto labels = labelVertices(d);
  std::unordered_map<LampElement, int, LampHash> distMemo;
  auto distanceOf = [&](int vertex) {
    const VertexLabel& vl = labels.at(vertex);
    auto it = distMemo.find(vl.element);
    if (it != distMemo.end()) return it->second;
    auto found = distance(vl.element, LampElement::identity(), vl.depth);
    int value = found ? *found : vl.depth;
    distMemo.emplace(vl.element, value);
    return value;
  };

  std::array<SeedWalk, 4> walks;
  for (int t = 0; t < 4; ++t) {
    int seedPos = alphaA[static_cast<std::size_t>(t)];
    int seedHalf = outer[static_cast<std::size_t>(seedPos)];
    SeedWalk walk = walkFromBoundary(d, faces, faceOfHalf, outerIdx, seedHalf);

    BandObservation obs;
    obs.band = traceBand(d, seedHalf);
    auto sides = bandSideWords(d, obs.band);
    obs.sideLeft = sides.first;
    obs.sideRight = sides.second;
    obs.startEdge = seedHalf & ~1;
    obs.startBoundaryPos = seedPos;
    obs.terminalEdge = walk.terminalOuterHalf & ~1;
    obs.terminalBoundaryPos =
        posOfOuterHalf[static_cast<std::size_t>(walk.terminalOuterHalf)];
    if (obs.terminalBoundaryPos < 0) {
      throw std::logic_error("band surfaced off the outer cycle");
    }
    obs.terminalOnAlpha =
        obs.terminalBoundaryPos < static_cast<int>(alphaStr.size());
    if (obs.terminalOnAlpha) {
      for (int i = 0; i < 4; ++i) {
        if (alphaA[static_cast<std::size_t>(i)] == obs.terminalBoundaryPos) {
          obs.terminalAIndex = i;
        }
      }
    } else {
      for (std::size_t i = 0; i < betaA.size(); ++i) {
        if (betaA[i] == obs.terminalBoundaryPos) {
          obs.terminalAIndex = static_cast<int>(i);
        }
      }
    }

    int maxDist = std::max(distanceOf(d.tail(seedHalf)),
                           distanceOf(d.head(seedHalf)));
    for (const CellVisit& cv : walk.visits) {
      for (int h : faces[static_cast<std::size_t>(cv.face)].cycle) {
        maxDist = std::max(maxDist, distanceOf(d.tail(h)));
      }
    }
    obs.maxDistance = maxDist;

    trace.bands.push_back(std::move(obs));
    walks[static_cast<std::size_t>(t)] = std::move(walk);
  }

  for (int a = 0; a < 4; ++a) {
    const auto& va = walks[static_cast<std::size_t>(a)].visits;
    for (int b = 0; b < 4; ++b) {
      if (b == a) {
        int count = 0;
        for (std::size_t i = 0; i < va.size(); ++i) {
          for (std::size_t j = i + 1; j < va.size(); ++j) {
            if (va[i].face == va[j].face && disjointPairs(va[i], va[j])) {
              ++count;
            }
          }
        }
        trace.crossings[static_cast<std::size_t>(a)]
                       [static_cast<std::size_t>(a)] = count;
        continue;
      }
      const auto& vb = walks[static_cast<std::size_t>(b)].visits;
      int count = 0;
      for (const CellVisit& ca : va) {
        for (const CellVisit& cb : vb) {
          if (ca.face == cb.face && disjointPairs(ca, cb)) ++count;
        }
      }
      trace.crossings[static_cast<std::size_t>(a)]
                     [static_cast<std::size_t>(b)] = count;
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (const CellVisit& ca : walks[static_cast<std::size_t>(a)].visits) {
        for (const CellVisit& cb : walks[static_cast<std::size_t>(b)].visits) {
          if (ca.face != cb.face || !disjointPairs(ca, cb)) continue;
          const Diagram::Face& f = faces[static_cast<std::size_t>(ca.face)];
          trace.crossingCells.push_back(CrossingObservation{
              a, b, ca.face, f.k, crossingArcXSum(f, ca, cb)});
        }
      }
    }
  }

  // The two routes to the first meeting of bands 0 and 1.  Route one runs
  // from the head of alpha's first a-edge down band 0's near side; route
  // two reads the descending alpha arc to the second a-edge and then runs
  // down band 1's near side.  Both stop at the head of the same rung of the
  // shared square, so on a coherent diagram the sums must agree.
  const auto& w0 = walks[0].visits;
  const auto& w1 = walks[1].visits;
  std::optional<std::pair<std::size_t, std::size_t>> meeting;
  for (std::size_t i = 0; i < w0.size() && !meeting; ++i) {
    for (std::size_t j = 0; j < w1.size() && !meeting; ++j) {
      if (w0[i].face == w1[j].face && disjointPairs(w0[i], w1[j])) {
        meeting = std::make_pair(i, j);
      }
    }
  }
  if (meeting) {
    auto [i0, j1] = *meeting;
    const Diagram::Face& shared = faces[static_cast<std::size_t>(w0[i0].face)];
    int size = static_cast<int>(shared.cycle.size());

    int bandPath = 0;
    for (std::size_t i = 0; i < i0; ++i) {
      const Diagram::Face& f = faces[static_cast<std::size_t>(w0[i].face)];
      bandPath -= arcXSum(f, w0[i].exitIdx, w0[i].enterIdx);
    }
    int crossIdx = -1;
    {
      int guard = size;
      int p = (w0[i0].enterIdx - 1 + size) % size;
      while (guard-- > 0) {
        if (p == w1[j1].enterIdx || p == w1[j1].exitIdx) {
          crossIdx = p;
          break;
        }
        p = (p - 1 + size) % size;
      }
      if (crossIdx < 0) {
        throw std::logic_error("crossing rung not found in shared square");
      }
    }
    bandPath -= arcXSum(shared, crossIdx, w0[i0].enterIdx);
    trace.bandPathXSum = bandPath;

    int alphaPath = -n;  // the descending arc between alpha's first two rungs
    for (std::size_t j = 0; j < j1; ++j) {
      const Diagram::Face& f = faces[static_cast<std::size_t>(w1[j].face)];
      alphaPath += arcXSum(f, w1[j].enterIdx, w1[j].exitIdx);
    }
    if (crossIdx == w1[j1].exitIdx) {
      alphaPath += arcXSum(shared, w1[j1].enterIdx, w1[j1].exitIdx);
    }
    trace.alphaPathXSum = alphaPath;
  }

  return trace;
}

}  // namespace bandlab
