#include "bandlab/diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bandlab/lamp.hpp"
#include "json.hpp"

namespace bandlab {

namespace {

// A boundary pair s.s^-1 that a fold may consume: xX, Xx or aa.  Word's
// own cancels() deliberately excludes aa, but geometrically two adjacent
// boundary a-edges do spell a letter against its inverse.
bool foldablePair(char lhs, char rhs) {
  if (lhs == 'a') return rhs == 'a';
  return Word::cancels(lhs, rhs);
}

// Cyclic list rotated so it starts at the given element.
std::vector<int> linearizeFrom(const std::vector<int>& cyc, int start) {
  auto it = std::find(cyc.begin(), cyc.end(), start);
  if (it == cyc.end()) throw std::logic_error("rotation entry missing");
  std::vector<int> out(it, cyc.end());
  out.insert(out.end(), cyc.begin(), it);
  return out;
}

void insertAfter(std::vector<int>& rot, int afterElem, int h) {
  auto it = std::find(rot.begin(), rot.end(), afterElem);
  if (it == rot.end()) throw std::logic_error("rotation anchor missing");
  rot.insert(std::next(it), h);
}

}  // namespace

Diagram::Diagram(int level) : level_(level) {
  if (level < 1) throw std::invalid_argument("diagram level must be >= 1");
}

int Diagram::addVertex() {
  rot_.emplace_back();
  vertexAlive_.push_back(true);
  int id = static_cast<int>(rot_.size()) - 1;
  if (basepoint_ < 0) basepoint_ = id;
  return id;
}

int Diagram::addEdge(int tailA, int tailB, char letterAB) {
  half_.push_back({tailA, letterAB, true});
  half_.push_back({tailB, Word::inverseLetter(letterAB), true});
  return static_cast<int>(half_.size()) - 2;
}

int Diagram::countVertices() const {
  return static_cast<int>(
      std::count(vertexAlive_.begin(), vertexAlive_.end(), true));
}

int Diagram::countEdges() const {
  int n = 0;
  for (std::size_t h = 0; h < half_.size(); h += 2)
    if (half_[h].alive) ++n;
  return n;
}

int Diagram::basepoint() const { return basepoint_; }

int Diagram::nextInFace(int h) const {
  int v = head(h);
  const std::vector<int>& r = rot_[static_cast<std::size_t>(v)];
  auto it = std::find(r.begin(), r.end(), twin(h));
  if (it == r.end()) throw std::logic_error("twin missing from rotation");
  ++it;
  return it == r.end() ? r.front() : *it;
}

std::vector<int> Diagram::outerCycle() const {
  std::vector<int> cyc;
  if (outerStart_ < 0) return cyc;
  int h = outerStart_;
  std::size_t cap = half_.size() + 2;
  do {
    cyc.push_back(h);
    h = nextInFace(h);
    if (cyc.size() > cap) throw std::logic_error("outer face does not close");
  } while (h != outerStart_);
  return cyc;
}

Word Diagram::boundaryWord() const {
  std::string s;
  for (int h : outerCycle()) s.push_back(letter(h));
  return Word::fromValid(std::move(s));
}

std::vector<Diagram::Face> Diagram::faces() const {
  std::map<std::string, int> match;
  for (int k = 0; k < level_; ++k)
    for (const std::string& r : relatorRotations(k)) match.emplace(r, k);

  std::vector<Face> out;
  std::vector<bool> seen(half_.size(), false);
  for (std::size_t h0 = 0; h0 < half_.size(); ++h0) {
    if (!half_[h0].alive || seen[h0]) continue;
    Face f;
    int h = static_cast<int>(h0);
    do {
      seen[static_cast<std::size_t>(h)] = true;
      f.cycle.push_back(h);
      f.word.push_back(letter(h));
      if (h == outerStart_) f.outer = true;
      h = nextInFace(h);
      if (f.cycle.size() > half_.size())
        throw std::logic_error("face orbit does not close");
    } while (h != static_cast<int>(h0));
    if (!f.outer) {
      auto it = match.find(f.word);
      if (it != match.end()) f.k = it->second;
    }
    out.push_back(std::move(f));
  }
  return out;
}

int Diagram::area() const {
  int inner = 0;
  for (const Face& f : faces())
    if (!f.outer) ++inner;
  return inner;
}

void Diagram::eraseFromRotation(int v, int h) {
  std::vector<int>& r = rot_[static_cast<std::size_t>(v)];
  auto it = std::find(r.begin(), r.end(), h);
  if (it == r.end()) throw std::logic_error("rotation entry missing");
  r.erase(it);
}

void Diagram::killEdge(int h) {
  half_[static_cast<std::size_t>(h)].alive = false;
  half_[static_cast<std::size_t>(twin(h))].alive = false;
}

void Diagram::killVertex(int v) {
  vertexAlive_[static_cast<std::size_t>(v)] = false;
}

std::vector<int> Diagram::buildPath(int start, int end, const Word& pathWord,
                                    bool pushAtEnd) {
  // Simple path reading pathWord; interior vertices are fresh and get
  // their full degree-2 rotations.  The first half-edge is not placed in
  // the rotation at start (the caller splices it); the arriving twin is
  // placed at end only on request.
  std::vector<int> hs;
  int cur = start;
  for (std::size_t i = 0; i < pathWord.size(); ++i) {
    bool last = (i + 1 == pathWord.size());
    int nv = last ? end : addVertex();
    int h = addEdge(cur, nv, pathWord.at(i));
    if (i > 0) rot(cur).push_back(h);
    if (!last || pushAtEnd) rot(nv).push_back(twin(h));
    hs.push_back(h);
    cur = nv;
  }
  return hs;
}

int Diagram::appendCellCycle(int attach, const std::string& cellWord,
                             int* firstOut, int* lastIn) {
  // Cycle c0 = attach, c1, ..., c_{L-1}, c0 whose *twin side*, traversed
  // twin(h_L), ..., twin(h_1), reads cellWord; the cell face itself then
  // reads the stored inverse of cellWord, again a relator rotation.
  int L = static_cast<int>(cellWord.size());
  if (L < 2) throw std::invalid_argument("cell word too short");
  int cur = attach;
  int first = -1;
  for (int i = 1; i < L; ++i) {
    int nv = addVertex();
    int h = addEdge(
        cur, nv, Word::inverseLetter(cellWord[static_cast<std::size_t>(L - i)]));
    if (i == 1)
      first = h;
    else
      rot(cur).push_back(h);
    rot(nv).push_back(twin(h));
    cur = nv;
  }
  int hl = addEdge(cur, attach, Word::inverseLetter(cellWord[0]));
  rot(cur).push_back(hl);
  *firstOut = twin(hl);  // tail == attach, starts the outward side
  *lastIn = first;       // tail == attach, starts the cell face
  return hl;
}

int Diagram::plantLollipop(int pos, const Word& stem,
                           const std::string& cellWord,
                           const Word& currentBoundary) {
  std::vector<int> cyc = outerCycle();
  int n = static_cast<int>(cyc.size());
  if (currentBoundary.size() != static_cast<std::size_t>(n))
    throw std::logic_error("boundary word out of sync");
  if (pos < 0 || pos > n) throw std::invalid_argument("position out of range");

  int S;
  int afterElem = -1;  // rotation entry at S to splice after
  if (n == 0) {
    S = basepoint_;
    if (S < 0) throw std::logic_error("no basepoint to plant at");
  } else {
    int hBefore = (pos == 0) ? cyc[static_cast<std::size_t>(n - 1)]
                             : cyc[static_cast<std::size_t>(pos - 1)];
    S = head(hBefore);
    afterElem = twin(hBefore);
  }

  std::vector<int> sigma;
  int T = S;
  if (!stem.empty()) {
    int tip = addVertex();
    // buildPath wants the end vertex up front only for existing targets;
    // grow the stem edge by edge instead so every interior vertex is fresh.
    sigma = buildPath(S, tip, stem, true);
    T = tip;
  }

  int outSide = -1, cellStart = -1;
  appendCellCycle(T, cellWord, &outSide, &cellStart);

  if (!stem.empty()) {
    // T carries [stem-back, outward-side start, cell-face start].
    rot(T).push_back(outSide);
    rot(T).push_back(cellStart);
    if (afterElem >= 0)
      insertAfter(rot(S), afterElem, sigma.front());
    else
      rot(S).push_back(sigma.front());
  } else {
    if (afterElem >= 0) {
      insertAfter(rot(S), afterElem, outSide);
      insertAfter(rot(S), outSide, cellStart);
    } else {
      rot(S).push_back(outSide);
      rot(S).push_back(cellStart);
    }
  }

  if (n == 0 || pos == 0)
    outerStart_ = stem.empty() ? outSide : sigma.front();
  return outerStart_;
}

int Diagram::glueCellOverSegment(int pos, int segLen, const Word& alpha,
                                 const Word& beta,
                                 const Word& currentBoundary) {
  std::vector<int> cyc = outerCycle();
  int n = static_cast<int>(cyc.size());
  if (currentBoundary.size() != static_cast<std::size_t>(n))
    throw std::logic_error("boundary word out of sync");
  if (segLen < 1 || pos < 0 || pos + segLen > n)
    throw std::invalid_argument("segment out of range");

  int bFirst = cyc[static_cast<std::size_t>(pos)];
  int bLast = cyc[static_cast<std::size_t>(pos + segLen - 1)];
  int hBefore = cyc[static_cast<std::size_t>((pos + n - 1) % n)];
  int hAfter = cyc[static_cast<std::size_t>((pos + segLen) % n)];
  int P = tail(bFirst);
  int Q = head(bLast);

  if (alpha.empty() && beta.empty()) {
    // The whole cell lies on the boundary; close it by merging its
    // endpoints.  A planar disk cannot absorb a cell whose attaching
    // segment is already a closed loop.
    if (P == Q)
      throw std::runtime_error(
          "cannot glue a cell over a closed boundary segment");
    std::vector<int> fromP = linearizeFrom(rot(P), twin(hBefore));
    std::vector<int> fromQ = linearizeFrom(rot(Q), twin(bLast));
    // fromP = [twin(hBefore), bFirst, restP...],
    // fromQ = [twin(bLast), hAfter, restQ...]; afterwards the outer face
    // jumps hBefore -> hAfter and the cell face closes bLast -> bFirst.
    std::vector<int> merged;
    merged.push_back(fromP.front());
    merged.insert(merged.end(), fromQ.begin() + 1, fromQ.end());
    merged.push_back(fromQ.front());
    merged.insert(merged.end(), fromP.begin() + 1, fromP.end());
    for (int h : fromQ) half_[static_cast<std::size_t>(h)].tail = P;
    rot(P) = std::move(merged);
    rot(Q).clear();
    killVertex(Q);
    if (basepoint_ == Q) basepoint_ = P;
    if (pos == 0) outerStart_ = hAfter;
    return outerStart_;
  }

  // Stub paths: q reads beta from Q towards the apex, r reads alpha^-1
  // from the apex to P.  With one stub empty the apex degenerates onto P
  // resp. Q.  The new cell face runs the segment, then q, then r; the new
  // boundary climbs the r side reading alpha and descends the q side
  // reading beta^-1.
  std::vector<int> q, r;
  if (!alpha.empty() && !beta.empty()) {
    int apex = addVertex();
    q = buildPath(Q, apex, beta, true);
    r = buildPath(apex, P, alpha.inverse(), false);
    rot(apex).push_back(r.front());
  } else if (!beta.empty()) {
    q = buildPath(Q, P, beta, false);
  } else {
    r = buildPath(Q, P, alpha.inverse(), false);
  }

  int arcStartP = !r.empty() ? twin(r.back()) : twin(q.back());
  int cellContQ = !q.empty() ? q.front() : r.front();
  // P first, then Q: when both splices share the anchor (full-cover glue)
  // the cell continuation must land directly after it.
  insertAfter(rot(P), twin(hBefore), arcStartP);
  insertAfter(rot(Q), twin(bLast), cellContQ);

  if (pos == 0) outerStart_ = arcStartP;
  return outerStart_;
}

int Diagram::plantSpur(int pos, char letterOut, const Word& currentBoundary) {
  std::vector<int> cyc = outerCycle();
  int n = static_cast<int>(cyc.size());
  if (currentBoundary.size() != static_cast<std::size_t>(n))
    throw std::logic_error("boundary word out of sync");
  if (pos < 0 || pos > n) throw std::invalid_argument("position out of range");

  int S;
  int afterElem = -1;
  if (n == 0) {
    S = basepoint_;
    if (S < 0) throw std::logic_error("no basepoint to plant at");
  } else {
    int hBefore = (pos == 0) ? cyc[static_cast<std::size_t>(n - 1)]
                             : cyc[static_cast<std::size_t>(pos - 1)];
    S = head(hBefore);
    afterElem = twin(hBefore);
  }
  int tip = addVertex();
  int h = addEdge(S, tip, letterOut);
  rot(tip).push_back(twin(h));
  if (afterElem >= 0)
    insertAfter(rot(S), afterElem, h);
  else
    rot(S).push_back(h);
  if (n == 0 || pos == 0) outerStart_ = h;
  return outerStart_;
}

std::vector<std::string> relatorRotations(int k) {
  std::string r = relator(k).str();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::string rot = r.substr(i) + r.substr(0, i);
    if (std::find(out.begin(), out.end(), rot) == out.end())
      out.push_back(std::move(rot));
  }
  return out;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> bad;

  std::vector<int> aliveHalves;
  for (int h = 0; h < d.halfEdgeLimit(); ++h)
    if (d.halfAlive(h)) aliveHalves.push_back(h);

  // Rotation sanity: every alive half-edge sits in exactly one rotation
  // list, at its tail; rotation lists mention only alive half-edges.
  std::map<int, int> seenAt;
  for (int v = 0; v < d.vertexLimit(); ++v) {
    if (!d.vertexAlive(v)) continue;
    for (int h : d.rot(v)) {
      if (h < 0 || h >= d.halfEdgeLimit() || !d.halfAlive(h)) {
        bad.push_back("rotation lists a dead half-edge");
        continue;
      }
      if (d.tail(h) != v) bad.push_back("rotation entry at wrong vertex");
      if (!seenAt.emplace(h, v).second)
        bad.push_back("half-edge placed twice in rotations");
    }
  }
  for (int h : aliveHalves) {
    if (!seenAt.count(h)) bad.push_back("half-edge missing from rotations");
    if (!d.vertexAlive(d.tail(h))) bad.push_back("half-edge at dead vertex");
    char c = d.letter(h);
    if (c != 'a' && c != 'x' && c != 'X')
      bad.push_back("half-edge letter outside the lamp alphabet");
    if (d.letter(Diagram::twin(h)) != Word::inverseLetter(c))
      bad.push_back("twin letters do not invert each other");
  }
  if (!bad.empty()) return bad;  // faces need structural sanity

  if (d.basepoint() < 0 || !d.vertexAlive(d.basepoint())) {
    bad.push_back("no live basepoint");
    return bad;
  }

  int edgeCount = d.countEdges();
  if (edgeCount > 0) {
    if (d.outerStart() < 0 || !d.halfAlive(d.outerStart())) {
      bad.push_back("no live outer start");
      return bad;
    }
    if (d.tail(d.outerStart()) != d.basepoint())
      bad.push_back("outer start does not leave the basepoint");
  }

  std::vector<Diagram::Face> faces;
  try {
    faces = d.faces();
  } catch (const std::logic_error& e) {
    bad.push_back(std::string("face tracing failed: ") + e.what());
    return bad;
  }

  int outerCount = 0;
  for (const Diagram::Face& f : faces) {
    if (f.outer) {
      ++outerCount;
    } else if (f.k < 0) {
      bad.push_back("inner face is not a relator rotation: " + f.word);
    }
  }
  if (edgeCount > 0 && outerCount != 1)
    bad.push_back("expected exactly one outer face");

  // Connectivity from the basepoint along alive edges.
  std::vector<bool> reached(static_cast<std::size_t>(d.vertexLimit()), false);
  std::queue<int> bfs;
  bfs.push(d.basepoint());
  reached[static_cast<std::size_t>(d.basepoint())] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int h : d.rot(v)) {
      int w = d.head(h);
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        bfs.push(w);
      }
    }
  }
  for (int v = 0; v < d.vertexLimit(); ++v)
    if (d.vertexAlive(v) && !reached[static_cast<std::size_t>(v)])
      bad.push_back("diagram is not connected");

  int V = d.countVertices();
  int E = edgeCount;
  int F = static_cast<int>(faces.size()) + (E == 0 ? 1 : 0);
  if (V - E + F != 2) {
    std::ostringstream os;
    os << "Euler count violated: V=" << V << " E=" << E << " F=" << F;
    bad.push_back(os.str());
  }
  return bad;
}

Diagram diagramFromConjugates(const std::vector<ConjugateFactor>& factors,
                              int level) {
  Diagram d(level);
  d.addVertex();
  Word boundary;
  for (const ConjugateFactor& f : factors) {
    if (!f.stem.usesOnlyLampAlphabet())
      throw std::invalid_argument("conjugator uses letters outside a,x,X");
    if (f.k < 0 || f.k >= level)
      throw std::invalid_argument("relator index outside the level");
    if (f.sign != 1 && f.sign != -1)
      throw std::invalid_argument("sign must be +1 or -1");
    Word cell = f.sign > 0 ? relator(f.k) : relator(f.k).inverse();
    d.plantLollipop(static_cast<int>(boundary.size()), f.stem, cell.str(),
                    boundary);
    boundary = boundary + f.stem + cell + f.stem.inverse();
  }
  return d;
}

Diagram fold(Diagram d) {
  for (;;) {
    std::vector<int> cyc = d.outerCycle();
    int n = static_cast<int>(cyc.size());
    if (n < 2) break;

    // Face ids for the pinch guards.
    std::vector<int> faceOf(static_cast<std::size_t>(d.halfEdgeLimit()), -1);
    int outerFace = -1;
    {
      std::vector<Diagram::Face> fs = d.faces();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (int h : fs[i].cycle) faceOf[static_cast<std::size_t>(h)] =
            static_cast<int>(i);
        if (fs[i].outer) outerFace = static_cast<int>(i);
      }
    }

    bool applied = false;
    for (int i = 0; i + 1 < n && !applied; ++i) {
      int h1 = cyc[static_cast<std::size_t>(i)];
      int h2 = cyc[static_cast<std::size_t>(i + 1)];
      if (!foldablePair(d.letter(h1), d.letter(h2))) continue;

      int V = d.head(h1);
      if (h2 == Diagram::twin(h1)) {
        // Spur: dead-end excursion out of V's neighbour; delete the edge.
        d.eraseFromRotation(d.tail(h1), h1);
        d.eraseFromRotation(V, h2);
        d.killEdge(h1);
        if (d.rot(V).empty()) d.killVertex(V);
        if (d.outerStart() == h1)
          d.setOuterStart(n > 2 ? cyc[2] : -1);
        applied = true;
        break;
      }

      int A = d.tail(h1);
      int B = d.head(h2);
      if (A == B || A == V || B == V) continue;
      int fa = faceOf[static_cast<std::size_t>(Diagram::twin(h1))];
      int fb = faceOf[static_cast<std::size_t>(Diagram::twin(h2))];
      if (d.letter(h1) == 'a') {
        // Stored 'a' carries no orientation, so folding is only safe when
        // both edges are tree edges (outer face on both sides).
        if (fa != outerFace || fb != outerFace) continue;
      } else {
        if (fa == fb && fa != outerFace) continue;  // would pinch that face
      }

      // Identify the h2 edge with the h1 edge and B with A: the B-side
      // rotations slide in right after A's own, preserving every face
      // pointer except the two folded ones.
      d.eraseFromRotation(V, h2);
      std::vector<int> fromA = linearizeFrom(d.rot(A), h1);
      std::vector<int> fromB = linearizeFrom(d.rot(B), Diagram::twin(h2));
      fromB.erase(fromB.begin());
      for (int h : fromB) d.setTail(h, A);
      std::vector<int> mergedRot = std::move(fromA);
      mergedRot.insert(mergedRot.end(), fromB.begin(), fromB.end());
      d.rot(A) = std::move(mergedRot);
      d.rot(B).clear();
      d.killVertex(B);
      d.killEdge(h2);
      if (d.outerStart() == Diagram::twin(h2)) d.setOuterStart(h1);
      if (d.basepoint() == B) d.setBasepoint(A);
      applied = true;
    }
    if (!applied) break;
  }
  return d;
}

std::string toJsonText(const Diagram& d) {
  nlohmann::ordered_json j;
  j["level"] = d.level();
  j["basepoint"] = d.basepoint();
  j["outer_start"] = d.outerStart();
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (int v = 0; v < d.vertexLimit(); ++v)
    if (d.vertexAlive(v)) vs.push_back(v);
  j["vertices"] = std::move(vs);
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (int h = 0; h < d.halfEdgeLimit(); h += 2) {
    if (!d.halfAlive(h)) continue;
    nlohmann::ordered_json e;
    e["half"] = h;
    e["from"] = d.tail(h);
    e["to"] = d.head(h);
    e["label"] = std::string(1, d.letter(h));
    es.push_back(std::move(e));
  }
  j["edges"] = std::move(es);
  nlohmann::ordered_json rots = nlohmann::ordered_json::array();
  for (int v = 0; v < d.vertexLimit(); ++v) {
    if (!d.vertexAlive(v)) continue;
    nlohmann::ordered_json r;
    r["vertex"] = v;
    r["order"] = d.rot(v);
    rots.push_back(std::move(r));
  }
  j["rotations"] = std::move(rots);
  return j.dump();
}

Diagram diagramFromJsonText(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    Diagram d(j.at("level").get<int>());
    std::map<int, int> vId;
    for (const auto& v : j.at("vertices")) vId[v.get<int>()] = d.addVertex();
    std::map<int, int> hId;
    for (const auto& e : j.at("edges")) {
      std::string label = e.at("label").get<std::string>();
      if (label.size() != 1)
        throw std::invalid_argument("edge label must be one letter");
      int h = d.addEdge(vId.at(e.at("from").get<int>()),
                        vId.at(e.at("to").get<int>()), label[0]);
      hId[e.at("half").get<int>()] = h;
      hId[Diagram::twin(e.at("half").get<int>())] = Diagram::twin(h);
    }
    for (const auto& r : j.at("rotations")) {
      std::vector<int>& order = d.rot(vId.at(r.at("vertex").get<int>()));
      if (!order.empty())
        throw std::invalid_argument("duplicate rotation for a vertex");
      for (const auto& h : r.at("order")) order.push_back(hId.at(h.get<int>()));
    }
    int os = j.at("outer_start").get<int>();
    d.setOuterStart(os < 0 ? -1 : hId.at(os));
    int bp = j.at("basepoint").get<int>();
    if (bp >= 0) d.setBasepoint(vId.at(bp));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad diagram json: ") + e.what());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("diagram json references an unknown id");
  }
}

std::string toDotText(const Diagram& d) {
  std::ostringstream os;
  os << "digraph diagram {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < d.vertexLimit(); ++v) {
    if (!d.vertexAlive(v)) continue;
    os << "  v" << v;
    if (v == d.basepoint()) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (int h = 0; h < d.halfEdgeLimit(); h += 2) {
    if (!d.halfAlive(h)) continue;
    char c = d.letter(h);
    if (c == 'a') {
      os << "  v" << d.tail(h) << " -> v" << d.head(h)
         << " [label=\"a\", dir=none];\n";
    } else {
      int from = c == 'x' ? d.tail(h) : d.head(h);
      int to = c == 'x' ? d.head(h) : d.tail(h);
      os << "  v" << from << " -> v" << to << " [label=\"x\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace bandlab
