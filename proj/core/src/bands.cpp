#include "bandlab/bands.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bandlab {

namespace {

// Faces of a diagram plus the reverse lookup half-edge -> face index.
struct FaceIndex {
  std::vector<Diagram::Face> faces;
  std::map<int, int> faceOf;
};

FaceIndex indexFaces(const Diagram& d) {
  FaceIndex fi;
  fi.faces = d.faces();
  for (std::size_t i = 0; i < fi.faces.size(); ++i)
    for (int h : fi.faces[i].cycle) fi.faceOf[h] = static_cast<int>(i);
  return fi;
}

// One direction of a band walk: starting at the half-edge h0, repeatedly
// cross the cell in front of it через the opposite a-edge.  Stops at the
// outer face or, for an annulus, when the walk returns to h0.
struct BandWalk {
  std::vector<int> cells;
  std::vector<int> exits;  // even id of the a-edge left through, per cell
  bool closed = false;
};

BandWalk walkBand(const FaceIndex& fi, int h0) {
  BandWalk w;
  int h = h0;
  for (;;) {
    int f = fi.faceOf.at(h);
    if (fi.faces[static_cast<std::size_t>(f)].outer) return w;
    int o = oppositeAEdge(fi.faces[static_cast<std::size_t>(f)], h);
    w.cells.push_back(f);
    w.exits.push_back(o & ~1);
    h = Diagram::twin(o);
    if (h == h0) {
      w.closed = true;
      return w;
    }
  }
}

// The half of edge e (given by its even id) lying on face f.
int halfInFace(const FaceIndex& fi, int e, int f) {
  auto it = fi.faceOf.find(e);
  if (it != fi.faceOf.end() && it->second == f) return e;
  it = fi.faceOf.find(Diagram::twin(e));
  if (it != fi.faceOf.end() && it->second == f) return Diagram::twin(e);
  throw std::logic_error("connecting edge does not touch its cell");
}

// Half-edges strictly between from and to in the face cycle.
std::vector<int> arcBetween(const Diagram::Face& face, int from, int to) {
  std::size_t n = face.cycle.size();
  auto it = std::find(face.cycle.begin(), face.cycle.end(), from);
  if (it == face.cycle.end())
    throw std::logic_error("arc endpoint not on the face");
  std::size_t i = static_cast<std::size_t>(it - face.cycle.begin());
  std::vector<int> out;
  for (std::size_t step = 1; step < n; ++step) {
    int h = face.cycle[(i + step) % n];
    if (h == to) return out;
    out.push_back(h);
  }
  throw std::logic_error("arc endpoints do not share the face");
}

void tolerantErase(std::vector<int>& r, int h) {
  auto it = std::find(r.begin(), r.end(), h);
  if (it != r.end()) r.erase(it);
}

// Rotation list rotated so that it starts at the given half.
std::vector<int> rotFrom(const std::vector<int>& r, int start) {
  auto it = std::find(r.begin(), r.end(), start);
  if (it == r.end()) throw std::logic_error("rotation entry missing");
  std::vector<int> out(it, r.end());
  out.insert(out.end(), r.begin(), it);
  return out;
}

// Vertices reachable from v0 along live edges.
std::set<int> reachableFrom(const Diagram& d, int v0) {
  std::set<int> seen{v0};
  std::queue<int> q;
  q.push(v0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : d.rot(v)) {
      if (!d.halfAlive(h)) continue;
      if (seen.insert(d.head(h)).second) q.push(d.head(h));
    }
  }
  return seen;
}

}  // namespace

int oppositeAEdge(const Diagram::Face& face, int h) {
  std::vector<std::size_t> aPos;
  int mine = -1;
  for (std::size_t i = 0; i < face.cycle.size(); ++i) {
    if (face.word[i] != 'a') continue;
    if (face.cycle[i] == h) mine = static_cast<int>(aPos.size());
    aPos.push_back(i);
  }
  if (mine < 0)
    throw std::invalid_argument("half-edge is not an a-side of the face");
  std::size_t n = aPos.size();
  if (n != 2 && n != 4)
    throw std::invalid_argument("face does not pair its a-edges");
  std::size_t opp = (static_cast<std::size_t>(mine) + n / 2) % n;
  return face.cycle[aPos[opp]];
}

Band traceBand(const Diagram& d, int aHalf) {
  if (aHalf < 0 || aHalf >= d.halfEdgeLimit() || !d.halfAlive(aHalf) ||
      d.letter(aHalf) != 'a')
    throw std::invalid_argument("band must start on a live a-edge");
  FaceIndex fi = indexFaces(d);
  int h0 = aHalf & ~1;
  BandWalk fwd = walkBand(fi, h0);
  Band b;
  if (fwd.closed) {
    b.annulus = true;
    b.cells = fwd.cells;
    // The walk records the edge left through per cell, ending on the start
    // edge; rotate so that edge i enters cell i.
    b.connectingEdges.push_back(fwd.exits.back());
    b.connectingEdges.insert(b.connectingEdges.end(), fwd.exits.begin(),
                             std::prev(fwd.exits.end()));
    return b;
  }
  BandWalk back = walkBand(fi, Diagram::twin(h0));
  b.cells.assign(back.cells.rbegin(), back.cells.rend());
  b.cells.insert(b.cells.end(), fwd.cells.begin(), fwd.cells.end());
  b.connectingEdges.assign(back.exits.rbegin(), back.exits.rend());
  b.connectingEdges.push_back(h0);
  b.connectingEdges.insert(b.connectingEdges.end(), fwd.exits.begin(),
                           fwd.exits.end());
  return b;
}

std::vector<Band> allBands(const Diagram& d) {
  std::vector<Band> out;
  std::set<int> claimed;
  for (int h = 0; h < d.halfEdgeLimit(); h += 2) {
    if (!d.halfAlive(h) || d.letter(h) != 'a') continue;
    if (claimed.count(h)) continue;
    Band b = traceBand(d, h);
    claimed.insert(b.connectingEdges.begin(), b.connectingEdges.end());
    out.push_back(std::move(b));
  }
  return out;
}

bool selfCrosses(const Band& b) {
  std::set<int> seen;
  for (int c : b.cells)
    if (!seen.insert(c).second) return true;
  return false;
}

std::pair<Word, Word> bandSideWords(const Diagram& d, const Band& b) {
  if (b.cells.empty()) return {Word(), Word()};
  FaceIndex fi = indexFaces(d);
  std::size_t m = b.cells.size();
  std::size_t ne = b.connectingEdges.size();
  auto cellFace = [&](std::size_t i) -> const Diagram::Face& {
    int c = b.cells[i];
    if (c < 0 || c >= static_cast<int>(fi.faces.size()))
      throw std::invalid_argument("band cell index out of range");
    return fi.faces[static_cast<std::size_t>(c)];
  };
  std::string lhs, rhs;
  for (std::size_t i = 0; i < m; ++i) {
    int enter = halfInFace(fi, b.connectingEdges[i], b.cells[i]);
    int exit = halfInFace(fi, b.connectingEdges[(i + 1) % ne], b.cells[i]);
    for (int h : arcBetween(cellFace(i), enter, exit)) lhs.push_back(d.letter(h));
  }
  for (std::size_t i = m; i-- > 0;) {
    int enter = halfInFace(fi, b.connectingEdges[i], b.cells[i]);
    int exit = halfInFace(fi, b.connectingEdges[(i + 1) % ne], b.cells[i]);
    for (int h : arcBetween(cellFace(i), exit, enter)) rhs.push_back(d.letter(h));
  }
  return {Word::fromValid(std::move(lhs)), Word::fromValid(std::move(rhs))};
}

// Removing an annular band deletes its cells and a-edges and zips the two
// freed circles together.  One circle still carries the basepoint (the
// mainland); the other bounds the part of the diagram the annulus enclosed
// (the island).  The island keeps its edges; each mainland circle edge is
// glued onto the island edge facing it across the vanished strip, material
// hanging off mainland circle vertices is re-attached at the matching
// island vertex, and the paired vertices are merged.
Diagram removeAnnulus(const Diagram& d, const Band& b) {
  if (!b.annulus) throw std::invalid_argument("band is not an annulus");
  if (b.cells.empty()) throw std::invalid_argument("annulus has no cells");
  if (selfCrosses(b))
    throw std::invalid_argument(
        "band crosses itself; removal needs an embedded annulus");
  if (b.connectingEdges.size() != b.cells.size())
    throw std::invalid_argument("annulus needs one a-edge per cell");

  Word before = d.boundaryWord();
  Diagram out = d;
  FaceIndex fi = indexFaces(out);
  std::size_t m = b.cells.size();

  // Where the band enters and leaves each of its cells.
  std::vector<int> enters(m), exits(m);
  for (std::size_t i = 0; i < m; ++i) {
    int c = b.cells[i];
    if (c < 0 || c >= static_cast<int>(fi.faces.size()))
      throw std::invalid_argument("band cell index out of range");
    if (fi.faces[static_cast<std::size_t>(c)].outer)
      throw std::invalid_argument("band cell is an outer face");
    enters[i] = halfInFace(fi, b.connectingEdges[i], c);
    exits[i] = halfInFace(fi, b.connectingEdges[(i + 1) % m], c);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (Diagram::twin(exits[i]) != enters[(i + 1) % m])
      throw std::logic_error("band cells do not chain");

  // The two boundary arcs of each cell, between its two band a-edges.
  std::vector<std::vector<int>> arcT(m), arcO(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Diagram::Face& f = fi.faces[static_cast<std::size_t>(b.cells[i])];
    arcT[i] = arcBetween(f, enters[i], exits[i]);
    arcO[i] = arcBetween(f, exits[i], enters[i]);
    if (arcT[i].size() != arcO[i].size())
      throw std::logic_error("cell arcs have mismatched lengths");
  }

  int vT = out.head(enters[0]);
  int vO = out.tail(enters[0]);

  // Delete the connecting a-edges.
  for (int e : b.connectingEdges) {
    out.eraseFromRotation(out.tail(e), e);
    out.eraseFromRotation(out.tail(Diagram::twin(e)), Diagram::twin(e));
    out.killEdge(e);
  }

  // Decide which circle still holds the basepoint.
  std::set<int> reach = reachableFrom(out, out.basepoint());
  bool tMainland = reach.count(vT) > 0;
  if (tMainland == (reach.count(vO) > 0))
    throw std::logic_error("band does not separate the diagram");

  std::size_t T = 0;
  for (std::size_t i = 0; i < m; ++i) T += arcT[i].size();

  // A closed ring made only of bigons pins both rim rotations shut around
  // bare vertices and leaves no room for an outer face, so it cannot occur
  // inside a valid diagram.
  if (T == 0) throw std::logic_error("bigon ring bounds no material");

  // The two rims of the strip as matched half-edge lists: gs runs along
  // the mainland circle with the cells on its left, bs along the island
  // circle in the opposite direction, and gs[t] is glued onto twin(bs[t]).
  std::vector<int> gs, bs;
  gs.reserve(T);
  bs.reserve(T);
  auto pushCell = [&](const std::vector<int>& main,
                      const std::vector<int>& other) {
    for (std::size_t j = 0; j < main.size(); ++j) {
      gs.push_back(main[j]);
      bs.push_back(other[other.size() - 1 - j]);
    }
  };
  if (tMainland) {
    for (std::size_t i = 0; i < m; ++i) pushCell(arcT[i], arcO[i]);
  } else {
    for (std::size_t i = m; i-- > 0;) pushCell(arcO[i], arcT[i]);
  }

  // Material hanging off a mainland circle vertex sits between the rim
  // half-edges of one visit; move it into the island rotation at the slot
  // facing it across the strip.
  std::set<int> rim;
  for (int g : gs) {
    rim.insert(g);
    rim.insert(Diagram::twin(g));
  }
  for (std::size_t t = 0; t < T; ++t) {
    const std::vector<int>& r = out.rot(out.head(gs[t]));
    std::vector<int> ordered = rotFrom(r, gs[(t + 1) % T]);
    std::vector<int> fan;
    for (std::size_t s = 1; s < ordered.size() && !rim.count(ordered[s]); ++s)
      fan.push_back(ordered[s]);
    if (fan.empty()) continue;
    std::vector<int>& ri = out.rot(out.tail(bs[t]));
    auto at = std::find(ri.begin(), ri.end(),
                        Diagram::twin(bs[(t + 1) % T]));
    if (at == ri.end()) throw std::logic_error("island anchor missing");
    ri.insert(std::next(at), fan.begin(), fan.end());
  }

  // Union the vertex pairs facing each other across the strip.
  std::vector<int> uf(static_cast<std::size_t>(out.vertexLimit()));
  for (std::size_t v = 0; v < uf.size(); ++v) uf[v] = static_cast<int>(v);
  auto findRoot = [&uf](int v) {
    while (uf[static_cast<std::size_t>(v)] != v) {
      uf[static_cast<std::size_t>(v)] =
          uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
      v = uf[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int c) {
    uf[static_cast<std::size_t>(findRoot(a))] = findRoot(c);
  };
  std::set<int> touched;
  for (std::size_t t = 0; t < T; ++t) {
    unite(out.head(gs[t]), out.tail(bs[t]));
    touched.insert(out.head(gs[t]));
    touched.insert(out.tail(bs[t]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    unite(out.head(enters[i]), out.tail(enters[i]));
    touched.insert(out.head(enters[i]));
    touched.insert(out.tail(enters[i]));
  }
  std::map<int, std::vector<int>> classes;
  for (int v : touched) classes[findRoot(v)].push_back(v);

  // Fold each class onto one island member.
  for (auto& [root, members] : classes) {
    int rep = -1;
    for (int v : members)
      if (!reach.count(v)) {
        rep = v;
        break;
      }
    if (rep < 0) throw std::logic_error("vertex class has no island side");
    for (int v : members) {
      if (v == rep) continue;
      for (int h : out.rot(v)) out.setTail(h, rep);
      if (!reach.count(v)) {
        // A second island vertex pinched onto the first: keep its fabric.
        std::vector<int>& rr = out.rot(rep);
        rr.insert(rr.end(), out.rot(v).begin(), out.rot(v).end());
      }
      out.rot(v).clear();
      out.killVertex(v);
      if (out.basepoint() == v) out.setBasepoint(rep);
    }
  }

  // Glue each mainland rim edge onto the island edge across the strip.
  std::map<int, int> hMap;
  auto resolveHalf = [&](int h) {
    auto it = hMap.find(h);
    while (it != hMap.end()) {
      h = it->second;
      it = hMap.find(h);
    }
    return h;
  };
  for (std::size_t t = 0; t < T; ++t) {
    int keep = resolveHalf(Diagram::twin(bs[t]));
    int drop = resolveHalf(gs[t]);
    if (keep == drop) continue;
    if (keep == Diagram::twin(drop))
      throw std::logic_error("strip edges glue with reversed orientation");
    if (out.letter(keep) != out.letter(drop) ||
        out.tail(keep) != out.tail(drop) || out.head(keep) != out.head(drop))
      throw std::logic_error("strip edges disagree across the band");
    tolerantErase(out.rot(out.tail(drop)), drop);
    tolerantErase(out.rot(out.tail(Diagram::twin(drop))),
                  Diagram::twin(drop));
    out.killEdge(drop);
    hMap[drop] = keep;
    hMap[Diagram::twin(drop)] = Diagram::twin(keep);
  }

  out.setOuterStart(resolveHalf(out.outerStart()));
  if (!(out.boundaryWord() == before))
    throw std::logic_error("annulus removal changed the boundary");
  if (!validate(out).empty())
    throw std::logic_error("annulus removal broke the diagram");
  return out;
}

std::string bandReportJson(const Diagram& d) {
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const Band& b : allBands(d)) {
    auto [lhs, rhs] = bandSideWords(d, b);
    nlohmann::ordered_json jb;
    jb["cells"] = b.cells;
    jb["connecting_edges"] = b.connectingEdges;
    jb["kind"] = b.annulus ? "annulus" : "boundary-to-boundary";
    jb["self_crossing"] = selfCrosses(b);
    jb["side_words"] = {lhs.str(), rhs.str()};
    jb["side_x_exponent_sums"] = {xExponentSum(lhs), xExponentSum(rhs)};
    report.push_back(std::move(jb));
  }
  nlohmann::ordered_json j;
  j["bands"] = std::move(report);
  return j.dump();
}

}  // namespace bandlab
