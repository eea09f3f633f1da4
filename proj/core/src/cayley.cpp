#include "bandlab/cayley.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bandlab/word.hpp"
#include "json.hpp"

namespace bandlab {

namespace {

const LampElement kGenA{{0}, 0};
const LampElement kGenX{{}, 1};
const LampElement kGenXInv{{}, -1};

// Vertex cycle of relator(k) read from base; empty when a vertex is
// missing from the index.
std::vector<int> cellCycle(
    const LampElement& base, int k,
    const std::unordered_map<LampElement, int, LampHash>& index) {
  std::vector<int> cycle;
  LampElement cur = base;
  Word r = relator(k);
  cycle.push_back(index.at(base));
  for (char c : r.str()) {
    switch (c) {
      case 'a': cur = lampMul(cur, kGenA); break;
      case 'x': cur = lampMul(cur, kGenX); break;
      case 'X': cur = lampMul(cur, kGenXInv); break;
    }
    auto it = index.find(cur);
    if (it == index.end()) return {};
    cycle.push_back(it->second);
  }
  return cycle;
}

}  // namespace

std::optional<int> Complex2::findVertex(const LampElement& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Complex2 buildBall(int radius, int level) {
  if (radius < 0) throw std::invalid_argument("buildBall: negative radius");
  if (level < 1) throw std::invalid_argument("buildBall: level must be >= 1");
  Complex2 out;
  out.radius_ = radius;
  out.level_ = level;

  // Deterministic BFS over right multiplication by a, x, x^-1.
  std::deque<int> queue;
  out.vertices_.push_back(LampElement::identity());
  out.depth_.push_back(0);
  out.index_.emplace(LampElement::identity(), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    if (out.depth_[static_cast<std::size_t>(id)] == radius) continue;
    LampElement g = out.vertices_[static_cast<std::size_t>(id)];
    for (const LampElement& gen : {kGenA, kGenX, kGenXInv}) {
      LampElement h = lampMul(g, gen);
      if (out.index_.count(h)) continue;
      int hid = static_cast<int>(out.vertices_.size());
      out.vertices_.push_back(h);
      out.depth_.push_back(out.depth_[static_cast<std::size_t>(id)] + 1);
      out.index_.emplace(h, hid);
      queue.push_back(hid);
    }
  }

  // Edges between stored vertices: a-edges undirected (kept once, from the
  // lower id), x-edges directed g -> gx.
  out.adjacency_.resize(out.vertices_.size());
  for (int id = 0; id < static_cast<int>(out.vertices_.size()); ++id) {
    const LampElement& g = out.vertices_[static_cast<std::size_t>(id)];
    if (auto aid = out.findVertex(lampMul(g, kGenA))) {
      if (id < *aid) out.edges_.push_back({id, *aid, 'a'});
      out.adjacency_[static_cast<std::size_t>(id)].push_back({*aid, 'a'});
    }
    if (auto xid = out.findVertex(lampMul(g, kGenX))) {
      out.edges_.push_back({id, *xid, 'x'});
      out.adjacency_[static_cast<std::size_t>(id)].push_back({*xid, 'x'});
    }
    if (auto pid = out.findVertex(lampMul(g, kGenXInv)))
      out.adjacency_[static_cast<std::size_t>(id)].push_back({*pid, 'X'});
  }

  // Cells: one per (base vertex, relator index) whose whole boundary cycle
  // is present.
  for (int id = 0; id < static_cast<int>(out.vertices_.size()); ++id) {
    for (int k = 0; k < level; ++k) {
      std::vector<int> cycle =
          cellCycle(out.vertices_[static_cast<std::size_t>(id)], k, out.index_);
      if (!cycle.empty()) out.cells_.push_back({id, k, std::move(cycle)});
    }
  }
  return out;
}

bool SubComplex::containsVertex(int id) const {
  return std::binary_search(vertexIds.begin(), vertexIds.end(), id);
}

namespace {

// Closes the edge and cell sets over a sorted vertex set.
SubComplex closeOverVertices(const Complex2& ambient,
                             std::vector<int> vertexIds) {
  SubComplex out;
  out.ambient = &ambient;
  out.vertexIds = std::move(vertexIds);
  for (int e = 0; e < static_cast<int>(ambient.edges().size()); ++e) {
    const Complex2::Edge& edge = ambient.edges()[static_cast<std::size_t>(e)];
    if (out.containsVertex(edge.from) && out.containsVertex(edge.to))
      out.edgeIds.push_back(e);
  }
  for (int c = 0; c < static_cast<int>(ambient.cells().size()); ++c) {
    const Complex2::Cell& cell = ambient.cells()[static_cast<std::size_t>(c)];
    bool all = true;
    for (int v : cell.boundary)
      if (!out.containsVertex(v)) {
        all = false;
        break;
      }
    if (all) out.cellIds.push_back(c);
  }
  return out;
}

}  // namespace

SubComplex seed(const Complex2& ambient, const LampElement& p) {
  auto id = ambient.findVertex(p);
  if (!id) throw std::invalid_argument("seed: vertex not in ambient complex");
  return closeOverVertices(ambient, {*id});
}

SubComplex star(const SubComplex& q) {
  const Complex2& ambient = *q.ambient;
  // Frontier guard: a vertex on the ambient boundary sphere has unseen
  // neighbours, so its star would be silently truncated.
  for (int v : q.vertexIds)
    if (ambient.depth(v) >= ambient.radius())
      throw std::runtime_error("ambient ball too small");
  std::set<int> grown(q.vertexIds.begin(), q.vertexIds.end());
  for (int v : q.vertexIds)
    for (auto [w, letter] : ambient.neighbours(v)) grown.insert(w);
  return closeOverVertices(ambient,
                           std::vector<int>(grown.begin(), grown.end()));
}

SubComplex starK(const SubComplex& q, int k) {
  if (k < 0) throw std::invalid_argument("starK: negative k");
  SubComplex cur = q;
  for (int i = 0; i < k; ++i) cur = star(cur);
  return cur;
}

int computeK(int n, int ambientRadius) {
  if (n < 1) throw std::invalid_argument("computeK: n must be >= 1");
  Complex2 ball = buildBall(ambientRadius, n);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    LampElement p;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) p.lamps.push_back(i);
    auto id = ball.findVertex(p);
    if (!id) throw std::runtime_error("ambient ball too small");
    best = std::max(best, ball.depth(*id));
  }
  return best;
}

std::optional<int> distance(const LampElement& p, const LampElement& q,
                            int bound) {
  if (bound < 0) return std::nullopt;
  if (p == q) return 0;
  std::unordered_set<LampElement, LampHash> seen{p};
  std::deque<std::pair<LampElement, int>> queue{{p, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (d == bound) continue;
    for (const LampElement& gen : {kGenA, kGenX, kGenXInv}) {
      LampElement next = lampMul(cur, gen);
      if (!seen.insert(next).second) continue;
      if (next == q) return d + 1;
      queue.push_back({next, d + 1});
    }
  }
  return std::nullopt;
}

std::string toDotText(const Complex2& c) {
  std::ostringstream os;
  os << "digraph ball {\n";
  for (int id = 0; id < static_cast<int>(c.vertices().size()); ++id)
    os << "  v" << id << " [label=\""
       << toText(c.vertices()[static_cast<std::size_t>(id)]) << "\"];\n";
  for (const Complex2::Edge& e : c.edges()) {
    if (e.label == 'a')
      os << "  v" << e.from << " -> v" << e.to
         << " [label=\"a\", dir=none];\n";
    else
      os << "  v" << e.from << " -> v" << e.to << " [label=\"x\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string toJsonText(const Complex2& c) {
  nlohmann::ordered_json j;
  j["radius"] = c.radius();
  j["level"] = c.level();
  j["vertices"] = nlohmann::ordered_json::array();
  for (int id = 0; id < static_cast<int>(c.vertices().size()); ++id) {
    const LampElement& p = c.vertices()[static_cast<std::size_t>(id)];
    nlohmann::ordered_json v;
    v["id"] = id;
    v["lamps"] = p.lamps;
    v["shift"] = p.shift;
    v["depth"] = c.depth(id);
    j["vertices"].push_back(std::move(v));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Complex2::Edge& e : c.edges()) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label"] = std::string(1, e.label);
    j["edges"].push_back(std::move(je));
  }
  j["cells"] = nlohmann::ordered_json::array();
  for (const Complex2::Cell& cell : c.cells()) {
    nlohmann::ordered_json jc;
    jc["base"] = cell.base;
    jc["k"] = cell.k;
    jc["boundary"] = cell.boundary;
    j["cells"].push_back(std::move(jc));
  }
  return j.dump();
}

}  // namespace bandlab
