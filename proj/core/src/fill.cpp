#include "bandlab/fill.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bandlab/lamp.hpp"
#include "bandlab/trace.hpp"

namespace bandlab {

namespace {

// x-reduction of a plain letter string (cancel xX/Xx only, never aa).
std::string xReduce(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!out.empty() && Word::cancels(out.back(), c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Running x-exponents at the a-letters; the reflection indices a
// dihedral certificate can use.
std::vector<int> mirrorIndices(const Word& w) {
  std::set<int> seen;
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char ch = w.at(i);
    if (ch == 'x')
      ++c;
    else if (ch == 'X')
      --c;
    else
      seen.insert(c);
  }
  return std::vector<int>(seen.begin(), seen.end());
}

struct Move {
  bool isDelete = true;
  int pos = 0;            // position in the parent state
  std::string rho;        // relator rotation used
  std::string parent;     // parent state
};

struct SearchOutcome {
  bool found = false;
  std::vector<std::pair<std::string, Move>> trace;  // child state + move
  long explored = 0;
};

// Delete a rotation occurrence with the seam cascade: positions i/j walk
// outwards while the flanks cancel.  Both flanks are internally reduced,
// so the cascade is a single two-pointer sweep.
std::string deleteWithCascade(const std::string& s, int pos, int len,
                              int* cascade) {
  int i = pos - 1;
  int j = pos + len;
  int n = static_cast<int>(s.size());
  while (i >= 0 && j < n &&
         Word::cancels(s[static_cast<std::size_t>(i)],
                       s[static_cast<std::size_t>(j)])) {
    --i;
    ++j;
  }
  if (cascade) *cascade = pos - 1 - i;
  return s.substr(0, static_cast<std::size_t>(i + 1)) +
         s.substr(static_cast<std::size_t>(j));
}

SearchOutcome breadthFirstFill(const std::string& start, int level,
                               int maxArea, std::size_t lengthCap,
                               const std::vector<std::string>& rotations) {
  SearchOutcome out;
  if (start.empty()) {  // nothing to fill: the empty trace is accepted
    out.found = true;
    return out;
  }

  std::unordered_map<std::string, Move> parentOf;
  std::unordered_map<std::string, int> depthOf;
  std::deque<std::string> queue;
  parentOf.emplace(start, Move{});
  depthOf.emplace(start, 0);
  queue.push_back(start);

  std::string accepted;
  bool found = false;
  while (!queue.empty() && !found) {
    std::string s = queue.front();
    queue.pop_front();
    ++out.explored;
    int depth = depthOf.at(s);
    if (depth >= maxArea) continue;

    auto visit = [&](std::string child, Move mv) {
      if (child.size() > lengthCap) return;
      if (parentOf.count(child)) return;
      depthOf.emplace(child, depth + 1);
      parentOf.emplace(child, std::move(mv));
      if (child.empty()) {
        accepted = child;
        found = true;
        return;
      }
      queue.push_back(std::move(child));
    };

    // Deletions first: they are the moves that shrink towards the empty
    // word, and exploring them first keeps accepted traces deletion-only
    // whenever a minimal deletion-only filling exists.
    for (const std::string& rho : rotations) {
      for (std::size_t at = s.find(rho); at != std::string::npos && !found;
           at = s.find(rho, at + 1)) {
        std::string child =
            deleteWithCascade(s, static_cast<int>(at), static_cast<int>(rho.size()),
                              nullptr);
        visit(std::move(child),
              Move{true, static_cast<int>(at), rho, s});
      }
      if (found) break;
    }
    if (found) break;

    for (const std::string& rho : rotations) {
      for (std::size_t p = 0; p <= s.size() && !found; ++p) {
        std::string child = xReduce(s.substr(0, p) + rho + s.substr(p));
        visit(std::move(child), Move{false, static_cast<int>(p), rho, s});
      }
      if (found) break;
    }
  }

  if (!found) return out;
  out.found = true;

  // Walk the parent chain back up from the empty word.
  std::string cur = accepted;
  while (cur != start) {
    Move mv = parentOf.at(cur);
    out.trace.emplace_back(cur, mv);
    cur = mv.parent;
  }
  std::reverse(out.trace.begin(), out.trace.end());
  return out;
}

// Rebuilds the diagram by replaying the accepted trace backwards from the
// empty diagram: undoing a deletion plants a lollipop (x-stem from the
// cascade plus the deleted cell), undoing an insertion glues the cell
// over the surviving boundary segment with x-stubs for the cancelled
// flanks.  Each step adds exactly one cell and keeps the map planar.
Diagram replayTrace(const std::string& start,
                    const std::vector<std::pair<std::string, Move>>& trace,
                    int level) {
  Diagram d(level);
  d.addVertex();

  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const std::string& child = it->first;  // boundary before this step
    const Move& mv = it->second;
    Word boundary = Word::fromValid(child);
    if (d.boundaryWord() != boundary)
      throw std::logic_error("replay lost boundary sync");

    const std::string& s = mv.parent;  // boundary after this step
    int len = static_cast<int>(mv.rho.size());
    if (mv.isDelete) {
      int cascade = 0;
      deleteWithCascade(s, mv.pos, len, &cascade);
      Word stem = Word::fromValid(
          s.substr(static_cast<std::size_t>(mv.pos - cascade),
                   static_cast<std::size_t>(cascade)));
      d.plantLollipop(mv.pos - cascade, stem, mv.rho, boundary);
    } else {
      // s = u.v with rho inserted at pos; child = u0 rho0 v0 after the
      // two seam cascades.
      int t1 = 0;
      while (t1 < mv.pos && t1 < len &&
             Word::cancels(s[static_cast<std::size_t>(mv.pos - 1 - t1)],
                           mv.rho[static_cast<std::size_t>(t1)]))
        ++t1;
      int vlen = static_cast<int>(s.size()) - mv.pos;
      int t2 = 0;
      while (t2 < vlen && t2 < len - t1 &&
             Word::cancels(mv.rho[static_cast<std::size_t>(len - 1 - t2)],
                           s[static_cast<std::size_t>(mv.pos + t2)]))
        ++t2;
      Word alpha = Word::fromValid(
          s.substr(static_cast<std::size_t>(mv.pos - t1),
                   static_cast<std::size_t>(t1)));
      Word betaBar = Word::fromValid(s.substr(
          static_cast<std::size_t>(mv.pos), static_cast<std::size_t>(t2)));
      int segLen = len - t1 - t2;
      if (segLen <= 0)
        throw std::logic_error("insertion cancelled a whole relator");
      d.glueCellOverSegment(mv.pos - t1, segLen, alpha, betaBar.inverse(),
                            boundary);
    }
  }

  Word endBoundary = Word::fromValid(start);
  if (d.boundaryWord() != endBoundary)
    throw std::logic_error("replay produced the wrong boundary");
  return d;
}

}  // namespace

FillResult fill(const Word& w, int level, int maxArea) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (maxArea < 0) throw std::invalid_argument("max area must be >= 0");
  if (!w.usesOnlyLampAlphabet())
    throw std::invalid_argument("fill expects a word over a, x, X");

  FillResult res;

  // --- sound pre-checks: each certifies that no filling exists ----------
  if (xExponentSum(w) != 0) {
    res.reason = "nonzero x-exponent sum";
    return res;
  }
  std::size_t aCount = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i) == 'a') ++aCount;
  if (aCount % 2 != 0) {
    res.reason = "odd a-count";
    return res;
  }
  if (!(evalWord(w) == LampElement{})) {
    res.reason = "nontrivial lamplighter evaluation";
    return res;
  }
  {
    std::vector<int> idx = mirrorIndices(w);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[b] - idx[a] < level) continue;
        if (!dinftyImage(w, idx[a], idx[b], level).isIdentity()) {
          res.reason = "infinite-dihedral certificate";
          return res;
        }
      }
    }
  }

  std::vector<std::string> rotations;
  std::size_t longest = 0;
  for (int k = 0; k < level; ++k) {
    for (std::string& r : relatorRotations(k)) {
      longest = std::max(longest, r.size());
      rotations.push_back(std::move(r));
    }
  }

  std::string start = xReduce(w.str());
  std::size_t lengthCap = start.size() + longest;

  SearchOutcome search =
      breadthFirstFill(start, level, maxArea, lengthCap, rotations);
  res.statesExplored = search.explored;
  if (!search.found) {
    res.reason = "search exhausted";
    return res;
  }

  Diagram d = replayTrace(start, search.trace, level);

  // Realize any x-pairs the initial reduction removed as spurs, so the
  // boundary reads the input word letter for letter.
  {
    std::vector<std::pair<int, char>> pairs;
    std::string z = w.str();
    for (;;) {
      bool changed = false;
      for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (Word::cancels(z[i], z[i + 1])) {
          pairs.emplace_back(static_cast<int>(i), z[i]);
          z.erase(i, 2);
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
      d.plantSpur(it->first, it->second, d.boundaryWord());
  }

  if (d.boundaryWord() != w)
    throw std::logic_error("filling produced the wrong boundary");
  std::vector<std::string> bad = validate(d);
  if (!bad.empty())
    throw std::logic_error("filling produced an invalid diagram: " +
                           bad.front());

  res.status = FillStatus::Found;
  res.area = d.area();
  res.diagram = std::move(d);
  res.reason = "found";
  return res;
}

}  // namespace bandlab
