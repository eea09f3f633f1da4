#include "bandlab/trace.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace bandlab {

bool traceCommutes(int i, int j, int level) {
  return i != j && std::abs(i - j) <= level - 1;
}

TraceWord::TraceWord(int level) : level_(level) {
  if (level < 1) throw std::invalid_argument("TraceWord: level must be >= 1");
}

TraceWord TraceWord::normalize(std::vector<int> gens, int level) {
  TraceWord out(level);
  std::vector<int>& red = out.gens_;
  red.reserve(gens.size());

  // Reduction: push each letter, looking down past commuting entries; an
  // equal visible letter cancels, a non-commuting one blocks.
  for (int g : gens) {
    bool cancelled = false;
    std::size_t k = red.size();
    while (k > 0) {
      int below = red[k - 1];
      if (below == g) {
        red.erase(red.begin() + static_cast<std::ptrdiff_t>(k - 1));
        cancelled = true;
        break;
      }
      if (!traceCommutes(below, g, level)) break;
      --k;
    }
    if (!cancelled) red.push_back(g);
  }

  // Linearization: among letters whose earlier dependencies are consumed,
  // repeatedly emit the least.  Equal letters never commute, so their
  // relative order is fixed and the choice is unambiguous.
  std::vector<int> lex;
  lex.reserve(red.size());
  std::vector<bool> used(red.size(), false);
  for (std::size_t step = 0; step < red.size(); ++step) {
    std::size_t best = red.size();
    for (std::size_t p = 0; p < red.size(); ++p) {
      if (used[p]) continue;
      bool avail = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (!used[q] && !traceCommutes(red[q], red[p], level)) {
          avail = false;
          break;
        }
      }
      if (avail && (best == red.size() || red[p] < red[best])) best = p;
    }
    used[best] = true;
    lex.push_back(red[best]);
  }
  out.gens_ = std::move(lex);
  return out;
}

G1Element g1FromWord(const Word& w, int level) {
  if (!w.usesOnlyLampAlphabet())
    throw std::invalid_argument("g1FromWord: word uses t letters");
  std::vector<int> emitted;
  int c = 0;
  for (char ch : w.str()) {
    switch (ch) {
      case 'a': emitted.push_back(c); break;
      case 'x': ++c; break;
      case 'X': --c; break;
    }
  }
  return {TraceWord::normalize(std::move(emitted), level), c};
}

G1Element g1Mul(const G1Element& p, const G1Element& q) {
  if (p.level() != q.level())
    throw std::invalid_argument("g1Mul: level mismatch");
  std::vector<int> gens = p.kernelPart.gens();
  gens.reserve(gens.size() + q.kernelPart.size());
  for (int i : q.kernelPart.gens()) gens.push_back(i + p.shift);
  return {TraceWord::normalize(std::move(gens), p.level()), p.shift + q.shift};
}

G1Element g1Inv(const G1Element& p) {
  std::vector<int> gens;
  gens.reserve(p.kernelPart.size());
  const std::vector<int>& src = p.kernelPart.gens();
  for (auto it = src.rbegin(); it != src.rend(); ++it)
    gens.push_back(*it - p.shift);
  return {TraceWord::normalize(std::move(gens), p.level()), -p.shift};
}

bool g1IsIdentity(const G1Element& p) {
  return p.kernelPart.empty() && p.shift == 0;
}

LampElement g1ToLamp(const G1Element& p) {
  std::vector<int> toggles = p.kernelPart.gens();
  std::sort(toggles.begin(), toggles.end());
  std::vector<int> lamps;
  for (std::size_t i = 0; i < toggles.size();) {
    std::size_t j = i;
    while (j < toggles.size() && toggles[j] == toggles[i]) ++j;
    if ((j - i) % 2 == 1) lamps.push_back(toggles[i]);
    i = j;
  }
  return {std::move(lamps), p.shift};
}

DihedralElement dihedralMul(const DihedralElement& p,
                            const DihedralElement& q) {
  int sign = p.flip ? -1 : 1;
  return {p.translation + sign * q.translation, p.flip ^ q.flip};
}

DihedralElement dinftyImage(const Word& w, int i, int j, int level) {
  if (std::abs(i - j) < level)
    throw std::invalid_argument(
        "dinftyImage: |i - j| must be at least the level");
  if (!w.usesOnlyLampAlphabet())
    throw std::invalid_argument("dinftyImage: word uses t letters");
  const DihedralElement ri{0, 1};
  const DihedralElement rj{1, 1};
  DihedralElement acc;
  int c = 0;
  for (char ch : w.str()) {
    switch (ch) {
      case 'a':
        if (c == i) acc = dihedralMul(acc, ri);
        else if (c == j) acc = dihedralMul(acc, rj);
        break;
      case 'x': ++c; break;
      case 'X': --c; break;
    }
  }
  return acc;
}

std::string toJsonText(const G1Element& p) {
  nlohmann::ordered_json j;
  j["level"] = p.level();
  j["shift"] = p.shift;
  j["kernel"] = p.kernelPart.gens();
  return j.dump();
}

G1Element g1FromJsonText(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int level = j.at("level").get<int>();
  std::vector<int> gens = j.at("kernel").get<std::vector<int>>();
  TraceWord tw = TraceWord::normalize(gens, level);
  if (tw.gens() != gens)
    throw std::invalid_argument("g1FromJsonText: kernel not in normal form");
  return {std::move(tw), j.at("shift").get<int>()};
}

}  // namespace bandlab
