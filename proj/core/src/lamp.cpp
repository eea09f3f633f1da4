#include "bandlab/lamp.hpp"

#include <algorithm>
#include <sstream>

namespace bandlab {

namespace {
// Symmetric difference of two sorted vectors.
std::vector<int> symDiff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}
}  // namespace

LampElement lampMul(const LampElement& p, const LampElement& q) {
  std::vector<int> shifted;
  shifted.reserve(q.lamps.size());
  for (int i : q.lamps) shifted.push_back(i + p.shift);
  return {symDiff(p.lamps, shifted), p.shift + q.shift};
}

LampElement lampInv(const LampElement& p) {
  std::vector<int> moved;
  moved.reserve(p.lamps.size());
  for (int i : p.lamps) moved.push_back(i - p.shift);
  std::sort(moved.begin(), moved.end());
  return {std::move(moved), -p.shift};
}

LampElement evalWord(const Word& w) {
  if (!w.usesOnlyLampAlphabet())
    throw std::invalid_argument("evalWord: word uses t letters");
  std::vector<int> lit;  // unsorted toggle log
  int pos = 0;
  for (char c : w.str()) {
    switch (c) {
      case 'a': lit.push_back(pos); break;
      case 'x': ++pos; break;
      case 'X': --pos; break;
    }
  }
  std::sort(lit.begin(), lit.end());
  std::vector<int> lamps;
  for (std::size_t i = 0; i < lit.size();) {
    std::size_t j = i;
    while (j < lit.size() && lit[j] == lit[i]) ++j;
    if ((j - i) % 2 == 1) lamps.push_back(lit[i]);
    i = j;
  }
  return {std::move(lamps), pos};
}

Word relator(int k) {
  if (k < 0) throw std::invalid_argument("relator: negative k");
  if (k == 0) return Word::fromValid("aa");
  std::string s;
  s.reserve(static_cast<std::size_t>(4 * k + 4));
  for (int rep = 0; rep < 2; ++rep) {
    s += 'a';
    s += std::string(static_cast<std::size_t>(k), 'X');
    s += 'a';
    s += std::string(static_cast<std::size_t>(k), 'x');
  }
  return Word::fromValid(std::move(s));
}

Word normalWord(const LampElement& p) {
  std::string s;
  int pos = 0;
  for (int lamp : p.lamps) {
    s += powerWord('x', lamp - pos).str();
    s += 'a';
    pos = lamp;
  }
  s += powerWord('x', p.shift - pos).str();
  return Word::fromValid(std::move(s));
}

std::string toText(const LampElement& p) {
  std::ostringstream os;
  os << "lamps=[";
  for (std::size_t i = 0; i < p.lamps.size(); ++i) {
    if (i) os << ',';
    os << p.lamps[i];
  }
  os << "];shift=" << p.shift;
  return os.str();
}

LampElement lampFromText(const std::string& text) {
  LampElement p;
  auto lb = text.find("lamps=[");
  auto rb = text.find(']');
  auto sh = text.find(";shift=");
  if (lb != 0 || rb == std::string::npos || sh == std::string::npos || rb > sh)
    throw std::invalid_argument("lampFromText: bad format");
  std::string inner = text.substr(7, rb - 7);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (!tok.empty()) p.lamps.push_back(std::stoi(tok));
  }
  p.shift = std::stoi(text.substr(sh + 7));
  std::vector<int> sorted = p.lamps;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != p.lamps ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("lampFromText: lamps not sorted unique");
  return p;
}

std::string toJsonText(const LampElement& p) {
  std::ostringstream os;
  os << "{\"lamps\":[";
  for (std::size_t i = 0; i < p.lamps.size(); ++i) {
    if (i) os << ',';
    os << p.lamps[i];
  }
  os << "],\"shift\":" << p.shift << "}";
  return os.str();
}

std::size_t LampHash::operator()(const LampElement& p) const {
  std::size_t h = static_cast<std::size_t>(p.shift) * 0x9e3779b97f4a7c15ull;
  for (int i : p.lamps)
    h = (h ^ static_cast<std::size_t>(i + 0x1f2f3f)) * 0x100000001b3ull;
  return h;
}

}  // namespace bandlab
