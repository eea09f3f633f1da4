#include "bandlab/word.hpp"

#include <cctype>
#include <cstdlib>

namespace bandlab {

namespace {
bool storedLetter(char c) {
  return c == 'a' || c == 'x' || c == 'X' || c == 't' || c == 'T';
}
}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  w.s_.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'A') c = 'a';
    if (!storedLetter(c)) {
      throw std::invalid_argument(std::string("invalid letter '") + c +
                                  "' in word");
    }
    w.s_.push_back(c);
  }
  return w;
}

Word Word::fromValid(std::string letters) {
  for (char c : letters) {
    if (!storedLetter(c)) {
      throw std::invalid_argument(std::string("invalid stored letter '") + c +
                                  "'");
    }
  }
  Word w;
  w.s_ = std::move(letters);
  return w;
}

char Word::inverseLetter(char c) {
  switch (c) {
    case 'a': return 'a';
    case 'x': return 'X';
    case 'X': return 'x';
    case 't': return 'T';
    case 'T': return 't';
  }
  throw std::invalid_argument("invalid letter");
}

bool Word::cancels(char lhs, char rhs) {
  return lhs != 'a' && rhs == inverseLetter(lhs);
}

Word Word::inverse() const {
  std::string out;
  out.reserve(s_.size());
  for (auto it = s_.rbegin(); it != s_.rend(); ++it)
    out.push_back(inverseLetter(*it));
  return fromValid(std::move(out));
}

Word Word::reduced() const {
  std::string out;
  out.reserve(s_.size());
  for (char c : s_) {
    if (!out.empty() && cancels(out.back(), c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return fromValid(std::move(out));
}

bool Word::usesOnlyLampAlphabet() const {
  return s_.find_first_of("tT") == std::string::npos;
}

int xExponentSum(const Word& w) {
  int sum = 0;
  for (char c : w.str()) {
    if (c == 'x') ++sum;
    if (c == 'X') --sum;
  }
  return sum;
}

Word powerWord(char letter, int exponent) {
  if (letter == 'a') {
    if (exponent < 0) exponent = -exponent;
    return Word::fromValid(std::string(static_cast<std::size_t>(exponent), 'a'));
  }
  char use = exponent < 0 ? Word::inverseLetter(letter) : letter;
  std::size_t n = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
  return Word::parse(std::string(n, use));
}

std::string expandPowers(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (i + 1 < text.size() && text[i + 1] == '^') {
      std::size_t j = i + 2;
      std::size_t digits = j;
      if (digits < text.size() && (text[digits] == '-' || text[digits] == '+'))
        ++digits;
      while (digits < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
      if (digits == j || (digits == j + 1 && !std::isdigit(static_cast<unsigned char>(text[j]))))
        throw std::invalid_argument("malformed power in word");
      int e = std::atoi(std::string(text.substr(j, digits - j)).c_str());
      char base = c == 'A' ? 'a' : c;
      out += powerWord(base, e).str();
      i = digits;
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

}  // namespace bandlab
