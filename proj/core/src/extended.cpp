#include "bandlab/extended.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace bandlab {

LaurentF2 LaurentF2::monomial(int exponent) {
  LaurentF2 p;
  p.exps_.push_back(exponent);
  return p;
}

LaurentF2 LaurentF2::fromExponents(std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end());
  LaurentF2 p;
  for (int e : exponents) {
    if (!p.exps_.empty() && p.exps_.back() == e) {
      p.exps_.pop_back();
    } else {
      p.exps_.push_back(e);
    }
  }
  return p;
}

LaurentF2 LaurentF2::operator+(const LaurentF2& other) const {
  LaurentF2 sum;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < exps_.size() || j < other.exps_.size()) {
    if (j == other.exps_.size() ||
        (i < exps_.size() && exps_[i] < other.exps_[j])) {
      sum.exps_.push_back(exps_[i++]);
    } else if (i == exps_.size() || other.exps_[j] < exps_[i]) {
      sum.exps_.push_back(other.exps_[j++]);
    } else {
      ++i;  // equal exponents cancel mod 2
      ++j;
    }
  }
  return sum;
}

LaurentF2 LaurentF2::shifted(int k) const {
  LaurentF2 p;
  p.exps_.reserve(exps_.size());
  for (int e : exps_) p.exps_.push_back(e + k);
  return p;
}

LaurentF2 LaurentF2::timesOnePlusX(int e) const {
  LaurentF2 p = *this;
  for (int step = 0; step < e; ++step) p = p + p.shifted(1);
  return p;
}

LaurentF2 LaurentF2::dividedByOnePlusX() const {
  if (!divisibleByOnePlusX()) {
    throw std::logic_error("Laurent polynomial is not divisible by 1+x");
  }
  // Peel off the lowest term: subtracting x^low (1+x) clears it and toggles
  // the next exponent up; with an even term count this reaches zero.
  std::set<int> rest(exps_.begin(), exps_.end());
  std::vector<int> quotient;
  while (!rest.empty()) {
    int low = *rest.begin();
    rest.erase(rest.begin());
    quotient.push_back(low);
    auto [it, inserted] = rest.insert(low + 1);
    if (!inserted) rest.erase(it);
  }
  return fromExponents(std::move(quotient));
}

namespace {

// Reduce the fraction num / (1+x)^denpow to canonical form.
void canonicalize(EElement& p) {
  if (p.num.isZero()) {
    p.denpow = 0;
    return;
  }
  while (p.denpow > 0 && p.num.divisibleByOnePlusX()) {
    p.num = p.num.dividedByOnePlusX();
    --p.denpow;
  }
}

// The twist: x^m t^q conjugation multiplies the kernel part by
// x^(m+q) (1+x)^-q.  Applied to a canonical fraction, returns one.
void actInPlace(int m, int q, LaurentF2& num, int& denpow) {
  num = num.shifted(m + q);
  if (q >= 0) {
    denpow += q;
  } else {
    num = num.timesOnePlusX(-q);
  }
}

}  // namespace

EElement eMul(const EElement& lhs, const EElement& rhs) {
  LaurentF2 num = rhs.num;
  int denpow = rhs.denpow;
  actInPlace(lhs.m, lhs.q, num, denpow);

  EElement out;
  int common = std::max(lhs.denpow, denpow);
  out.num = lhs.num.timesOnePlusX(common - lhs.denpow) +
            num.timesOnePlusX(common - denpow);
  out.denpow = common;
  out.m = lhs.m + rhs.m;
  out.q = lhs.q + rhs.q;
  canonicalize(out);
  return out;
}

EElement eInv(const EElement& p) {
  EElement out;
  out.num = p.num;  // coefficients are self-inverse mod 2
  out.denpow = p.denpow;
  actInPlace(-p.m, -p.q, out.num, out.denpow);
  out.m = -p.m;
  out.q = -p.q;
  canonicalize(out);
  return out;
}

EElement eFromWord(const Word& w) {
  EElement acc;
  for (char c : w.str()) {
    EElement gen;
    switch (c) {
      case 'a':
        gen.num = LaurentF2::monomial(0);
        break;
      case 'x':
        gen.m = 1;
        break;
      case 'X':
        gen.m = -1;
        break;
      case 't':
        gen.q = 1;
        break;
      case 'T':
        gen.q = -1;
        break;
      default:
        throw std::invalid_argument("letter outside the extended alphabet");
    }
    acc = eMul(acc, gen);
  }
  return acc;
}

EElement commutatorSquare(const EElement& u, const EElement& v) {
  EElement c = eMul(eMul(u, v), eMul(eInv(u), eInv(v)));
  return eMul(c, c);
}

std::pair<int, int> abelianImage(const EElement& p) { return {p.m, p.q}; }

std::string toJsonText(const EElement& p) {
  nlohmann::ordered_json j;
  j["num"] = p.num.exponents();
  j["denpow"] = p.denpow;
  j["m"] = p.m;
  j["q"] = p.q;
  return j.dump();
}

EElement eFromJsonText(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    EElement p;
    p.num = LaurentF2::fromExponents(j.at("num").get<std::vector<int>>());
    p.denpow = j.at("denpow").get<int>();
    p.m = j.at("m").get<int>();
    p.q = j.at("q").get<int>();
    if (p.denpow < 0) {
      throw std::invalid_argument("bad extended element json: negative denpow");
    }
    canonicalize(p);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad extended element json: ") +
                                e.what());
  }
}

}  // namespace bandlab
