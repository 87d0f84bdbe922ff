#include "ccwb/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccwb {

Word::Word(std::vector<Digit> digits, int alphabet)
    : digits_(std::move(digits)), alphabet_(alphabet) {
  if (alphabet_ < 1) throw std::invalid_argument("Word: alphabet must be >= 1");
  for (Digit d : digits_) {
    if (d >= alphabet_)
      throw std::invalid_argument("Word: digit " + std::to_string(int(d)) +
                                  " out of alphabet " + std::to_string(alphabet_));
  }
}

Word Word::parse(const std::string& text, int alphabet) {
  std::vector<Digit> ds;
  ds.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("Word: bad character in \"" + text + "\"");
    ds.push_back(static_cast<Digit>(c - '0'));
  }
  return Word(std::move(ds), alphabet);
}

Word Word::prefix(std::size_t len) const {
  if (len > size()) throw std::invalid_argument("Word::prefix: length exceeds word");
  return Word(std::vector<Digit>(digits_.begin(), digits_.begin() + len), alphabet_);
}

Word Word::append(Digit d) const {
  std::vector<Digit> ds = digits_;
  ds.push_back(d);
  return Word(std::move(ds), alphabet_);
}

Word Word::concat(const Word& suffix) const {
  if (suffix.alphabet_ != alphabet_)
    throw std::invalid_argument("Word::concat: alphabet mismatch");
  std::vector<Digit> ds = digits_;
  ds.insert(ds.end(), suffix.digits_.begin(), suffix.digits_.end());
  return Word(std::move(ds), alphabet_);
}

Word Word::suffix_after(const Word& stem) const {
  if (!is_prefix(stem, *this))
    throw std::invalid_argument("Word::suffix_after: stem is not a prefix");
  return Word(std::vector<Digit>(digits_.begin() + stem.size(), digits_.end()), alphabet_);
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (Digit d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  if (auto c = digits_ <=> other.digits_; c != 0) return c;
  return alphabet_ <=> other.alphabet_;
}

RightTuple::RightTuple(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("RightTuple: arity must be >= 1");
  for (const Word& w : words_) {
    if (w.size() != words_[0].size())
      throw std::invalid_argument("RightTuple: component lengths differ");
  }
}

RightTuple RightTuple::empty_tuple(int arity, int alphabet) {
  return RightTuple(std::vector<Word>(arity, Word(alphabet)));
}

RightTuple RightTuple::prefix(std::size_t len) const {
  std::vector<Word> ws;
  ws.reserve(words_.size());
  for (const Word& w : words_) ws.push_back(w.prefix(len));
  return RightTuple(std::move(ws));
}

RightTuple RightTuple::append(const std::vector<Digit>& ds) const {
  if (ds.size() != words_.size())
    throw std::invalid_argument("RightTuple::append: arity mismatch");
  std::vector<Word> ws;
  ws.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) ws.push_back(words_[i].append(ds[i]));
  return RightTuple(std::move(ws));
}

RightTuple RightTuple::concat(const RightTuple& suffix) const {
  if (suffix.arity() != arity())
    throw std::invalid_argument("RightTuple::concat: arity mismatch");
  std::vector<Word> ws;
  ws.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) ws.push_back(words_[i].concat(suffix.words_[i]));
  return RightTuple(std::move(ws));
}

RightTuple RightTuple::suffix_after(const RightTuple& stem) const {
  if (!is_prefix(stem, *this))
    throw std::invalid_argument("RightTuple::suffix_after: stem is not a prefix");
  std::vector<Word> ws;
  ws.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i)
    ws.push_back(words_[i].suffix_after(stem.words_[i]));
  return RightTuple(std::move(ws));
}

std::string RightTuple::str() const {
  std::string s = "(";
  for (int i = 0; i < arity(); ++i) {
    if (i > 0) s += ",";
    s += words_[i].str();
  }
  s += ")";
  return s;
}

std::strong_ordering RightTuple::operator<=>(const RightTuple& other) const {
  if (auto c = length() <=> other.length(); c != 0) return c;
  return words_ <=> other.words_;
}

std::strong_ordering Node::operator<=>(const Node& other) const {
  if (auto c = left.size() <=> other.left.size(); c != 0) return c;
  if (auto c = right.length() <=> other.right.length(); c != 0) return c;
  if (auto c = left <=> other.left; c != 0) return c;
  return right <=> other.right;
}

std::string Node::str() const { return "(" + left.str() + "," + right.str() + ")"; }

bool is_prefix(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("is_prefix: alphabet mismatch");
  if (a.size() > b.size()) return false;
  return std::equal(a.digits().begin(), a.digits().end(), b.digits().begin());
}

bool is_prefix(const RightTuple& a, const RightTuple& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("is_prefix: arity mismatch");
  for (int i = 0; i < a.arity(); ++i)
    if (!is_prefix(a.component(i), b.component(i))) return false;
  return true;
}

bool is_prefix(const Node& a, const Node& b) {
  return is_prefix(a.left, b.left) && is_prefix(a.right, b.right);
}

bool completely_incompatible(const Word& mu0, const Word& mu1,
                             const Word& rho0, const Word& rho1) {
  if (mu0.size() != mu1.size())
    throw std::invalid_argument("completely_incompatible: |mu0| != |mu1|");
  if (rho0.size() != rho1.size())
    throw std::invalid_argument("completely_incompatible: |rho0| != |rho1|");
  if (!is_prefix(rho0, mu0) || !is_prefix(rho1, mu1))
    throw std::invalid_argument("completely_incompatible: stems are not prefixes");
  for (std::size_t i = rho0.size(); i < mu0.size(); ++i)
    if (mu0.at(i) == mu1.at(i)) return false;
  return true;
}

std::vector<std::size_t> agreement_positions(const Word& w0, const Word& w1) {
  if (w0.size() != w1.size())
    throw std::invalid_argument("agreement_positions: unequal lengths");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w0.size(); ++i)
    if (w0.at(i) == w1.at(i)) out.push_back(i);
  return out;
}

std::vector<Word> enumerate_extensions(const Word& stem, std::size_t target_length) {
  if (target_length < stem.size())
    throw std::invalid_argument("enumerate_extensions: target shorter than stem");
  std::vector<Word> out;
  std::size_t grow = target_length - stem.size();
  std::vector<Digit> suffix(grow, 0);
  const int k = stem.alphabet();
  while (true) {
    Word w = stem;
    for (Digit d : suffix) w = w.append(d);
    out.push_back(std::move(w));
    // next suffix in lexicographic order, lowest digit first
    std::size_t i = grow;
    while (i > 0) {
      --i;
      if (suffix[i] + 1 < k) {
        ++suffix[i];
        std::fill(suffix.begin() + i + 1, suffix.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (grow == 0) return out;
  }
}

std::vector<RightTuple> enumerate_tuples(std::size_t length, int arity, int alphabet) {
  std::vector<std::vector<Word>> partial = {{}};
  std::vector<Word> all = enumerate_extensions(Word(alphabet), length);
  for (int s = 0; s < arity; ++s) {
    std::vector<std::vector<Word>> next;
    next.reserve(partial.size() * all.size());
    for (const auto& p : partial) {
      for (const Word& w : all) {
        auto q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  std::vector<RightTuple> out;
  out.reserve(partial.size());
  for (auto& p : partial) out.emplace_back(std::move(p));
  return out;
}

std::vector<RightTuple> enumerate_tuple_extensions(const RightTuple& stem,
                                                   std::size_t target_length) {
  if (target_length < stem.length())
    throw std::invalid_argument("enumerate_tuple_extensions: target shorter than stem");
  std::vector<std::vector<Word>> partial = {{}};
  for (int s = 0; s < stem.arity(); ++s) {
    std::vector<Word> exts = enumerate_extensions(stem.component(s), target_length);
    std::vector<std::vector<Word>> next;
    next.reserve(partial.size() * exts.size());
    for (const auto& p : partial) {
      for (const Word& w : exts) {
        auto q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  std::vector<RightTuple> out;
  out.reserve(partial.size());
  for (auto& p : partial) out.emplace_back(std::move(p));
  return out;
}

}  // namespace ccwb
