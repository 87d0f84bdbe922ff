#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ccwb {

using Digit = std::uint8_t;

// A finite word over the alphabet {0, ..., k-1}. Immutable after construction.
class Word {
public:
  Word() : alphabet_(3) {}
  explicit Word(int alphabet) : alphabet_(alphabet) {}
  Word(std::vector<Digit> digits, int alphabet);

  // Parses a string of ASCII digits, e.g. "012".
  static Word parse(const std::string& text, int alphabet = 3);

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit at(std::size_t i) const { return digits_[i]; }
  const std::vector<Digit>& digits() const { return digits_; }

  Word prefix(std::size_t len) const;
  Word append(Digit d) const;
  Word concat(const Word& suffix) const;
  // The suffix of this word past the given stem; requires stem to be a prefix.
  Word suffix_after(const Word& stem) const;

  std::string str() const;

  // Total order: by length, then lexicographic.
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const = default;

private:
  std::vector<Digit> digits_;
  int alphabet_;
};

// An r-tuple of equal-length words over alphabet 2 (by default).
class RightTuple {
public:
  RightTuple() = default;
  explicit RightTuple(std::vector<Word> words);
  static RightTuple empty_tuple(int arity, int alphabet = 2);

  int arity() const { return static_cast<int>(words_.size()); }
  std::size_t length() const { return words_.empty() ? 0 : words_[0].size(); }
  const Word& component(int s) const { return words_[s]; }
  const std::vector<Word>& words() const { return words_; }

  RightTuple prefix(std::size_t len) const;
  // Appends one digit to every component.
  RightTuple append(const std::vector<Digit>& ds) const;
  RightTuple concat(const RightTuple& suffix) const;
  RightTuple suffix_after(const RightTuple& stem) const;

  std::string str() const;

  std::strong_ordering operator<=>(const RightTuple& other) const;
  bool operator==(const RightTuple& other) const = default;

private:
  std::vector<Word> words_;
};

// A cross-tree node: a left word over alphabet 3 and a right tuple with
// |sigma| <= |rho|.
struct Node {
  Word left;
  RightTuple right;

  std::strong_ordering operator<=>(const Node& other) const;
  bool operator==(const Node& other) const = default;
  std::string str() const;
};

bool is_prefix(const Word& a, const Word& b);
bool is_prefix(const RightTuple& a, const RightTuple& b);
bool is_prefix(const Node& a, const Node& b);

// True iff the suffixes of mu0, mu1 past rho0, rho1 differ at every position.
// Requires |mu0| == |mu1|, |rho0| == |rho1| and rho_i a prefix of mu_i.
bool completely_incompatible(const Word& mu0, const Word& mu1,
                             const Word& rho0, const Word& rho1);

// Positions at which the two equal-length words agree.
std::vector<std::size_t> agreement_positions(const Word& w0, const Word& w1);

// All extensions of the stem to the target length, in lexicographic order.
std::vector<Word> enumerate_extensions(const Word& stem,
                                       std::size_t target_length);

// All r-tuples of equal-length words of the given length over alphabet k,
// in lexicographic order.
std::vector<RightTuple> enumerate_tuples(std::size_t length, int arity,
                                         int alphabet = 2);

// All tuples of the target length extending the stem, in lexicographic order.
std::vector<RightTuple> enumerate_tuple_extensions(const RightTuple& stem,
                                                   std::size_t target_length);

}  // namespace ccwb
