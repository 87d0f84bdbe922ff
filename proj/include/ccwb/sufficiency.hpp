#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ccwb/crosstree.hpp"
#include "ccwb/incmap.hpp"
#include "ccwb/words.hpp"

namespace ccwb {

// A pair of stems with equal left lengths, each with the ambient tree
// left-full below it (checked on use).
struct CondPair {
  Node stem0;
  Node stem1;

  const Node& stem(int i) const { return i == 0 ? stem0 : stem1; }
  bool operator==(const CondPair& other) const = default;
  std::strong_ordering operator<=>(const CondPair& other) const = default;
  std::string str() const { return stem0.str() + "," + stem1.str(); }
};

// True iff (hat0, hat1) extends cp: componentwise prefixes and the left
// words completely incompatible over the old left stems.
bool extends_condpair(const CondPair& cp, const Node& hat0, const Node& hat1);

// A set of ordered node pairs, given extensionally or as a predicate.
class NodePairSet {
public:
  static NodePairSet extensional(std::vector<std::pair<Node, Node>> pairs);
  static NodePairSet intensional(std::function<bool(const Node&, const Node&)> pred);

  bool contains(const Node& a, const Node& b) const;
  bool is_extensional() const { return !pairs_.empty() || !pred_; }
  const std::vector<std::pair<Node, Node>>& pairs() const { return pairs_; }

private:
  std::vector<std::pair<Node, Node>> pairs_;  // sorted when extensional
  std::function<bool(const Node&, const Node&)> pred_;
};

struct EnumerationCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SufficiencyResult {
  bool sufficient = false;
  // Witness pair in the maximal quantified subtree, when sufficient.
  std::optional<std::pair<Node, Node>> witness;
  // Full nodes generating the lex-least failing subtree, otherwise.
  std::optional<std::vector<Node>> failing_subtree;
  std::size_t subtrees_checked = 0;
};

inline constexpr std::size_t kDefaultSubtreeCap = 1000000;

// Decides T-sufficiency at N = height(t): every right-pruned leaf-complete
// cross-subtree of t left-full below both stems must contain a pair of a
// extending cp with completely incompatible left parts.
// Requires t left-full below both stems of cp.
SufficiencyResult is_sufficient(const CrossTree& t, const NodePairSet& a,
                                const CondPair& cp,
                                std::size_t cap = kDefaultSubtreeCap);

// Constructive extraction: builds the slice oracle, runs the stabilization
// sweep, forms the closure of the candidate full nodes and lifts the
// witness pair through the resulting map. Requires a suffix-closed and
// is_sufficient(t, a, cp); the caller is expected to have checked the
// latter.
CondPair extract(const CrossTree& t, const NodePairSet& a, const CondPair& cp);

// Direct exhaustive search for a condition-tuple in a extending cp with
// completely incompatible left parts, scanning node pairs in (length, lex)
// order with exact left-fullness checks. Independent oracle for extract.
std::optional<CondPair> find_condtuple_direct(const CrossTree& t, const NodePairSet& a,
                                              const CondPair& cp);

// Validates the suffix-closure of an extensional set within the node-pair
// universe of t.
bool suffix_closed_in(const NodePairSet& a, const CrossTree& t);

}  // namespace ccwb
