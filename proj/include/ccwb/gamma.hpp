#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccwb/report.hpp"
#include "ccwb/words.hpp"

namespace ccwb {

// A partial 3-coloring with finite support. The root zeta_0 is the empty
// map; distinct nonempty maps are incomparable.
struct Gamma0 {
  std::vector<std::pair<int, int>> entries;  // sorted by position, value < 3

  Gamma0() = default;
  explicit Gamma0(std::vector<std::pair<int, int>> es);

  bool empty() const { return entries.empty(); }
  std::optional<int> value_at(int x) const;
  std::vector<int> support() const;
  int min_support() const;  // requires nonempty
  int max_support() const;  // requires nonempty

  // Ordered by support sequence, then by value sequence.
  std::strong_ordering operator<=>(const Gamma0& other) const;
  bool operator==(const Gamma0& other) const = default;
  std::string str() const;
};

// A finite prefix-closed tree of index sequences, containing the empty
// sequence.
struct FinTree {
  std::set<std::vector<int>> nodes;

  FinTree() { nodes.insert(std::vector<int>{}); }
  explicit FinTree(std::set<std::vector<int>> ns) : nodes(std::move(ns)) {}

  bool prefix_closed() const;
  bool contains(const std::vector<int>& n) const { return nodes.count(n) > 0; }
  bool is_leaf(const std::vector<int>& n) const;
  std::vector<std::vector<int>> leaves() const;
  std::vector<int> child_indices(const std::vector<int>& n) const;
  // strict descendants of n
  std::vector<std::vector<int>> strict_descendants(const std::vector<int>& n) const;

  auto operator<=>(const FinTree& other) const = default;
};

// The Hydra move: grow a leaf with a nonempty finite child set, or cut a
// node's descendants and regrow a proper subset of its children.
bool is_one_step_variation(const FinTree& t0, const FinTree& t1);

struct GammaElem;

struct GammaStep {
  FinTree tree;
  // labeling of the tree nodes, sorted by node
  std::vector<std::pair<std::vector<int>, GammaElem>> labels;

  const GammaElem* label_of(const std::vector<int>& n) const;
  std::strong_ordering operator<=>(const GammaStep& other) const;
  bool operator==(const GammaStep& other) const;
};

// An element of Gamma_m: a partial coloring at level 0, a computation path
// of tree/labeling steps at level m > 0.
struct GammaElem {
  int level = 0;
  Gamma0 base;                   // level == 0
  std::vector<GammaStep> steps;  // level > 0

  static GammaElem from_base(Gamma0 g);
  static GammaElem zeta(int m);

  std::strong_ordering operator<=>(const GammaElem& other) const;
  bool operator==(const GammaElem& other) const;
  std::string str() const;
};

Report validate_path(const GammaElem& gamma);

// The prefix relation on step sequences; the Gamma_0 order at level 0.
bool leq(const GammaElem& a, const GammaElem& b);

// The finite set of partial colorings the element denotes: labels of the
// final tree's leaves, recursively. Always nonempty.
std::vector<Gamma0> interpret(const GammaElem& gamma);

// True iff every interpreted coloring has min support strictly above n.
bool over(const GammaElem& gamma, int n);

// True iff the coloring prefix extends some element of the set: its support
// lies inside the prefix domain and the values agree.
bool compatible(const Word& coloring_prefix, const std::vector<Gamma0>& fs);
bool compatible(const Word& coloring_prefix, const GammaElem& gamma);

struct FragmentTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All one-step path extensions of gamma whose trees use child indices < B
// and whose level-0 labels have support within {0..S}. Calls fn on each;
// stops when fn returns false.
void for_each_successor(const GammaElem& gamma, int B, int S,
                        const std::function<bool(const GammaElem&)>& fn);

// Breadth-first enumeration of the (B, S)-fragment of Gamma_m, up to the
// element cap. Returns elements in discovery order, root first; sets
// *complete to whether the whole fragment was enumerated.
std::vector<GammaElem> enumerate_fragment(int m, int B, int S, std::size_t cap,
                                          bool* complete = nullptr);

struct ChainResult {
  std::size_t length = 0;
  std::vector<GammaElem> witness;  // a maximal chain, root first
};

// Maximum chain length in the (B, S)-fragment of Gamma_m, with one witness
// chain, by exhaustive game exploration over label-cone equivalence
// classes. Throws FragmentTooLarge past the state cap.
ChainResult longest_chain(int m, int B, int S, std::size_t state_cap = 1000000);

}  // namespace ccwb
