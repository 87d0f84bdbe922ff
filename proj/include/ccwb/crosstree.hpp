#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccwb/report.hpp"
#include "ccwb/words.hpp"

namespace ccwb {

using ValidationReport = Report;

// Basic open sets to exclude. Entries may have arbitrary relative lengths.
struct ForbiddenSet {
  std::vector<Node> entries;
};

// A finite cross-tree: a prefix-downward-closed set of nodes (rho, sigma)
// with rho over alphabet 3, sigma an r-tuple over alphabet 2, |sigma| <= |rho|
// and |rho| <= height. Immutable after construction.
class CrossTree {
public:
  CrossTree(int arity, int height, const std::vector<Node>& nodes,
            int left_alphabet = 3, int right_alphabet = 2);

  // Builds the downward closure of the given generator nodes.
  static CrossTree closure_of(int arity, int height, const std::vector<Node>& generators,
                              int left_alphabet = 3, int right_alphabet = 2);

  int arity() const { return arity_; }
  int height() const { return height_; }
  int left_alphabet() const { return left_alphabet_; }
  int right_alphabet() const { return right_alphabet_; }

  bool contains(const Word& rho, const RightTuple& sigma) const;
  bool contains(const Node& n) const { return contains(n.left, n.right); }
  std::size_t node_count() const { return node_count_; }
  std::vector<Node> nodes() const;  // canonical (length, lex) order

  // The slice T[rho]: all sigma with (rho, sigma) in the tree.
  std::set<RightTuple> slice(const Word& rho) const;
  // Left words of the given length present in the tree.
  std::vector<Word> left_words(std::size_t length) const;

  // True iff the node has no proper extension in the tree.
  bool is_leaf(const Node& n) const;
  // True iff every leaf has left word of full height.
  bool leaf_complete() const { return leaf_complete_; }
  bool right_pruned() const { return right_pruned_; }

  bool operator==(const CrossTree& other) const;

private:
  int arity_;
  int height_;
  int left_alphabet_;
  int right_alphabet_;
  std::size_t node_count_ = 0;
  // level-indexed by |rho|: map from left word to the sigmas under it
  std::vector<std::map<Word, std::set<RightTuple>>> levels_;
  bool leaf_complete_ = false;
  bool right_pruned_ = false;

  void compute_caches();
  friend CrossTree truncate(const CrossTree&, int);
};

ValidationReport validate(const CrossTree& t);

// The cross-tree excluding every node with a prefix pair in the forbidden set.
CrossTree from_forbidden(const ForbiddenSet& w, int height, int arity);

// Largest cross-subtree in which every slice T[rho] has all leaves at
// length |rho|. Idempotent.
CrossTree right_prune(const CrossTree& t);

// Keeps nodes with max component length <= new_height.
CrossTree truncate(const CrossTree& t, int new_height);

// Finite left-fullness below (rho, sigma), decided by direct enumeration:
// every leaf of t has left length = height, and every full-length extension
// of rho admits a full-length tuple extension of sigma in t.
// Requires (rho, sigma) in t.
bool leftfull(const CrossTree& t, const Word& rho, const RightTuple& sigma);

// Criterion (c): every full-length extension mu of rho has (mu, sigma) in t
// (plus the leaf condition shared with leftfull). Requires t right-pruned.
bool leftfull_via_c(const CrossTree& t, const Word& rho, const RightTuple& sigma);

// Like leftfull but returns false instead of throwing when (rho,sigma) is
// not a node of t.
bool leftfull_at(const CrossTree& t, const Word& rho, const RightTuple& sigma);

// Finds (rho_hat, sigma_hat) >= (rho, sigma) with |sigma_hat| = n and t
// left-full below it, by the iterative procedure over all length-n
// extensions of sigma with lexicographic tie-breaks.
// Requires t left-full below (rho, sigma) and n <= height.
std::pair<Word, RightTuple> leftfull_extend(const CrossTree& t, const Word& rho,
                                            const RightTuple& sigma, std::size_t n);

}  // namespace ccwb
