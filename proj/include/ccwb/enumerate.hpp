#pragma once

#include <random>
#include <vector>

#include "ccwb/approx.hpp"
#include "ccwb/crosstree.hpp"
#include "ccwb/gamma.hpp"
#include "ccwb/incmap.hpp"
#include "ccwb/sufficiency.hpp"

namespace ccwb {

using Rng = std::mt19937_64;

// All right-pruned cross-trees of the given height: closures of subsets of
// the diagonal nodes (|sigma| = |rho|). Exhaustive; feasible for height <= 1.
std::vector<CrossTree> all_right_pruned_trees(int height, int arity);

// All trees left-full below the root at height 1: one nonempty set of
// full tuples per left digit.
std::vector<CrossTree> all_leftfull_trees_h1(int arity);

// Closures of every subset of at most max_generators diagonal nodes at the
// given height, deduplicated. A structured exhaustive family of right-pruned
// trees when the full space is infeasible.
std::vector<CrossTree> right_pruned_trees_bounded(int height, int arity,
                                                  int max_generators);

// Random downward closure of random nodes; no structural guarantee.
CrossTree random_tree(Rng& rng, int height, int arity);

// Random closure of diagonal nodes; right-pruned by construction.
CrossTree random_right_pruned_tree(Rng& rng, int height, int arity);

// Random tree left-full below the root: per full left word a nonempty set
// of full tuples, plus optional dead right branches at the full left level
// (making some instances non-right-pruned).
CrossTree random_leftfull_tree(Rng& rng, int height, int arity);

// Random suffix-closed pair set over the nodes of t: upward closure of
// randomly chosen generator pairs.
NodePairSet random_suffix_closed_set(Rng& rng, const CrossTree& t, int generators);

// Random total non-increasing oracle: each tuple survives along a random
// prefix-closed subtree of 3^{<=depth}.
MonotoneOracle random_monotone_oracle(Rng& rng, int depth, int level, int arity);

// Random valid element of Gamma_m over n (supports above n).
GammaElem random_gamma_over(Rng& rng, int level, int n, int support_window = 3);

// Random non-decreasing chain of elements over n starting at the root.
std::vector<GammaElem> random_chain_over(Rng& rng, int level, int n, int max_steps);

// Random valid approximation table.
ApproxTable random_table(Rng& rng, int level, int rows, int cols);

// Random step stream; when corrupt is false the stream encodes a valid
// approximation (only availability stages are scrambled).
StepStream random_stream(Rng& rng, int level, int rows, int cols, bool corrupt);

// Random array of mutually disjoint triples with min > n.
DisjointArray random_disjoint_array(Rng& rng, int rows, int window = 4);

}  // namespace ccwb
