#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "ccwb/crosstree.hpp"
#include "ccwb/sufficiency.hpp"
#include "ccwb/words.hpp"

namespace ccwb {

struct TraceEntry {
  CondPair cp;
  bool restart = false;
  int excluded_component = -1;  // set on restart entries
};

// A full-depth solution certificate: two full nodes with completely
// incompatible left words past the last restart point, per-component
// agreement positions, excluded components and the visited trace.
struct Solution {
  Node sol0;
  Node sol1;
  std::vector<std::vector<std::size_t>> agreement;  // per component s < r
  std::set<int> excluded;
  std::vector<TraceEntry> trace;
  // sigma length at the last restart; agreement past this index is what the
  // non-excluded components must exhibit
  std::size_t baseline = 0;

  const Node& sol(int i) const { return i == 0 ? sol0 : sol1; }
};

// True iff every extension condition-tuple of cp in t (exhaustively, with
// equal sigma lengths) has the component-s suffixes completely incompatible
// over the current sigma stems.
bool detect_excluded(const CrossTree& t, const CondPair& cp, int s);

struct StuckAt {
  int component;
};

// Searches, in (length, lex) order, for an extension condition-tuple whose
// left suffixes are completely incompatible and whose sigma suffixes agree
// somewhere at every non-excluded component. Returns StuckAt{s} when no
// extension exists and detect_excluded certifies component s.
std::variant<CondPair, StuckAt> extend_step(const CrossTree& t, const CondPair& cp,
                                            const std::set<int>& excluded);

// Iterates extend_step from the root pair with the restart rule, then
// completes the sigma parts to full depth. Requires t left-full below the
// root and height >= 1.
Solution solve(const CrossTree& t);

// Exhaustive oracle: scans all full-depth completely incompatible leaf
// pairs and returns the lex-least pair maximizing the number of components
// with nonempty agreement.
std::optional<Solution> brute_solution(const CrossTree& t);

// Checks the Solution invariants against t; returns a list of violations.
std::vector<std::string> check_solution(const CrossTree& t, const Solution& sol);

}  // namespace ccwb
