#include "ccwb/ccsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccwb {

namespace {

void require_condtuple(const CrossTree& t, const CondPair& cp, const char* who) {
  if (cp.stem0.left.size() != cp.stem1.left.size())
    throw std::invalid_argument(std::string(who) + ": unequal left stem lengths");
  if (cp.stem0.right.length() != cp.stem1.right.length())
    throw std::invalid_argument(std::string(who) + ": unequal sigma stem lengths");
  for (int i = 0; i < 2; ++i)
    if (!leftfull_at(t, cp.stem(i).left, cp.stem(i).right))
      throw std::invalid_argument(std::string(who) + ": tree not left-full below stem " +
                                  std::to_string(i));
}

// Enumerates extension condition-tuples of cp in t with equal sigma lengths,
// in (|rho|, |sigma|, lex) order, calling fn on each; stops early when fn
// returns false.
template <typename Fn>
void for_each_extension(const CrossTree& t, const CondPair& cp, Fn&& fn) {
  const std::size_t full = t.height();
  const std::size_t lr = cp.stem0.left.size();
  const std::size_t ls = cp.stem0.right.length();
  for (std::size_t nr = lr + 1; nr <= full; ++nr) {
    for (std::size_t ns = ls; ns <= std::min(nr, full); ++ns) {
      for (const Word& r0 : enumerate_extensions(cp.stem0.left, nr)) {
        for (const Word& r1 : enumerate_extensions(cp.stem1.left, nr)) {
          if (!completely_incompatible(r0, r1, cp.stem0.left, cp.stem1.left)) continue;
          for (const RightTuple& s0 : enumerate_tuple_extensions(cp.stem0.right, ns)) {
            if (!t.contains(r0, s0)) continue;
            if (!leftfull_at(t, r0, s0)) continue;
            for (const RightTuple& s1 : enumerate_tuple_extensions(cp.stem1.right, ns)) {
              if (!t.contains(r1, s1)) continue;
              if (!leftfull_at(t, r1, s1)) continue;
              if (!fn(CondPair{Node{r0, s0}, Node{r1, s1}})) return;
            }
          }
        }
      }
    }
  }
}

}  // namespace

bool detect_excluded(const CrossTree& t, const CondPair& cp, int s) {
  require_condtuple(t, cp, "detect_excluded");
  if (s < 0 || s >= t.arity()) throw std::invalid_argument("detect_excluded: bad component");
  bool all_incompatible = true;
  for_each_extension(t, cp, [&](const CondPair& ext) {
    if (!completely_incompatible(ext.stem0.right.component(s), ext.stem1.right.component(s),
                                 cp.stem0.right.component(s), cp.stem1.right.component(s))) {
      all_incompatible = false;
      return false;
    }
    return true;
  });
  return all_incompatible;
}

std::variant<CondPair, StuckAt> extend_step(const CrossTree& t, const CondPair& cp,
                                            const std::set<int>& excluded) {
  require_condtuple(t, cp, "extend_step");
  std::optional<CondPair> found;
  for_each_extension(t, cp, [&](const CondPair& ext) {
    for (int s = 0; s < t.arity(); ++s) {
      if (excluded.count(s)) continue;
      if (completely_incompatible(ext.stem0.right.component(s), ext.stem1.right.component(s),
                                  cp.stem0.right.component(s), cp.stem1.right.component(s)))
        return true;  // component s has no agreeing position; keep searching
    }
    found = ext;
    return false;
  });
  if (found) return *found;

  for (int s = 0; s < t.arity(); ++s) {
    if (excluded.count(s)) continue;
    if (detect_excluded(t, cp, s)) return StuckAt{s};
  }
  throw std::logic_error(
      "extend_step: no extension and no excluded component; input is malformed");
}

namespace {

// Lex-least full-length sigma extension keeping the node in t.
RightTuple complete_sigma(const CrossTree& t, const Word& rho, const RightTuple& sigma) {
  const std::size_t full = t.height();
  for (const RightTuple& cand : enumerate_tuple_extensions(sigma, full))
    if (t.contains(rho, cand)) return cand;
  throw std::logic_error("complete_sigma: no full extension despite left-fullness");
}

}  // namespace

Solution solve(const CrossTree& t) {
  if (t.height() < 1) throw std::invalid_argument("solve: height must be >= 1");
  Node root{Word(3), RightTuple::empty_tuple(t.arity())};
  if (!leftfull_at(t, root.left, root.right))
    throw std::invalid_argument("solve: tree not left-full below the root");

  Solution sol;
  CondPair cp{root, root};
  sol.trace.push_back(TraceEntry{cp, false, -1});
  sol.baseline = 0;
  CondPair base = cp;  // stems at the last restart point

  while (cp.stem0.left.size() < static_cast<std::size_t>(t.height())) {
    auto step = extend_step(t, cp, sol.excluded);
    if (std::holds_alternative<CondPair>(step)) {
      cp = std::get<CondPair>(step);
      sol.trace.push_back(TraceEntry{cp, false, -1});
    } else {
      int s = std::get<StuckAt>(step).component;
      sol.excluded.insert(s);
      // restart from the duplicated index-0 pair
      cp = CondPair{cp.stem0, cp.stem0};
      base = cp;
      sol.baseline = cp.stem0.right.length();
      sol.trace.push_back(TraceEntry{cp, true, s});
      if (sol.excluded.size() > static_cast<std::size_t>(t.arity()))
        throw std::logic_error("solve: more restarts than components");
    }
  }

  sol.sol0 = Node{cp.stem0.left, complete_sigma(t, cp.stem0.left, cp.stem0.right)};
  sol.sol1 = Node{cp.stem1.left, complete_sigma(t, cp.stem1.left, cp.stem1.right)};
  for (int s = 0; s < t.arity(); ++s)
    sol.agreement.push_back(
        agreement_positions(sol.sol0.right.component(s), sol.sol1.right.component(s)));

  auto violations = check_solution(t, sol);
  if (!violations.empty())
    throw std::logic_error("solve: solution invariant violated: " + violations.front());
  return sol;
}

std::optional<Solution> brute_solution(const CrossTree& t) {
  const std::size_t full = t.height();
  std::vector<Node> fulls;
  for (const Word& mu : t.left_words(full))
    for (const RightTuple& tau : t.slice(mu))
      if (tau.length() == full) fulls.push_back(Node{mu, tau});
  std::sort(fulls.begin(), fulls.end());

  std::optional<Solution> best;
  int best_score = -1;
  for (const Node& x : fulls) {
    for (const Node& y : fulls) {
      if (!completely_incompatible(x.left, y.left, Word(3), Word(3))) continue;
      int score = 0;
      std::vector<std::vector<std::size_t>> agr;
      for (int s = 0; s < t.arity(); ++s) {
        agr.push_back(agreement_positions(x.right.component(s), y.right.component(s)));
        if (!agr.back().empty()) ++score;
      }
      if (score > best_score) {
        best_score = score;
        Solution sol;
        sol.sol0 = x;
        sol.sol1 = y;
        sol.agreement = std::move(agr);
        for (int s = 0; s < t.arity(); ++s)
          if (sol.agreement[s].empty()) sol.excluded.insert(s);
        best = std::move(sol);
      }
    }
  }
  return best;
}

std::vector<std::string> check_solution(const CrossTree& t, const Solution& sol) {
  std::vector<std::string> out;
  const std::size_t full = t.height();
  for (int i = 0; i < 2; ++i) {
    const Node& n = sol.sol(i);
    if (n.left.size() != full) out.push_back("solution node below full depth");
    if (!t.contains(n)) out.push_back("solution node not in tree");
  }
  // disjoint tails: completely incompatible past the last restart point
  std::size_t restart_left = 0;
  for (const TraceEntry& e : sol.trace)
    if (e.restart) restart_left = e.cp.stem0.left.size();
  if (sol.sol0.left.size() == sol.sol1.left.size()) {
    if (!completely_incompatible(sol.sol0.left, sol.sol1.left,
                                 sol.sol0.left.prefix(restart_left),
                                 sol.sol1.left.prefix(restart_left)))
      out.push_back("left words not completely incompatible past the restart point");
  }
  for (int s = 0; s < t.arity(); ++s) {
    if (sol.excluded.count(s)) continue;
    bool has_late = false;
    for (std::size_t pos : sol.agreement[s])
      if (pos >= sol.baseline) has_late = true;
    if (!has_late)
      out.push_back("component " + std::to_string(s) +
                    " has no agreement past the restart baseline");
  }
  return out;
}

}  // namespace ccwb
