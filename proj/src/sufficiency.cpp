#include "ccwb/sufficiency.hpp"

#include <algorithm>
#include <map>

namespace ccwb {

bool extends_condpair(const CondPair& cp, const Node& hat0, const Node& hat1) {
  if (!is_prefix(cp.stem0, hat0) || !is_prefix(cp.stem1, hat1)) return false;
  if (hat0.left.size() != hat1.left.size()) return false;
  return completely_incompatible(hat0.left, hat1.left, cp.stem0.left, cp.stem1.left);
}

NodePairSet NodePairSet::extensional(std::vector<std::pair<Node, Node>> pairs) {
  NodePairSet s;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  s.pairs_ = std::move(pairs);
  return s;
}

NodePairSet NodePairSet::intensional(std::function<bool(const Node&, const Node&)> pred) {
  NodePairSet s;
  s.pred_ = std::move(pred);
  return s;
}

bool NodePairSet::contains(const Node& a, const Node& b) const {
  if (pred_) return pred_(a, b);
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(a, b));
}

namespace {

void require_condtuple(const CrossTree& t, const CondPair& cp, const char* who) {
  if (cp.stem0.left.size() != cp.stem1.left.size())
    throw std::invalid_argument(std::string(who) + ": unequal left stem lengths");
  for (int i = 0; i < 2; ++i)
    if (!leftfull_at(t, cp.stem(i).left, cp.stem(i).right))
      throw std::invalid_argument(std::string(who) + ": tree not left-full below stem " +
                                  std::to_string(i));
}

}  // namespace

SufficiencyResult is_sufficient(const CrossTree& t, const NodePairSet& a,
                                const CondPair& cp, std::size_t cap) {
  require_condtuple(t, cp, "is_sufficient");
  const std::size_t full = t.height();

  // Candidate pairs: members of a inside t, extending cp with completely
  // incompatible left parts.
  std::vector<std::pair<Node, Node>> candidates;
  {
    std::vector<Node> above0, above1;
    for (const Node& n : t.nodes()) {
      if (is_prefix(cp.stem0, n)) above0.push_back(n);
      if (is_prefix(cp.stem1, n)) above1.push_back(n);
    }
    for (const Node& x : above0)
      for (const Node& y : above1)
        if (extends_condpair(cp, x, y) && a.contains(x, y)) candidates.emplace_back(x, y);
    std::sort(candidates.begin(), candidates.end());
  }

  // The quantified subtrees are closures of per-branch selections of full
  // nodes: for each full left word above a stem, a minimal set of full
  // tuples covering the applicable sigma stems.
  struct BranchChoices {
    Word mu;
    std::vector<std::vector<Node>> contributions;  // each a minimal cover
  };
  std::vector<BranchChoices> branches;
  for (const Word& mu : enumerate_extensions(Word(3), full)) {
    bool app0 = is_prefix(cp.stem0.left, mu);
    bool app1 = is_prefix(cp.stem1.left, mu);
    if (!app0 && !app1) continue;
    std::vector<RightTuple> fulls;
    for (const RightTuple& tau : t.slice(mu))
      if (tau.length() == full) fulls.push_back(tau);
    std::sort(fulls.begin(), fulls.end());
    BranchChoices bc;
    bc.mu = mu;
    auto covers = [&](const RightTuple& tau, int i) {
      return is_prefix(cp.stem(i).right, tau);
    };
    // singles covering every applicable stem
    for (const RightTuple& tau : fulls) {
      if ((!app0 || covers(tau, 0)) && (!app1 || covers(tau, 1)))
        bc.contributions.push_back({Node{mu, tau}});
    }
    // proper pairs, one per stem, neither covering the other stem
    if (app0 && app1) {
      for (const RightTuple& t0 : fulls) {
        if (!covers(t0, 0) || covers(t0, 1)) continue;
        for (const RightTuple& t1 : fulls) {
          if (!covers(t1, 1) || covers(t1, 0)) continue;
          bc.contributions.push_back({Node{mu, t0}, Node{mu, t1}});
        }
      }
    }
    if (bc.contributions.empty())
      throw std::logic_error("is_sufficient: no covering choice despite left-fullness");
    branches.push_back(std::move(bc));
  }

  // Per candidate pair and component, which (branch, contribution) entries
  // make the component visible in the closure.
  const std::size_t P = candidates.size();
  // covered_by[b][c] -> list of (pair index, component)
  std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> covered_by(branches.size());
  for (std::size_t b = 0; b < branches.size(); ++b) {
    covered_by[b].resize(branches[b].contributions.size());
    for (std::size_t c = 0; c < branches[b].contributions.size(); ++c) {
      for (std::size_t p = 0; p < P; ++p) {
        for (int comp = 0; comp < 2; ++comp) {
          const Node& chi = comp == 0 ? candidates[p].first : candidates[p].second;
          for (const Node& fn : branches[b].contributions[c]) {
            if (is_prefix(chi, fn)) {
              covered_by[b][c].emplace_back(p, comp);
              break;
            }
          }
        }
      }
    }
  }

  SufficiencyResult res;
  std::vector<int> cover_count(P, 0);  // how many components of pair p are visible
  std::vector<std::array<int, 2>> comp_cover(P, {0, 0});
  std::vector<std::size_t> chosen(branches.size(), 0);
  std::size_t checked = 0;

  // DFS over branch contributions, searching for a subtree avoiding every
  // candidate pair. Prunes as soon as some pair is fully visible.
  std::function<bool(std::size_t)> dfs = [&](std::size_t b) -> bool {
    if (++checked > cap)
      throw EnumerationCapExceeded("is_sufficient: enumeration cap exceeded");
    if (b == branches.size()) return true;  // avoiding subtree completed
    for (std::size_t c = 0; c < branches[b].contributions.size(); ++c) {
      bool clash = false;
      for (auto [p, comp] : covered_by[b][c]) {
        if (comp_cover[p][comp]++ == 0) {
          if (++cover_count[p] == 2) clash = true;
        }
      }
      chosen[b] = c;
      bool found = false;
      if (!clash) found = dfs(b + 1);
      for (auto [p, comp] : covered_by[b][c]) {
        if (--comp_cover[p][comp] == 0) --cover_count[p];
      }
      if (found) return true;
    }
    return false;
  };

  bool avoiding = dfs(0);
  res.subtrees_checked = checked;
  res.sufficient = !avoiding;
  if (avoiding) {
    std::vector<Node> gens;
    for (std::size_t b = 0; b < branches.size(); ++b)
      for (const Node& fn : branches[b].contributions[chosen[b]]) gens.push_back(fn);
    std::sort(gens.begin(), gens.end());
    res.failing_subtree = std::move(gens);
  } else if (!candidates.empty()) {
    // witness in the maximal subtree: the lex-least candidate whose
    // components extend to full nodes of t
    for (const auto& pr : candidates) {
      auto visible = [&](const Node& chi) {
        for (const Word& mu : enumerate_extensions(chi.left, full))
          for (const RightTuple& tau : t.slice(mu))
            if (tau.length() == full && is_prefix(chi.right, tau)) return true;
        return false;
      };
      if (visible(pr.first) && visible(pr.second)) {
        res.witness = pr;
        break;
      }
    }
  }
  return res;
}

bool suffix_closed_in(const NodePairSet& a, const CrossTree& t) {
  if (!a.is_extensional())
    throw std::invalid_argument("suffix_closed_in: extensional set required");
  std::vector<Node> all = t.nodes();
  for (const auto& [x, y] : a.pairs()) {
    if (!t.contains(x) || !t.contains(y)) continue;
    for (const Node& xe : all) {
      if (!is_prefix(x, xe)) continue;
      for (const Node& ye : all) {
        if (!is_prefix(y, ye)) continue;
        if (!a.contains(xe, ye)) return false;
      }
    }
  }
  return true;
}

CondPair extract(const CrossTree& t, const NodePairSet& a, const CondPair& cp) {
  require_condtuple(t, cp, "extract");
  if (cp.stem0.right.length() != cp.stem1.right.length())
    throw std::invalid_argument("extract: unequal sigma stem lengths");
  if (a.is_extensional() && !suffix_closed_in(a, t))
    throw std::invalid_argument("extract: a is not suffix-closed");

  const int full = t.height();
  const int n_dom = full - static_cast<int>(cp.stem0.left.size());
  const int m_dom = full - static_cast<int>(cp.stem0.right.length());
  const int r = t.arity();

  // Slice oracle f(tau) = f0(tau) u f1(tau), non-increasing by downward
  // closure; nu survives at a short tau if its truncation is consistent.
  MonotoneOracle oracle;
  oracle.depth = n_dom;
  oracle.level = m_dom;
  oracle.arity = r;
  oracle.eval = [&t, cp, full](const Word& tau) {
    std::set<RightTuple> out;
    for (int i = 0; i < 2; ++i) {
      const Node& stem = cp.stem(i);
      Word rho = stem.left.concat(tau);
      if (static_cast<int>(rho.size()) > full) continue;
      int m = full - static_cast<int>(stem.right.length());
      for (const RightTuple& nu : enumerate_tuples(m, t.arity(), 2)) {
        RightTuple sig = stem.right.concat(nu);
        RightTuple cut = sig.prefix(std::min(sig.length(), rho.size()));
        if (t.contains(rho, cut)) out.insert(nu);
      }
    }
    return out;
  };

  Ext2Result er = ext2(oracle, n_dom, n_dom);
  const IncompatMap& psi = er.phi;

  // Candidate full nodes per side: (rho_i . tau, sigma_i . nu) in t whose
  // psi-lift is also in t.
  auto side_nodes = [&](int i) {
    std::vector<std::pair<Node, std::pair<Word, RightTuple>>> out;  // node, (tau, nu)
    const Node& stem = cp.stem(i);
    for (const Word& tau : enumerate_extensions(Word(3), n_dom)) {
      Word rho = stem.left.concat(tau);
      Word rho_lift = stem.left.concat(psi.apply(tau));
      for (const RightTuple& nu : enumerate_tuples(m_dom, r, 2)) {
        RightTuple sig = stem.right.concat(nu);
        if (t.contains(rho, sig) && t.contains(rho_lift, sig))
          out.push_back({Node{rho, sig}, {tau, nu}});
      }
    }
    return out;
  };
  auto b0 = side_nodes(0);
  auto b1 = side_nodes(1);

  // Witness search in (length, lex) order over full-depth pairs.
  for (const auto& [x, xs] : b0) {
    for (const auto& [y, ys] : b1) {
      if (!extends_condpair(cp, x, y)) continue;
      if (!a.contains(x, y)) continue;
      Node lifted0{cp.stem0.left.concat(psi.apply(xs.first)), x.right};
      Node lifted1{cp.stem1.left.concat(psi.apply(ys.first)), y.right};
      CondPair out{lifted0, lifted1};
      // soundness asserts
      if (!a.contains(lifted0, lifted1))
        throw std::logic_error("extract: lifted pair escaped a despite suffix closure");
      if (!extends_condpair(cp, lifted0, lifted1))
        throw std::logic_error("extract: lifted pair does not extend the input");
      for (int i = 0; i < 2; ++i)
        if (!leftfull_at(t, out.stem(i).left, out.stem(i).right))
          throw std::logic_error("extract: tree not left-full below the output");
      return out;
    }
  }
  throw std::logic_error("extract: no witness pair in the candidate closure despite sufficiency");
}

std::optional<CondPair> find_condtuple_direct(const CrossTree& t, const NodePairSet& a,
                                              const CondPair& cp) {
  require_condtuple(t, cp, "find_condtuple_direct");
  std::vector<Node> all = t.nodes();
  for (const Node& x : all) {
    if (!is_prefix(cp.stem0, x)) continue;
    for (const Node& y : all) {
      if (!is_prefix(cp.stem1, y)) continue;
      if (!extends_condpair(cp, x, y)) continue;
      if (!a.contains(x, y)) continue;
      if (!leftfull_at(t, x.left, x.right) || !leftfull_at(t, y.left, y.right)) continue;
      return CondPair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace ccwb
