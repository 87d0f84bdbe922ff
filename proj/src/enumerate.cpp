#include "ccwb/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace ccwb {

namespace {

std::vector<Node> diagonal_nodes(int height, int arity) {
  std::vector<Node> out;
  for (int len = 1; len <= height; ++len)
    for (const Word& rho : enumerate_extensions(Word(3), len))
      for (const RightTuple& sig : enumerate_tuples(len, arity, 2))
        out.push_back(Node{rho, sig});
  return out;
}

std::string tree_key(const CrossTree& t) {
  std::string s;
  for (const Node& n : t.nodes()) s += n.str() + ";";
  return s;
}

}  // namespace

std::vector<CrossTree> all_right_pruned_trees(int height, int arity) {
  std::vector<Node> diag = diagonal_nodes(height, arity);
  if (diag.size() > 20)
    throw std::invalid_argument("all_right_pruned_trees: space too large, use the bounded family");
  std::vector<CrossTree> out;
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (1ull << diag.size()); ++mask) {
    std::vector<Node> gens = {Node{Word(3), RightTuple::empty_tuple(arity)}};
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (mask & (1ull << i)) gens.push_back(diag[i]);
    CrossTree t = CrossTree::closure_of(arity, height, gens);
    if (seen.insert(tree_key(t)).second) out.push_back(std::move(t));
  }
  return out;
}

std::vector<CrossTree> all_leftfull_trees_h1(int arity) {
  std::vector<RightTuple> fulls = enumerate_tuples(1, arity, 2);
  const std::size_t k = fulls.size();
  std::vector<Word> lefts = enumerate_extensions(Word(3), 1);
  std::vector<CrossTree> out;
  std::vector<std::uint32_t> masks(lefts.size(), 1);
  while (true) {
    std::vector<Node> gens;
    for (std::size_t i = 0; i < lefts.size(); ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (masks[i] & (1u << j)) gens.push_back(Node{lefts[i], fulls[j]});
    out.push_back(CrossTree::closure_of(arity, 1, gens));
    std::size_t i = masks.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (masks[i] + 1 < (1u << k)) {
        ++masks[i];
        std::fill(masks.begin() + i + 1, masks.end(), 1);
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return out;
}

std::vector<CrossTree> right_pruned_trees_bounded(int height, int arity,
                                                  int max_generators) {
  std::vector<Node> diag = diagonal_nodes(height, arity);
  std::vector<CrossTree> out;
  std::set<std::string> seen;
  auto emit = [&](const std::vector<Node>& gens) {
    std::vector<Node> all = {Node{Word(3), RightTuple::empty_tuple(arity)}};
    all.insert(all.end(), gens.begin(), gens.end());
    CrossTree t = CrossTree::closure_of(arity, height, all);
    if (seen.insert(tree_key(t)).second) out.push_back(std::move(t));
  };
  std::vector<Node> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    emit(current);
    if (remaining == 0) return;
    for (std::size_t i = start; i < diag.size(); ++i) {
      current.push_back(diag[i]);
      rec(i + 1, remaining - 1);
      current.pop_back();
    }
  };
  rec(0, max_generators);
  return out;
}

CrossTree random_tree(Rng& rng, int height, int arity) {
  std::uniform_int_distribution<int> len_dist(0, height);
  std::uniform_int_distribution<int> digit(0, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> count_dist(1, 3 * height + 2);
  int count = count_dist(rng);
  std::vector<Node> gens = {Node{Word(3), RightTuple::empty_tuple(arity)}};
  for (int i = 0; i < count; ++i) {
    int lr = len_dist(rng);
    Word rho(3);
    for (int j = 0; j < lr; ++j) rho = rho.append(static_cast<Digit>(digit(rng)));
    std::uniform_int_distribution<int> slen_dist(0, lr);
    int ls = slen_dist(rng);
    std::vector<Word> ws;
    for (int s = 0; s < arity; ++s) {
      Word w(2);
      for (int j = 0; j < ls; ++j) w = w.append(static_cast<Digit>(bit(rng)));
      ws.push_back(w);
    }
    gens.push_back(Node{rho, RightTuple(ws)});
  }
  return CrossTree::closure_of(arity, height, gens);
}

CrossTree random_right_pruned_tree(Rng& rng, int height, int arity) {
  std::uniform_int_distribution<int> len_dist(1, height);
  std::uniform_int_distribution<int> digit(0, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> count_dist(1, 3 * height + 3);
  int count = count_dist(rng);
  std::vector<Node> gens = {Node{Word(3), RightTuple::empty_tuple(arity)}};
  for (int i = 0; i < count; ++i) {
    int len = len_dist(rng);
    Word rho(3);
    for (int j = 0; j < len; ++j) rho = rho.append(static_cast<Digit>(digit(rng)));
    std::vector<Word> ws;
    for (int s = 0; s < arity; ++s) {
      Word w(2);
      for (int j = 0; j < len; ++j) w = w.append(static_cast<Digit>(bit(rng)));
      ws.push_back(w);
    }
    gens.push_back(Node{rho, RightTuple(ws)});
  }
  return CrossTree::closure_of(arity, height, gens);
}

CrossTree random_leftfull_tree(Rng& rng, int height, int arity) {
  std::vector<RightTuple> fulls = enumerate_tuples(height, arity, 2);
  std::uniform_int_distribution<std::size_t> pick(0, fulls.size() - 1);
  std::uniform_int_distribution<int> extra_dist(0, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Node> gens;
  for (const Word& mu : enumerate_extensions(Word(3), height)) {
    int extra = extra_dist(rng);
    for (int i = 0; i <= extra; ++i) gens.push_back(Node{mu, fulls[pick(rng)]});
    // occasionally a dead right branch at the full left level
    if (extra_dist(rng) == 0 && height >= 1) {
      std::uniform_int_distribution<int> plen_dist(0, height - 1);
      int plen = plen_dist(rng);
      std::vector<Word> ws;
      for (int s = 0; s < arity; ++s) {
        Word w(2);
        for (int j = 0; j < plen; ++j) w = w.append(static_cast<Digit>(bit(rng)));
        ws.push_back(w);
      }
      gens.push_back(Node{mu, RightTuple(ws)});
    }
  }
  return CrossTree::closure_of(arity, height, gens);
}

NodePairSet random_suffix_closed_set(Rng& rng, const CrossTree& t, int generators) {
  std::vector<Node> all = t.nodes();
  if (all.empty()) return NodePairSet::extensional({});
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<std::pair<Node, Node>> pairs;
  for (int g = 0; g < generators; ++g) {
    const Node& x = all[pick(rng)];
    const Node& y = all[pick(rng)];
    for (const Node& xe : all) {
      if (!is_prefix(x, xe)) continue;
      for (const Node& ye : all) {
        if (!is_prefix(y, ye)) continue;
        pairs.emplace_back(xe, ye);
      }
    }
  }
  return NodePairSet::extensional(std::move(pairs));
}

MonotoneOracle random_monotone_oracle(Rng& rng, int depth, int level, int arity) {
  auto survival = std::make_shared<std::map<RightTuple, std::set<Word>>>();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const RightTuple& nu : enumerate_tuples(level, arity, 2)) {
    std::set<Word>& sur = (*survival)[nu];
    if (coin(rng) < 0.15) continue;  // dead everywhere
    std::vector<Word> frontier = {Word(3)};
    sur.insert(Word(3));
    for (int len = 1; len <= depth; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (Digit d = 0; d < 3; ++d) {
          if (coin(rng) < 0.75) {
            Word c = w.append(d);
            sur.insert(c);
            next.push_back(c);
          }
        }
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
  }
  MonotoneOracle oracle;
  oracle.depth = depth;
  oracle.level = level;
  oracle.arity = arity;
  oracle.eval = [survival](const Word& w) {
    std::set<RightTuple> out;
    for (const auto& [nu, sur] : *survival)
      if (sur.count(w)) out.insert(nu);
    return out;
  };
  return oracle;
}

GammaElem random_gamma_over(Rng& rng, int level, int n, int support_window) {
  auto chain = random_chain_over(rng, level, n, 3);
  (void)support_window;
  return chain.back();
}

namespace {

Gamma0 random_gamma0_over(Rng& rng, int n, int window) {
  std::uniform_int_distribution<int> size_dist(1, 2);
  std::uniform_int_distribution<int> pos_dist(n + 1, n + window);
  std::uniform_int_distribution<int> val(0, 2);
  int sz = size_dist(rng);
  std::map<int, int> m;
  for (int i = 0; i < sz; ++i) m[pos_dist(rng)] = val(rng);
  std::vector<std::pair<int, int>> es(m.begin(), m.end());
  return Gamma0(es);
}

}  // namespace

std::vector<GammaElem> random_chain_over(Rng& rng, int level, int n, int max_steps) {
  std::vector<GammaElem> chain = {GammaElem::zeta(level)};
  if (level == 0) {
    if (max_steps > 0) chain.push_back(GammaElem::from_base(random_gamma0_over(rng, n, 4)));
    return chain;
  }
  std::uniform_int_distribution<int> fan(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < max_steps; ++step) {
    const GammaElem& cur = chain.back();
    const GammaStep& last = cur.steps.back();
    // candidate grow moves: leaves whose label can strictly extend over n
    std::vector<std::vector<int>> grow_leaves;
    for (const auto& leaf : last.tree.leaves()) {
      const GammaElem* lab = last.label_of(leaf);
      if (level - 1 == 0) {
        if (lab->base.empty()) grow_leaves.push_back(leaf);
      } else {
        grow_leaves.push_back(leaf);  // paths can usually still grow
      }
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> backtracks;
    for (const auto& xi : last.tree.nodes) {
      std::vector<int> children = last.tree.child_indices(xi);
      if (children.size() >= 2) backtracks.push_back({xi, children});
    }
    bool did = false;
    if (!grow_leaves.empty() && (backtracks.empty() || coin(rng) == 0)) {
      std::uniform_int_distribution<std::size_t> pickleaf(0, grow_leaves.size() - 1);
      const auto leaf = grow_leaves[pickleaf(rng)];
      const GammaElem* lab = last.label_of(leaf);
      int f = fan(rng);
      GammaStep next;
      next.tree = last.tree;
      next.labels = last.labels;
      bool ok = true;
      for (int c = 0; c < f; ++c) {
        GammaElem child_label = GammaElem::zeta(level - 1);
        if (level - 1 == 0) {
          child_label = GammaElem::from_base(random_gamma0_over(rng, n, 4));
        } else {
          auto sub = random_chain_over(rng, level - 1, n, 2);
          child_label = sub.back();
        }
        if (!(leq(*lab, child_label) && !(*lab == child_label))) {
          ok = false;
          break;
        }
        auto node = leaf;
        node.push_back(c);
        next.tree.nodes.insert(node);
        next.labels.emplace_back(node, child_label);
      }
      if (ok) {
        std::sort(next.labels.begin(), next.labels.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        GammaElem out = cur;
        out.steps.push_back(std::move(next));
        chain.push_back(std::move(out));
        did = true;
      }
    } else if (!backtracks.empty()) {
      std::uniform_int_distribution<std::size_t> pickbt(0, backtracks.size() - 1);
      const auto& [xi, children] = backtracks[pickbt(rng)];
      std::uniform_int_distribution<std::size_t> keep_dist(1, children.size() - 1);
      std::size_t keep = keep_dist(rng);
      GammaStep next;
      next.tree = last.tree;
      for (const auto& d : last.tree.strict_descendants(xi)) next.tree.nodes.erase(d);
      for (std::size_t i = 0; i < keep; ++i) {
        auto child = xi;
        child.push_back(children[i]);
        next.tree.nodes.insert(child);
      }
      for (const auto& [node, lab] : last.labels)
        if (next.tree.contains(node)) next.labels.emplace_back(node, lab);
      GammaElem out = cur;
      out.steps.push_back(std::move(next));
      chain.push_back(std::move(out));
      did = true;
    }
    if (!did) break;
  }
  return chain;
}

ApproxTable random_table(Rng& rng, int level, int rows, int cols) {
  ApproxTable out;
  out.level = level;
  for (int n = 0; n < rows; ++n) {
    auto chain = random_chain_over(rng, level, n, cols - 1);
    std::vector<GammaElem> row;
    for (int s = 0; s < cols; ++s)
      row.push_back(s < static_cast<int>(chain.size()) ? chain[s] : chain.back());
    out.rows.push_back(std::move(row));
  }
  return out;
}

StepStream random_stream(Rng& rng, int level, int rows, int cols, bool corrupt) {
  ApproxTable base = random_table(rng, level, rows, cols);
  StepStream out;
  out.level = level;
  std::uniform_int_distribution<int> avail_dist(0, cols + 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int n = 0; n < rows; ++n) {
    std::vector<StepStream::Cell> row;
    for (int s = 0; s < cols; ++s) {
      StepStream::Cell cell;
      cell.value = base.rows[n][s];
      cell.available_at = std::max(s, avail_dist(rng));
      if (corrupt) {
        double c = coin(rng);
        if (c < 0.1) {
          cell.value.reset();  // diverging cell
        } else if (c < 0.2) {
          cell.value = GammaElem::from_base(Gamma0({{0, 0}}));  // not over n
        } else if (c < 0.3 && s > 0) {
          cell.value = GammaElem::zeta(level);  // decreasing step
        } else if (c < 0.35) {
          cell.available_at = -1;  // never converges
        }
      }
      row.push_back(std::move(cell));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

DisjointArray random_disjoint_array(Rng& rng, int rows, int window) {
  DisjointArray out;
  std::uniform_int_distribution<int> count_dist(0, 2);
  std::uniform_int_distribution<int> cls(0, 2);
  for (int n = 0; n < rows; ++n) {
    std::array<std::vector<int>, 3> fs;
    std::set<int> used;
    int count = count_dist(rng);
    std::uniform_int_distribution<int> pos_dist(n + 1, n + window);
    for (int i = 0; i < count * 2; ++i) {
      int x = pos_dist(rng);
      if (used.insert(x).second) fs[cls(rng)].push_back(x);
    }
    for (auto& f : fs) std::sort(f.begin(), f.end());
    out.rows.push_back(std::move(fs));
  }
  return out;
}

}  // namespace ccwb
