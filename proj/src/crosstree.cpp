#include "ccwb/crosstree.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccwb {

namespace {

void check_node_shape(const Node& n, int arity, int height, int ka, int kb) {
  if (n.left.alphabet() != ka)
    throw std::invalid_argument("CrossTree: left alphabet mismatch");
  if (n.right.arity() != arity)
    throw std::invalid_argument("CrossTree: node arity mismatch");
  for (int s = 0; s < arity; ++s)
    if (n.right.component(s).alphabet() != kb)
      throw std::invalid_argument("CrossTree: right alphabet mismatch");
  if (static_cast<int>(n.left.size()) > height)
    throw std::invalid_argument("CrossTree: node exceeds height");
  if (n.right.length() > n.left.size())
    throw std::invalid_argument("CrossTree: |sigma| > |rho|");
}

}  // namespace

CrossTree::CrossTree(int arity, int height, const std::vector<Node>& nodes,
                     int left_alphabet, int right_alphabet)
    : arity_(arity), height_(height), left_alphabet_(left_alphabet),
      right_alphabet_(right_alphabet) {
  if (arity_ < 1) throw std::invalid_argument("CrossTree: arity must be >= 1");
  if (height_ < 0) throw std::invalid_argument("CrossTree: height must be >= 0");
  levels_.resize(height_ + 1);
  for (const Node& n : nodes) {
    check_node_shape(n, arity_, height_, left_alphabet_, right_alphabet_);
    levels_[n.left.size()][n.left].insert(n.right);
  }
  node_count_ = 0;
  for (const auto& lvl : levels_)
    for (const auto& [w, ss] : lvl) node_count_ += ss.size();
  compute_caches();
}

CrossTree CrossTree::closure_of(int arity, int height, const std::vector<Node>& generators,
                                int left_alphabet, int right_alphabet) {
  std::set<Node> all;
  for (const Node& g : generators) {
    for (std::size_t lr = 0; lr <= g.left.size(); ++lr) {
      Word rho = g.left.prefix(lr);
      std::size_t max_sigma = std::min(lr, g.right.length());
      for (std::size_t ls = 0; ls <= max_sigma; ++ls)
        all.insert(Node{rho, g.right.prefix(ls)});
    }
  }
  return CrossTree(arity, height, std::vector<Node>(all.begin(), all.end()),
                   left_alphabet, right_alphabet);
}

bool CrossTree::contains(const Word& rho, const RightTuple& sigma) const {
  if (static_cast<int>(rho.size()) >= static_cast<int>(levels_.size())) return false;
  const auto& lvl = levels_[rho.size()];
  auto it = lvl.find(rho);
  if (it == lvl.end()) return false;
  return it->second.count(sigma) > 0;
}

std::vector<Node> CrossTree::nodes() const {
  std::vector<Node> out;
  out.reserve(node_count_);
  for (const auto& lvl : levels_)
    for (const auto& [w, ss] : lvl)
      for (const auto& s : ss) out.push_back(Node{w, s});
  std::sort(out.begin(), out.end());
  return out;
}

std::set<RightTuple> CrossTree::slice(const Word& rho) const {
  if (static_cast<int>(rho.size()) >= static_cast<int>(levels_.size())) return {};
  const auto& lvl = levels_[rho.size()];
  auto it = lvl.find(rho);
  if (it == lvl.end()) return {};
  return it->second;
}

std::vector<Word> CrossTree::left_words(std::size_t length) const {
  std::vector<Word> out;
  if (static_cast<int>(length) >= static_cast<int>(levels_.size())) return out;
  for (const auto& [w, ss] : levels_[length])
    if (!ss.empty()) out.push_back(w);
  return out;
}

bool CrossTree::is_leaf(const Node& n) const {
  if (!contains(n)) throw std::invalid_argument("is_leaf: node not in tree");
  // extension by one left digit keeping sigma
  if (static_cast<int>(n.left.size()) < height_) {
    for (Digit d = 0; d < left_alphabet_; ++d)
      if (contains(n.left.append(d), n.right)) return false;
  }
  // extension of sigma by one level under the same rho
  if (n.right.length() < n.left.size()) {
    for (const RightTuple& s : enumerate_tuples(1, arity_, right_alphabet_)) {
      std::vector<Digit> ds;
      for (int i = 0; i < arity_; ++i) ds.push_back(s.component(i).at(0));
      if (contains(n.left, n.right.append(ds))) return false;
    }
  }
  return true;
}

void CrossTree::compute_caches() {
  leaf_complete_ = true;
  for (int lr = 0; lr < height_; ++lr) {
    for (const auto& [w, ss] : levels_[lr]) {
      for (const auto& s : ss) {
        if (is_leaf(Node{w, s})) {
          leaf_complete_ = false;
          break;
        }
      }
      if (!leaf_complete_) break;
    }
    if (!leaf_complete_) break;
  }
  right_pruned_ = true;
  for (const auto& lvl : levels_) {
    for (const auto& [w, ss] : lvl) {
      for (const auto& s : ss) {
        if (s.length() == w.size()) continue;
        // sigma must extend within the slice to length |rho|
        bool extendible = false;
        for (const auto& t : ss) {
          if (t.length() == w.size() && is_prefix(s, t)) {
            extendible = true;
            break;
          }
        }
        if (!extendible) {
          right_pruned_ = false;
          break;
        }
      }
      if (!right_pruned_) break;
    }
    if (!right_pruned_) break;
  }
}

bool CrossTree::operator==(const CrossTree& other) const {
  return arity_ == other.arity_ && height_ == other.height_ &&
         left_alphabet_ == other.left_alphabet_ &&
         right_alphabet_ == other.right_alphabet_ && levels_ == other.levels_;
}

ValidationReport validate(const CrossTree& t) {
  ValidationReport report;
  if (!t.contains(Word(t.left_alphabet()), RightTuple::empty_tuple(t.arity(), t.right_alphabet()))) {
    report.violations.push_back("missing root node");
  }
  for (const Node& n : t.nodes()) {
    // downward closure: both one-step shortenings must be present
    if (!n.left.empty() && n.right.length() <= n.left.size() - 1) {
      if (!t.contains(n.left.prefix(n.left.size() - 1), n.right))
        report.violations.push_back("not downward-closed at " + n.str());
    }
    if (n.right.length() > 0) {
      if (!t.contains(n.left, n.right.prefix(n.right.length() - 1)))
        report.violations.push_back("not downward-closed at " + n.str());
    }
  }
  return report;
}

CrossTree from_forbidden(const ForbiddenSet& w, int height, int arity) {
  std::vector<Node> nodes;
  auto forbidden_below = [&w](const Word& rho, const RightTuple& sigma) {
    for (const Node& f : w.entries) {
      bool left_ok = f.left.size() <= rho.size() && is_prefix(f.left, rho);
      if (!left_ok) continue;
      if (f.right.arity() != sigma.arity()) continue;
      if (f.right.length() <= sigma.length() && is_prefix(f.right, sigma)) return true;
    }
    return false;
  };
  std::vector<Word> lefts = {Word(3)};
  for (int lr = 0; lr <= height; ++lr) {
    if (lr > 0) {
      std::vector<Word> next;
      for (const Word& p : lefts)
        for (Digit d = 0; d < 3; ++d) next.push_back(p.append(d));
      lefts = std::move(next);
    }
    for (const Word& rho : lefts) {
      for (std::size_t ls = 0; ls <= rho.size(); ++ls) {
        for (const RightTuple& sigma : enumerate_tuples(ls, arity, 2)) {
          if (!forbidden_below(rho, sigma)) nodes.push_back(Node{rho, sigma});
        }
      }
    }
  }
  return CrossTree(arity, height, nodes);
}

CrossTree right_prune(const CrossTree& t) {
  // Start from all nodes; repeatedly delete sigmas not extendible to length
  // |rho| within their slice, cascading until fixpoint.
  std::vector<std::map<Word, std::set<RightTuple>>> lvls(t.height() + 1);
  for (const Node& n : t.nodes()) lvls[n.left.size()][n.left].insert(n.right);

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& lvl : lvls) {
      for (auto it = lvl.begin(); it != lvl.end();) {
        const Word& rho = it->first;
        auto& ss = it->second;
        std::vector<RightTuple> doomed;
        for (const auto& s : ss) {
          if (s.length() == rho.size()) continue;
          bool extendible = false;
          for (const auto& u : ss) {
            if (u.length() == rho.size() && is_prefix(s, u)) {
              extendible = true;
              break;
            }
          }
          if (!extendible) doomed.push_back(s);
        }
        for (const auto& s : doomed) ss.erase(s);
        if (!doomed.empty()) changed = true;
        // removing sigmas may orphan nodes upward; enforce closure downward:
        // drop extensions of removed nodes
        if (ss.empty()) {
          it = lvl.erase(it);
        } else {
          ++it;
        }
      }
    }
    // enforce downward closure: a node survives only if its one-step
    // shortenings survive
    for (std::size_t lr = 1; lr < lvls.size(); ++lr) {
      for (auto it = lvls[lr].begin(); it != lvls[lr].end();) {
        const Word& rho = it->first;
        auto& ss = it->second;
        Word parent = rho.prefix(rho.size() - 1);
        std::vector<RightTuple> doomed;
        for (const auto& s : ss) {
          bool ok = true;
          if (s.length() <= rho.size() - 1) {
            auto pit = lvls[lr - 1].find(parent);
            if (pit == lvls[lr - 1].end() || pit->second.count(s) == 0) ok = false;
          }
          if (ok && s.length() > 0) {
            if (ss.count(s.prefix(s.length() - 1)) == 0) ok = false;
          }
          if (!ok) doomed.push_back(s);
        }
        for (const auto& s : doomed) ss.erase(s);
        if (!doomed.empty()) changed = true;
        if (ss.empty()) {
          it = lvls[lr].erase(it);
        } else {
          ++it;
        }
      }
    }
  }

  std::vector<Node> nodes;
  for (const auto& lvl : lvls)
    for (const auto& [w, ss] : lvl)
      for (const auto& s : ss) nodes.push_back(Node{w, s});
  return CrossTree(t.arity(), t.height(), nodes, t.left_alphabet(), t.right_alphabet());
}

CrossTree truncate(const CrossTree& t, int new_height) {
  if (new_height < 0 || new_height > t.height())
    throw std::invalid_argument("truncate: bad height");
  std::vector<Node> nodes;
  for (const Node& n : t.nodes())
    if (static_cast<int>(n.left.size()) <= new_height) nodes.push_back(n);
  return CrossTree(t.arity(), new_height, nodes, t.left_alphabet(), t.right_alphabet());
}

bool leftfull_at(const CrossTree& t, const Word& rho, const RightTuple& sigma) {
  if (!t.contains(rho, sigma)) return false;
  if (!t.leaf_complete()) return false;
  const std::size_t full = t.height();
  for (const Word& mu : enumerate_extensions(rho, full)) {
    const auto ss = t.slice(mu);
    bool found = false;
    for (const RightTuple& tau : ss) {
      if (tau.length() == full && is_prefix(sigma, tau)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool leftfull(const CrossTree& t, const Word& rho, const RightTuple& sigma) {
  if (!t.contains(rho, sigma))
    throw std::invalid_argument("leftfull: (rho, sigma) not in tree");
  return leftfull_at(t, rho, sigma);
}

bool leftfull_via_c(const CrossTree& t, const Word& rho, const RightTuple& sigma) {
  if (!t.right_pruned())
    throw std::invalid_argument("leftfull_via_c: tree is not right-pruned");
  if (!t.contains(rho, sigma))
    throw std::invalid_argument("leftfull_via_c: (rho, sigma) not in tree");
  if (!t.leaf_complete()) return false;
  for (const Word& mu : enumerate_extensions(rho, t.height()))
    if (!t.contains(mu, sigma)) return false;
  return true;
}

std::pair<Word, RightTuple> leftfull_extend(const CrossTree& t, const Word& rho,
                                            const RightTuple& sigma, std::size_t n) {
  if (n > static_cast<std::size_t>(t.height()))
    throw std::invalid_argument("leftfull_extend: n exceeds height");
  if (n < sigma.length())
    throw std::invalid_argument("leftfull_extend: n below current length");
  if (!leftfull_at(t, rho, sigma))
    throw std::invalid_argument("leftfull_extend: tree not left-full below stem");

  // WLOG |rho| >= n: any left extension keeps left-fullness; take the
  // lexicographically least one.
  Word rho0 = rho;
  while (rho0.size() < n) rho0 = rho0.append(0);

  const std::size_t full = t.height();
  Word rho_j = rho0;
  for (const RightTuple& sigma_j : enumerate_tuple_extensions(sigma, n)) {
    if (leftfull_at(t, rho_j, sigma_j)) return {rho_j, sigma_j};
    // Blocking witness: the lex-least full-length extension of rho_j with no
    // full tuple above sigma_j. Guaranteed to exist when not left-full,
    // since the leaf condition holds globally.
    bool found_witness = false;
    for (const Word& mu : enumerate_extensions(rho_j, full)) {
      bool covered = false;
      for (const RightTuple& tau : t.slice(mu)) {
        if (tau.length() == full && is_prefix(sigma_j, tau)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        rho_j = mu;
        found_witness = true;
        break;
      }
    }
    if (!found_witness)
      throw std::logic_error("leftfull_extend: no blocking witness despite failure");
  }
  throw std::logic_error(
      "leftfull_extend: all sigma extensions failed, contradicting left-fullness");
}

}  // namespace ccwb
