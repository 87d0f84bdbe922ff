#include "ccwb/gamma.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ccwb {

Gamma0::Gamma0(std::vector<std::pair<int, int>> es) : entries(std::move(es)) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first < 0 || entries[i].second < 0 || entries[i].second >= 3)
      throw std::invalid_argument("Gamma0: bad entry");
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw std::invalid_argument("Gamma0: duplicate position");
  }
}

std::optional<int> Gamma0::value_at(int x) const {
  for (const auto& [p, v] : entries)
    if (p == x) return v;
  return std::nullopt;
}

std::vector<int> Gamma0::support() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& [p, v] : entries) out.push_back(p);
  return out;
}

int Gamma0::min_support() const {
  if (entries.empty()) throw std::logic_error("Gamma0::min_support: empty map");
  return entries.front().first;
}

int Gamma0::max_support() const {
  if (entries.empty()) throw std::logic_error("Gamma0::max_support: empty map");
  return entries.back().first;
}

std::strong_ordering Gamma0::operator<=>(const Gamma0& other) const {
  std::vector<int> s0 = support(), s1 = other.support();
  if (auto c = s0 <=> s1; c != 0) return c;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (auto c = entries[i].second <=> other.entries[i].second; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Gamma0::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i].first) + ":" + std::to_string(entries[i].second);
  }
  return s + "}";
}

bool FinTree::prefix_closed() const {
  if (!contains({})) return false;
  for (const auto& n : nodes) {
    if (n.empty()) continue;
    std::vector<int> parent(n.begin(), n.end() - 1);
    if (!contains(parent)) return false;
  }
  return true;
}

bool FinTree::is_leaf(const std::vector<int>& n) const {
  for (const auto& m : nodes)
    if (m.size() == n.size() + 1 && std::equal(n.begin(), n.end(), m.begin())) return false;
  return true;
}

std::vector<std::vector<int>> FinTree::leaves() const {
  std::vector<std::vector<int>> out;
  for (const auto& n : nodes)
    if (is_leaf(n)) out.push_back(n);
  return out;
}

std::vector<int> FinTree::child_indices(const std::vector<int>& n) const {
  std::vector<int> out;
  for (const auto& m : nodes)
    if (m.size() == n.size() + 1 && std::equal(n.begin(), n.end(), m.begin()))
      out.push_back(m.back());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> FinTree::strict_descendants(const std::vector<int>& n) const {
  std::vector<std::vector<int>> out;
  for (const auto& m : nodes)
    if (m.size() > n.size() && std::equal(n.begin(), n.end(), m.begin())) out.push_back(m);
  return out;
}

bool is_one_step_variation(const FinTree& t0, const FinTree& t1) {
  if (!t0.prefix_closed() || !t1.prefix_closed()) return false;
  for (const auto& xi : t0.nodes) {
    if (t0.is_leaf(xi)) {
      // grow: t1 == t0 u xi.F with F nonempty
      if (!t1.contains(xi)) continue;
      std::set<std::vector<int>> diff;
      bool superset = std::includes(t1.nodes.begin(), t1.nodes.end(),
                                    t0.nodes.begin(), t0.nodes.end());
      if (!superset) continue;
      std::set_difference(t1.nodes.begin(), t1.nodes.end(), t0.nodes.begin(), t0.nodes.end(),
                          std::inserter(diff, diff.begin()));
      if (diff.empty()) continue;
      bool all_children = true;
      for (const auto& d : diff) {
        if (d.size() != xi.size() + 1 || !std::equal(xi.begin(), xi.end(), d.begin())) {
          all_children = false;
          break;
        }
      }
      if (all_children) return true;
    } else {
      // backtrack: t1 == (t0 - strict descendants of xi) u xi.F,
      // F a proper nonempty subset of xi's children in t0
      std::set<std::vector<int>> base = t0.nodes;
      for (const auto& d : t0.strict_descendants(xi)) base.erase(d);
      std::vector<int> old_children = t0.child_indices(xi);
      // candidate F: children of xi present in t1
      std::vector<int> fs;
      for (int c : old_children) {
        auto child = xi;
        child.push_back(c);
        if (t1.contains(child)) fs.push_back(c);
      }
      if (fs.empty() || fs.size() >= old_children.size()) continue;
      std::set<std::vector<int>> expected = base;
      for (int c : fs) {
        auto child = xi;
        child.push_back(c);
        expected.insert(child);
      }
      if (expected == t1.nodes) return true;
    }
  }
  return false;
}

const GammaElem* GammaStep::label_of(const std::vector<int>& n) const {
  for (const auto& [node, lab] : labels)
    if (node == n) return &lab;
  return nullptr;
}

std::strong_ordering GammaStep::operator<=>(const GammaStep& other) const {
  if (auto c = tree <=> other.tree; c != 0) return c;
  return labels <=> other.labels;
}

bool GammaStep::operator==(const GammaStep& other) const {
  return (*this <=> other) == 0;
}

GammaElem GammaElem::from_base(Gamma0 g) {
  GammaElem e;
  e.level = 0;
  e.base = std::move(g);
  return e;
}

GammaElem GammaElem::zeta(int m) {
  if (m < 0) throw std::invalid_argument("zeta: negative level");
  GammaElem e;
  e.level = m;
  if (m == 0) return e;
  GammaStep step;
  step.tree = FinTree();
  step.labels.emplace_back(std::vector<int>{}, zeta(m - 1));
  e.steps.push_back(std::move(step));
  return e;
}

std::strong_ordering GammaElem::operator<=>(const GammaElem& other) const {
  if (auto c = level <=> other.level; c != 0) return c;
  if (level == 0) return base <=> other.base;
  return steps <=> other.steps;
}

bool GammaElem::operator==(const GammaElem& other) const {
  return (*this <=> other) == 0;
}

std::string GammaElem::str() const {
  if (level == 0) return base.str();
  std::ostringstream os;
  os << "path[m=" << level << ",u=" << steps.size() << "]";
  return os.str();
}

namespace {

// Strictly order-preserving along tree edges: the label of every non-root
// node strictly extends its parent's label.
bool strictly_above(const GammaElem& parent, const GammaElem& child) {
  return leq(parent, child) && !(parent == child);
}

void validate_into(const GammaElem& g, Report& report, const std::string& where) {
  if (g.level < 0) {
    report.violations.push_back(where + ": negative level");
    return;
  }
  if (g.level == 0) return;  // Gamma0 entries validated at construction
  if (g.steps.empty()) {
    report.violations.push_back(where + ": empty computation path");
    return;
  }
  const GammaElem root_label = GammaElem::zeta(g.level - 1);
  for (std::size_t j = 0; j < g.steps.size(); ++j) {
    const GammaStep& st = g.steps[j];
    const std::string here = where + ".step" + std::to_string(j);
    if (!st.tree.prefix_closed()) {
      report.violations.push_back(here + ": tree not prefix-closed");
      continue;
    }
    if (j == 0 && st.tree.nodes != std::set<std::vector<int>>{{}})
      report.violations.push_back(here + ": first tree must be the singleton root");
    if (j > 0 && !is_one_step_variation(g.steps[j - 1].tree, st.tree))
      report.violations.push_back(here + ": not a one-step variation (F not proper or tree unchanged)");
    // labeling: total on the tree, sorted, root labeled zeta
    if (st.labels.size() != st.tree.nodes.size()) {
      report.violations.push_back(here + ": labeling domain mismatch");
      continue;
    }
    bool domain_ok = true;
    for (const auto& [node, lab] : st.labels) {
      if (!st.tree.contains(node)) {
        report.violations.push_back(here + ": label on a node outside the tree");
        domain_ok = false;
      }
      if (lab.level != g.level - 1) {
        report.violations.push_back(here + ": label level mismatch");
        domain_ok = false;
      }
    }
    if (!domain_ok) continue;
    const GammaElem* rl = st.label_of({});
    if (rl == nullptr || !(*rl == root_label))
      report.violations.push_back(here + ": root not labeled by the root of the lower level");
    for (const auto& [node, lab] : st.labels) {
      if (node.empty()) continue;
      std::vector<int> parent(node.begin(), node.end() - 1);
      const GammaElem* pl = st.label_of(parent);
      if (pl != nullptr && !strictly_above(*pl, lab))
        report.violations.push_back(here + ": labeling not strictly order-preserving");
    }
    if (j > 0) {
      for (const auto& [node, lab] : st.labels) {
        const GammaElem* prev = g.steps[j - 1].label_of(node);
        if (prev != nullptr && !(*prev == lab))
          report.violations.push_back(here + ": incompatible labelings on surviving node");
      }
    }
    for (const auto& [node, lab] : st.labels) {
      Report sub;
      validate_into(lab, sub, here + ".label");
      for (auto& v : sub.violations) report.violations.push_back(std::move(v));
    }
  }
}

}  // namespace

Report validate_path(const GammaElem& gamma) {
  Report report;
  validate_into(gamma, report, "gamma");
  return report;
}

bool leq(const GammaElem& a, const GammaElem& b) {
  if (a.level != b.level) throw std::invalid_argument("leq: level mismatch");
  if (a.level == 0) {
    if (a.base.empty()) return true;
    return a.base == b.base;
  }
  if (a.steps.size() > b.steps.size()) return false;
  for (std::size_t j = 0; j < a.steps.size(); ++j)
    if (!(a.steps[j] == b.steps[j])) return false;
  return true;
}

std::vector<Gamma0> interpret(const GammaElem& gamma) {
  if (gamma.level == 0) return {gamma.base};
  if (gamma.steps.empty())
    throw std::invalid_argument("interpret: empty computation path");
  const GammaStep& last = gamma.steps.back();
  std::set<Gamma0> out;
  for (const auto& leaf : last.tree.leaves()) {
    const GammaElem* lab = last.label_of(leaf);
    if (lab == nullptr) throw std::invalid_argument("interpret: unlabeled leaf");
    for (const Gamma0& g : interpret(*lab)) out.insert(g);
  }
  if (out.empty()) throw std::logic_error("interpret: empty interpretation");
  return std::vector<Gamma0>(out.begin(), out.end());
}

bool over(const GammaElem& gamma, int n) {
  for (const Gamma0& g : interpret(gamma))
    if (!g.empty() && g.min_support() <= n) return false;
  return true;
}

bool compatible(const Word& coloring_prefix, const std::vector<Gamma0>& fs) {
  for (const Gamma0& g : fs) {
    bool ok = true;
    for (const auto& [p, v] : g.entries) {
      if (p >= static_cast<int>(coloring_prefix.size()) || coloring_prefix.at(p) != v) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool compatible(const Word& coloring_prefix, const GammaElem& gamma) {
  return compatible(coloring_prefix, interpret(gamma));
}

namespace {

// All nonempty Gamma0 maps with support within {0..S}, ascending.
std::vector<Gamma0> gamma0_fragment(int S, bool include_empty) {
  std::vector<Gamma0> out;
  if (include_empty) out.emplace_back();
  std::vector<int> positions;
  for (int p = 0; p <= S; ++p) positions.push_back(p);
  const int n = static_cast<int>(positions.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> supp;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) supp.push_back(positions[i]);
    std::vector<int> vals(supp.size(), 0);
    while (true) {
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < supp.size(); ++i) es.emplace_back(supp[i], vals[i]);
      out.emplace_back(std::move(es));
      std::size_t i = vals.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (vals[i] + 1 < 3) {
          ++vals[i];
          std::fill(vals.begin() + i + 1, vals.end(), 0);
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Emits every assignment of labels to the new children: each label a strict
// extension of the parent label, drawn from the given per-extension list.
bool emit_grow(const GammaElem& gamma, const std::vector<int>& leaf,
               const std::vector<int>& f_indices, const std::vector<GammaElem>& exts,
               const std::function<bool(const GammaElem&)>& fn) {
  const GammaStep& last = gamma.steps.back();
  std::vector<std::size_t> pick(f_indices.size(), 0);
  if (exts.empty()) return true;
  while (true) {
    GammaStep next;
    next.tree = last.tree;
    for (int c : f_indices) {
      auto child = leaf;
      child.push_back(c);
      next.tree.nodes.insert(child);
    }
    next.labels = last.labels;
    for (std::size_t i = 0; i < f_indices.size(); ++i) {
      auto child = leaf;
      child.push_back(f_indices[i]);
      next.labels.emplace_back(child, exts[pick[i]]);
    }
    std::sort(next.labels.begin(), next.labels.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    GammaElem out = gamma;
    out.steps.push_back(std::move(next));
    if (!fn(out)) return false;
    std::size_t i = pick.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (pick[i] + 1 < exts.size()) {
        ++pick[i];
        std::fill(pick.begin() + i + 1, pick.end(), 0);
        done = false;
        break;
      }
    }
    if (done) return true;
  }
}

// Shared list of strict extensions per label, reused across one traversal.
using ExtCache = std::map<GammaElem, std::shared_ptr<const std::vector<GammaElem>>>;

// Collects all strict extensions of the given label within the (B, S)
// fragment.
std::shared_ptr<const std::vector<GammaElem>> strict_extensions_full(const GammaElem& label,
                                                                     int B, int S,
                                                                     ExtCache* cache);

bool successors_impl(const GammaElem& gamma, int B, int S,
                     const std::function<bool(const GammaElem&)>& fn, ExtCache* cache) {
  if (gamma.level == 0)
    throw std::invalid_argument("for_each_successor: level must be > 0");
  if (gamma.steps.empty()) throw std::invalid_argument("for_each_successor: empty path");
  const GammaStep& last = gamma.steps.back();

  // grow moves
  for (const auto& leaf : last.tree.leaves()) {
    const GammaElem* lab = last.label_of(leaf);
    auto exts = strict_extensions_full(*lab, B, S, cache);
    if (exts->empty()) continue;
    // nonempty F within {0..B-1}
    for (int mask = 1; mask < (1 << B); ++mask) {
      std::vector<int> f_indices;
      for (int c = 0; c < B; ++c)
        if (mask & (1 << c)) f_indices.push_back(c);
      if (!emit_grow(gamma, leaf, f_indices, *exts, fn)) return false;
    }
  }

  // backtrack moves
  for (const auto& xi : last.tree.nodes) {
    std::vector<int> children = last.tree.child_indices(xi);
    if (children.empty()) continue;  // leaf
    const int k = static_cast<int>(children.size());
    for (int mask = 1; mask < (1 << k) - 1; ++mask) {
      GammaStep next;
      next.tree = last.tree;
      for (const auto& d : last.tree.strict_descendants(xi)) next.tree.nodes.erase(d);
      for (int i = 0; i < k; ++i) {
        if (mask & (1 << i)) {
          auto child = xi;
          child.push_back(children[i]);
          next.tree.nodes.insert(child);
        }
      }
      for (const auto& [node, lab] : last.labels)
        if (next.tree.contains(node)) next.labels.emplace_back(node, lab);
      GammaElem out = gamma;
      out.steps.push_back(std::move(next));
      if (!fn(out)) return false;
    }
  }
  return true;
}

std::shared_ptr<const std::vector<GammaElem>> strict_extensions_full(const GammaElem& label,
                                                                     int B, int S,
                                                                     ExtCache* cache) {
  if (cache != nullptr) {
    auto it = cache->find(label);
    if (it != cache->end()) return it->second;
  }
  auto out = std::make_shared<std::vector<GammaElem>>();
  if (label.level == 0) {
    if (label.base.empty())
      for (const Gamma0& g : gamma0_fragment(S, false)) out->push_back(GammaElem::from_base(g));
  } else {
    // all strict path extensions within the fragment, breadth-first
    std::deque<GammaElem> queue{label};
    while (!queue.empty()) {
      GammaElem cur = std::move(queue.front());
      queue.pop_front();
      successors_impl(
          cur, B, S,
          [&](const GammaElem& nxt) {
            out->push_back(nxt);
            queue.push_back(nxt);
            return true;
          },
          cache);
    }
  }
  if (cache != nullptr) cache->emplace(label, out);
  return out;
}

}  // namespace

void for_each_successor(const GammaElem& gamma, int B, int S,
                        const std::function<bool(const GammaElem&)>& fn) {
  ExtCache cache;
  successors_impl(gamma, B, S, fn, &cache);
}

std::vector<GammaElem> enumerate_fragment(int m, int B, int S, std::size_t cap,
                                          bool* complete) {
  std::vector<GammaElem> out;
  bool full = true;
  if (m == 0) {
    for (const Gamma0& g : gamma0_fragment(S, true)) {
      if (out.size() >= cap) {
        full = false;
        break;
      }
      out.push_back(GammaElem::from_base(g));
    }
    if (complete) *complete = full;
    return out;
  }
  ExtCache cache;
  std::deque<GammaElem> queue{GammaElem::zeta(m)};
  out.push_back(GammaElem::zeta(m));
  while (!queue.empty() && out.size() < cap) {
    GammaElem cur = std::move(queue.front());
    queue.pop_front();
    successors_impl(
        cur, B, S,
        [&](const GammaElem& nxt) {
          if (out.size() >= cap) {
            full = false;
            return false;
          }
          out.push_back(nxt);
          queue.push_back(nxt);
          return true;
        },
        &cache);
  }
  if (!queue.empty()) full = false;
  if (complete) *complete = full;
  return out;
}

namespace {

// ---- longest-chain game over cone-equivalence classes ----

// Signature of a label: its continuation game is determined by it.
std::string label_signature(const GammaElem& g);

std::string state_signature(const FinTree& tree,
                            const std::vector<std::pair<std::vector<int>, GammaElem>>& labels) {
  // recursively serialize the annotated tree with sorted child serials
  std::function<std::string(const std::vector<int>&)> ser = [&](const std::vector<int>& node) {
    const GammaElem* lab = nullptr;
    for (const auto& [n, l] : labels)
      if (n == node) lab = &l;
    std::vector<std::string> kids;
    for (int c : tree.child_indices(node)) {
      auto child = node;
      child.push_back(c);
      kids.push_back(ser(child));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + (lab ? label_signature(*lab) : std::string("?"));
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  return ser({});
}

std::string label_signature(const GammaElem& g) {
  if (g.level == 0) return g.base.empty() ? "Z" : "G";
  const GammaStep& last = g.steps.back();
  return "[" + state_signature(last.tree, last.labels) + "]";
}

struct ChainGame {
  int B, S;
  std::size_t cap;
  std::unordered_map<std::string, std::size_t> memo;  // signature -> longest play
  std::unordered_map<std::string, std::vector<GammaElem>> rep_cache;

  // One representative per cone class of strict extensions of the label.
  const std::vector<GammaElem>& extension_reps(const GammaElem& label) {
    std::string key = std::to_string(label.level) + "|" + label_signature(label);
    auto it = rep_cache.find(key);
    if (it != rep_cache.end()) return it->second;
    std::vector<GammaElem> reps;
    std::set<std::string> seen;
    if (label.level == 0) {
      if (label.base.empty())
        reps.push_back(GammaElem::from_base(Gamma0({{0, 0}})));
    } else {
      // DFS over deduplicated successors
      std::deque<GammaElem> queue{label};
      while (!queue.empty()) {
        GammaElem cur = std::move(queue.front());
        queue.pop_front();
        for (const GammaElem& nxt : dedup_successors(cur)) {
          std::string sig = label_signature(nxt);
          if (seen.insert(sig).second) {
            reps.push_back(nxt);
            queue.push_back(nxt);
          }
        }
      }
    }
    return rep_cache.emplace(std::move(key), std::move(reps)).first->second;
  }

  // Successors of the path's final state, one per distinct class.
  std::vector<GammaElem> dedup_successors(const GammaElem& gamma) {
    std::vector<GammaElem> out;
    std::set<std::string> seen;
    const GammaStep& last = gamma.steps.back();

    for (const auto& leaf : last.tree.leaves()) {
      const GammaElem* lab = last.label_of(leaf);
      const std::vector<GammaElem>& reps = extension_reps(*lab);
      if (reps.empty()) continue;
      for (int f = 1; f <= B; ++f) {
        // multisets of f representatives
        std::vector<std::size_t> idx(f, 0);
        while (true) {
          std::vector<int> f_indices;
          for (int c = 0; c < f; ++c) f_indices.push_back(c);
          GammaStep next;
          next.tree = last.tree;
          next.labels = last.labels;
          for (int i = 0; i < f; ++i) {
            auto child = leaf;
            child.push_back(f_indices[i]);
            next.tree.nodes.insert(child);
            next.labels.emplace_back(child, reps[idx[i]]);
          }
          std::sort(next.labels.begin(), next.labels.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          GammaElem cand = gamma;
          cand.steps.push_back(std::move(next));
          std::string sig = label_signature(cand);
          if (seen.insert(sig).second) out.push_back(std::move(cand));
          // next nondecreasing index tuple (multiset enumeration)
          int i = f;
          bool done = true;
          while (i > 0) {
            --i;
            if (idx[i] + 1 < reps.size()) {
              ++idx[i];
              for (int j = i + 1; j < f; ++j) idx[j] = idx[i];
              done = false;
              break;
            }
          }
          if (done) break;
        }
      }
    }

    for (const auto& xi : last.tree.nodes) {
      std::vector<int> children = last.tree.child_indices(xi);
      const int k = static_cast<int>(children.size());
      if (k == 0) continue;
      for (int mask = 1; mask < (1 << k) - 1; ++mask) {
        GammaStep next;
        next.tree = last.tree;
        for (const auto& d : last.tree.strict_descendants(xi)) next.tree.nodes.erase(d);
        for (int i = 0; i < k; ++i) {
          if (mask & (1 << i)) {
            auto child = xi;
            child.push_back(children[i]);
            next.tree.nodes.insert(child);
          }
        }
        for (const auto& [node, lab] : last.labels)
          if (next.tree.contains(node)) next.labels.emplace_back(node, lab);
        GammaElem cand = gamma;
        cand.steps.push_back(std::move(next));
        std::string sig = label_signature(cand);
        if (seen.insert(sig).second) out.push_back(std::move(cand));
      }
    }
    return out;
  }

  std::size_t longest_play(const GammaElem& gamma) {
    std::string sig = label_signature(gamma);
    auto it = memo.find(sig);
    if (it != memo.end()) return it->second;
    if (memo.size() >= cap) throw FragmentTooLarge("longest_chain: fragment too large");
    memo.emplace(sig, 0);  // placeholder; game is acyclic
    std::size_t best = 0;
    for (const GammaElem& nxt : dedup_successors(gamma))
      best = std::max(best, 1 + longest_play(nxt));
    memo[sig] = best;
    return best;
  }
};

}  // namespace

ChainResult longest_chain(int m, int B, int S, std::size_t state_cap) {
  if (m < 0 || B < 0 || S < 0) throw std::invalid_argument("longest_chain: bad parameters");
  ChainResult res;
  if (m == 0) {
    res.length = 2;  // the root plus one child; the fragment always has one
    res.witness = {GammaElem::zeta(0), GammaElem::from_base(Gamma0({{0, 0}}))};
    return res;
  }
  ChainGame game{B, S, state_cap, {}, {}};
  GammaElem cur = GammaElem::zeta(m);
  res.length = 1 + game.longest_play(cur);
  res.witness.push_back(cur);
  // greedy DP walk for the witness
  while (true) {
    std::size_t remaining = game.longest_play(cur);
    if (remaining == 0) break;
    for (const GammaElem& nxt : game.dedup_successors(cur)) {
      if (1 + game.longest_play(nxt) == remaining) {
        cur = nxt;
        res.witness.push_back(cur);
        break;
      }
    }
  }
  return res;
}

}  // namespace ccwb
