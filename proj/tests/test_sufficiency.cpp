#include <doctest.h>

#include <algorithm>

#include "ccwb/crosstree.hpp"
#include "ccwb/enumerate.hpp"
#include "ccwb/sufficiency.hpp"

using namespace ccwb;

namespace {

Word w3(const std::string& s) { return Word::parse(s, 3); }
Word w2(const std::string& s) { return Word::parse(s, 2); }
RightTuple rt1(const std::string& s) { return RightTuple({w2(s)}); }
Node n1(const std::string& l, const std::string& r) { return Node{w3(l), rt1(r)}; }

CondPair root_pair(int arity = 1) {
  Node root{Word(3), RightTuple::empty_tuple(arity)};
  return CondPair{root, root};
}

NodePairSet all_pairs(const CrossTree& t) {
  std::vector<std::pair<Node, Node>> pairs;
  for (const Node& x : t.nodes())
    for (const Node& y : t.nodes()) pairs.emplace_back(x, y);
  return NodePairSet::extensional(std::move(pairs));
}

CrossTree tree_of(int height, const std::vector<std::pair<std::string, std::string>>& gens) {
  std::vector<Node> nodes;
  for (const auto& [l, r] : gens) nodes.push_back(n1(l, r));
  return CrossTree::closure_of(1, height, nodes);
}

}  // namespace

TEST_SUITE_BEGIN("sufficiency");

TEST_CASE("is_sufficient examples") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);

  auto res = is_sufficient(full, all_pairs(full), root_pair());
  CHECK(res.sufficient);
  CHECK(res.witness.has_value());

  auto res_empty = is_sufficient(full, NodePairSet::extensional({}), root_pair());
  CHECK_FALSE(res_empty.sufficient);
  CHECK(res_empty.failing_subtree.has_value());

  // pairs whose left parts both start with 0 are never completely
  // incompatible, so no subtree has a witness
  NodePairSet zeros = NodePairSet::intensional([](const Node& a, const Node& b) {
    return !a.left.empty() && !b.left.empty() && a.left.at(0) == 0 && b.left.at(0) == 0;
  });
  CHECK_FALSE(is_sufficient(full, zeros, root_pair()).sufficient);
}

TEST_CASE("is_sufficient rejects bad inputs") {
  CrossTree missing = tree_of(1, {{"0", "0"}, {"1", "0"}});
  CHECK_THROWS_AS(is_sufficient(missing, all_pairs(missing), root_pair()),
                  std::invalid_argument);
}

TEST_CASE("sufficiency is monotone in the pair set") {
  Rng rng(301);
  for (int i = 0; i < 25; ++i) {
    CrossTree t = random_leftfull_tree(rng, 2, 1);
    if (!leftfull_at(t, Word(3), RightTuple::empty_tuple(1))) continue;
    NodePairSet small = random_suffix_closed_set(rng, t, 2);
    NodePairSet more = random_suffix_closed_set(rng, t, 3);
    std::vector<std::pair<Node, Node>> both = small.pairs();
    both.insert(both.end(), more.pairs().begin(), more.pairs().end());
    NodePairSet big = NodePairSet::extensional(std::move(both));
    if (is_sufficient(t, small, root_pair()).sufficient)
      CHECK(is_sufficient(t, big, root_pair()).sufficient);
  }
}

TEST_CASE("extract on the full tree finds the lex-least incompatible pair") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  NodePairSet a = all_pairs(full);
  REQUIRE(is_sufficient(full, a, root_pair()).sufficient);
  CondPair out = extract(full, a, root_pair());
  CHECK(out.stem0 == n1("0", "0"));
  CHECK(out.stem1 == n1("1", "0"));
  CHECK(leftfull(full, out.stem0.left, out.stem0.right));
  CHECK(leftfull(full, out.stem1.left, out.stem1.right));
}

TEST_CASE("extract respects a sigma-constrained pair set") {
  // sigma "1" realized under every left digit and the set demands it
  CrossTree only1 = tree_of(1, {{"0", "1"}, {"1", "1"}, {"2", "1"}});
  NodePairSet ones = NodePairSet::intensional([](const Node& a, const Node& b) {
    return a.right.length() == 1 && b.right.length() == 1 &&
           a.right.component(0).at(0) == 1 && b.right.component(0).at(0) == 1;
  });
  REQUIRE(is_sufficient(only1, ones, root_pair()).sufficient);
  CondPair out = extract(only1, ones, root_pair());
  CHECK(out.stem0.right == rt1("1"));
  CHECK(out.stem1.right == rt1("1"));
  CHECK(completely_incompatible(out.stem0.left, out.stem1.left, w3(""), w3("")));
}

TEST_CASE("extract with full-height stems accepts the empty-suffix case") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  CondPair cp{n1("0", "0"), n1("1", "0")};
  NodePairSet a = all_pairs(full);
  REQUIRE(is_sufficient(full, a, cp).sufficient);
  CondPair out = extract(full, a, cp);
  CHECK(out.stem0 == cp.stem0);
  CHECK(out.stem1 == cp.stem1);
}

TEST_CASE("extract agrees with the direct search across a sweep") {
  // exhaustive trees at height 1; seeded trees at height 2
  std::vector<CrossTree> trees = all_leftfull_trees_h1(1);
  Rng rng(401);
  for (int i = 0; i < 40; ++i) trees.push_back(random_leftfull_tree(rng, 2, 1));

  Rng arng(402);
  int sufficient_seen = 0;
  for (const CrossTree& t : trees) {
    if (!leftfull_at(t, Word(3), RightTuple::empty_tuple(1))) continue;
    for (int k = 0; k < 6; ++k) {
      NodePairSet a = random_suffix_closed_set(arng, t, 1 + (k % 3));
      CondPair cp = root_pair();
      auto res = is_sufficient(t, a, cp);
      auto direct = find_condtuple_direct(t, a, cp);
      if (res.sufficient) {
        ++sufficient_seen;
        CHECK(direct.has_value());
        CondPair out = extract(t, a, cp);
        CHECK(a.contains(out.stem0, out.stem1));
        CHECK(extends_condpair(cp, out.stem0, out.stem1));
        CHECK(leftfull_at(t, out.stem0.left, out.stem0.right));
        CHECK(leftfull_at(t, out.stem1.left, out.stem1.right));
      }
    }
  }
  CHECK(sufficient_seen > 0);
}

TEST_CASE("suffix closure validation") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  // a singleton below-full pair is not closed
  NodePairSet open_set = NodePairSet::extensional({{n1("", ""), n1("", "")}});
  CHECK_FALSE(suffix_closed_in(open_set, full));
  Rng rng(77);
  NodePairSet closed = random_suffix_closed_set(rng, full, 2);
  CHECK(suffix_closed_in(closed, full));
}

TEST_SUITE_END();
