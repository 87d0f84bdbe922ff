#include <doctest.h>

#include <algorithm>

#include "ccwb/crosstree.hpp"
#include "ccwb/enumerate.hpp"

using namespace ccwb;

namespace {

Word w3(const std::string& s) { return Word::parse(s, 3); }
Word w2(const std::string& s) { return Word::parse(s, 2); }
RightTuple rt1(const std::string& s) { return RightTuple({w2(s)}); }

Node n1(const std::string& l, const std::string& r) { return Node{w3(l), rt1(r)}; }

// the cross-tree generated by full nodes, r = 1
CrossTree tree_of(int height, const std::vector<std::pair<std::string, std::string>>& gens) {
  std::vector<Node> nodes;
  for (const auto& [l, r] : gens) nodes.push_back(n1(l, r));
  return CrossTree::closure_of(1, height, nodes);
}

}  // namespace

TEST_SUITE_BEGIN("crosstree");

TEST_CASE("validate") {
  CrossTree root_only(1, 0, {n1("", "")});
  CHECK(validate(root_only).ok());

  CrossTree two(1, 1, {n1("", ""), n1("0", "0"), n1("0", "")});
  CHECK(validate(two).ok());

  CrossTree missing_root(1, 1, {n1("0", "")});
  auto rep = validate(missing_root);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violations.front().find("root") != std::string::npos);

  CrossTree gap(1, 2, {n1("", ""), n1("00", "")});
  auto rep2 = validate(gap);
  CHECK_FALSE(rep2.ok());
  CHECK(rep2.violations.front().find("downward-closed") != std::string::npos);
}

TEST_CASE("from_forbidden: nothing forbidden gives the full tree") {
  CrossTree t = from_forbidden(ForbiddenSet{}, 1, 1);
  CHECK(validate(t).ok());
  CHECK(t.node_count() == 10);  // root, 3 lefts, 3x2 diagonal nodes
  CHECK(t.contains(n1("2", "1")));
  CHECK(leftfull(t, w3(""), rt1("")));
}

TEST_CASE("from_forbidden: forbidden left prefix") {
  ForbiddenSet w{{n1("0", "")}};
  CrossTree t = from_forbidden(w, 1, 1);
  CHECK(validate(t).ok());
  CHECK(t.contains(n1("1", "0")));
  for (const Node& n : t.nodes()) CHECK_FALSE(is_prefix(w3("0"), n.left));
  // confirmed by direct path enumeration: surviving full nodes avoid "0"
  int fulls = 0;
  for (const Node& n : t.nodes())
    if (n.left.size() == 1 && n.right.length() == 1) ++fulls;
  CHECK(fulls == 4);
}

TEST_CASE("from_forbidden: forbidden root gives the empty tree") {
  ForbiddenSet w{{n1("", "")}};
  CrossTree t = from_forbidden(w, 1, 1);
  CHECK(t.node_count() == 0);
  CHECK_FALSE(validate(t).ok());
}

TEST_CASE("right_prune: full tree unchanged") {
  CrossTree t = from_forbidden(ForbiddenSet{}, 2, 1);
  CHECK(t.right_pruned());
  CHECK(right_prune(t) == t);
}

TEST_CASE("right_prune: dead right branch removed at its slice") {
  // ("00","0") exists with no length-2 extension of sigma under rho="00"
  std::vector<Node> gens = {n1("00", "00"), n1("01", "00"), n1("02", "00"),
                            n1("1", "1"),   n1("2", "1")};
  CrossTree t = CrossTree::closure_of(1, 2, gens);
  // graft the dead sigma "1" under "00"
  auto nodes = t.nodes();
  nodes.push_back(n1("00", "1"));
  nodes.push_back(n1("0", "1"));
  CrossTree with_dead(1, 2, nodes);
  CHECK(validate(with_dead).ok());
  CHECK_FALSE(with_dead.right_pruned());

  CrossTree pruned = right_prune(with_dead);
  CHECK(pruned.right_pruned());
  CHECK_FALSE(pruned.contains(n1("00", "1")));
  CHECK(pruned.contains(n1("00", "0")));
  // idempotent
  CHECK(right_prune(pruned) == pruned);
}

TEST_CASE("right_prune: root-only tree unchanged") {
  CrossTree t(1, 0, {n1("", "")});
  CHECK(right_prune(t) == t);
}

TEST_CASE("right_prune never removes a node with left-fullness below it") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    CrossTree t = random_leftfull_tree(rng, 2, 1);
    CrossTree p = right_prune(t);
    for (const Node& n : t.nodes())
      if (leftfull_at(t, n.left, n.right)) CHECK(p.contains(n));
  }
}

TEST_CASE("slice") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  auto s = full.slice(w3("0"));
  CHECK(s.size() == 3);  // eps, "0", "1"
  CrossTree root_only(1, 0, {n1("", "")});
  CHECK(root_only.slice(w3("")).size() == 1);
  ForbiddenSet w{{n1("0", "")}};
  CHECK(from_forbidden(w, 1, 1).slice(w3("0")).empty());
}

TEST_CASE("leftfull examples") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  CHECK(leftfull(full, w3(""), rt1("")));

  // height 1, missing all nodes with left word "2"
  CrossTree missing = tree_of(1, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}});
  CHECK_FALSE(leftfull(missing, w3(""), rt1("")));

  CrossTree three = tree_of(1, {{"0", "0"}, {"1", "0"}, {"2", "1"}});
  CHECK(leftfull(three, w3(""), rt1("")));

  CHECK_THROWS_AS(leftfull(full, w3("00"), rt1("")), std::invalid_argument);
}

TEST_CASE("leftfull_via_c examples") {
  CrossTree full = right_prune(from_forbidden(ForbiddenSet{}, 1, 1));
  CHECK(leftfull_via_c(full, w3(""), rt1("")));

  CrossTree missing = right_prune(tree_of(1, {{"0", "0"}, {"0", "1"}, {"1", "0"}}));
  CHECK_FALSE(leftfull_via_c(missing, w3(""), rt1("")));

  // not right-pruned input rejected
  CrossTree t2 = tree_of(2, {{"00", "00"}});
  std::vector<Node> raw = t2.nodes();
  raw.push_back(n1("00", "1"));
  raw.push_back(n1("0", "1"));
  CrossTree bad(1, 2, raw);
  CHECK_THROWS_AS(leftfull_via_c(bad, w3(""), rt1("")), std::invalid_argument);
}

TEST_CASE("leftfull agrees with the membership criterion on right-pruned trees") {
  // exhaustive at height 1, r = 1 and r = 2
  for (int r : {1, 2}) {
    for (const CrossTree& t : all_right_pruned_trees(1, r)) {
      for (const Node& n : t.nodes())
        CHECK(leftfull(t, n.left, n.right) == leftfull_via_c(t, n.left, n.right));
    }
  }
  // seeded sample at heights 2 and 3
  Rng rng(11);
  for (int i = 0; i < 120; ++i) {
    int height = 2 + (i % 2);
    int r = 1 + (i % 2);
    CrossTree t = right_prune(random_right_pruned_tree(rng, height, r));
    for (const Node& n : t.nodes())
      CHECK(leftfull(t, n.left, n.right) == leftfull_via_c(t, n.left, n.right));
  }
}

TEST_CASE("leftfull_extend examples") {
  CrossTree full2 = from_forbidden(ForbiddenSet{}, 2, 1);
  auto [rho, sigma] = leftfull_extend(full2, w3(""), rt1(""), 1);
  CHECK(rho == w3("0"));
  CHECK(sigma == rt1("0"));
  CHECK(leftfull(full2, rho, sigma));

  // n equal to the current length returns the stem unchanged
  auto [r2, s2] = leftfull_extend(full2, w3("1"), rt1("0"), 1);
  CHECK(r2 == w3("1"));
  CHECK(s2 == rt1("0"));

  // only sigma "1" viable at length 1: the procedure must skip sigma "0"
  CrossTree only1 = tree_of(1, {{"0", "1"}, {"1", "1"}, {"2", "1"}});
  auto [r3, s3] = leftfull_extend(only1, w3(""), rt1(""), 1);
  CHECK(s3 == rt1("1"));
  CHECK(leftfull(only1, r3, s3));
}

TEST_CASE("leftfull_extend returns left-full pairs across a sweep") {
  Rng rng(23);
  for (int i = 0; i < 80; ++i) {
    int height = 1 + (i % 3);
    int r = 1 + (i % 2);
    CrossTree t = random_leftfull_tree(rng, height, r);
    REQUIRE(leftfull_at(t, Word(3), RightTuple::empty_tuple(r)));
    for (int n = 0; n <= height; ++n) {
      auto [rho, sigma] = leftfull_extend(t, Word(3), RightTuple::empty_tuple(r), n);
      CHECK(sigma.length() == static_cast<std::size_t>(n));
      CHECK(leftfull(t, rho, sigma));
    }
  }
}

TEST_CASE("left-fullness is monotone: extend left stem, shrink right stem") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    CrossTree t = random_leftfull_tree(rng, 2, 1);
    for (const Node& n : t.nodes()) {
      if (!leftfull_at(t, n.left, n.right)) continue;
      for (const Node& m : t.nodes()) {
        if (!is_prefix(n.left, m.left)) continue;
        if (!is_prefix(m.right, n.right)) continue;
        if (!t.contains(m.left, m.right)) continue;
        CHECK(leftfull_at(t, m.left, m.right));
      }
    }
  }
}

TEST_CASE("left-fullness survives truncation") {
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    int height = 2 + (i % 2);
    CrossTree t = random_leftfull_tree(rng, height, 1);
    if (!leftfull_at(t, Word(3), RightTuple::empty_tuple(1))) continue;
    for (int m = 0; m <= height; ++m) {
      CrossTree cut = truncate(t, m);
      CHECK(leftfull_at(cut, Word(3), RightTuple::empty_tuple(1)));
    }
  }
}

TEST_CASE("the empty forbidden set yields left-full trees") {
  for (int n = 0; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r) {
      if (n == 3 && r == 2) continue;  // large; covered by the acceptance sweep
      CrossTree t = from_forbidden(ForbiddenSet{}, n, r);
      CHECK(leftfull(t, Word(3), RightTuple::empty_tuple(r)));
    }
}

TEST_SUITE_END();
