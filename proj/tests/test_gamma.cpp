#include <doctest.h>

#include <algorithm>
#include <map>

#include "ccwb/enumerate.hpp"
#include "ccwb/gamma.hpp"

using namespace ccwb;

namespace {

FinTree tree_of(std::vector<std::vector<int>> ns) {
  std::set<std::vector<int>> s(ns.begin(), ns.end());
  return FinTree(std::move(s));
}

GammaElem g0(std::vector<std::pair<int, int>> es) {
  return GammaElem::from_base(Gamma0(std::move(es)));
}

// one-level path: grow the root with the given labeled children
GammaElem path1(const std::vector<GammaElem>& child_labels) {
  GammaElem g = GammaElem::zeta(1);
  GammaStep step;
  step.tree = FinTree();
  std::set<std::vector<int>> nodes = {{}};
  step.labels.emplace_back(std::vector<int>{}, GammaElem::zeta(0));
  for (int c = 0; c < static_cast<int>(child_labels.size()); ++c) {
    nodes.insert({c});
    step.labels.emplace_back(std::vector<int>{c}, child_labels[c]);
  }
  step.tree = FinTree(nodes);
  std::sort(step.labels.begin(), step.labels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  g.steps.push_back(step);
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("gamma");

TEST_CASE("one-step variation examples") {
  CHECK(is_one_step_variation(tree_of({{}}), tree_of({{}, {0}, {1}})));
  CHECK(is_one_step_variation(tree_of({{}, {0}, {1}}), tree_of({{}, {0}})));
  CHECK_FALSE(is_one_step_variation(tree_of({{}, {0}, {1}}), tree_of({{}, {0}, {1}})));
  // backtrack must keep a proper subset: removing nothing is not a move
  CHECK_FALSE(is_one_step_variation(tree_of({{}, {0}}), tree_of({{}, {0}})));
  // removing the only child is not allowed either
  CHECK_FALSE(is_one_step_variation(tree_of({{}, {0}}), tree_of({{}})));
  // growing an inner node is not allowed
  CHECK_FALSE(is_one_step_variation(tree_of({{}, {0}}), tree_of({{}, {0}, {1}})));
  // but cutting grandchildren while keeping one child is
  CHECK(is_one_step_variation(tree_of({{}, {0}, {1}, {0, 0}}), tree_of({{}, {0}})));
}

TEST_CASE("zeta and validation") {
  for (int m = 0; m <= 3; ++m) CHECK(validate_path(GammaElem::zeta(m)).ok());

  GammaElem good = path1({g0({{1, 2}})});
  CHECK(validate_path(good).ok());

  // relabeling a surviving node is rejected
  GammaElem bad = good;
  GammaStep step = bad.steps.back();
  step.tree.nodes.insert({1});
  step.labels.emplace_back(std::vector<int>{1}, g0({{2, 0}}));
  std::sort(step.labels.begin(), step.labels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  step.labels[1].second = g0({{3, 1}});  // clobber the surviving child 0
  bad.steps.push_back(step);
  auto rep = validate_path(bad);
  CHECK_FALSE(rep.ok());

  // a backtrack keeping the full child set is not a one-step variation
  GammaElem two = path1({g0({{1, 0}}), g0({{2, 1}})});
  GammaElem not_proper = two;
  not_proper.steps.push_back(two.steps.back());
  auto rep2 = validate_path(not_proper);
  CHECK_FALSE(rep2.ok());
  CHECK(rep2.violations.front().find("one-step") != std::string::npos);

  // labels must strictly extend along edges
  GammaElem flat = path1({GammaElem::zeta(0)});
  CHECK_FALSE(validate_path(flat).ok());
}

TEST_CASE("leq is the prefix order on paths") {
  GammaElem z1 = GammaElem::zeta(1);
  GammaElem grown = path1({g0({{1, 1}})});
  CHECK(leq(z1, grown));
  CHECK(leq(grown, grown));
  CHECK_FALSE(leq(grown, z1));
  GammaElem other = path1({g0({{2, 1}})});
  CHECK_FALSE(leq(grown, other));
  CHECK_FALSE(leq(other, grown));
  CHECK_THROWS_AS(leq(z1, GammaElem::zeta(2)), std::invalid_argument);
  // at level 0 the root sits below everything
  CHECK(leq(GammaElem::zeta(0), g0({{0, 1}})));
  CHECK_FALSE(leq(g0({{0, 1}}), g0({{0, 2}})));
}

TEST_CASE("interpret") {
  for (int m = 0; m <= 3; ++m) {
    auto interp = interpret(GammaElem::zeta(m));
    REQUIRE(interp.size() == 1);
    CHECK(interp[0].empty());
  }

  GammaElem two = path1({g0({{1, 0}}), g0({{2, 1}})});
  auto interp = interpret(two);
  REQUIRE(interp.size() == 2);
  CHECK(interp[0] == Gamma0({{1, 0}}));
  CHECK(interp[1] == Gamma0({{2, 1}}));

  // after a backtrack to child 0 the leaf set shrinks
  GammaElem cut = two;
  GammaStep step;
  step.tree = tree_of({{}, {0}});
  step.labels.emplace_back(std::vector<int>{}, GammaElem::zeta(0));
  step.labels.emplace_back(std::vector<int>{0}, g0({{1, 0}}));
  cut.steps.push_back(step);
  REQUIRE(validate_path(cut).ok());
  auto interp2 = interpret(cut);
  REQUIRE(interp2.size() == 1);
  CHECK(interp2[0] == Gamma0({{1, 0}}));
}

TEST_CASE("over") {
  CHECK(over(GammaElem::zeta(2), 5));
  GammaElem g = path1({g0({{1, 2}})});
  CHECK(over(g, 0));
  CHECK_FALSE(over(g, 1));
}

TEST_CASE("compatible") {
  Word any = Word::parse("012", 3);
  CHECK(compatible(any, {Gamma0()}));
  CHECK(compatible(Word::parse("02", 3), {Gamma0({{1, 2}})}));
  CHECK_FALSE(compatible(Word::parse("00", 3), {Gamma0({{1, 2}})}));
  CHECK_FALSE(compatible(Word::parse("0", 3), {Gamma0({{1, 0}})}));  // out of domain
}

TEST_CASE("fragment enumeration at level 1 is finite and valid") {
  bool complete = false;
  auto frag = enumerate_fragment(1, 2, 0, 100000, &complete);
  CHECK(complete);
  // root; grows with F={0},{1},{0,1} over 3 nonempty labels; backtracks
  // from the two-child states
  CHECK(frag.size() == 1 + 3 + 3 + 9 + 9 * 2);
  for (const auto& g : frag) {
    CHECK(validate_path(g).ok());
    CHECK_FALSE(interpret(g).empty());
    CHECK(leq(GammaElem::zeta(1), g));
  }
}

TEST_CASE("longest chain examples") {
  CHECK(longest_chain(0, 1, 0).length == 2);
  CHECK(longest_chain(1, 0, 0).length == 1);  // no nonempty F exists
  CHECK(longest_chain(1, 1, 0).length == 2);  // grow once, then stuck
  CHECK(longest_chain(1, 2, 0).length == 3);  // grow two children, backtrack
}

TEST_CASE("longest chain matches exhaustive enumeration") {
  for (int m = 1; m <= 2; ++m) {
    for (int B = 0; B <= 2; ++B) {
      for (int S = 0; S <= 1; ++S) {
        if (m == 2 && B == 2) continue;  // covered by the acceptance sweep
        bool complete = false;
        auto frag = enumerate_fragment(m, B, S, 2000000, &complete);
        REQUIRE(complete);
        std::size_t max_steps = 0;
        for (const auto& g : frag) max_steps = std::max(max_steps, g.steps.size());
        ChainResult res = longest_chain(m, B, S);
        CHECK(res.length == max_steps);
      }
    }
  }
}

TEST_CASE("longest chain witness is a valid ascending chain") {
  ChainResult res = longest_chain(2, 2, 2);
  REQUIRE(res.length == res.witness.size());
  for (std::size_t i = 0; i < res.witness.size(); ++i) {
    CHECK(validate_path(res.witness[i]).ok());
    if (i > 0) {
      CHECK(leq(res.witness[i - 1], res.witness[i]));
      CHECK_FALSE(res.witness[i - 1] == res.witness[i]);
    }
  }
}

TEST_CASE("chains in enumerated fragments respect the bound") {
  ChainResult bound = longest_chain(1, 2, 1);
  bool complete = false;
  auto frag = enumerate_fragment(1, 2, 1, 2000000, &complete);
  REQUIRE(complete);
  for (const auto& g : frag) CHECK(g.steps.size() <= bound.length);
}

TEST_CASE("replaying a path's steps matches the variation relation") {
  Rng rng(881);
  for (int i = 0; i < 30; ++i) {
    auto chain = random_chain_over(rng, 2, 1, 3);
    const GammaElem& g = chain.back();
    REQUIRE(validate_path(g).ok());
    for (std::size_t j = 1; j < g.steps.size(); ++j)
      CHECK(is_one_step_variation(g.steps[j - 1].tree, g.steps[j].tree));
  }
}

TEST_CASE("leq is a partial order on enumerated fragments") {
  auto frag = enumerate_fragment(1, 1, 1, 100000);
  for (const auto& a : frag) {
    CHECK(leq(a, a));
    for (const auto& b : frag) {
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      for (const auto& c : frag)
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    }
  }
}

TEST_SUITE_END();
