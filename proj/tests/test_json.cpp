#include <doctest.h>

#include "ccwb/enumerate.hpp"
#include "ccwb/json_io.hpp"

using namespace ccwb;

TEST_SUITE_BEGIN("json");

TEST_CASE("crosstree serialization is canonical and round-trips") {
  Rng rng(900);
  for (int i = 0; i < 30; ++i) {
    CrossTree t = random_tree(rng, 2, 1 + (i % 2));
    Json j = to_json(t);
    CrossTree back = crosstree_from_json(j);
    CHECK(back == t);
    CHECK(canonical(to_json(back)) == canonical(j));
  }
  // node order in the document is (length, lex)
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  Json j = to_json(full);
  CHECK(j["nodes"][0]["left"] == "");
  auto& last = j["nodes"][j["nodes"].size() - 1];
  CHECK(last["left"] == "2");
  CHECK(last["right"][0] == "1");
}

TEST_CASE("golden tree document") {
  CrossTree t = CrossTree::closure_of(
      1, 1, {Node{Word::parse("0", 3), RightTuple({Word::parse("1", 2)})}});
  CHECK(canonical(to_json(t)) ==
        R"({"height":1,"nodes":[{"left":"","right":[""]},{"left":"0","right":[""]},{"left":"0","right":["1"]}],"r":1})");
}

TEST_CASE("incompat map round-trip keeps lex source order") {
  IncompatMap phi = ext1(Word::parse("0", 3), Word::parse("02", 3), IncompatMap::identity(1));
  Json j = to_json(phi);
  CHECK(incmap_from_json(j) == phi);
  CHECK(canonical(j) == R"({"m":2,"n":1,"table":{"0":"02","1":"10","2":"21"}})");
}

TEST_CASE("gamma elements round-trip at every level") {
  Rng rng(901);
  for (int level = 0; level <= 2; ++level) {
    for (int i = 0; i < 20; ++i) {
      GammaElem g = random_gamma_over(rng, level, i % 3);
      Json j = to_json(g);
      GammaElem back = gamma_from_json(j);
      CHECK(back == g);
    }
  }
}

TEST_CASE("tables, streams and arrays round-trip") {
  Rng rng(902);
  ApproxTable t = random_table(rng, 1, 4, 3);
  CHECK(canonical(to_json(table_from_json(to_json(t)))) == canonical(to_json(t)));

  StepStream s = random_stream(rng, 0, 3, 3, true);
  StepStream back = stream_from_json(to_json(s));
  CHECK(canonical(to_json(back)) == canonical(to_json(s)));

  DisjointArray arr = random_disjoint_array(rng, 6);
  DisjointArray arr2 = array_from_json(to_json(arr));
  CHECK(canonical(to_json(arr2)) == canonical(to_json(arr)));
}

TEST_CASE("solution document shape") {
  CrossTree full = from_forbidden(ForbiddenSet{}, 1, 1);
  Solution sol = solve(full);
  Json j = to_json(sol);
  CHECK(j.contains("pair"));
  CHECK(j.contains("agreement"));
  CHECK(j.contains("excluded"));
  CHECK(j.contains("trace"));
  CHECK(j["pair"][0]["left"] == "0");
  CHECK(j["agreement"][0] == Json::array({0}));
}

TEST_CASE("digest is stable") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("ccwb") != digest("ccwc"));
}

TEST_SUITE_END();
