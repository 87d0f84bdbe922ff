#include "ccwb/json_io.hpp"

#include <algorithm>

namespace ccwb {

Json to_json(const Word& w) { return w.str(); }

Json to_json(const RightTuple& t) {
  Json arr = Json::array();
  for (const Word& w : t.words()) arr.push_back(w.str());
  return arr;
}

Json to_json(const Node& n) {
  return Json{{"left", to_json(n.left)}, {"right", to_json(n.right)}};
}

Json to_json(const CrossTree& t) {
  Json nodes = Json::array();
  for (const Node& n : t.nodes()) nodes.push_back(to_json(n));
  return Json{{"r", t.arity()}, {"height", t.height()}, {"nodes", nodes}};
}

Json to_json(const ForbiddenSet& w) {
  Json arr = Json::array();
  for (const Node& n : w.entries) arr.push_back(to_json(n));
  return Json{{"entries", arr}};
}

Json to_json(const IncompatMap& m) {
  Json table = Json::object();
  std::size_t rank = 0;
  for (const Word& src : enumerate_extensions(Word(3), m.source_length()))
    table[src.str()] = m.table()[rank++].str();
  return Json{{"n", m.source_length()}, {"m", m.target_length()}, {"table", table}};
}

Json to_json(const CondPair& cp) {
  return Json{{"stems", Json::array({to_json(cp.stem0), to_json(cp.stem1)})}};
}

Json to_json(const Solution& s) {
  Json agreement = Json::array();
  for (const auto& positions : s.agreement) agreement.push_back(positions);
  Json trace = Json::array();
  for (const TraceEntry& e : s.trace) {
    Json entry = to_json(e.cp);
    entry["restart"] = e.restart;
    if (e.restart) entry["excluded_component"] = e.excluded_component;
    trace.push_back(entry);
  }
  return Json{{"pair", Json::array({to_json(s.sol0), to_json(s.sol1)})},
              {"agreement", agreement},
              {"excluded", std::vector<int>(s.excluded.begin(), s.excluded.end())},
              {"trace", trace},
              {"baseline", s.baseline}};
}

Json to_json(const Gamma0& g) {
  std::vector<int> supp, vals;
  for (const auto& [p, v] : g.entries) {
    supp.push_back(p);
    vals.push_back(v);
  }
  return Json{{"support", supp}, {"values", vals}};
}

Json to_json(const GammaElem& g) {
  if (g.level == 0) {
    Json j = to_json(g.base);
    j["m"] = 0;
    return j;
  }
  Json steps = Json::array();
  for (const GammaStep& st : g.steps) {
    Json tree = Json::array();
    for (const auto& n : st.tree.nodes) tree.push_back(n);
    Json labels = Json::array();
    for (const auto& [node, lab] : st.labels)
      labels.push_back(Json{{"node", node}, {"label", to_json(lab)}});
    steps.push_back(Json{{"tree", tree}, {"labels", labels}});
  }
  return Json{{"m", g.level}, {"steps", steps}};
}

Json to_json(const ApproxTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const GammaElem& g : row) r.push_back(to_json(g));
    rows.push_back(r);
  }
  return Json{{"m", t.level}, {"rows", rows}};
}

Json to_json(const StepStream& s) {
  Json rows = Json::array();
  for (const auto& row : s.rows) {
    Json r = Json::array();
    for (const auto& cell : row) {
      if (!cell.value.has_value()) {
        r.push_back(nullptr);
      } else {
        r.push_back(Json{{"value", to_json(*cell.value)}, {"at", cell.available_at}});
      }
    }
    rows.push_back(r);
  }
  return Json{{"m", s.level}, {"rows", rows}};
}

Json to_json(const DisjointArray& a) {
  Json rows = Json::array();
  for (const auto& fs : a.rows) rows.push_back(Json::array({fs[0], fs[1], fs[2]}));
  return rows;
}

Json to_json(const DiagResult& d) {
  Json entries = Json::array();
  for (const DiagEntry& e : d.entries)
    entries.push_back(Json{{"table", e.table_index}, {"row", e.row}, {"tau", to_json(e.tau)}});
  return Json{{"prefix", d.prefix.str()}, {"entries", entries}};
}

Word word_from_json(const Json& j, int alphabet) {
  return Word::parse(j.get<std::string>(), alphabet);
}

RightTuple tuple_from_json(const Json& j, int alphabet) {
  std::vector<Word> ws;
  for (const auto& w : j) ws.push_back(Word::parse(w.get<std::string>(), alphabet));
  return RightTuple(std::move(ws));
}

Node node_from_json(const Json& j) {
  return Node{word_from_json(j.at("left")), tuple_from_json(j.at("right"))};
}

CrossTree crosstree_from_json(const Json& j) {
  std::vector<Node> nodes;
  for (const auto& n : j.at("nodes")) nodes.push_back(node_from_json(n));
  return CrossTree(j.at("r").get<int>(), j.at("height").get<int>(), nodes);
}

ForbiddenSet forbidden_from_json(const Json& j) {
  ForbiddenSet w;
  const Json& entries = j.is_array() ? j : j.at("entries");
  for (const auto& n : entries) w.entries.push_back(node_from_json(n));
  return w;
}

IncompatMap incmap_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  const Json& table = j.at("table");
  std::vector<Word> entries;
  for (const Word& src : enumerate_extensions(Word(3), n))
    entries.push_back(Word::parse(table.at(src.str()).get<std::string>(), 3));
  (void)m;
  return IncompatMap(n, m, std::move(entries));
}

CondPair condpair_from_json(const Json& j) {
  const Json& stems = j.at("stems");
  return CondPair{node_from_json(stems.at(0)), node_from_json(stems.at(1))};
}

Gamma0 gamma0_from_json(const Json& j) {
  std::vector<int> supp = j.at("support").get<std::vector<int>>();
  std::vector<int> vals = j.at("values").get<std::vector<int>>();
  if (supp.size() != vals.size())
    throw std::invalid_argument("gamma0_from_json: support/values length mismatch");
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < supp.size(); ++i) es.emplace_back(supp[i], vals[i]);
  return Gamma0(std::move(es));
}

GammaElem gamma_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  if (m == 0) return GammaElem::from_base(gamma0_from_json(j));
  GammaElem g;
  g.level = m;
  for (const auto& stj : j.at("steps")) {
    GammaStep st;
    std::set<std::vector<int>> nodes;
    for (const auto& n : stj.at("tree")) nodes.insert(n.get<std::vector<int>>());
    st.tree = FinTree(std::move(nodes));
    for (const auto& lj : stj.at("labels"))
      st.labels.emplace_back(lj.at("node").get<std::vector<int>>(),
                             gamma_from_json(lj.at("label")));
    std::sort(st.labels.begin(), st.labels.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    g.steps.push_back(std::move(st));
  }
  return g;
}

ApproxTable table_from_json(const Json& j) {
  ApproxTable t;
  t.level = j.at("m").get<int>();
  for (const auto& rj : j.at("rows")) {
    std::vector<GammaElem> row;
    for (const auto& gj : rj) row.push_back(gamma_from_json(gj));
    t.rows.push_back(std::move(row));
  }
  return t;
}

StepStream stream_from_json(const Json& j) {
  StepStream s;
  s.level = j.at("m").get<int>();
  for (const auto& rj : j.at("rows")) {
    std::vector<StepStream::Cell> row;
    for (const auto& cj : rj) {
      StepStream::Cell cell;
      if (!cj.is_null()) {
        cell.value = gamma_from_json(cj.at("value"));
        cell.available_at = cj.at("at").get<int>();
      } else {
        cell.available_at = -1;
      }
      row.push_back(std::move(cell));
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

DisjointArray array_from_json(const Json& j) {
  DisjointArray a;
  for (const auto& rj : j) {
    std::array<std::vector<int>, 3> fs;
    for (int k = 0; k < 3; ++k) fs[k] = rj.at(k).get<std::vector<int>>();
    a.rows.push_back(std::move(fs));
  }
  return a;
}

NodePairSet pairset_from_json(const Json& j) {
  std::vector<std::pair<Node, Node>> pairs;
  const Json& arr = j.is_array() ? j : j.at("pairs");
  for (const auto& pj : arr) {
    if (pj.is_array())
      pairs.emplace_back(node_from_json(pj.at(0)), node_from_json(pj.at(1)));
    else
      pairs.emplace_back(node_from_json(pj.at("a")), node_from_json(pj.at("b")));
  }
  return NodePairSet::extensional(std::move(pairs));
}

std::string canonical(const Json& j) { return j.dump(); }

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace ccwb
