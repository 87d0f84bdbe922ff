#pragma once

#include <string>

#include <json.hpp>

#include "ccwb/approx.hpp"
#include "ccwb/ccsolve.hpp"
#include "ccwb/crosstree.hpp"
#include "ccwb/gamma.hpp"
#include "ccwb/incmap.hpp"
#include "ccwb/sufficiency.hpp"

namespace ccwb {

using Json = nlohmann::json;

Json to_json(const Word& w);
Json to_json(const RightTuple& t);
Json to_json(const Node& n);
Json to_json(const CrossTree& t);
Json to_json(const ForbiddenSet& w);
Json to_json(const IncompatMap& m);
Json to_json(const CondPair& cp);
Json to_json(const Solution& s);
Json to_json(const Gamma0& g);
Json to_json(const GammaElem& g);
Json to_json(const ApproxTable& t);
Json to_json(const StepStream& s);
Json to_json(const DisjointArray& a);
Json to_json(const DiagResult& d);

Word word_from_json(const Json& j, int alphabet = 3);
RightTuple tuple_from_json(const Json& j, int alphabet = 2);
Node node_from_json(const Json& j);
CrossTree crosstree_from_json(const Json& j);
ForbiddenSet forbidden_from_json(const Json& j);
IncompatMap incmap_from_json(const Json& j);
CondPair condpair_from_json(const Json& j);
Gamma0 gamma0_from_json(const Json& j);
GammaElem gamma_from_json(const Json& j);
ApproxTable table_from_json(const Json& j);
StepStream stream_from_json(const Json& j);
DisjointArray array_from_json(const Json& j);
NodePairSet pairset_from_json(const Json& j);

// Canonical byte representation: keys sorted, nodes in (length, lex) order.
std::string canonical(const Json& j);

// FNV-1a 64-bit digest as a hex string.
std::string digest(const std::string& bytes);

}  // namespace ccwb
