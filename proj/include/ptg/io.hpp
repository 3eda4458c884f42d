#pragma once

#include "ptg/catalog.hpp"
#include "ptg/recognize.hpp"
#include "ptg/reps.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ptg::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text keeping every non-integer number as its literal text, so
/// that 6.9 becomes exactly 69/10 later. Throws InvalidInput on bad syntax.
Json parse_json(std::string_view text);

Json to_json(const Rat& value);
Rat rat_from_json(const Json& j, const std::string& where);

Json to_json(const Graph& g);
Json to_json(const Digraph& d);
Json to_json(const Structure& s);
/// {"n":..,"edges":[..]} gives a Graph, {"n":..,"arcs":[..]} a Digraph.
Structure structure_from_json(const Json& j, const std::string& where = "structure");
bool looks_like_structure(const Json& j);

Json to_json(const Representation& rep);
/// Accepts missing centers/half tolerances where the kind fixes them.
Representation rep_from_json(const Json& j, const std::string& where = "representation");
bool looks_like_rep(const Json& j);

Json to_json(const Ordering& ord);
Ordering ordering_from_json(const Json& j, const std::string& where);
Json to_json(const Labeling& f);
Labeling labeling_from_json(const Json& j, const std::string& where);

Json to_json(const BinaryMatrix& m);

Json to_json(const ConditionResult& r);
Json to_json(const Certificate& c);
/// Reads the "certificate" object written by to_json(Certificate), or a whole
/// classify output containing one.
Certificate certificate_from_json(const Json& j);

Json to_json(const Instance& in);
Instance instance_from_json(const Json& j);

/// "n m" on the first line, then m lines "i j".
std::string to_edgelist(const Structure& s);
Structure parse_edgelist(std::string_view text, bool directed);

/// Comma or whitespace separated list of integers / exact numbers.
std::vector<int> parse_int_list(std::string_view text, const std::string& what);
std::vector<Rat> parse_rat_list(std::string_view text, const std::string& what);

}  // namespace ptg::io
