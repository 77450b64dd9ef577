#pragma once

#include "tg/game.hpp"
#include "tg/transform.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace tg {

using Json = nlohmann::ordered_json;

// GameFile document:
//   {"version":1,
//    "nodes":[{"id":"A","threshold":"-1"}, ...],
//    "edges":[{"src":"A","dst":"B","weight":"1/2"}, ...],
//    "metadata":{}}
// Thresholds and weights are exact-number strings ("p/q" or decimal).
ThresholdGame game_from_json(const Json& doc);
ThresholdGame load_game(const std::string& path);

// Canonical form: fixed key order, nodes in agent order, edges sorted by
// (src, dst) index, rationals in lowest terms. save(load(f)) is
// byte-identical modulo key ordering.
Json game_to_json(const ThresholdGame& game, Json metadata = Json::object());
void save_game(const ThresholdGame& game, const std::string& path);

// {"a":{"A":"1/4",...},"c":{...},"phi":{...}}
LinearQuadraticParams lq_from_json(const Json& doc, const Network& net);
LinearQuadraticParams load_lq(const std::string& path, const Network& net);

// {"A":1,"B":0,...}
ActionProfile profile_from_json(const Json& doc, const Network& net);

Json profile_to_json(const Network& net, const ActionProfile& x);
Json active_set_json(const Network& net, const ActionProfile& x);

Json adjusted_to_json(const AdjustedNetwork& adjusted);

// Graphviz text; agents in `highlight` get a yellow fill.
std::string to_dot(const Network& net, const std::vector<int>& highlight,
                   const std::string& graph_name = "game");

}  // namespace tg
