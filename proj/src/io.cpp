#include "tg/io.hpp"

#include "tg/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tg {

namespace {

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, std::string("in '") + path + "': " + e.what());
    }
    return doc;
}

std::string require_string(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw Error(Errc::ParseError, where + ": missing string field '" + key + "'");
    return obj[key].get<std::string>();
}

}  // namespace

ThresholdGame game_from_json(const Json& doc) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "game file: top level must be an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw Error(Errc::ParseError, "game file: missing 'nodes' array");

    std::vector<std::string> labels;
    std::vector<Rat> thresholds;
    for (size_t idx = 0; idx < doc["nodes"].size(); ++idx) {
        const Json& node = doc["nodes"][idx];
        std::string where = "node #" + std::to_string(idx);
        std::string id = require_string(node, "id", where);
        if (id == kShadowLabel)
            throw Error(Errc::NameClash, where + ": label '" + id + "' is reserved");
        labels.push_back(id);
        thresholds.push_back(parse_rational(require_string(node, "threshold", where)));
    }

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw Error(Errc::ParseError, "game file: 'edges' must be an array");
        // build label->index up front to diagnose dangling references by name
        std::unordered_map<std::string, int> index;
        for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
            if (!index.emplace(labels[i], i).second)
                throw Error(Errc::ParseError, "duplicate node id '" + labels[i] + "'");
        }
        for (size_t idx = 0; idx < doc["edges"].size(); ++idx) {
            const Json& edge = doc["edges"][idx];
            std::string where = "edge #" + std::to_string(idx);
            std::string src = require_string(edge, "src", where);
            std::string dst = require_string(edge, "dst", where);
            auto si = index.find(src), di = index.find(dst);
            if (si == index.end())
                throw Error(Errc::ParseError, where + ": src '" + src + "' is not a declared node");
            if (di == index.end())
                throw Error(Errc::ParseError, where + ": dst '" + dst + "' is not a declared node");
            Rat w = parse_rational(require_string(edge, "weight", where));
            if (w <= 0) throw Error(Errc::ParseError, where + ": weight must be positive");
            edges.push_back({si->second, di->second, w});
        }
    }
    return make_game(Network(std::move(labels), edges), std::move(thresholds));
}

ThresholdGame load_game(const std::string& path) {
    return game_from_json(parse_file(path));
}

Json game_to_json(const ThresholdGame& game, Json metadata) {
    Json doc;
    doc["version"] = 1;
    doc["nodes"] = Json::array();
    for (int i = 0; i < game.size(); ++i)
        doc["nodes"].push_back({{"id", game.net.label(i)},
                                {"threshold", rat_to_string(game.thresholds[i])}});
    doc["edges"] = Json::array();
    for (int i = 0; i < game.size(); ++i)
        for (const auto& [j, w] : game.net.out_edges(i))
            doc["edges"].push_back({{"src", game.net.label(i)},
                                    {"dst", game.net.label(j)},
                                    {"weight", rat_to_string(w)}});
    doc["metadata"] = std::move(metadata);
    return doc;
}

void save_game(const ThresholdGame& game, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write file '" + path + "'");
    out << game_to_json(game).dump(2) << "\n";
}

LinearQuadraticParams lq_from_json(const Json& doc, const Network& net) {
    LinearQuadraticParams params;
    params.a.resize(net.size());
    params.c.resize(net.size());
    params.phi.resize(net.size());
    for (const char* key : {"a", "c", "phi"}) {
        if (!doc.contains(key) || !doc[key].is_object())
            throw Error(Errc::ParseError, std::string("lq params: missing object '") + key + "'");
        auto& target = key[0] == 'a' ? params.a : key[0] == 'c' ? params.c : params.phi;
        std::vector<char> seen(net.size(), 0);
        for (const auto& [id, value] : doc[key].items()) {
            int i = net.require_index(id);
            if (!value.is_string())
                throw Error(Errc::ParseError, std::string("lq params: ") + key + "." + id + " must be a string");
            target[i] = parse_rational(value.get<std::string>());
            seen[i] = 1;
        }
        for (int i = 0; i < net.size(); ++i)
            if (!seen[i])
                throw Error(Errc::ParseError,
                            std::string("lq params: '") + key + "' missing agent '" + net.label(i) + "'");
    }
    params.validate(net.size());
    return params;
}

LinearQuadraticParams load_lq(const std::string& path, const Network& net) {
    return lq_from_json(parse_file(path), net);
}

ActionProfile profile_from_json(const Json& doc, const Network& net) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "profile: top level must be an object");
    ActionProfile x(net.size(), 0);
    std::vector<char> seen(net.size(), 0);
    for (const auto& [id, value] : doc.items()) {
        int i = net.require_index(id);
        if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1))
            throw Error(Errc::ParseError, "profile: '" + id + "' must be 0 or 1");
        x[i] = static_cast<std::uint8_t>(value.get<int>());
        seen[i] = 1;
    }
    for (int i = 0; i < net.size(); ++i)
        if (!seen[i])
            throw Error(Errc::ParseError, "profile: missing agent '" + net.label(i) + "'");
    return x;
}

Json profile_to_json(const Network& net, const ActionProfile& x) {
    Json obj = Json::object();
    for (int i = 0; i < net.size(); ++i) obj[net.label(i)] = static_cast<int>(x[i]);
    return obj;
}

Json active_set_json(const Network& net, const ActionProfile& x) {
    Json arr = Json::array();
    for (int i = 0; i < net.size(); ++i)
        if (x[i]) arr.push_back(net.label(i));
    return arr;
}

Json adjusted_to_json(const AdjustedNetwork& adjusted) {
    Json doc;
    doc["version"] = 1;
    doc["eta"] = rat_to_string(adjusted.eta);
    doc["shadow"] = adjusted.net.label(adjusted.shadow);
    doc["nodes"] = Json::array();
    for (int i = 0; i < adjusted.net.size(); ++i)
        doc["nodes"].push_back({{"id", adjusted.net.label(i)},
                                {"threshold", i == adjusted.shadow ? "0" : "1"}});
    doc["edges"] = Json::array();
    for (int i = 0; i < adjusted.net.size(); ++i)
        for (const auto& [j, w] : adjusted.net.out_edges(i))
            doc["edges"].push_back({{"src", adjusted.net.label(i)},
                                    {"dst", adjusted.net.label(j)},
                                    {"weight", rat_to_string(w)}});
    return doc;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const Network& net, const std::vector<int>& highlight,
                   const std::string& graph_name) {
    std::vector<char> hl(net.size(), 0);
    for (int i : highlight) hl.at(i) = 1;
    std::ostringstream out;
    out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
    out << "  node [shape=circle];\n";
    for (int i = 0; i < net.size(); ++i) {
        out << "  \"" << dot_escape(net.label(i)) << "\"";
        if (hl[i]) out << " [style=filled, fillcolor=yellow]";
        out << ";\n";
    }
    for (int i = 0; i < net.size(); ++i)
        for (const auto& [j, w] : net.out_edges(i))
            out << "  \"" << dot_escape(net.label(i)) << "\" -> \"" << dot_escape(net.label(j))
                << "\" [label=\"" << rat_to_string(w) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace tg
