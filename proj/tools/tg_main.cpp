#include "tg/analysis.hpp"
#include "tg/core.hpp"
#include "tg/equilibrium.hpp"
#include "tg/error.hpp"
#include "tg/io.hpp"
#include "tg/transform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using tg::Json;

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json peel_json(const tg::Network& net, const std::vector<tg::PeelValue>& peel,
               int skip = -1) {
    Json obj = Json::object();
    for (int i = 0; i < static_cast<int>(peel.size()); ++i) {
        if (i == skip) continue;
        obj[net.label(i)] = peel[i].unbounded ? "inf" : tg::rat_to_string(peel[i].value);
    }
    return obj;
}

Json core_json(const tg::Network& net, const tg::CoreResult& core) {
    Json doc;
    Json members = Json::array();
    for (int m : core.members) members.push_back(net.label(m));
    doc["members"] = members;
    Json trace = Json::array();
    for (const auto& round : core.trace) {
        Json r = Json::array();
        for (int m : round) r.push_back(net.label(m));
        trace.push_back(r);
    }
    doc["trace"] = trace;
    Json sub;
    sub["nodes"] = Json::array();
    for (const auto& l : core.subnetwork.labels()) sub["nodes"].push_back(l);
    sub["edges"] = Json::array();
    for (int i = 0; i < core.subnetwork.size(); ++i)
        for (const auto& [j, w] : core.subnetwork.out_edges(i))
            sub["edges"].push_back({{"src", core.subnetwork.label(i)},
                                    {"dst", core.subnetwork.label(j)},
                                    {"weight", tg::rat_to_string(w)}});
    doc["subnetwork"] = sub;
    return doc;
}

Json rat_map_json(const tg::Network& net, const std::vector<tg::Rat>& values) {
    Json obj = Json::object();
    for (int i = 0; i < net.size(); ++i) obj[net.label(i)] = tg::rat_to_string(values[i]);
    return obj;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threshold games on weighted directed networks: equilibria, cores, centralities"};
    app.require_subcommand(1);

    std::string game_path;
    std::string eta_str = "1";
    std::string k_str = "1";
    std::string on = "G";
    std::string from = "zeros";
    int ties = 0;
    bool trace_flag = false;
    std::string method = "core";
    int max_n = 0;
    std::string metric = "cascade";
    std::string lq_path;
    std::string phi_str, a_str;
    std::string q_str;
    std::string edge_spec, threshold_spec;
    std::string highlight = "";
    bool require_strong = false;

    auto add_game = [&](CLI::App* cmd) {
        cmd->add_option("--game", game_path, "game file (JSON)")->required();
    };

    auto* validate = app.add_subcommand("validate", "structural checks and connectivity report");
    add_game(validate);
    validate->add_flag("--require-strongly-connected", require_strong,
                       "fail when the network is not strongly connected");

    auto* transform = app.add_subcommand("transform", "emit the adjusted network with shadow agent");
    add_game(transform);
    transform->add_option("--eta", eta_str, "shadow out-edge weight (rational, >= 1)");

    auto* kcore = app.add_subcommand("kcore", "k-core peeling with deletion trace");
    add_game(kcore);
    kcore->add_option("--k", k_str, "core threshold (rational)")->required();
    kcore->add_option("--on", on, "network to peel: G, H, or Htilde");

    auto* peel = app.add_subcommand("peel", "peeling values");
    add_game(peel);
    peel->add_option("--on", on, "network to peel: G or H");

    auto* maxeq = app.add_subcommand("max-eq", "maximal Nash equilibrium");
    add_game(maxeq);
    auto* mineq = app.add_subcommand("min-eq", "minimal Nash equilibrium");
    add_game(mineq);

    auto* dynamics = app.add_subcommand("dynamics", "synchronous best-response dynamics");
    add_game(dynamics);
    dynamics->add_option("--from", from, "zeros, ones, or a profile JSON path");
    dynamics->add_option("--ties", ties, "tie policy: 0 or 1")->check(CLI::Range(0, 1));
    dynamics->add_flag("--trace", trace_flag, "include the full state trace");

    auto* alleq = app.add_subcommand("all-eq", "enumerate all Nash equilibria");
    add_game(alleq);
    alleq->add_option("--method", method, "core or brute");
    alleq->add_option("--max-n", max_n, "override the agent-count cap");

    auto* seeds = app.add_subcommand("seeds", "agents with negative thresholds");
    add_game(seeds);

    auto* keyplayer = app.add_subcommand("key-player", "removal-impact argmax agents");
    add_game(keyplayer);
    keyplayer->add_option("--metric", metric, "cascade or intercentrality");
    keyplayer->add_option("--lq", lq_path, "linear-quadratic params JSON");

    auto* centrality = app.add_subcommand("centrality", "peel, Bonacich, cascade, inter-centrality");
    add_game(centrality);
    centrality->add_option("--phi", phi_str, "uniform phi (rational)");
    centrality->add_option("--a", a_str, "uniform a (rational)");
    centrality->add_option("--lq", lq_path, "linear-quadratic params JSON");

    auto* cohesive = app.add_subcommand("cohesive", "maximal q-cohesive set");
    add_game(cohesive);
    cohesive->add_option("--q", q_str, "cohesion fraction in (0,1)")->required();

    auto* perturb = app.add_subcommand("perturb", "single-change comparative statics");
    add_game(perturb);
    perturb->add_option("--edge", edge_spec, "SRC,DST,DELTA");
    perturb->add_option("--threshold", threshold_spec, "ID,DELTA");

    auto* exportdot = app.add_subcommand("export-dot", "Graphviz text");
    add_game(exportdot);
    exportdot->add_option("--highlight", highlight, "max-eq, min-eq, or core");

    CLI11_PARSE(app, argc, argv);

    try {
        tg::ThresholdGame game = tg::load_game(game_path);

        if (validate->parsed()) {
            bool strong = game.size() > 0 && game.net.is_strongly_connected();
            if (require_strong && !strong)
                throw tg::Error(tg::Errc::InvalidParams, "network is not strongly connected");
            Json doc;
            doc["ok"] = true;
            doc["agents"] = game.size();
            doc["edges"] = game.net.edge_count();
            doc["strongly_connected"] = strong;
            doc["warnings"] = Json::array();
            if (!strong) doc["warnings"].push_back("network is not strongly connected");
            emit(doc);
        } else if (transform->parsed()) {
            emit(tg::adjusted_to_json(tg::adjust(game, tg::parse_rational(eta_str))));
        } else if (kcore->parsed()) {
            tg::Rat k = tg::parse_rational(k_str);
            Json doc;
            doc["k"] = tg::rat_to_string(k);
            doc["on"] = on;
            if (on == "G") {
                auto core = tg::k_core(game.net, k);
                doc.update(core_json(game.net, core));
            } else if (on == "H" || on == "Htilde") {
                tg::AdjustedNetwork h =
                    tg::adjust(on == "H" ? game : tg::complementary_game(game));
                auto core = tg::k_core(h.net, k, {h.shadow});
                doc.update(core_json(h.net, core));
            } else {
                throw tg::Error(tg::Errc::InvalidParams, "--on must be G, H, or Htilde");
            }
            emit(doc);
        } else if (peel->parsed()) {
            Json doc;
            doc["on"] = on;
            if (on == "G") {
                doc["peel"] = peel_json(game.net, tg::peeling_values(game.net));
            } else if (on == "H") {
                tg::AdjustedNetwork h = tg::adjust(game);
                doc["peel"] = peel_json(h.net, tg::peeling_values(h.net, {h.shadow}), h.shadow);
            } else {
                throw tg::Error(tg::Errc::InvalidParams, "--on must be G or H");
            }
            emit(doc);
        } else if (maxeq->parsed() || mineq->parsed()) {
            auto x = maxeq->parsed() ? tg::maximal_equilibrium(game)
                                     : tg::minimal_equilibrium(game);
            Json doc;
            doc["active"] = tg::active_set_json(game.net, x);
            doc["profile"] = tg::profile_to_json(game.net, x);
            emit(doc);
        } else if (dynamics->parsed()) {
            tg::ActionProfile initial;
            if (from == "zeros")
                initial.assign(game.size(), 0);
            else if (from == "ones")
                initial.assign(game.size(), 1);
            else {
                std::ifstream in(from);
                if (!in) throw tg::Error(tg::Errc::ParseError, "cannot open profile '" + from + "'");
                Json doc;
                try {
                    doc = Json::parse(in);
                } catch (const nlohmann::json::parse_error& e) {
                    throw tg::Error(tg::Errc::ParseError, std::string("in '") + from + "': " + e.what());
                }
                initial = tg::profile_from_json(doc, game.net);
            }
            auto result = tg::br_dynamics(game, initial,
                                          ties ? tg::TiePolicy::TiesTo1 : tg::TiePolicy::TiesTo0);
            Json doc;
            doc["fixed_point"] = tg::profile_to_json(game.net, result.fixed_point());
            doc["active"] = tg::active_set_json(game.net, result.fixed_point());
            doc["converged_at"] = result.converged_at;
            if (trace_flag) {
                Json tr = Json::array();
                for (const auto& s : result.states) tr.push_back(tg::profile_to_json(game.net, s));
                doc["trace"] = tr;
            }
            emit(doc);
        } else if (alleq->parsed()) {
            tg::EquilibriumSet eqs;
            if (method == "core")
                eqs = tg::all_equilibria_core(game, max_n > 0 ? max_n : 25);
            else if (method == "brute")
                eqs = tg::all_equilibria_brute(game, max_n > 0 ? max_n : 20);
            else
                throw tg::Error(tg::Errc::InvalidParams, "--method must be core or brute");
            Json doc;
            doc["method"] = method;
            doc["count"] = eqs.profiles.size();
            doc["equilibria"] = Json::array();
            for (const auto& x : eqs.profiles)
                doc["equilibria"].push_back({{"active", tg::active_set_json(game.net, x)}});
            emit(doc);
        } else if (seeds->parsed()) {
            Json doc;
            doc["seeds"] = Json::array();
            for (int i : tg::endogenous_seeds(game)) doc["seeds"].push_back(game.net.label(i));
            emit(doc);
        } else if (keyplayer->parsed()) {
            std::optional<tg::LinearQuadraticParams> lq;
            if (!lq_path.empty()) lq = tg::load_lq(lq_path, game.net);
            tg::KeyPlayerMetric m;
            if (metric == "cascade")
                m = tg::KeyPlayerMetric::Cascade;
            else if (metric == "intercentrality")
                m = tg::KeyPlayerMetric::Intercentrality;
            else
                throw tg::Error(tg::Errc::InvalidParams, "--metric must be cascade or intercentrality");
            auto players = tg::key_players(game, m, lq);
            Json doc;
            doc["metric"] = metric;
            doc["key_players"] = Json::array();
            for (int i : players) doc["key_players"].push_back(game.net.label(i));
            if (m == tg::KeyPlayerMetric::Cascade) {
                Json scores = Json::object();
                for (int i = 0; i < game.size(); ++i)
                    scores[game.net.label(i)] = tg::cascade_number(game, i);
                doc["scores"] = scores;
            } else {
                doc["scores"] = rat_map_json(game.net,
                                             tg::intercentrality(game.net, lq->phi, lq->a));
            }
            emit(doc);
        } else if (centrality->parsed()) {
            tg::LinearQuadraticParams lq;
            if (!lq_path.empty()) {
                lq = tg::load_lq(lq_path, game.net);
            } else if (!phi_str.empty() && !a_str.empty()) {
                // uniform phi/a with c = 1
                lq.phi.assign(game.size(), tg::parse_rational(phi_str));
                lq.a.assign(game.size(), tg::parse_rational(a_str));
                lq.c.assign(game.size(), tg::Rat(1));
            } else {
                throw tg::Error(tg::Errc::InvalidParams,
                                "centrality needs --lq or both --phi and --a");
            }
            auto report = tg::centrality_report(game, lq);
            Json doc;
            doc["peel"] = peel_json(game.net, report.peel);
            doc["bonacich"] = rat_map_json(game.net, report.bonacich);
            Json cascades = Json::object();
            for (int i = 0; i < game.size(); ++i)
                cascades[game.net.label(i)] = report.cascade_number[i];
            doc["cascade_number"] = cascades;
            doc["intercentrality"] = rat_map_json(game.net, report.intercentrality);
            emit(doc);
        } else if (cohesive->parsed()) {
            tg::Rat q = tg::parse_rational(q_str);
            auto members = tg::max_q_cohesive(game.net, q);
            Json doc;
            doc["q"] = tg::rat_to_string(q);
            doc["members"] = Json::array();
            for (int i : members) doc["members"].push_back(game.net.label(i));
            emit(doc);
        } else if (perturb->parsed()) {
            tg::PerturbationChange change;
            auto split = [](const std::string& s) {
                std::vector<std::string> parts;
                std::string cur;
                for (char c : s) {
                    if (c == ',') {
                        parts.push_back(cur);
                        cur.clear();
                    } else {
                        cur.push_back(c);
                    }
                }
                parts.push_back(cur);
                return parts;
            };
            if (!edge_spec.empty()) {
                auto parts = split(edge_spec);
                if (parts.size() != 3)
                    throw tg::Error(tg::Errc::InvalidParams, "--edge wants SRC,DST,DELTA");
                change.kind = tg::PerturbationChange::Kind::Edge;
                change.src = game.net.require_index(parts[0]);
                change.dst = game.net.require_index(parts[1]);
                change.delta = tg::parse_rational(parts[2]);
            } else if (!threshold_spec.empty()) {
                auto parts = split(threshold_spec);
                if (parts.size() != 2)
                    throw tg::Error(tg::Errc::InvalidParams, "--threshold wants ID,DELTA");
                change.kind = tg::PerturbationChange::Kind::Threshold;
                change.src = game.net.require_index(parts[0]);
                change.delta = tg::parse_rational(parts[1]);
            } else {
                throw tg::Error(tg::Errc::InvalidParams, "perturb needs --edge or --threshold");
            }
            auto result = tg::perturb(game, change);
            Json doc;
            Json ch;
            ch["kind"] = change.kind == tg::PerturbationChange::Kind::Edge ? "edge" : "threshold";
            if (change.kind == tg::PerturbationChange::Kind::Edge) {
                ch["src"] = game.net.label(change.src);
                ch["dst"] = game.net.label(change.dst);
            } else {
                ch["agent"] = game.net.label(change.src);
            }
            ch["delta"] = tg::rat_to_string(change.delta);
            doc["change"] = ch;
            doc["max_before"] = tg::active_set_json(game.net, result.max_before);
            doc["max_after"] = tg::active_set_json(game.net, result.max_after);
            doc["min_before"] = tg::active_set_json(game.net, result.min_before);
            doc["min_after"] = tg::active_set_json(game.net, result.min_after);
            doc["affected"] = Json::array();
            for (int i : result.affected) doc["affected"].push_back(game.net.label(i));
            emit(doc);
        } else if (exportdot->parsed()) {
            std::vector<int> hl;
            if (highlight == "max-eq" || highlight == "core") {
                auto x = tg::maximal_equilibrium(game);
                for (int i = 0; i < game.size(); ++i)
                    if (x[i]) hl.push_back(i);
            } else if (highlight == "min-eq") {
                auto x = tg::minimal_equilibrium(game);
                for (int i = 0; i < game.size(); ++i)
                    if (x[i]) hl.push_back(i);
            } else if (!highlight.empty()) {
                throw tg::Error(tg::Errc::InvalidParams, "--highlight must be max-eq, min-eq, or core");
            }
            std::cout << tg::to_dot(game.net, hl);
        }
    } catch (const tg::Error& e) {
        Json err;
        err["error"] = {{"code", tg::errc_name(e.code())},
                        {"message", e.what()},
                        {"context", game_path}};
        emit(err);
        return tg::is_input_error(e.code()) ? 2 : 3;
    }
    return 0;
}
