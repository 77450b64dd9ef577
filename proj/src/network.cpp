#include "tg/network.hpp"

#include "tg/error.hpp"

#include <algorithm>
#include <map>

namespace tg {

Network::Network(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (int i = 0; i < size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], i);
        if (!inserted)
            throw Error(Errc::NameClash, "duplicate agent label '" + labels_[i] + "'");
    }
    out_.assign(labels_.size(), {});
    std::map<std::pair<int, int>, Rat> acc;
    for (const auto& e : edges) {
        if (e.src < 0 || e.src >= size() || e.dst < 0 || e.dst >= size())
            throw Error(Errc::NotFound, "edge endpoint out of range");
        if (e.src == e.dst)
            throw Error(Errc::InvalidParams, "self-loop on agent '" + labels_[e.src] + "'");
        if (e.weight < 0)
            throw Error(Errc::InvalidParams, "negative weight on edge " + labels_[e.src] + "->" + labels_[e.dst]);
        if (acc.count({e.src, e.dst}))
            throw Error(Errc::InvalidParams, "duplicate edge " + labels_[e.src] + "->" + labels_[e.dst]);
        if (e.weight == 0) continue;
        acc[{e.src, e.dst}] = e.weight;
    }
    for (auto& [key, w] : acc) out_[key.first].emplace_back(key.second, std::move(w));
    degrees_.assign(labels_.size(), Rat(0));
    for (int i = 0; i < size(); ++i)
        for (const auto& [j, w] : out_[i]) degrees_[i] += w;
}

std::optional<int> Network::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Network::require_index(const std::string& label) const {
    auto idx = index_of(label);
    if (!idx) throw Error(Errc::NotFound, "unknown agent '" + label + "'");
    return *idx;
}

void Network::check_agent(int i) const {
    if (i < 0 || i >= size()) throw Error(Errc::NotFound, "agent index out of range");
}

const std::vector<std::pair<int, Rat>>& Network::out_edges(int i) const {
    check_agent(i);
    return out_[i];
}

Rat Network::weight(int i, int j) const {
    check_agent(i);
    check_agent(j);
    for (const auto& [dst, w] : out_[i])
        if (dst == j) return w;
    return Rat(0);
}

const Rat& Network::degree(int i) const {
    check_agent(i);
    return degrees_[i];
}

int Network::edge_count() const {
    int m = 0;
    for (const auto& row : out_) m += static_cast<int>(row.size());
    return m;
}

bool Network::is_strongly_connected() const {
    int n = size();
    if (n == 0) return false;
    if (n == 1) return true;
    // reachability by BFS, forward and backward from agent 0
    auto reach = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        return std::count(seen.begin(), seen.end(), 1) == n;
    };
    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, w] : out_[i]) {
            fwd[i].push_back(j);
            bwd[j].push_back(i);
        }
    return reach(fwd) && reach(bwd);
}

Network Network::induced(const std::vector<int>& members) const {
    std::vector<char> keep(size(), 0);
    for (int m : members) {
        check_agent(m);
        keep[m] = 1;
    }
    std::vector<int> remap(size(), -1);
    std::vector<std::string> sub_labels;
    for (int i = 0; i < size(); ++i)
        if (keep[i]) {
            remap[i] = static_cast<int>(sub_labels.size());
            sub_labels.push_back(labels_[i]);
        }
    std::vector<Edge> sub_edges;
    for (int i = 0; i < size(); ++i) {
        if (!keep[i]) continue;
        for (const auto& [j, w] : out_[i])
            if (keep[j]) sub_edges.push_back({remap[i], remap[j], w});
    }
    return Network(std::move(sub_labels), sub_edges);
}

bool Network::operator==(const Network& other) const {
    return labels_ == other.labels_ && out_ == other.out_;
}

}  // namespace tg
