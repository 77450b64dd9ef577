#pragma once

#include "tg/rational.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tg {

// Agents carry a string label from input plus the dense index 0..n-1
// assigned at load; all APIs below take the index.
struct Edge {
    int src;
    int dst;
    Rat weight;
};

// Immutable weighted directed network. Stored weights are strictly
// positive; zero-weight edges and self-loops are rejected/dropped at
// construction.
class Network {
public:
    Network() = default;
    Network(std::vector<std::string> labels, const std::vector<Edge>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    std::optional<int> index_of(const std::string& label) const;
    int require_index(const std::string& label) const;

    // Out-neighbourhood of i, sorted by destination index.
    const std::vector<std::pair<int, Rat>>& out_edges(int i) const;
    Rat weight(int i, int j) const;  // 0 when the edge is absent
    const Rat& degree(int i) const;  // d_i = sum of outward weights
    int edge_count() const;

    bool is_strongly_connected() const;

    // Sub-network induced by `members` (original labels kept, agents in
    // original order).
    Network induced(const std::vector<int>& members) const;

    bool operator==(const Network& other) const;

private:
    void check_agent(int i) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<std::pair<int, Rat>>> out_;
    std::vector<Rat> degrees_;
};

}  // namespace tg
