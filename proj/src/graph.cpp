#include "netcorr/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace netcorr {

Graph::Graph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    if (n < 2) {
        throw InputError("graph must have >= 2 nodes");
    }
    std::set<std::string> seen;
    for (const auto& label : labels_) {
        if (label.empty()) {
            throw InputError("node labels must be non-empty");
        }
        if (!seen.insert(label).second) {
            throw InputError("duplicate node label: " + label);
        }
    }
    std::set<std::pair<int, int>> unique_edges;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw InputError("edge endpoint out of range");
        }
        if (a == b) {
            throw InputError("self-loop on node: " + labels_[a]);
        }
        unique_edges.emplace(std::min(a, b), std::max(a, b));
    }
    edges_.assign(unique_edges.begin(), unique_edges.end());
    adj_ = Eigen::MatrixXd::Zero(n, n);
    for (auto [a, b] : edges_) {
        adj_(a, b) = 1.0;
        adj_(b, a) = 1.0;
    }
}

int Graph::degree(int i) const {
    return static_cast<int>(adj_.row(i).sum());
}

int Graph::index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return -1;
}

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> nb(g.size());
    for (auto [a, b] : g.edges()) {
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    return nb;
}

// Hop distances from one source; unreached nodes stay at -1.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& nb, int source) {
    std::vector<int> dist(nb.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : nb[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;

    auto intern = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(labels.size());
        labels.push_back(label);
        index.emplace(label, id);
        return id;
    };

    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields{line};
        std::string a, b, extra;
        if (!(fields >> a) || a.front() == '#') continue;
        if (!(fields >> b)) {
            intern(a);  // isolated node declaration
            continue;
        }
        if (fields >> extra) {
            throw InputError("line " + std::to_string(lineno) +
                             ": expected one or two labels, got more");
        }
        if (a == b) {
            throw InputError("line " + std::to_string(lineno) + ": self-loop on node " + a);
        }
        // intern in declaration order; argument evaluation order is unspecified
        const int a_id = intern(a);
        const int b_id = intern(b);
        edges.emplace_back(a_id, b_id);
    }
    return Graph(std::move(labels), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& label : g.labels()) {
        out << label << '\n';
    }
    for (auto [a, b] : g.edges()) {
        out << g.labels()[a] << ' ' << g.labels()[b] << '\n';
    }
    return out.str();
}

bool is_connected(const Graph& g) {
    const auto dist = bfs_distances(adjacency_lists(g), 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int component_count(const Graph& g) {
    const auto nb = adjacency_lists(g);
    std::vector<char> seen(g.size(), 0);
    int components = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        ++components;
        const auto dist = bfs_distances(nb, s);
        for (int v = 0; v < g.size(); ++v) {
            if (dist[v] >= 0) seen[v] = 1;
        }
    }
    return components;
}

DistanceMatrix shortest_paths(const Graph& g) {
    const int n = g.size();
    const auto nb = adjacency_lists(g);
    Eigen::MatrixXd values(n, n);
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(nb, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                throw DisconnectedError(
                    "graph is disconnected (" + std::to_string(component_count(g)) +
                    " components): shortest-path distance is infinite");
            }
            values(s, v) = static_cast<double>(dist[v]);
        }
    }
    return DistanceMatrix{std::move(values), DistanceKind::shortest_path, g.labels()};
}

Eigen::MatrixXd laplacian(const Graph& g) {
    const Eigen::MatrixXd& a = g.adjacency();
    Eigen::MatrixXd l = -a;
    l.diagonal() = a.rowwise().sum();
    return l;
}

namespace {

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
    return labels;
}

}  // namespace

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(numbered_labels(n), std::move(edges));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(numbered_labels(n), std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("bipartite parts must be non-empty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(numbered_labels(a + b), std::move(edges));
}

const char* to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::shortest_path: return "shortest_path";
        case DistanceKind::resistance: return "resistance";
        case DistanceKind::embedding: return "embedding";
        case DistanceKind::external: return "external";
    }
    return "unknown";
}

bool has_zero_offdiagonal(const DistanceMatrix& d) {
    const int n = d.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.values(i, j) == 0.0) return true;
    return false;
}

}  // namespace netcorr
