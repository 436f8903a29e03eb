#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netcorr/distance.hpp"
#include "netcorr/errors.hpp"

namespace netcorr {

/// Undirected simple graph with labeled nodes.
///
/// Nodes keep the order in which they were declared, and every matrix derived
/// from a graph (adjacency, Laplacian, distance, weight) indexes nodes in
/// that order. Self-loops and parallel edges cannot be represented; the
/// constructor collapses duplicate edges and rejects loops.
class Graph {
public:
    /// Builds a graph from node labels and endpoint index pairs.
    /// Requires at least two nodes and unique, non-empty labels.
    Graph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Edges as index pairs with first < second, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Symmetric 0/1 adjacency matrix with zero diagonal.
    const Eigen::MatrixXd& adjacency() const { return adj_; }

    bool has_edge(int i, int j) const { return adj_(i, j) != 0.0; }
    int degree(int i) const;

    /// Index of a label, or -1 when absent.
    int index_of(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    Eigen::MatrixXd adj_;
};

/// Parses an edge-list text: one whitespace-separated label pair per line,
/// blank lines and lines starting with '#' ignored. A single-label line
/// declares an isolated node. Nodes are numbered in first-appearance order.
/// Rejects self-loops and inputs with fewer than two nodes.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: node declarations first (one label per line,
/// preserving node order), then edges. parse_edge_list(serialize_edge_list(g))
/// reproduces g exactly.
std::string serialize_edge_list(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// All-pairs hop distances by one breadth-first sweep per node.
/// Throws DisconnectedError when any pair is unreachable.
DistanceMatrix shortest_paths(const Graph& g);

/// Combinatorial Laplacian L = Deg - A. Rows sum to zero.
Eigen::MatrixXd laplacian(const Graph& g);

// Deterministic graph builders, labels "n0", "n1", ...
Graph make_path(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);

}  // namespace netcorr
