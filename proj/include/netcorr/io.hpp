#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "netcorr/correlation.hpp"
#include "netcorr/distance.hpp"
#include "netcorr/graph.hpp"
#include "netcorr/metrics.hpp"
#include "netcorr/weights.hpp"

namespace netcorr {

/// Square matrix plus the node labels naming its rows and columns.
struct LabeledMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXd values;
};

std::string read_text_file(const std::string& path);

Graph load_graph(const std::string& path);

// Matrix CSV: a header row of node labels, then one row of full-precision
// values per node.
void write_matrix_csv(std::ostream& out, const std::vector<std::string>& labels,
                      const Eigen::MatrixXd& values);
LabeledMatrix parse_matrix_csv(const std::string& text);
LabeledMatrix load_matrix_csv(const std::string& path);

void save_distance_csv(const std::string& path, const DistanceMatrix& d);
DistanceMatrix load_distance_csv(const std::string& path);  // kind = external

void save_weight_csv(const std::string& path, const WeightMatrix& w);
WeightMatrix load_weight_csv(const std::string& path);  // source = external

// Signal CSV: header "node,value". The node set must match the graph
// exactly; rows are reordered into the graph's node order.
Signal parse_signal_csv(const std::string& text, const Graph& g);
Signal load_signal_csv(const std::string& path, const Graph& g);
void write_signal_csv(std::ostream& out, const Signal& x);

// Embedding CSV: header "node,c1,...,cd". When graph labels are supplied the
// node sets must match and rows are reordered into graph order.
Embedding parse_embedding_csv(const std::string& text,
                              const std::vector<std::string>* graph_labels = nullptr);
Embedding load_embedding_csv(const std::string& path,
                             const std::vector<std::string>* graph_labels = nullptr);
void write_embedding_csv(std::ostream& out, const Embedding& e);
void save_embedding_csv(const std::string& path, const Embedding& e);

}  // namespace netcorr
