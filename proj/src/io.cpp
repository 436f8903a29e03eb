#include "netcorr/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "netcorr/errors.hpp"
#include "netcorr/report.hpp"

namespace netcorr {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_double(const std::string& cell, int line_no) {
    double v = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw InputError("line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    }
    return v;
}

// Maps each label to its row in the graph's ordering; the node sets must
// coincide exactly.
std::vector<int> graph_order(const std::vector<std::string>& file_labels,
                             const std::vector<std::string>& graph_labels,
                             const std::string& what) {
    std::map<std::string, int> position;
    for (int i = 0; i < static_cast<int>(file_labels.size()); ++i) {
        if (!position.emplace(file_labels[i], i).second) {
            throw InputError(what + ": duplicate node '" + file_labels[i] + "'");
        }
    }
    if (file_labels.size() != graph_labels.size()) {
        throw InputError(what + ": has " + std::to_string(file_labels.size()) +
                         " nodes, graph has " + std::to_string(graph_labels.size()));
    }
    std::vector<int> order;
    order.reserve(graph_labels.size());
    for (const auto& label : graph_labels) {
        auto it = position.find(label);
        if (it == position.end()) {
            throw InputError(what + ": graph node '" + label + "' is missing");
        }
        order.push_back(it->second);
    }
    return order;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    return parse_edge_list(read_text_file(path));
}

void write_matrix_csv(std::ostream& out, const std::vector<std::string>& labels,
                      const Eigen::MatrixXd& values) {
    const int n = static_cast<int>(labels.size());
    for (int j = 0; j < n; ++j) {
        if (j) out << ',';
        out << labels[j];
    }
    out << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ',';
            out << format_full(values(i, j));
        }
        out << '\n';
    }
}

LabeledMatrix parse_matrix_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("matrix csv: empty input");
    strip_cr(line);

    LabeledMatrix m;
    m.labels = split_csv(line);
    const int n = static_cast<int>(m.labels.size());
    for (const auto& label : m.labels) {
        if (label.empty()) throw InputError("matrix csv: empty label in header");
    }
    m.values.resize(n, n);

    int row = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        if (row >= n) throw InputError("matrix csv: more rows than header columns");
        const auto cells = split_csv(line);
        if (static_cast<int>(cells.size()) != n) {
            throw InputError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " values, got " + std::to_string(cells.size()));
        }
        for (int j = 0; j < n; ++j) m.values(row, j) = parse_double(cells[j], line_no);
        ++row;
    }
    if (row != n) {
        throw InputError("matrix csv: expected " + std::to_string(n) + " rows, got " +
                         std::to_string(row));
    }
    return m;
}

LabeledMatrix load_matrix_csv(const std::string& path) {
    try {
        return parse_matrix_csv(read_text_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void save_distance_csv(const std::string& path, const DistanceMatrix& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_matrix_csv(out, d.labels, d.values);
}

DistanceMatrix load_distance_csv(const std::string& path) {
    LabeledMatrix m = load_matrix_csv(path);
    return DistanceMatrix{std::move(m.values), DistanceKind::external, std::move(m.labels)};
}

void save_weight_csv(const std::string& path, const WeightMatrix& w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_matrix_csv(out, w.labels, w.values);
}

WeightMatrix load_weight_csv(const std::string& path) {
    LabeledMatrix m = load_matrix_csv(path);
    WeightMatrix w;
    w.values = std::move(m.values);
    w.k = std::nullopt;
    w.source = WeightSource::external;
    w.labels = std::move(m.labels);
    return w;
}

Signal parse_signal_csv(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("signal csv: empty input");
    strip_cr(line);
    if (split_csv(line) != std::vector<std::string>{"node", "value"}) {
        throw InputError("signal csv: header must be 'node,value'");
    }

    std::vector<std::string> file_labels;
    std::vector<double> values;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != 2 || cells[0].empty()) {
            throw InputError("line " + std::to_string(line_no) + ": expected 'node,value'");
        }
        file_labels.push_back(cells[0]);
        values.push_back(parse_double(cells[1], line_no));
    }

    const auto order = graph_order(file_labels, g.labels(), "signal csv");
    Signal x;
    x.labels = g.labels();
    x.values.resize(g.size());
    for (int i = 0; i < g.size(); ++i) x.values[i] = values[order[i]];
    return x;
}

Signal load_signal_csv(const std::string& path, const Graph& g) {
    try {
        return parse_signal_csv(read_text_file(path), g);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_signal_csv(std::ostream& out, const Signal& x) {
    out << "node,value\n";
    for (int i = 0; i < static_cast<int>(x.labels.size()); ++i) {
        out << x.labels[i] << ',' << format_full(x.values[i]) << '\n';
    }
}

Embedding parse_embedding_csv(const std::string& text,
                              const std::vector<std::string>* graph_labels) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("embedding csv: empty input");
    strip_cr(line);

    const auto header = split_csv(line);
    if (header.size() < 2 || header[0] != "node") {
        throw InputError("embedding csv: header must be 'node,c1,...,cd'");
    }
    const int dim = static_cast<int>(header.size()) - 1;
    for (int j = 0; j < dim; ++j) {
        if (header[j + 1] != "c" + std::to_string(j + 1)) {
            throw InputError("embedding csv: header must be 'node,c1,...,cd'");
        }
    }

    std::vector<std::string> file_labels;
    std::vector<Eigen::RowVectorXd> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (static_cast<int>(cells.size()) != dim + 1 || cells[0].empty()) {
            throw InputError("line " + std::to_string(line_no) + ": expected node plus " +
                             std::to_string(dim) + " coordinates");
        }
        file_labels.push_back(cells[0]);
        Eigen::RowVectorXd row(dim);
        for (int j = 0; j < dim; ++j) row[j] = parse_double(cells[j + 1], line_no);
        rows.push_back(std::move(row));
    }
    if (rows.size() < 2) throw InputError("embedding csv: need at least 2 points");

    Embedding e;
    e.coordinates.resize(static_cast<int>(rows.size()), dim);
    if (graph_labels) {
        const auto order = graph_order(file_labels, *graph_labels, "embedding csv");
        e.labels = *graph_labels;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            e.coordinates.row(i) = rows[order[i]];
        }
    } else {
        std::map<std::string, int> seen;
        for (int i = 0; i < static_cast<int>(file_labels.size()); ++i) {
            if (!seen.emplace(file_labels[i], i).second) {
                throw InputError("embedding csv: duplicate node '" + file_labels[i] + "'");
            }
        }
        e.labels = std::move(file_labels);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) e.coordinates.row(i) = rows[i];
    }
    return e;
}

Embedding load_embedding_csv(const std::string& path,
                             const std::vector<std::string>* graph_labels) {
    try {
        return parse_embedding_csv(read_text_file(path), graph_labels);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_embedding_csv(std::ostream& out, const Embedding& e) {
    out << "node";
    for (int j = 0; j < e.dimension(); ++j) out << ",c" << (j + 1);
    out << '\n';
    for (int i = 0; i < e.size(); ++i) {
        out << e.labels[i];
        for (int j = 0; j < e.dimension(); ++j) out << ',' << format_full(e.coordinates(i, j));
        out << '\n';
    }
}

void save_embedding_csv(const std::string& path, const Embedding& e) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_embedding_csv(out, e);
}

}  // namespace netcorr
