#include "grundy/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

/// Tokens of the stream with '#' comments stripped per line.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(std::move(tok));
    }
    return tokens;
}

int parse_int(const std::string& tok, const char* what) {
    size_t used = 0;
    long long value;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw InputError(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size() || value < std::numeric_limits<int>::min() ||
        value > std::numeric_limits<int>::max())
        throw InputError(std::string("expected ") + what + ", got '" + tok + "'");
    return static_cast<int>(value);
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    const std::vector<std::string> tokens = tokenize(in);
    if (tokens.size() < 2) throw InputError("edge list must start with 'n m'");
    const int n = parse_int(tokens[0], "vertex count");
    const int m = parse_int(tokens[1], "edge count");
    if (n < 0) throw InputError("vertex count must be non-negative");
    if (m < 0) throw InputError("edge count must be non-negative");
    if (tokens.size() != 2 + 2 * static_cast<size_t>(m))
        throw InputError("edge list declares " + std::to_string(m) + " edges but has " +
                         std::to_string((tokens.size() - 2) / 2) + " endpoint pairs");
    Graph g(n);
    for (int e = 0; e < m; ++e) {
        const int u = parse_int(tokens[2 + 2 * e], "vertex index");
        const int v = parse_int(tokens[3 + 2 * e], "vertex index");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_file(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

VertexSequence read_sequence(std::istream& in) {
    VertexSequence s;
    for (const std::string& tok : tokenize(in)) s.push_back(parse_int(tok, "vertex index"));
    return s;
}

VertexSequence read_sequence_file(const std::string& path) {
    auto in = open_file(path);
    return read_sequence(in);
}

void write_sequence(std::ostream& out, const VertexSequence& s) {
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
}

IntervalModel read_interval_model(std::istream& in) {
    const std::vector<std::string> tokens = tokenize(in);
    if (tokens.empty()) throw InputError("interval file must start with the model size");
    const int n = parse_int(tokens[0], "interval count");
    if (n < 0) throw InputError("interval count must be non-negative");
    if (tokens.size() != 1 + 2 * static_cast<size_t>(n))
        throw InputError("interval file declares " + std::to_string(n) +
                         " intervals but has " + std::to_string((tokens.size() - 1) / 2) +
                         " endpoint pairs");
    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (int i = 0; i < n; ++i)
        intervals.push_back(
            {parse_coord(tokens[1 + 2 * i]), parse_coord(tokens[2 + 2 * i])});
    return IntervalModel(std::move(intervals));
}

IntervalModel read_interval_model_file(const std::string& path) {
    auto in = open_file(path);
    return read_interval_model(in);
}

void write_interval_model(std::ostream& out, const IntervalModel& m) {
    out << m.size() << '\n';
    for (const Interval& iv : m.intervals())
        out << format_coord(iv.left) << ' ' << format_coord(iv.right) << '\n';
}

}  // namespace grundy
