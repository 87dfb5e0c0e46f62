#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/error.hpp"
#include "kemeny/graph.hpp"

namespace kemeny {

/// Graph plus the original file label of each internal vertex id.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels; // labels[i] = label that became vertex i
};

namespace detail {

inline std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

inline bool parse_tokens(const std::string& line, std::vector<long long>& out, int line_no) {
    out.clear();
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        if (!out.empty() && token.front() == '#') break; // not a comment: '#' only opens a line
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "expected an integer, got \"" + token + "\"" + at_line(line_no));
        }
        if (used != token.size())
            fail(ErrorKind::ParseError, "expected an integer, got \"" + token + "\"" + at_line(line_no));
        if (value < 0) fail(ErrorKind::ParseError, "negative value " + token + at_line(line_no));
        out.push_back(value);
    }
    return !out.empty();
}

} // namespace detail

/// Reads the edge-list format: a header line "n m", then m lines "u v".
/// Blank lines and lines whose first non-space character is '#' are skipped.
/// Labels need not be 0..n-1; any n distinct non-negative integers work and
/// are remapped in increasing order, with the mapping reported back.
inline ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    long long m = -1;
    std::vector<std::pair<long long, long long>> raw_edges;
    std::vector<int> edge_lines;
    std::vector<long long> tokens;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!detail::parse_tokens(line, tokens, line_no)) continue;
        if (n < 0) {
            if (tokens.size() != 2)
                fail(ErrorKind::ParseError, "header must be \"n m\"" + detail::at_line(line_no));
            n = tokens[0];
            m = tokens[1];
            if (n < 1) fail(ErrorKind::ParseError, "vertex count must be positive" + detail::at_line(line_no));
            if (n > 1000000) fail(ErrorKind::TooLarge, "vertex count " + std::to_string(n) + " exceeds the 1000000 cap");
            continue;
        }
        if (static_cast<long long>(raw_edges.size()) == m)
            fail(ErrorKind::ParseError, "more than the declared " + std::to_string(m) + " edges" + detail::at_line(line_no));
        if (tokens.size() != 2)
            fail(ErrorKind::ParseError, "edge line must be \"u v\"" + detail::at_line(line_no));
        raw_edges.emplace_back(tokens[0], tokens[1]);
        edge_lines.push_back(line_no);
    }
    if (n < 0) fail(ErrorKind::ParseError, "missing \"n m\" header");
    if (static_cast<long long>(raw_edges.size()) != m)
        fail(ErrorKind::ParseError, "declared " + std::to_string(m) + " edges but found " +
                                        std::to_string(raw_edges.size()));

    // Labels already inside 0..n-1 stand for themselves. Otherwise the file
    // must name exactly n distinct labels, which are remapped in sorted
    // order; fewer would leave the unnamed vertices' labels unknowable.
    std::vector<long long> labels;
    for (const auto& [u, v] : raw_edges) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const bool identity = labels.empty() || labels.back() < n;
    if (identity) {
        labels.resize(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    } else if (static_cast<long long>(labels.size()) != n) {
        fail(ErrorKind::ParseError, "labels exceed 0.." + std::to_string(n - 1) + " but only " +
                                        std::to_string(labels.size()) + " distinct labels appear; cannot infer the remaining " +
                                        std::to_string(n - static_cast<long long>(labels.size())) + " vertices");
    }

    auto vertex_of = [&](long long label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    std::vector<Edge> edges;
    std::set<Edge> seen;
    edges.reserve(raw_edges.size());
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        const int line = edge_lines[i];
        const auto [lu, lv] = raw_edges[i];
        if (lu == lv) fail(ErrorKind::ParseError, "self-loop at label " + std::to_string(lu) + detail::at_line(line));
        Edge e{vertex_of(lu), vertex_of(lv)};
        if (e.first > e.second) std::swap(e.first, e.second);
        if (!seen.insert(e).second)
            fail(ErrorKind::ParseError, "edge " + std::to_string(lu) + " " + std::to_string(lv) + " repeats" +
                                            detail::at_line(line));
        edges.push_back(e);
    }
    return {Graph(static_cast<int>(n), std::move(edges)), std::move(labels)};
}

inline ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace kemeny
