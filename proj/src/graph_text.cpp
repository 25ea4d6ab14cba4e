#include <charconv>
#include <fstream>
#include <sstream>

#include "cyclefactor/digraph.hpp"
#include "cyclefactor/errors.hpp"

namespace cyclefactor {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw GraphFormatError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

std::string to_text(const DiGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << regular_degree(g) << '\n';
    for (int v = 0; v < g.order(); ++v) {
        out << v << ':';
        for (Vertex w : g.out_neighbors(v)) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

DiGraph parse_graph_text(std::string_view text) {
    auto lines = split_lines(text);
    while (!lines.empty() && tokens(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw GraphFormatError("empty graph text");

    auto header = tokens(lines[0]);
    if (header.size() != 2) throw GraphFormatError("line 1: expected 'n d_hint'");
    const int n = parse_int(header[0], 1);
    const int d_hint = parse_int(header[1], 1);
    if (n < 0) throw GraphFormatError("line 1: negative vertex count");
    if (d_hint < -1) throw GraphFormatError("line 1: d_hint must be -1 or a degree");
    if (static_cast<int>(lines.size()) != n + 1)
        throw GraphFormatError("expected " + std::to_string(n) + " adjacency lines, found " +
                               std::to_string(lines.size() - 1));

    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) {
        const std::size_t line_no = static_cast<std::size_t>(v) + 2;
        std::string_view line = lines[v + 1];
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw GraphFormatError("line " + std::to_string(line_no) + ": missing ':'");
        auto label = tokens(line.substr(0, colon));
        if (label.size() != 1 || parse_int(label[0], line_no) != v)
            throw GraphFormatError("line " + std::to_string(line_no) + ": expected vertex " + std::to_string(v));
        int previous = -1;
        for (auto tok : tokens(line.substr(colon + 1))) {
            int w = parse_int(tok, line_no);
            if (w < 0 || w >= n)
                throw GraphFormatError("line " + std::to_string(line_no) + ": neighbour " + std::to_string(w) + " out of range");
            if (w <= previous)
                throw GraphFormatError("line " + std::to_string(line_no) + ": neighbours must be strictly increasing");
            previous = w;
            arcs.push_back({v, w});
        }
    }
    DiGraph g(n, arcs);
    if (d_hint >= 0 && !is_d_regular(g, d_hint))
        throw GraphFormatError("d_hint " + std::to_string(d_hint) + " does not match the graph");
    return g;
}

DiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

}  // namespace cyclefactor
