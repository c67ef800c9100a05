#include "icol/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace icol {

namespace {

// One physical line, with its 1-based position in the file.
struct Line {
    int number;
    std::string text;
};

// Splits into lines, requiring a final newline and rejecting carriage
// returns, tabs and trailing whitespace. Comment lines are dropped here.
std::vector<Line> split_lines(const std::string& text) {
    if (text.empty())
        throw ParseError(1, "empty input");
    if (text.back() != '\n')
        throw ParseError(1 + static_cast<int>(std::count(text.begin(), text.end(), '\n')),
                         "missing final newline");
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++number;
        if (line.find('\r') != std::string::npos || line.find('\t') != std::string::npos)
            throw ParseError(number, "tab or carriage return in line");
        if (!line.empty() && line.back() == ' ')
            throw ParseError(number, "trailing whitespace");
        if (!line.empty() && line.front() == '#')
            continue; // comment
        if (line.empty())
            throw ParseError(number, "blank line");
        lines.push_back({number, std::move(line)});
    }
    return lines;
}

std::vector<std::string> split_fields(const Line& line) {
    std::vector<std::string> fields;
    size_t pos = 0;
    while (pos <= line.text.size()) {
        size_t sp = line.text.find(' ', pos);
        if (sp == std::string::npos)
            sp = line.text.size();
        if (sp == pos)
            throw ParseError(line.number, "malformed spacing");
        fields.push_back(line.text.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return fields;
}

// Canonical decimal: digits only, no leading zeros (except "0" itself).
int parse_int(const Line& line, const std::string& field, const char* what) {
    if (field.empty() || field.size() > 9 ||
        field.find_first_not_of("0123456789") != std::string::npos ||
        (field.size() > 1 && field.front() == '0'))
        throw ParseError(line.number, std::string("bad ") + what + " '" + field + "'");
    return std::stoi(field);
}

} // namespace

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "g " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.first << " " << e.second << "\n";
    for (const auto& [v, text] : g.labels())
        out << "l " << v << " " << text << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    std::vector<Line> lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, "expected 'g <n> <m>' header");
    size_t at = 0;
    auto header = split_fields(lines[at]);
    if (header.size() != 3 || header[0] != "g")
        throw ParseError(lines[at].number, "expected 'g <n> <m>' header");
    int n = parse_int(lines[at], header[1], "vertex count");
    int m = parse_int(lines[at], header[2], "edge count");
    if (n < 1)
        throw ParseError(lines[at].number, "vertex count must be positive");
    ++at;

    std::vector<Edge> edges;
    Edge prev{-1, -1};
    for (int i = 0; i < m; ++i, ++at) {
        if (at >= lines.size())
            throw ParseError(lines.back().number, "fewer edge lines than header announces");
        auto f = split_fields(lines[at]);
        if (f.size() != 3 || f[0] != "e")
            throw ParseError(lines[at].number, "expected 'e <u> <v>'");
        int u = parse_int(lines[at], f[1], "endpoint");
        int v = parse_int(lines[at], f[2], "endpoint");
        if (u >= v)
            throw ParseError(lines[at].number, "edge endpoints must satisfy u < v");
        if (v >= n)
            throw ParseError(lines[at].number, "endpoint out of range");
        Edge e{u, v};
        if (!(prev < e))
            throw ParseError(lines[at].number, "edges out of canonical order");
        prev = e;
        edges.push_back(e);
    }

    std::map<Vertex, std::string> labels;
    int prev_label = -1;
    for (; at < lines.size(); ++at) {
        auto f = split_fields(lines[at]);
        if (f[0] != "l")
            throw ParseError(lines[at].number,
                             f[0] == "e" ? "more edge lines than header announces"
                                         : "expected 'l <v> <label>'");
        if (f.size() < 3)
            throw ParseError(lines[at].number, "expected 'l <v> <label>'");
        int v = parse_int(lines[at], f[1], "vertex id");
        if (v >= n)
            throw ParseError(lines[at].number, "label vertex out of range");
        if (v <= prev_label)
            throw ParseError(lines[at].number, "labels out of canonical order");
        prev_label = v;
        // label is the rest of the line after "l <v> "
        size_t skip = 2 + f[1].size() + 1;
        labels[v] = lines[at].text.substr(skip);
    }

    try {
        return Graph(n, std::move(edges), std::move(labels));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(lines[0].number, ex.what());
    }
}

std::string write_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    out << "c " << c.assignment.size() << "\n";
    for (const auto& [e, color] : c.assignment)
        out << "k " << e.first << " " << e.second << " " << color << "\n";
    return out.str();
}

EdgeColoring parse_coloring(const std::string& text) {
    std::vector<Line> lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, "expected 'c <m>' header");
    size_t at = 0;
    auto header = split_fields(lines[at]);
    if (header.size() != 2 || header[0] != "c")
        throw ParseError(lines[at].number, "expected 'c <m>' header");
    int m = parse_int(lines[at], header[1], "edge count");
    ++at;

    EdgeColoring c;
    Edge prev{-1, -1};
    for (int i = 0; i < m; ++i, ++at) {
        if (at >= lines.size())
            throw ParseError(lines.back().number, "fewer color lines than header announces");
        auto f = split_fields(lines[at]);
        if (f.size() != 4 || f[0] != "k")
            throw ParseError(lines[at].number, "expected 'k <u> <v> <color>'");
        int u = parse_int(lines[at], f[1], "endpoint");
        int v = parse_int(lines[at], f[2], "endpoint");
        int color = parse_int(lines[at], f[3], "color");
        if (u >= v)
            throw ParseError(lines[at].number, "edge endpoints must satisfy u < v");
        if (color < 1)
            throw ParseError(lines[at].number, "colors must be positive");
        Edge e{u, v};
        if (!(prev < e))
            throw ParseError(lines[at].number, "edges out of canonical order");
        prev = e;
        c.assignment[e] = color;
    }
    if (at != lines.size())
        throw ParseError(lines[at].number, "more color lines than header announces");
    return c;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
    out << content;
    if (!out)
        throw std::runtime_error("write failed for " + p.string());
}

Graph load_graph(const std::filesystem::path& p) { return parse_graph(read_file(p)); }

EdgeColoring load_coloring(const std::filesystem::path& p) {
    return parse_coloring(read_file(p));
}

} // namespace icol
