#ifndef ICOL_IO_HPP
#define ICOL_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "icol/coloring.hpp"
#include "icol/graph.hpp"

namespace icol {

// Parse failure with a 1-based line number. what() reads "line N: message".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Graph text format (canonical, bit-exact):
//   g <n> <m>
//   e <u> <v>        m lines, u < v, strictly sorted
//   l <v> <label>    optional, strictly sorted by v
// Every line ends with a single newline; no trailing whitespace. Lines
// starting with '#' are comments and are skipped on input, never written.
std::string write_graph(const Graph& g);
Graph parse_graph(const std::string& text);

// Coloring text format (canonical, bit-exact):
//   c <m>
//   k <u> <v> <color>   m lines, sorted by (u,v), colors >= 1
std::string write_coloring(const EdgeColoring& c);
EdgeColoring parse_coloring(const std::string& text);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

Graph load_graph(const std::filesystem::path& p);
EdgeColoring load_coloring(const std::filesystem::path& p);

} // namespace icol

#endif
