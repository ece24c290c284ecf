#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cactus/multigraph.hpp"
#include "cactus/recognizer.hpp"

namespace cactus {

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct GraphFile {
    MultiGraph graph;       // vertices labelled 1..n
    ClassMode mode = ClassMode::Cactus;
};

/// Text format:
///   c <comment>
///   p <cvd|ect> <n> <m>
///   e <u> <v>        (cvd)
///   e <u> <v> <w>    (ect, w in {0,1})
/// Vertices are 1..n; parallel edges repeat their line; self-loops are
/// rejected. The edge count must match the header.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

/// Writes the format above. Vertex labels are compacted to 1..n in
/// ascending order when they are not already contiguous.
void write_graph(std::ostream& out, const MultiGraph& g, ClassMode mode,
                 const std::string& comment = "");
void write_graph_file(const std::string& path, const MultiGraph& g, ClassMode mode,
                      const std::string& comment = "");

}  // namespace cactus
