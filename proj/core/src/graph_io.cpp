#include "cactus/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace cactus {

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

GraphFile read_graph(std::istream& in) {
    GraphFile file;
    bool have_header = false;
    long long n = 0, m = 0, edges_seen = 0;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") continue;

        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string problem;
            if (!(ss >> problem >> n >> m))
                throw ParseError(lineno, "malformed header, expected 'p <cvd|ect> <n> <m>'");
            std::string rest;
            if (ss >> rest) throw ParseError(lineno, "trailing tokens after header");
            if (problem == "cvd")
                file.mode = ClassMode::Cactus;
            else if (problem == "ect")
                file.mode = ClassMode::OddCactus;
            else
                throw ParseError(lineno, "unknown problem '" + problem + "'");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative sizes in header");
            for (long long i = 1; i <= n; ++i)
                file.graph.add_vertex(static_cast<VertexId>(i));
            have_header = true;
            continue;
        }

        if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            std::vector<std::string> toks;
            std::string t;
            while (ss >> t) toks.push_back(t);
            const bool weighted = file.mode == ClassMode::OddCactus;
            if (weighted && toks.size() != 3)
                throw ParseError(lineno, "ect edges need 'e <u> <v> <w>'");
            if (!weighted && toks.size() != 2)
                throw ParseError(lineno, "cvd edges need 'e <u> <v>'");
            long long u, v, w = 1;
            if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
                throw ParseError(lineno, "malformed edge endpoints");
            if (weighted && (!parse_int(toks[2], w) || (w != 0 && w != 1)))
                throw ParseError(lineno, "edge weight must be 0 or 1");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self-loop");
            if (++edges_seen > m) throw ParseError(lineno, "more edges than the header declares");
            file.graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
                                static_cast<int>(w));
            continue;
        }

        throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }

    if (!have_header) throw ParseError(lineno, "missing header");
    if (edges_seen != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges_seen));
    return file;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g, ClassMode mode,
                 const std::string& comment) {
    std::map<VertexId, long long> relabel;
    long long next = 1;
    for (VertexId v : g.vertices()) relabel[v] = next++;

    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p " << (mode == ClassMode::Cactus ? "cvd" : "ect") << " " << g.vertex_count()
        << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << "e " << relabel.at(e.u) << " " << relabel.at(e.v);
        if (mode == ClassMode::OddCactus) out << " " << e.weight;
        out << "\n";
    }
}

void write_graph_file(const std::string& path, const MultiGraph& g, ClassMode mode,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_graph(out, g, mode, comment);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace cactus
