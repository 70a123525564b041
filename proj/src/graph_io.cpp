#include "sandpiles/graph_io.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "sandpiles/errors.hpp"

namespace sandpiles {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Multigraph read_graph(std::istream& in) {
    std::optional<Multigraph> g;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;          // blank line
        if (tok[0] == '#') continue;         // comment line

        if (tok == "vertices") {
            if (g) fail(lineno, "duplicate 'vertices' line");
            long long n;
            if (!(ss >> n)) fail(lineno, "expected 'vertices N'");
            std::string extra;
            if (ss >> extra) fail(lineno, "trailing tokens after vertex count");
            if (n < 1) fail(lineno, "vertex count must be at least 1");
            if (n > std::numeric_limits<int>::max())
                fail(lineno, "vertex count too large");
            g.emplace(static_cast<int>(n));
        } else if (tok == "edge") {
            if (!g) fail(lineno, "'edge' before 'vertices'");
            long long u, v, m;
            if (!(ss >> u >> v >> m)) fail(lineno, "expected 'edge U V M'");
            std::string extra;
            if (ss >> extra) fail(lineno, "trailing tokens after edge");
            if (m < 1) fail(lineno, "edge multiplicity must be at least 1");
            if (u < 1 || u > g->vertex_count() || v < 1 ||
                v > g->vertex_count())
                fail(lineno, "vertex id out of range 1.." +
                                 std::to_string(g->vertex_count()));
            if (u == v) fail(lineno, "self-loop at vertex " +
                                         std::to_string(u) + " not allowed");
            g->add_edges(static_cast<VertexId>(u), static_cast<VertexId>(v),
                         m);
        } else {
            fail(lineno, "unknown directive '" + tok + "'");
        }
    }

    if (!g) throw ParseError("missing 'vertices' line");
    return *g;
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& [pair, m] : g.edges())
        out << "edge " << pair.first << " " << pair.second << " " << m
            << "\n";
}

std::string write_graph_string(const Multigraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string write_dot(const Multigraph& g) {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const auto& [pair, m] : g.edges())
        for (std::int64_t i = 0; i < m; ++i)
            os << "  " << pair.first << " -- " << pair.second << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace sandpiles
