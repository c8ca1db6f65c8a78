#include "c2kit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace c2kit {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void bad_line(const Line& line, const std::string& what) {
    fail(Errc::MalformedInput, "line " + std::to_string(line.number) + ": " + what);
}

long long parse_int(const Line& line, const std::string& tok) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        bad_line(line, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        bad_line(line, "trailing characters in integer '" + tok + "'");
    return value;
}

int parse_index(const Line& line, const std::string& tok) {
    long long v = parse_int(line, tok);
    if (v < 0 || v > 1'000'000'000LL)
        bad_line(line, "index out of range: " + tok);
    return static_cast<int>(v);
}

void expect_tokens(const Line& line, std::size_t count) {
    if (line.tokens.size() != count)
        bad_line(line, "expected " + std::to_string(count) + " tokens, got " +
                           std::to_string(line.tokens.size()));
}

} // namespace

ColoredGraph parse_graph(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty())
        fail(Errc::MalformedInput, "empty graph file");
    const Line& header = lines[0];
    if (header.tokens[0] != "graph")
        bad_line(header, "expected 'graph <n> <m>' header");
    expect_tokens(header, 3);
    int n = parse_index(header, header.tokens[1]);
    int m = parse_index(header, header.tokens[2]);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors(n, -1);
    bool any_color = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] == "e") {
            expect_tokens(line, 3);
            edges.emplace_back(parse_index(line, line.tokens[1]),
                               parse_index(line, line.tokens[2]));
        } else if (line.tokens[0] == "v") {
            expect_tokens(line, 3);
            int u = parse_index(line, line.tokens[1]);
            int c = parse_index(line, line.tokens[2]);
            if (u >= n)
                fail(Errc::IndexOutOfRange, "line " + std::to_string(line.number) +
                                                ": vertex " + std::to_string(u));
            if (colors[u] != -1)
                bad_line(line, "vertex " + std::to_string(u) + " colored twice");
            colors[u] = c;
            any_color = true;
        } else {
            bad_line(line, "unknown directive '" + line.tokens[0] + "'");
        }
    }
    if (static_cast<int>(edges.size()) != m)
        fail(Errc::MalformedInput, "header announces " + std::to_string(m) + " edges, file has " +
                                       std::to_string(edges.size()));
    Graph g(n, std::move(edges));
    if (!any_color)
        return ColoredGraph(std::move(g));
    for (int v = 0; v < n; ++v)
        if (colors[v] == -1)
            fail(Errc::MalformedInput, "vertex " + std::to_string(v) + " has no color line");
    return ColoredGraph(std::move(g), std::move(colors));
}

std::string serialize_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << ' ' << g.graph.edge_count() << '\n';
    if (!g.monochromatic())
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "v " << v << ' ' << g.coloring[v] << '\n';
    for (const auto& [u, v] : g.graph.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

RelationalStructure parse_structure(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty())
        fail(Errc::MalformedInput, "empty structure file");
    const Line& sig = lines[0];
    if (sig.tokens[0] != "sig")
        bad_line(sig, "expected 'sig <Name>/<arity> ...' header");
    if (sig.tokens.size() < 2)
        bad_line(sig, "signature declares no relations");

    std::vector<Relation> relations;
    std::map<std::string, int> index_of;
    for (std::size_t i = 1; i < sig.tokens.size(); ++i) {
        const std::string& tok = sig.tokens[i];
        auto slash = tok.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 >= tok.size())
            bad_line(sig, "expected <Name>/<arity>, got '" + tok + "'");
        Relation rel;
        rel.name = tok.substr(0, slash);
        rel.arity = parse_index(sig, tok.substr(slash + 1));
        if (index_of.count(rel.name))
            bad_line(sig, "relation " + rel.name + " declared twice");
        index_of[rel.name] = static_cast<int>(relations.size());
        relations.push_back(std::move(rel));
    }

    if (lines.size() < 2 || lines[1].tokens[0] != "univ")
        fail(Errc::MalformedInput, "expected 'univ <n>' after the signature");
    expect_tokens(lines[1], 2);
    int n = parse_index(lines[1], lines[1].tokens[1]);

    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& line = lines[i];
        auto it = index_of.find(line.tokens[0]);
        if (it == index_of.end())
            bad_line(line, "unknown relation '" + line.tokens[0] + "'");
        Relation& rel = relations[it->second];
        if (static_cast<int>(line.tokens.size()) != rel.arity + 1)
            fail(Errc::ArityMismatch, "line " + std::to_string(line.number) + ": relation " +
                                          rel.name + " has arity " + std::to_string(rel.arity));
        std::vector<int> tup;
        for (int k = 1; k <= rel.arity; ++k)
            tup.push_back(parse_index(line, line.tokens[k]));
        rel.tuples.push_back(std::move(tup));
    }
    return RelationalStructure::make(n, std::move(relations));
}

std::string serialize_structure(const RelationalStructure& s) {
    std::ostringstream out;
    out << "sig";
    for (const auto& rel : s.relations)
        out << ' ' << rel.name << '/' << rel.arity;
    out << '\n' << "univ " << s.n << '\n';
    for (const auto& rel : s.relations)
        for (const auto& tup : rel.tuples) {
            out << rel.name;
            for (int x : tup)
                out << ' ' << x;
            out << '\n';
        }
    return out.str();
}

ParsedEcPog parse_ecpog(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty())
        fail(Errc::MalformedInput, "empty ecpog file");
    const Line& header = lines[0];
    if (header.tokens[0] != "ecpog")
        bad_line(header, "expected 'ecpog <n> <t>' header");
    expect_tokens(header, 3);
    int n = parse_index(header, header.tokens[1]);
    int t = parse_index(header, header.tokens[2]);

    std::vector<EcEdge> entries;
    std::vector<int> colors(n, -1);
    bool any_color = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] == "u" || line.tokens[0] == "d") {
            expect_tokens(line, 4);
            EcEdge e;
            e.a = parse_index(line, line.tokens[1]);
            e.b = parse_index(line, line.tokens[2]);
            e.color = parse_index(line, line.tokens[3]);
            e.directed = line.tokens[0] == "d";
            entries.push_back(e);
        } else if (line.tokens[0] == "v") {
            expect_tokens(line, 3);
            int u = parse_index(line, line.tokens[1]);
            if (u >= n)
                fail(Errc::IndexOutOfRange, "line " + std::to_string(line.number) +
                                                ": vertex " + std::to_string(u));
            colors[u] = parse_index(line, line.tokens[2]);
            any_color = true;
        } else {
            bad_line(line, "unknown directive '" + line.tokens[0] + "'");
        }
    }
    if (static_cast<int>(entries.size()) != t)
        fail(Errc::MalformedInput, "header announces " + std::to_string(t) +
                                       " edge lines, file has " + std::to_string(entries.size()));
    ParsedEcPog out;
    out.pog = validate_ecpog(n, entries);
    if (any_color) {
        for (int v = 0; v < n; ++v)
            if (colors[v] == -1)
                fail(Errc::MalformedInput, "vertex " + std::to_string(v) + " has no color line");
        out.coloring = std::move(colors);
    }
    return out;
}

std::string serialize_ecpog(const EcPog& p, const std::optional<std::vector<int>>& coloring) {
    std::ostringstream out;
    auto edges = p.edge_list();
    out << "ecpog " << p.vertex_count() << ' ' << edges.size() << '\n';
    if (coloring)
        for (int v = 0; v < p.vertex_count(); ++v)
            out << "v " << v << ' ' << (*coloring)[v] << '\n';
    for (const auto& e : edges)
        out << (e.directed ? 'd' : 'u') << ' ' << e.a << ' ' << e.b << ' ' << e.color << '\n';
    return out.str();
}

ColoredGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

RelationalStructure parse_structure_text(const std::string& text) {
    std::istringstream in(text);
    return parse_structure(in);
}

ParsedEcPog parse_ecpog_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ecpog(in);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(Errc::MalformedInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(Errc::MalformedInput, "cannot write " + path);
    out << content;
}

ColoredGraph load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

RelationalStructure load_structure(const std::string& path) {
    return parse_structure_text(read_file(path));
}

ParsedEcPog load_ecpog(const std::string& path) { return parse_ecpog_text(read_file(path)); }

std::string sniff_format(const std::string& path) {
    std::istringstream in(read_file(path));
    auto lines = tokenize(in);
    if (lines.empty())
        fail(Errc::MalformedInput, "empty file " + path);
    return lines[0].tokens[0];
}

} // namespace c2kit
