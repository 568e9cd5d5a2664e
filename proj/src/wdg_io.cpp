#include "skewsign/wdg_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace skewsign {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Content lines only; blanks and '#' comments are dropped here.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

int parse_int(const Line& line, const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected " + what + ", got '" + tok + "'");
    }
}

Rational parse_weight(const Line& line, const std::string& tok) {
    try {
        return Rational::parse(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, std::string("bad weight '") + tok + "': " + e.what());
    }
}

void expect_arity(const Line& line, std::size_t count) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, "expected " + std::to_string(count - 1) +
                                          " arguments after '" + line.tokens[0] + "'");
}

}  // namespace

WeightedDigraph parse_wdg(std::istream& in) {
    auto lines = read_lines(in);
    std::size_t i = 0;
    auto next = [&]() -> const Line& {
        if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, "unexpected end of input");
        return lines[i++];
    };

    const Line& header = next();
    if (header.tokens.size() != 2 || header.tokens[0] != "wdg" || header.tokens[1] != "1")
        throw ParseError(header.number, "expected header 'wdg 1'");

    const Line& count = next();
    if (count.tokens[0] != "n") throw ParseError(count.number, "expected 'n <vertices>'");
    expect_arity(count, 2);
    int n = parse_int(count, count.tokens[1], "vertex count");
    if (n < 1) throw ParseError(count.number, "vertex count must be positive");

    std::vector<std::pair<Arc, Rational>> arcs;
    while (i < lines.size()) {
        const Line& line = next();
        if (line.tokens[0] != "arc")
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        expect_arity(line, 4);
        int u = parse_int(line, line.tokens[1], "vertex");
        int v = parse_int(line, line.tokens[2], "vertex");
        arcs.push_back({{u, v}, parse_weight(line, line.tokens[3])});
    }

    try {
        return WeightedDigraph(n, std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

WeightedDigraph parse_wdg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_wdg(in);
}

std::string serialize_wdg(const WeightedDigraph& d) {
    std::ostringstream out;
    out << "wdg 1\n";
    out << "n " << d.vertex_count() << "\n";
    for (const auto& [arc, w] : d.arcs())
        out << "arc " << arc.first << " " << arc.second << " " << w.str() << "\n";
    return out.str();
}

WeightedDigraph parse_edge_list(std::istream& in) {
    auto lines = read_lines(in);
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    bool n_given = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] == "n") {
            if (n_given || !edges.empty())
                throw ParseError(line.number, "'n' must appear once, before any edge");
            expect_arity(line, 2);
            n = parse_int(line, line.tokens[1], "vertex count");
            if (n < 1) throw ParseError(line.number, "vertex count must be positive");
            n_given = true;
        } else if (line.tokens[0] == "edge") {
            expect_arity(line, 3);
            int u = parse_int(line, line.tokens[1], "vertex");
            int v = parse_int(line, line.tokens[2], "vertex");
            edges.push_back({u, v});
            if (!n_given) n = std::max({n, u, v});
        } else {
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        }
    }
    if (n < 1) throw ParseError(lines.empty() ? 1 : lines.back().number, "no vertices");
    try {
        return from_graph(edges, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

WeightedDigraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

}  // namespace skewsign
