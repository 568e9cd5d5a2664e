#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "skewsign/digraph.hpp"

namespace skewsign {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format, one directive per line:
//   wdg 1
//   n <vertices>
//   arc <u> <v> <weight>      weight is an integer or p/q
// Blank lines and lines starting with '#' are ignored.
WeightedDigraph parse_wdg(std::istream& in);
WeightedDigraph parse_wdg_file(const std::string& path);

// Canonical form: header, vertex count, then arcs sorted by (u, v).
// parse(serialize(d)) == d and re-serializing is byte-identical.
std::string serialize_wdg(const WeightedDigraph& d);

// Undirected edge list:
//   n <vertices>               optional; defaults to the max endpoint
//   edge <u> <v>
// Every edge becomes a digon with unit weights.
WeightedDigraph parse_edge_list(std::istream& in);
WeightedDigraph parse_edge_list_file(const std::string& path);

}  // namespace skewsign
