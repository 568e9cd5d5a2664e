#pragma once

#include <optional>
#include <vector>

#include "skewsign/digraph.hpp"
#include "skewsign/matrix.hpp"

namespace skewsign {

// Simple directed cycle v_1 -> v_2 -> ... -> v_t -> v_1, stored in canonical
// form: rotated so the minimum vertex comes first, direction preserved.
// A cycle and its reversal are distinct objects except for loops and digons.
class Cycle {
public:
    explicit Cycle(std::vector<int> vertices);

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }

    // Implied arcs, including the closing arc back to the first vertex.
    std::vector<Arc> arcs() const;

    std::string str() const;

    bool operator==(const Cycle& o) const { return verts_ == o.verts_; }
    bool operator!=(const Cycle& o) const { return verts_ != o.verts_; }
    bool operator<(const Cycle& o) const;  // by length, then vertex sequence

private:
    std::vector<int> verts_;
};

// Same vertices, opposite traversal order, canonicalized.
Cycle reverse_cycle(const Cycle& c);

// Product of the implied arc weights. The matrix variant reads entries
// directly; the digraph variant requires every implied arc to exist.
Rational cycle_weight(const RationalMatrix& m, const Cycle& c);
Rational cycle_weight(const WeightedDigraph& d, const Cycle& c);

// All simple directed cycles of length <= max_len, each once, sorted.
// Loops count as length-1 cycles when present.
std::vector<Cycle> enumerate_cycles(const WeightedDigraph& d, int max_len);
std::vector<Cycle> enumerate_cycles(const RationalMatrix& m, int max_len);

// Shortest even cycle of length >= 4 (lexicographically least among those),
// or nullopt. This is the obstruction side of the invariance decision.
std::optional<Cycle> find_even_cycle(const WeightedDigraph& d);

}  // namespace skewsign
