#pragma once

#include <utility>
#include <vector>

#include "skewsign/cycles.hpp"
#include "skewsign/digraph.hpp"
#include "skewsign/matrix.hpp"

namespace skewsign {

inline constexpr int kDefaultVertexCap = 10;

// Vertex-disjoint union of cycles. Cycles are kept sorted.
class LinearSubdigraph {
public:
    explicit LinearSubdigraph(std::vector<Cycle> cycles);

    const std::vector<Cycle>& cycles() const { return cycles_; }
    int covered() const { return covered_; }
    int num_cycles() const { return static_cast<int>(cycles_.size()); }
    bool is_even_linear() const;  // no odd cycle

    bool operator==(const LinearSubdigraph& o) const { return cycles_ == o.cycles_; }
    bool operator<(const LinearSubdigraph& o) const { return cycles_ < o.cycles_; }

private:
    std::vector<Cycle> cycles_;
    int covered_;
};

// Product of arc weights over all member cycles.
Rational subdigraph_weight(const RationalMatrix& m, const LinearSubdigraph& l);

// Vertex-disjoint digons, stored as sorted (u,v) pairs with u < v.
struct DigonCover {
    std::vector<std::pair<int, int>> digons;
    int covered() const { return 2 * static_cast<int>(digons.size()); }
    bool operator==(const DigonCover& o) const { return digons == o.digons; }
    bool operator<(const DigonCover& o) const { return digons < o.digons; }
};

// Product over the cover of omega(u,v) * omega(v,u).
Rational digon_cover_product(const WeightedDigraph& d, const DigonCover& cover);

// All linear subdigraphs of the support of m covering exactly k vertices,
// sorted; even_only keeps those whose cycles all have even length. Loops in
// the matrix count as length-1 cycles. Throws CapExceededError when the
// matrix dimension exceeds vertex_cap.
std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(
    const RationalMatrix& m, int k, bool even_only = false,
    int vertex_cap = kDefaultVertexCap);

// Coefficient a_k of char_poly(m) as the signed sum over linear subdigraphs:
// a_k = sum over L covering k vertices of (-1)^{num_cycles} * weight(L).
Rational coefficient_via_subdigraphs(const RationalMatrix& m, int k,
                                     int vertex_cap = kDefaultVertexCap);

// Same coefficient for a skew-symmetric m, summing even linear subdigraphs
// only; odd k yields 0 outright. Rejects matrices that are not skew-symmetric.
Rational skew_coefficient_via_even_subdigraphs(const RationalMatrix& m, int k,
                                               int vertex_cap = kDefaultVertexCap);

// All collections of vertex-disjoint digons of d covering exactly k vertices
// (the (k/2)-matchings of the underlying graph), sorted.
std::vector<DigonCover> enumerate_digon_covers(const WeightedDigraph& d, int k);

// Splits the length-k cycles of d by the sign of their product under the
// skew-signing weights: positive products first, negative second. The signing
// matrix must be a valid skew-signing of d.
std::pair<std::vector<Cycle>, std::vector<Cycle>> partition_cycles_by_sign(
    const WeightedDigraph& d, const RationalMatrix& signed_weights, int k);

}  // namespace skewsign
