#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewsign/matrix.hpp"
#include "skewsign/rational.hpp"

namespace skewsign {

using Arc = std::pair<int, int>;  // ordered (tail, head), vertices 1-based

/// Weighted digraph on vertices 1..n with nonzero rational arc weights.
/// Values are immutable once built. Loops and arbitrary-sign weights are
/// representable so that digraphs of general matrices round-trip exactly;
/// the pwls conditions (positive, loopless, symmetric) are a validated
/// property, not a structural one.
class WeightedDigraph {
public:
    WeightedDigraph(int n, std::vector<std::pair<Arc, Rational>> arcs);

    int vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::map<Arc, Rational>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const { return arcs_.count({u, v}) != 0; }
    /// Weight of (u,v), or exact 0 when the arc is absent.
    const Rational& weight(int u, int v) const;

    /// True iff every weight is positive, there are no loops, and every arc
    /// has its reverse. Computed once at construction.
    bool is_pwls() const { return pwls_validated_; }

    /// Unordered pairs {u < v} such that both (u,v) and (v,u) are arcs,
    /// sorted ascending. For a pwls digraph this lists every digon.
    std::vector<std::pair<int, int>> digons() const;

private:
    int n_;
    std::map<Arc, Rational> arcs_;
    bool pwls_validated_ = false;
};

struct Violation {
    enum class Kind { Loop, NonpositiveWeight, MissingReverse };
    Kind kind;
    Arc arc;  // the offending arc
    std::string message() const;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

/// Checks the three pwls conditions and reports every violation with the
/// offending arc. Violations are data, not errors.
ValidationReport validate_pwls(const WeightedDigraph& d);

/// entries[i][j] = weight of (i,j) when present, else 0.
RationalMatrix to_matrix(const WeightedDigraph& d);

/// Digraph of a matrix: (i,j) is an arc iff m(i,j) != 0, weighted by the
/// entry. Exact inverse of to_matrix; loops come from nonzero diagonal.
WeightedDigraph from_matrix(const RationalMatrix& m);

/// Unit pwls digraph of a simple graph: each edge {u,v} becomes the two
/// arcs (u,v) and (v,u) of weight 1. Self-pairs and duplicates throw.
WeightedDigraph from_graph(const std::vector<std::pair<int, int>>& edges, int n);

/// True iff m carries a skew-signing of pwls digraph d: same support,
/// |m(u,v)| = weight(u,v) on every arc, and m(u,v)*m(v,u) < 0.
bool is_valid_skew_signing(const WeightedDigraph& d, const RationalMatrix& m);

/// Throws std::invalid_argument unless is_valid_skew_signing holds.
void require_skew_signing(const WeightedDigraph& d, const RationalMatrix& m);

}  // namespace skewsign
