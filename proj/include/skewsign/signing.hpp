#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewsign/charpoly.hpp"
#include "skewsign/cycle_symmetry.hpp"
#include "skewsign/digraph.hpp"
#include "skewsign/errors.hpp"

namespace skewsign {

inline constexpr int kDefaultSigningCap = 20;

// One sign per unordered digon {u,v} with u < v: +1 keeps the forward arc,
// so the signed weights are w'(uv) = s * w(uv) and w'(vu) = -s * w(vu).
struct SkewSigning {
    std::vector<std::pair<int, int>> digons;  // sorted
    std::vector<int> signs;                   // parallel, each +1 or -1

    // '1' for +1, '0' for -1, one character per digon in sorted order.
    std::string bits() const;

    static SkewSigning all_plus(const WeightedDigraph& d);
    static SkewSigning from_bits(const WeightedDigraph& d, const std::string& bits);
};

// The 2^m signings of d in binary-counter order: index 0 is all-plus, and
// bit i of the index flips digon i to -1. Constructing the range checks the
// digon count against the cap and throws CapExceededError beyond it.
class SigningRange {
public:
    explicit SigningRange(const WeightedDigraph& d, int digon_cap = kDefaultSigningCap);

    std::uint64_t size() const { return std::uint64_t{1} << digons_.size(); }
    SkewSigning at(std::uint64_t index) const;

    class iterator {
    public:
        iterator(const SigningRange* range, std::uint64_t index) : range_(range), index_(index) {}
        SkewSigning operator*() const { return range_->at(index_); }
        iterator& operator++() { ++index_; return *this; }
        bool operator!=(const iterator& o) const { return index_ != o.index_; }

    private:
        const SigningRange* range_;
        std::uint64_t index_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, size()); }

private:
    std::vector<std::pair<int, int>> digons_;
};

// Weighted adjacency matrix of (D, w'). The signing's digon set must be
// exactly the digraph's.
RationalMatrix apply_signing(const WeightedDigraph& d, const SkewSigning& s);

struct BruteForceReport {
    bool invariant = false;
    std::vector<CharPolynomial> polys;  // distinct, sorted
    // First signing together with the earliest later signing whose
    // polynomial differs; absent when invariant.
    std::optional<std::pair<SkewSigning, SkewSigning>> distinguishing;
    std::uint64_t signings_total = 0;
};

// Computes the characteristic polynomial of every signing.
BruteForceReport brute_force_invariance(const WeightedDigraph& d,
                                        int digon_cap = kDefaultSigningCap);

struct InvarianceVerdict {
    bool invariant = false;
    std::optional<CharPolynomial> common_poly;
    std::optional<ScalingCertificate> certificate;
    std::optional<Cycle> even_cycle_witness;      // even length >= 4
    std::optional<AsymmetricCycle> asymmetry_witness;
};

// One signing's polynomial is every signing's polynomial exactly when the
// digraph has no even cycle of length >= 4 and admits a scaling certificate.
// Checks those two conditions directly; never enumerates signings.
InvarianceVerdict decide_invariance(const WeightedDigraph& d);

class NotInvariantError : public std::runtime_error {
public:
    explicit NotInvariantError(InvarianceVerdict verdict);
    const InvarianceVerdict& verdict() const { return verdict_; }

private:
    InvarianceVerdict verdict_;
};

// The common polynomial of an invariant digraph: x^n plus, for even k, the
// coefficient b_k = sum over digon covers of k vertices of the product
// w(uv) * w(vu) across the cover; odd coefficients vanish. Throws
// NotInvariantError (carrying the verdict) when the conditions fail.
CharPolynomial invariant_char_poly(const WeightedDigraph& d);

struct OrientationReport {
    bool all_same = false;
    std::uint64_t distinct_poly_count = 0;
    std::vector<CharPolynomial> polys;  // distinct, sorted
};

// Orientations of a simple graph, identified with skew-signings of the unit
// pwls digraph on the same edges.
OrientationReport orientations_of_graph(const std::vector<std::pair<int, int>>& edges, int n,
                                        int edge_cap = kDefaultSigningCap);

// Coefficient b_q of char_poly(apply_signing(d, s)) by cycle-sign bookkeeping:
//   b_q = -sum over C+ of w(C) + sum over C- of w(C)
//         [+ sum over digon covers of q vertices, when q is even and >= 4]
// where C+/C- split the length-q cycles by the sign of their signed product.
// Requires d (<=q-1)-cycle-symmetric with no even cycle of length in 4..q-1;
// at q = 2 the digon sum itself is the C- sum, so no separate cover term.
Rational signed_cycle_coefficient(const WeightedDigraph& d, const SkewSigning& s, int q);

}  // namespace skewsign
