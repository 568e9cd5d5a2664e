#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewsign/cycles.hpp"
#include "skewsign/digraph.hpp"
#include "skewsign/matrix.hpp"

namespace skewsign {

// Positive diagonal scaling in squared form: mu[v] = (Delta_vv)^2. Whenever a
// certificate is produced, a_ij * mu[j] = a_ji * mu[i] holds on every arc,
// which is exactly "Delta^-1 A Delta is symmetric" without taking roots.
struct ScalingCertificate {
    std::vector<Rational> mu;  // indexed by vertex - 1, all positive
};

// A cycle whose weight product differs from its reversal's.
struct AsymmetricCycle {
    Cycle cycle;
    Rational forward;
    Rational reverse;
};

struct SymmetryVerdict {
    bool is_cycle_symmetric = false;
    std::optional<ScalingCertificate> certificate;
    std::optional<AsymmetricCycle> witness;
    // Pair (i,j) with a_ij * a_ji < 0 or exactly one of them zero; only
    // check_matrix_cycle_symmetric can produce this.
    std::optional<std::pair<int, int>> c1_violation;
};

// Full cycle-symmetry of a zero-diagonal square matrix: pairwise products
// must be positive or both entries zero (C1), and every cycle product must
// equal its reversal's (C2, decided via the scaling construction).
// Rejects matrices with a nonzero diagonal entry.
SymmetryVerdict check_matrix_cycle_symmetric(const RationalMatrix& m);

// Spanning-tree construction of the certificate for a pwls digraph: root
// each component at its lowest vertex with mu[root] = 1, propagate
// mu[v] = mu[u] * a_vu / a_uv along tree arcs, then verify every arc. A
// failing arc closes a fundamental cycle, returned as the witness.
SymmetryVerdict build_scaling_certificate(const WeightedDigraph& d);

// Checks omega(C) = omega(C*) for every cycle of length <= q. Loops and
// digons hold trivially and are skipped. With q >= n on a pwls digraph the
// check is complete and a positive verdict carries the certificate.
SymmetryVerdict cycle_symmetry_up_to(const WeightedDigraph& d, int q);

// Exact squares of the symmetrized weights: squared(u,v) = omega(uv)*omega(vu)
// for each arc, a symmetric table. approx() renders the square root.
struct SymmetrizedWeights {
    RationalMatrix squared;
    double approx(int u, int v) const;
};

SymmetrizedWeights symmetrize(const WeightedDigraph& d);

// Skew counterpart: carries the sign of the signed weight alongside the same
// squared magnitudes, so sign(u,v) = -sign(v,u) and squares are symmetric.
// The rendered float matrix is skew-symmetric.
struct SkewSymmetrizedWeights {
    RationalMatrix squared;
    std::vector<std::vector<int>> signs;  // [u][v] in {-1, 0, +1}, 1-based
    int sign(int u, int v) const { return signs[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    double approx(int u, int v) const;
};

SkewSymmetrizedWeights skew_symmetrize(const WeightedDigraph& d,
                                       const RationalMatrix& signed_weights);

}  // namespace skewsign
