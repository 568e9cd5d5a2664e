#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "skewsign/charpoly.hpp"
#include "skewsign/cycle_symmetry.hpp"
#include "skewsign/cycles.hpp"
#include "skewsign/digraph.hpp"
#include "skewsign/signing.hpp"

namespace skewsign {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const CharPolynomial& p);       // {"degree": n, "coeffs": ["a1", ...]}
ordered_json cycle_json(const Cycle& c);               // [v1, v2, ...]
ordered_json symmetry_json(const SymmetryVerdict& v);  // {"symmetric", "mu", "witness"}
ordered_json verdict_json(const InvarianceVerdict& v); // {"invariant", "common_poly", "mu", "witness"}
ordered_json brute_json(const BruteForceReport& r);    // {"invariant", "signings", "polys", "distinguishing"}
ordered_json validation_json(const ValidationReport& r);

// "fnv1a64:" followed by 16 hex digits of the canonical serialization hash.
std::string input_digest(const WeightedDigraph& d);

// Stable envelope around a command's result. Fields in fixed order; only
// timing_ms varies between identical runs.
ordered_json make_report(const std::string& command, const std::string& digest,
                         const std::optional<long long>& seed, ordered_json result,
                         double timing_ms);

}  // namespace skewsign
