#include "skewsign/json_report.hpp"

#include <cstdint>
#include <cstdio>

#include "skewsign/wdg_io.hpp"

namespace skewsign {

ordered_json poly_json(const CharPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& a : p.coeffs()) coeffs.push_back(a.str());
    return ordered_json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

ordered_json cycle_json(const Cycle& c) {
    return ordered_json(c.vertices());
}

namespace {

ordered_json mu_json(const std::optional<ScalingCertificate>& cert) {
    if (!cert) return nullptr;
    ordered_json mu = ordered_json::array();
    for (const Rational& value : cert->mu) mu.push_back(value.str());
    return mu;
}

ordered_json asymmetry_json(const AsymmetricCycle& w) {
    return ordered_json{{"cycle", cycle_json(w.cycle)},
                        {"forward", w.forward.str()},
                        {"reverse", w.reverse.str()}};
}

}  // namespace

ordered_json symmetry_json(const SymmetryVerdict& v) {
    ordered_json witness = v.witness ? asymmetry_json(*v.witness) : ordered_json(nullptr);
    return ordered_json{{"symmetric", v.is_cycle_symmetric},
                        {"mu", mu_json(v.certificate)},
                        {"witness", std::move(witness)}};
}

ordered_json verdict_json(const InvarianceVerdict& v) {
    ordered_json witness(nullptr);
    if (v.even_cycle_witness)
        witness = ordered_json{{"type", "even-cycle"}, {"cycle", cycle_json(*v.even_cycle_witness)}};
    else if (v.asymmetry_witness)
        witness = ordered_json{{"type", "asymmetric-cycle"},
                               {"cycle", cycle_json(v.asymmetry_witness->cycle)},
                               {"forward", v.asymmetry_witness->forward.str()},
                               {"reverse", v.asymmetry_witness->reverse.str()}};
    ordered_json out;
    out["invariant"] = v.invariant;
    out["common_poly"] = v.common_poly ? poly_json(*v.common_poly) : ordered_json(nullptr);
    out["mu"] = mu_json(v.certificate);
    out["witness"] = std::move(witness);
    return out;
}

ordered_json brute_json(const BruteForceReport& r) {
    ordered_json polys = ordered_json::array();
    for (const CharPolynomial& p : r.polys) polys.push_back(poly_json(p));
    ordered_json distinguishing(nullptr);
    if (r.distinguishing)
        distinguishing = ordered_json{{"first", r.distinguishing->first.bits()},
                                      {"second", r.distinguishing->second.bits()}};
    return ordered_json{{"invariant", r.invariant},
                        {"signings", r.signings_total},
                        {"polys", std::move(polys)},
                        {"distinguishing", std::move(distinguishing)}};
}

ordered_json validation_json(const ValidationReport& r) {
    ordered_json out;
    out["ok"] = r.ok;
    if (!r.ok) {
        ordered_json violations = ordered_json::array();
        for (const Violation& v : r.violations) violations.push_back(v.message());
        out["violations"] = std::move(violations);
    }
    return out;
}

std::string input_digest(const WeightedDigraph& d) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : serialize_wdg(d)) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

ordered_json make_report(const std::string& command, const std::string& digest,
                         const std::optional<long long>& seed, ordered_json result,
                         double timing_ms) {
    ordered_json report;
    report["command"] = command;
    report["input_digest"] = digest;
    report["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
    report["result"] = std::move(result);
    report["timing_ms"] = timing_ms;
    return report;
}

}  // namespace skewsign
