#include "skewsign/signing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "skewsign/subdigraphs.hpp"

namespace skewsign {

std::string SkewSigning::bits() const {
    std::string out(signs.size(), '0');
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] > 0) out[i] = '1';
    return out;
}

SkewSigning SkewSigning::all_plus(const WeightedDigraph& d) {
    SkewSigning s{d.digons(), {}};
    s.signs.assign(s.digons.size(), 1);
    return s;
}

SkewSigning SkewSigning::from_bits(const WeightedDigraph& d, const std::string& bits) {
    SkewSigning s{d.digons(), {}};
    if (bits.size() != s.digons.size())
        throw std::invalid_argument("signing needs " + std::to_string(s.digons.size()) +
                                    " bits, got " + std::to_string(bits.size()));
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("signing bits must be 0 or 1");
        s.signs.push_back(c == '1' ? 1 : -1);
    }
    return s;
}

SigningRange::SigningRange(const WeightedDigraph& d, int digon_cap) : digons_(d.digons()) {
    if (digon_cap > 62) digon_cap = 62;
    auto count = static_cast<long long>(digons_.size());
    if (count > digon_cap) throw CapExceededError("digon", count, digon_cap);
}

SkewSigning SigningRange::at(std::uint64_t index) const {
    SkewSigning s{digons_, {}};
    for (std::size_t i = 0; i < digons_.size(); ++i)
        s.signs.push_back((index >> i) & 1 ? -1 : 1);
    return s;
}

RationalMatrix apply_signing(const WeightedDigraph& d, const SkewSigning& s) {
    if (s.digons != d.digons() || s.signs.size() != s.digons.size())
        throw std::invalid_argument("signing digon set does not match the digraph");
    RationalMatrix m(d.vertex_count());
    for (std::size_t i = 0; i < s.digons.size(); ++i) {
        auto [u, v] = s.digons[i];
        m.set(u, v, Rational(s.signs[i]) * d.weight(u, v));
        m.set(v, u, Rational(-s.signs[i]) * d.weight(v, u));
    }
    return m;
}

namespace {

void require_pwls(const WeightedDigraph& d) {
    if (!d.is_pwls()) throw std::invalid_argument("input digraph is not pwls");
}

}  // namespace

BruteForceReport brute_force_invariance(const WeightedDigraph& d, int digon_cap) {
    require_pwls(d);
    SigningRange range(d, digon_cap);
    BruteForceReport report;
    report.signings_total = range.size();
    std::map<CharPolynomial, std::uint64_t> first_index;  // poly -> earliest signing
    for (std::uint64_t i = 0; i < range.size(); ++i) {
        CharPolynomial p = char_poly(apply_signing(d, range.at(i)));
        first_index.emplace(std::move(p), i);
    }
    for (const auto& [poly, idx] : first_index) report.polys.push_back(poly);
    report.invariant = report.polys.size() == 1;
    if (!report.invariant) {
        std::uint64_t other = range.size();
        for (const auto& [poly, idx] : first_index)
            if (idx != 0 && idx < other) other = idx;
        report.distinguishing = std::make_pair(range.at(0), range.at(other));
    }
    return report;
}

namespace {

CharPolynomial digon_cover_poly(const WeightedDigraph& d) {
    int n = d.vertex_count();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n));
    for (int k = 2; k <= n; k += 2) {
        Rational b;
        for (const DigonCover& cover : enumerate_digon_covers(d, k))
            b += digon_cover_product(d, cover);
        coeffs[static_cast<std::size_t>(k) - 1] = std::move(b);
    }
    return CharPolynomial(std::move(coeffs));
}

}  // namespace

InvarianceVerdict decide_invariance(const WeightedDigraph& d) {
    require_pwls(d);
    InvarianceVerdict verdict;
    if (auto even = find_even_cycle(d)) {
        verdict.even_cycle_witness = std::move(even);
        return verdict;
    }
    SymmetryVerdict symmetry = build_scaling_certificate(d);
    if (!symmetry.is_cycle_symmetric) {
        verdict.asymmetry_witness = std::move(symmetry.witness);
        return verdict;
    }
    verdict.invariant = true;
    verdict.certificate = std::move(symmetry.certificate);
    verdict.common_poly = digon_cover_poly(d);
    return verdict;
}

NotInvariantError::NotInvariantError(InvarianceVerdict verdict)
    : std::runtime_error(verdict.even_cycle_witness
                             ? "not invariant: even cycle " + verdict.even_cycle_witness->str()
                             : "not invariant: asymmetric cycle " +
                                   verdict.asymmetry_witness->cycle.str()),
      verdict_(std::move(verdict)) {}

CharPolynomial invariant_char_poly(const WeightedDigraph& d) {
    InvarianceVerdict verdict = decide_invariance(d);
    if (!verdict.invariant) throw NotInvariantError(std::move(verdict));
    return *std::move(verdict.common_poly);
}

OrientationReport orientations_of_graph(const std::vector<std::pair<int, int>>& edges, int n,
                                        int edge_cap) {
    BruteForceReport brute = brute_force_invariance(from_graph(edges, n), edge_cap);
    OrientationReport report;
    report.all_same = brute.invariant;
    report.distinct_poly_count = brute.polys.size();
    report.polys = std::move(brute.polys);
    return report;
}

Rational signed_cycle_coefficient(const WeightedDigraph& d, const SkewSigning& s, int q) {
    require_pwls(d);
    if (q < 2 || q > d.vertex_count())
        throw std::invalid_argument("q must be in 2.." + std::to_string(d.vertex_count()));
    if (q >= 3) {
        SymmetryVerdict symmetry = cycle_symmetry_up_to(d, q - 1);
        if (!symmetry.is_cycle_symmetric)
            throw std::invalid_argument(
                "hypothesis violated: not (<=" + std::to_string(q - 1) +
                ")-cycle-symmetric, cycle " + symmetry.witness->cycle.str());
        for (const Cycle& c : enumerate_cycles(d, q - 1))
            if (c.length() >= 4 && c.length() % 2 == 0)
                throw std::invalid_argument("hypothesis violated: even cycle of length " +
                                            std::to_string(c.length()) + " below q");
    }
    RationalMatrix signed_weights = apply_signing(d, s);
    auto [positive, negative] = partition_cycles_by_sign(d, signed_weights, q);
    Rational b;
    for (const Cycle& c : positive) b -= cycle_weight(d, c);
    for (const Cycle& c : negative) b += cycle_weight(d, c);
    if (q >= 4 && q % 2 == 0)
        for (const DigonCover& cover : enumerate_digon_covers(d, q))
            b += digon_cover_product(d, cover);
    return b;
}

}  // namespace skewsign
