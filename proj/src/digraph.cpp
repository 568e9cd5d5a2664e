#include "skewsign/digraph.hpp"

#include <stdexcept>

namespace skewsign {

namespace {
std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}
}  // namespace

WeightedDigraph::WeightedDigraph(int n, std::vector<std::pair<Arc, Rational>> arcs) : n_(n) {
    if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
    for (auto& [arc, w] : arcs) {
        auto [u, v] = arc;
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("arc " + arc_str(arc) + " outside vertex range 1.." +
                                        std::to_string(n));
        if (w.is_zero()) throw std::invalid_argument("zero weight on arc " + arc_str(arc));
        if (!arcs_.emplace(arc, std::move(w)).second)
            throw std::invalid_argument("duplicate arc " + arc_str(arc));
    }
    pwls_validated_ = true;
    for (const auto& [arc, w] : arcs_) {
        if (arc.first == arc.second || w.sign() <= 0 || !has_arc(arc.second, arc.first)) {
            pwls_validated_ = false;
            break;
        }
    }
}

const Rational& WeightedDigraph::weight(int u, int v) const {
    static const Rational zero;
    auto it = arcs_.find({u, v});
    return it == arcs_.end() ? zero : it->second;
}

std::vector<std::pair<int, int>> WeightedDigraph::digons() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [arc, w] : arcs_) {
        auto [u, v] = arc;
        if (u < v && has_arc(v, u)) out.emplace_back(u, v);
    }
    return out;  // map iteration keeps them sorted
}

std::string Violation::message() const {
    switch (kind) {
        case Kind::Loop:
            return "loop arc " + arc_str(arc);
        case Kind::NonpositiveWeight:
            return "nonpositive weight on " + arc_str(arc);
        case Kind::MissingReverse:
            return "missing reverse arc " + arc_str({arc.second, arc.first});
    }
    return "";
}

ValidationReport validate_pwls(const WeightedDigraph& d) {
    ValidationReport report;
    for (const auto& [arc, w] : d.arcs()) {
        if (arc.first == arc.second)
            report.violations.push_back({Violation::Kind::Loop, arc});
        if (w.sign() <= 0)
            report.violations.push_back({Violation::Kind::NonpositiveWeight, arc});
        if (arc.first != arc.second && !d.has_arc(arc.second, arc.first))
            report.violations.push_back({Violation::Kind::MissingReverse, arc});
    }
    report.ok = report.violations.empty();
    return report;
}

RationalMatrix to_matrix(const WeightedDigraph& d) {
    RationalMatrix m(d.vertex_count());
    for (const auto& [arc, w] : d.arcs()) m.set(arc.first, arc.second, w);
    return m;
}

WeightedDigraph from_matrix(const RationalMatrix& m) {
    std::vector<std::pair<Arc, Rational>> arcs;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j)
            if (!m.at(i, j).is_zero()) arcs.push_back({{i, j}, m.at(i, j)});
    return WeightedDigraph(m.size(), std::move(arcs));
}

WeightedDigraph from_graph(const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<std::pair<Arc, Rational>> arcs;
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("loops not allowed: edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
        arcs.push_back({{u, v}, Rational(1)});
        arcs.push_back({{v, u}, Rational(1)});
    }
    return WeightedDigraph(n, std::move(arcs));  // duplicate edges surface as duplicate arcs
}

bool is_valid_skew_signing(const WeightedDigraph& d, const RationalMatrix& m) {
    if (m.size() != d.vertex_count()) return false;
    std::size_t nonzero = 0;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j)
            if (!m.at(i, j).is_zero()) ++nonzero;
    if (nonzero != d.arc_count()) return false;
    for (const auto& [arc, w] : d.arcs()) {
        const Rational& fwd = m.at(arc.first, arc.second);
        const Rational& rev = m.at(arc.second, arc.first);
        if (fwd.abs() != w.abs()) return false;
        if ((fwd * rev).sign() >= 0) return false;
    }
    return true;
}

void require_skew_signing(const WeightedDigraph& d, const RationalMatrix& m) {
    if (!d.is_pwls()) throw std::invalid_argument("input digraph is not pwls");
    if (!is_valid_skew_signing(d, m))
        throw std::invalid_argument("matrix is not a skew-signing of the digraph");
}

}  // namespace skewsign
