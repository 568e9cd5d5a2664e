#include "skewsign/cycles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewsign {

Cycle::Cycle(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty()) throw std::invalid_argument("cycle needs at least one vertex");
    std::set<int> seen(verts_.begin(), verts_.end());
    if (seen.size() != verts_.size())
        throw std::invalid_argument("cycle vertices must be distinct");
    auto min_it = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), min_it, verts_.end());
}

std::vector<Arc> Cycle::arcs() const {
    std::vector<Arc> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        out.push_back({verts_[i], verts_[(i + 1) % verts_.size()]});
    return out;
}

std::string Cycle::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) out << ",";
        out << verts_[i];
    }
    out << ")";
    return out.str();
}

bool Cycle::operator<(const Cycle& o) const {
    if (length() != o.length()) return length() < o.length();
    return verts_ < o.verts_;
}

Cycle reverse_cycle(const Cycle& c) {
    std::vector<int> v(c.vertices().rbegin(), c.vertices().rend());
    return Cycle(std::move(v));
}

Rational cycle_weight(const RationalMatrix& m, const Cycle& c) {
    Rational w(1);
    for (auto [u, v] : c.arcs()) w *= m.at(u, v);
    return w;
}

Rational cycle_weight(const WeightedDigraph& d, const Cycle& c) {
    Rational w(1);
    for (auto [u, v] : c.arcs()) {
        if (!d.has_arc(u, v))
            throw std::invalid_argument("cycle uses absent arc (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        w *= d.weight(u, v);
    }
    return w;
}

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::function<bool(int, int)>& has_arc) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (has_arc(u, v)) adj[static_cast<std::size_t>(u)].push_back(v);
    return adj;
}

// Roots each cycle at its minimum vertex: DFS from root r over vertices > r
// only, so every cycle is produced exactly once, already canonical. The visit
// callback returns false to stop early.
void scan_cycles(const std::vector<std::vector<int>>& adj, int n, int max_len,
                 const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
    bool stop = false;
    std::function<void(int, int)> extend = [&](int root, int u) {
        if (stop) return;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (stop) return;
            if (v == root) {
                if (!visit(path)) stop = true;
                continue;
            }
            if (v < root || on_path[static_cast<std::size_t>(v)]) continue;
            if (static_cast<int>(path.size()) == max_len) continue;
            path.push_back(v);
            on_path[static_cast<std::size_t>(v)] = 1;
            extend(root, v);
            on_path[static_cast<std::size_t>(v)] = 0;
            path.pop_back();
        }
    };
    for (int r = 1; r <= n && !stop; ++r) {
        path.assign(1, r);
        on_path.assign(static_cast<std::size_t>(n) + 1, 0);
        on_path[static_cast<std::size_t>(r)] = 1;
        extend(r, r);
    }
}

std::vector<Cycle> enumerate_impl(int n, int max_len,
                                  const std::function<bool(int, int)>& has_arc) {
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    auto adj = adjacency(n, has_arc);
    std::vector<Cycle> out;
    scan_cycles(adj, n, max_len, [&](const std::vector<int>& path) {
        out.push_back(Cycle(path));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const WeightedDigraph& d, int max_len) {
    return enumerate_impl(d.vertex_count(), max_len,
                          [&](int u, int v) { return d.has_arc(u, v); });
}

std::vector<Cycle> enumerate_cycles(const RationalMatrix& m, int max_len) {
    return enumerate_impl(m.size(), max_len,
                          [&](int u, int v) { return !m.at(u, v).is_zero(); });
}

std::optional<Cycle> find_even_cycle(const WeightedDigraph& d) {
    int n = d.vertex_count();
    auto adj = adjacency(n, [&](int u, int v) { return d.has_arc(u, v); });
    for (int len = 4; len <= n; len += 2) {
        std::optional<Cycle> found;
        scan_cycles(adj, n, len, [&](const std::vector<int>& path) {
            if (static_cast<int>(path.size()) != len) return true;
            found = Cycle(path);
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace skewsign
