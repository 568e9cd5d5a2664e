#include "skewsign/subdigraphs.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "skewsign/errors.hpp"

namespace skewsign {

LinearSubdigraph::LinearSubdigraph(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
    std::sort(cycles_.begin(), cycles_.end());
    covered_ = 0;
    std::uint64_t used = 0;
    for (const Cycle& c : cycles_) {
        for (int v : c.vertices()) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (used & bit) throw std::invalid_argument("cycles share vertex " + std::to_string(v));
            used |= bit;
        }
        covered_ += c.length();
    }
}

bool LinearSubdigraph::is_even_linear() const {
    for (const Cycle& c : cycles_)
        if (c.length() % 2 != 0) return false;
    return true;
}

Rational subdigraph_weight(const RationalMatrix& m, const LinearSubdigraph& l) {
    Rational w(1);
    for (const Cycle& c : l.cycles()) w *= cycle_weight(m, c);
    return w;
}

Rational digon_cover_product(const WeightedDigraph& d, const DigonCover& cover) {
    Rational p(1);
    for (auto [u, v] : cover.digons) {
        if (!d.has_arc(u, v) || !d.has_arc(v, u))
            throw std::invalid_argument("cover uses absent digon {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
        p *= d.weight(u, v) * d.weight(v, u);
    }
    return p;
}

namespace {

void check_k(int k, int n) {
    if (k < 1 || k > n)
        throw std::invalid_argument("k must be in 1.." + std::to_string(n) + ", got " +
                                    std::to_string(k));
}

std::uint64_t vertex_mask(const Cycle& c) {
    std::uint64_t mask = 0;
    for (int v : c.vertices()) mask |= std::uint64_t{1} << v;
    return mask;
}

}  // namespace

std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(const RationalMatrix& m, int k,
                                                           bool even_only, int vertex_cap) {
    int n = m.size();
    check_k(k, n);
    if (vertex_cap > 62) vertex_cap = 62;
    if (n > vertex_cap) throw CapExceededError("vertex", n, vertex_cap);

    std::vector<Cycle> pool = enumerate_cycles(m, k);
    if (even_only)
        std::erase_if(pool, [](const Cycle& c) { return c.length() % 2 != 0; });

    // Cycles available at each root vertex (their minimum, by canonical form).
    std::vector<std::vector<std::size_t>> by_root(static_cast<std::size_t>(n) + 1);
    std::vector<std::uint64_t> masks(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        masks[i] = vertex_mask(pool[i]);
        by_root[static_cast<std::size_t>(pool[i].vertices()[0])].push_back(i);
    }

    std::vector<LinearSubdigraph> out;
    std::vector<Cycle> chosen;
    std::uint64_t used = 0;
    // Walks vertices in ascending order; each is either left uncovered or
    // becomes the minimum vertex of a newly chosen cycle.
    std::function<void(int, int)> extend = [&](int v, int remaining) {
        if (remaining == 0) {
            out.push_back(LinearSubdigraph(chosen));
            return;
        }
        if (v > n || n - v + 1 < remaining) return;
        if (!(used & (std::uint64_t{1} << v))) {
            for (std::size_t i : by_root[static_cast<std::size_t>(v)]) {
                if (pool[i].length() > remaining || (masks[i] & used)) continue;
                chosen.push_back(pool[i]);
                used |= masks[i];
                extend(v + 1, remaining - pool[i].length());
                used &= ~masks[i];
                chosen.pop_back();
            }
        }
        extend(v + 1, remaining);
    };
    extend(1, k);
    std::sort(out.begin(), out.end());
    return out;
}

Rational coefficient_via_subdigraphs(const RationalMatrix& m, int k, int vertex_cap) {
    Rational sum;
    for (const LinearSubdigraph& l : enumerate_linear_subdigraphs(m, k, false, vertex_cap)) {
        Rational term = subdigraph_weight(m, l);
        if (l.num_cycles() % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

Rational skew_coefficient_via_even_subdigraphs(const RationalMatrix& m, int k, int vertex_cap) {
    if (!m.is_skew_symmetric())
        throw std::invalid_argument("matrix is not skew-symmetric");
    check_k(k, m.size());
    if (k % 2 != 0) return Rational(0);
    Rational sum;
    for (const LinearSubdigraph& l : enumerate_linear_subdigraphs(m, k, true, vertex_cap)) {
        Rational term = subdigraph_weight(m, l);
        if (l.num_cycles() % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

std::vector<DigonCover> enumerate_digon_covers(const WeightedDigraph& d, int k) {
    if (k % 2 != 0) throw std::invalid_argument("digon covers need even k");
    if (k < 1) throw std::invalid_argument("k must be positive, got " + std::to_string(k));
    if (k > d.vertex_count()) return {};  // cannot cover more vertices than exist
    std::vector<std::pair<int, int>> digons = d.digons();
    std::vector<std::uint64_t> masks(digons.size());
    for (std::size_t i = 0; i < digons.size(); ++i)
        masks[i] = (std::uint64_t{1} << digons[i].first) | (std::uint64_t{1} << digons[i].second);

    std::vector<DigonCover> out;
    std::vector<std::pair<int, int>> chosen;
    std::uint64_t used = 0;
    std::size_t want = static_cast<std::size_t>(k) / 2;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (chosen.size() == want) {
            out.push_back(DigonCover{chosen});
            return;
        }
        for (std::size_t i = from; i < digons.size(); ++i) {
            if (masks[i] & used) continue;
            chosen.push_back(digons[i]);
            used |= masks[i];
            extend(i + 1);
            used &= ~masks[i];
            chosen.pop_back();
        }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<Cycle>, std::vector<Cycle>> partition_cycles_by_sign(
    const WeightedDigraph& d, const RationalMatrix& signed_weights, int k) {
    require_skew_signing(d, signed_weights);
    check_k(k, d.vertex_count());
    std::pair<std::vector<Cycle>, std::vector<Cycle>> parts;
    for (const Cycle& c : enumerate_cycles(d, k)) {
        if (c.length() != k) continue;
        (cycle_weight(signed_weights, c).sign() > 0 ? parts.first : parts.second).push_back(c);
    }
    return parts;
}

}  // namespace skewsign
