#pragma once

#include <vector>

#include "skewsign/rational.hpp"

namespace skewsign {

/// Dense square matrix of exact rationals. Rows and columns are addressed
/// 1-based, matching vertex indices throughout the library.
class RationalMatrix {
public:
    explicit RationalMatrix(int n);
    static RationalMatrix identity(int n);

    int size() const { return n_; }

    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, Rational v) { entries_[index(i, j)] = std::move(v); }

    bool has_zero_diagonal() const;
    bool is_symmetric() const;
    bool is_skew_symmetric() const;  // m(i,j) == -m(j,i) for all i,j (zero diagonal)

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int i, int j) const;
    int n_;
    std::vector<Rational> entries_;
};

}  // namespace skewsign
