#include "skewsign/matrix.hpp"

#include <stdexcept>
#include <string>

namespace skewsign {

RationalMatrix::RationalMatrix(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
    entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i) m.set(i, i, 1);
    return m;
}

std::size_t RationalMatrix::index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 1.." + std::to_string(n_));
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
}

bool RationalMatrix::has_zero_diagonal() const {
    for (int i = 1; i <= n_; ++i)
        if (!at(i, i).is_zero()) return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RationalMatrix::is_skew_symmetric() const {
    if (!has_zero_diagonal()) return false;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

}  // namespace skewsign
