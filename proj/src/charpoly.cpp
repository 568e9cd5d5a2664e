#include "skewsign/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace skewsign {

CharPolynomial::CharPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

const Rational& CharPolynomial::coeff(int k) const {
    static const Rational one(1);
    if (k == 0) return one;
    if (k < 0 || k > degree()) throw std::out_of_range("coefficient index " + std::to_string(k));
    return coeffs_[static_cast<std::size_t>(k) - 1];
}

std::string CharPolynomial::str() const {
    std::ostringstream out;
    int n = degree();
    if (n == 0) return "1";
    out << "x";
    if (n > 1) out << "^" << n;
    for (int k = 1; k <= n; ++k) {
        const Rational& a = coeffs_[static_cast<std::size_t>(k) - 1];
        if (a.is_zero()) continue;
        out << (a.sign() > 0 ? " + " : " - ");
        Rational mag = a.abs();
        int e = n - k;
        if (mag != Rational(1) || e == 0) out << mag.str();
        if (mag != Rational(1) && e > 0) out << "*";
        if (e >= 1) out << "x";
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

bool CharPolynomial::operator<(const CharPolynomial& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return coeffs_ < o.coeffs_;
}

CharPolynomial char_poly(const RationalMatrix& m) {
    int n = m.size();
    // Berkowitz: grow the leading principal submatrix one row at a time.
    // p holds the char poly of the current r x r block, leading coefficient first.
    std::vector<Rational> p{Rational(1)};
    for (int r = 0; r < n; ++r) {
        // q[0]=1, q[1]=-d, q[j]=-(R M^{j-2} C) with d the new diagonal entry,
        // R the new row, C the new column, M the old block.
        std::vector<Rational> q(static_cast<std::size_t>(r) + 2);
        q[0] = Rational(1);
        q[1] = -m.at(r + 1, r + 1);
        std::vector<Rational> w(static_cast<std::size_t>(r));
        for (int i = 1; i <= r; ++i) w[static_cast<std::size_t>(i) - 1] = m.at(i, r + 1);
        for (int j = 2; j <= r + 1; ++j) {
            Rational dot;
            for (int i = 1; i <= r; ++i) dot += m.at(r + 1, i) * w[static_cast<std::size_t>(i) - 1];
            q[static_cast<std::size_t>(j)] = -dot;
            if (j == r + 1) break;
            std::vector<Rational> next(static_cast<std::size_t>(r));
            for (int i = 1; i <= r; ++i) {
                Rational s;
                for (int t = 1; t <= r; ++t) s += m.at(i, t) * w[static_cast<std::size_t>(t) - 1];
                next[static_cast<std::size_t>(i) - 1] = std::move(s);
            }
            w = std::move(next);
        }
        std::vector<Rational> fresh(static_cast<std::size_t>(r) + 2);
        for (std::size_t i = 0; i < fresh.size(); ++i)
            for (std::size_t j = 0; j < p.size() && j <= i; ++j)
                if (i - j < q.size()) fresh[i] += q[i - j] * p[j];
        p = std::move(fresh);
    }
    return CharPolynomial(std::vector<Rational>(p.begin() + 1, p.end()));
}

Rational determinant(const RationalMatrix& m) {
    if (m.size() == 0) return Rational(1);
    CharPolynomial p = char_poly(m);
    Rational a_n = p.coeff(p.degree());
    return m.size() % 2 == 0 ? a_n : -a_n;
}

}  // namespace skewsign
