#pragma once

#include <string>
#include <vector>

#include "skewsign/matrix.hpp"

namespace skewsign {

// Monic polynomial x^n + a_1 x^{n-1} + ... + a_n; the leading 1 is implicit.
class CharPolynomial {
public:
    explicit CharPolynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()); }

    // a_k for k in 1..degree; coeff(0) is the leading 1.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    std::string str() const;

    bool operator==(const CharPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const CharPolynomial& o) const { return !(*this == o); }
    bool operator<(const CharPolynomial& o) const;  // by degree, then coefficients

private:
    std::vector<Rational> coeffs_;
};

// det(xI - m), exact, by the Berkowitz division-free recurrence.
CharPolynomial char_poly(const RationalMatrix& m);

// (-1)^n * a_n.
Rational determinant(const RationalMatrix& m);

}  // namespace skewsign
