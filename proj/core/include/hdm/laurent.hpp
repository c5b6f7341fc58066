#pragma once

#include "hdm/matrix.hpp"
#include "hdm/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hdm {

// Bivariate Laurent polynomial in z, w with rational coefficients.
class LaurentPoly2 {
public:
    using Exp = std::pair<int, int>;
    using Terms = std::map<Exp, Q>;

    LaurentPoly2() = default;
    LaurentPoly2(int c) { add_term(0, 0, Q(c)); }
    LaurentPoly2(const Q& c) { add_term(0, 0, c); }

    static LaurentPoly2 monomial(int i, int j, const Q& c = Q(1)) {
        LaurentPoly2 p;
        p.add_term(i, j, c);
        return p;
    }
    static LaurentPoly2 z() { return monomial(1, 0); }
    static LaurentPoly2 w() { return monomial(0, 1); }

    void add_term(int i, int j, const Q& c);
    Q coeff(int i, int j) const;
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    LaurentPoly2& operator*=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(LaurentPoly2 a, const LaurentPoly2& b) { return a *= b; }
    LaurentPoly2 operator-() const;
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.t_ == b.t_; }

    std::complex<double> eval(std::complex<double> z, std::complex<double> w) const;
    Q eval(const Q& z, const Q& w) const;  // z, w nonzero when negative exponents occur

    // P(sz·z, sw·w)
    LaurentPoly2 scale_vars(const Q& sz, const Q& sw) const;
    LaurentPoly2 substitute_signs(int sz, int sw) const { return scale_vars(Q(sz), Q(sw)); }

    // Exact quotient, or nullopt when d does not divide *this.
    std::optional<LaurentPoly2> divide_exact(const LaurentPoly2& d) const;

    // Vertices of the Newton polygon, counterclockwise from the lex-smallest exponent.
    std::vector<Exp> newton_polygon() const;
    // (i, j, coeff) sorted lexicographically.
    std::vector<std::tuple<int, int, Q>> newton_layout() const;

    std::string to_string() const;

private:
    Terms t_;
};

LaurentPoly2 det(const Matrix<LaurentPoly2>& m);

}  // namespace hdm
