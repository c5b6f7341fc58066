#include "hdm/laurent.hpp"
#include "hdm/random.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace hdm;

TEST_CASE("rationals print as p/q and parse back") {
    CHECK(to_string(make_q(6, -4)) == "-3/2");
    CHECK(to_string(Q(5)) == "5/1");
    CHECK(to_string(Q(0)) == "0/1");
    CHECK(parse_rational("-3/2") == make_q(-3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("-0.125") == make_q(-1, 8));
    CHECK(parse_rational("4/6") == make_q(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        Q x = random_rational(rng, 50, 30);
        CHECK(parse_rational(to_string(x)) == x);
    }
}

TEST_CASE("laurent arithmetic") {
    auto z = LaurentPoly2::z(), w = LaurentPoly2::w();
    auto zi = LaurentPoly2::monomial(-1, 0);
    CHECK(z * zi == LaurentPoly2(1));
    auto p = LaurentPoly2(1) + z + w;
    auto sq = p * p;
    CHECK(sq.coeff(1, 1) == 2);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.size() == 6);
    CHECK((sq - sq).is_zero());
    CHECK(sq.divide_exact(p) == p);
    CHECK_FALSE((p + LaurentPoly2(1)).divide_exact(z + w + LaurentPoly2(3)).has_value());
    CHECK(p.scale_vars(Q(2), Q(-1)) == LaurentPoly2(1) + LaurentPoly2::monomial(1, 0, Q(2)) - w);
    CHECK(p.eval(Q(2), Q(3)) == 6);
    CHECK(std::abs(p.eval(std::complex<double>(0, 1), std::complex<double>(1, 0)) - std::complex<double>(2, 1)) < 1e-15);
    CHECK(sq.to_string() == "1 + 2*w + w^2 + 2*z + 2*z*w + z^2");
    CHECK((LaurentPoly2::monomial(-1, 2, make_q(-1, 2))).to_string() == "-(1/2)*z^-1*w^2");
}

TEST_CASE("newton polygon of the 20-vertex shape") {
    LaurentPoly2 P;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}, {-1, 2}, {-1, 1}}) P.add_term(i, j, Q(1));
    auto poly = P.newton_polygon();
    CHECK(poly.size() == 6);  // (0,1) is interior
    auto layout = P.newton_layout();
    CHECK(std::get<0>(layout.front()) == -1);
    CHECK(std::is_sorted(layout.begin(), layout.end(), [](auto& a, auto& b) {
        return std::pair{std::get<0>(a), std::get<1>(a)} < std::pair{std::get<0>(b), std::get<1>(b)};
    }));
}

TEST_CASE("polynomial determinant agrees with evaluation at rational points") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        Matrix<LaurentPoly2> m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                LaurentPoly2 p;
                p.add_term(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 2), random_rational(rng));
                p.add_term(0, 0, random_rational(rng));
                m(r, c) = p;
            }
        auto d = det(m);
        for (int k = 0; k < 3; ++k) {
            Q z = random_positive_rational(rng), w = random_positive_rational(rng);
            std::vector<std::vector<Q>> num(n, std::vector<Q>(n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) num[r][c] = m(r, c).eval(z, w);
            CHECK(d.eval(z, w) == oracle::det(num));
        }
    }
}
