#include "hdm/catalog.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/kasteleyn.hpp"
#include "hdm/random.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace hdm;

namespace {

std::vector<std::vector<Q>> rows_of(const QMatrix& m) {
    std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    return a;
}

}  // namespace

TEST_CASE("assigned signs satisfy the face rule") {
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        auto g = random_planar_bipartite(rng);
        auto s = assign_signs(g);
        CHECK(s.sign.size() == g.edges.size());
        CHECK(check_signs(g, s).empty());
    }
    auto t = honeycomb_torus().g;
    CHECK(check_signs(t, assign_signs(t)).empty());
}

TEST_CASE("two-square graph: only F negative is a valid choice") {
    auto g = two_square_web_graph();
    KasteleynSigns s{{1, 1, 1, 1, 1, -1, 1}};
    CHECK(check_signs(g, s).empty());
    s.sign[5] = 1;
    CHECK_FALSE(check_signs(g, s).empty());
}

TEST_CASE("block determinant against elimination") {
    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        auto g = random_planar_bipartite(rng);
        auto c = random_connection(g, rng);
        auto k = build_block_kasteleyn(g, c, assign_signs(g));
        if (k.Kt.rows() != k.Kt.cols()) {
            CHECK_THROWS_AS(det_expanded(k), InfeasibleMultiplicities);
            continue;
        }
        CHECK(det_expanded(k) == oracle::det(rows_of(k.Kt)));
    }
}

TEST_CASE("determinant equals the signed trace sum on small graphs") {
    Rng rng(44);
    for (int i = 0; i < 25; ++i) {
        auto g = random_planar_bipartite(rng);
        auto r = verify_main_theorem(g, random_connection(g, rng));
        CHECK(r.holds());
    }
    auto r = verify_main_theorem(two_square_web_graph(), identity_connection(two_square_web_graph()));
    CHECK(r.multiwebs == 3);
    CHECK(r.holds());
}

TEST_CASE("torus determinant evaluates like the numeric matrix") {
    Rng rng(3);
    auto t = honeycomb_torus();
    HoneycombSpec h;
    h.A = QMatrix{{Q(2), Q(1)}, {Q(-1), Q(3)}};
    h.B = QMatrix{{Q(1), make_q(1, 2)}, {Q(4), Q(5)}};
    auto c = honeycomb_connection(h, t);
    auto k = build_block_kasteleyn_torus(t.g, c, assign_signs(t.g));
    auto P = det_expanded(k);
    for (int i = 0; i < 5; ++i) {
        Q z = random_positive_rational(rng), w = random_positive_rational(rng);
        std::vector<std::vector<Q>> num(k.Kt.rows(), std::vector<Q>(k.Kt.cols()));
        for (std::size_t r = 0; r < k.Kt.rows(); ++r)
            for (std::size_t cc = 0; cc < k.Kt.cols(); ++cc) num[r][cc] = k.Kt(r, cc).eval(z, w);
        CHECK(P.eval(z, w) == oracle::det(num));
    }
}
