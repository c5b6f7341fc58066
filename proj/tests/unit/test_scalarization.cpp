#include "hdm/h26.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/random.hpp"
#include "hdm/scalarization.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace hdm;

namespace {

H26Weights random_weights(Rng& rng) {
    std::vector<Q> v(9);
    for (auto& x : v) x = random_positive_rational(rng);
    return H26Weights::from_vector(v);
}

std::map<std::vector<int>, Q> brute_fibers(const Scalarization& s) {
    std::map<std::vector<int>, Q> out;
    for (auto& pm : oracle::perfect_matchings(s.Ghat)) {
        std::vector<char> used(s.Ghat.edges.size(), 0);
        Q wt = 1;
        for (int e : pm) {
            used[e] = 1;
            wt *= s.weight[e];
        }
        std::vector<int> m(s.G.edges.size());
        for (std::size_t e = 0; e < m.size(); ++e) m[e] = !used[s.groups[e][0]] + !used[s.groups[e][1]];
        out[m] += wt;
    }
    return out;
}

}  // namespace

TEST_CASE("H26 weights survive the round trip") {
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        auto w = random_weights(rng);
        CHECK(h26_weights(h26_point(w)) == w);
    }
}

TEST_CASE("H26 reduced matrix matches the matching sums") {
    Rng rng(22);
    for (int i = 0; i < 5; ++i) {
        auto w = random_weights(rng);
        auto direct = matching_pluckers(h26_network(w));
        CHECK(proportionality(h26_point(w).plucker, direct) == Q(1));
    }
    auto star = matching_pluckers(h26_star_network());
    CHECK(proportionality(pluckers_of(h26_star_matrix()), star).has_value());
}

TEST_CASE("degenerate points are rejected") {
    QMatrix X{{Q(1), Q(0), Q(1), Q(0), Q(1), Q(0)}, {Q(0), Q(1), Q(0), Q(1), Q(0), Q(1)}};
    CHECK_THROWS_AS(h26_weights(make_point(X)), NonGeneric);
    auto w = H26Weights::ones();
    w.u = 0;
    CHECK_THROWS_AS(h26_reduced(w), NonGeneric);
}

TEST_CASE("honeycomb gadgets: all ones and the trivial connection") {
    auto t = honeycomb_torus();
    GadgetBlocks blocks{t.block_black, t.block_white};
    std::vector<H26Weights> w(t.g.vertices.size(), H26Weights::ones());
    auto h = induced_honeycomb(scalarize_weights(t.g, w, blocks), t);
    CHECK(h.A == QMatrix{{Q(11), Q(-8)}, {Q(-4), Q(3)}});
    CHECK(h.B == h.A.transpose());
    CHECK(honeycomb_charpoly(h).to_string() == "1 + 14*w + w^2 + 14*z - 14*z*w + z^2");

    Q t3 = make_q(1, 3);
    H26Weights triv{t3, -t3, t3, -t3, -t3, -t3, Q(-3), Q(3), Q(3)};
    for (auto& x : w) x = triv;
    auto id = induced_honeycomb(scalarize_weights(t.g, w, blocks), t);
    CHECK(id.A == QMatrix::identity(2));
    CHECK(id.B == QMatrix::identity(2));
}

TEST_CASE("scalar graph shape") {
    for (int k = 1; k <= 2; ++k) {
        auto p = honeycomb_patch(k);
        auto s = scalarize(p.g, identity_connection(p.g), GadgetBlocks{p.block_black, p.block_white});
        CHECK(validate(s.Ghat).empty());
        CHECK(euler_characteristic(s.Ghat) == 2);
        for (auto& v : s.Ghat.vertices) CHECK(v.n == 1);
        CHECK(s.groups.size() == p.g.edges.size());
    }
    auto t = honeycomb_torus();
    auto s = scalarize(t.g, identity_connection(t.g), GadgetBlocks{t.block_black, t.block_white});
    CHECK(euler_characteristic(s.Ghat) == 0);
}

TEST_CASE("fiber sums against brute-force matchings of the scalar graph") {
    Rng rng(50);
    auto p = honeycomb_patch(1);
    GadgetBlocks blocks{p.block_black, p.block_white};
    for (int i = 0; i < 3; ++i) {
        std::vector<H26Weights> w(p.g.vertices.size());
        for (auto& x : w) x = random_weights(rng);
        auto s = scalarize_weights(p.g, w, blocks);
        auto brute = brute_fibers(s);
        auto fast = fiber_sums(s);
        REQUIRE(brute.size() == fast.size());
        for (auto& [m, v] : fast) CHECK(brute.at(m.m) == v);
        for (auto& [m, r] : verify_measure_all(s)) {
            CHECK(r.equal);
            CHECK(r.fiber_sum == trace_multiweb(p.g, m, s.induced));
        }
    }
}

TEST_CASE("scalarizing a connection keeps traces") {
    Rng rng(51);
    auto p = honeycomb_patch(2);
    HoneycombSpec h;
    h.A = QMatrix{{Q(2), Q(7)}, {make_q(1, 3), Q(5)}};
    h.B = QMatrix{{Q(3), make_q(-1, 2)}, {Q(4), Q(1)}};
    auto c = honeycomb_connection(h, p);
    auto s = scalarize(p.g, c, GadgetBlocks{p.block_black, p.block_white});
    for (auto& m : enumerate_multiwebs(p.g)) CHECK(trace_multiweb(p.g, m, s.induced) == trace_multiweb(p.g, m, c));
    for (auto& [m, r] : verify_measure_all(s)) CHECK(r.equal);
}

TEST_CASE("projection counts empty parallel edges") {
    auto p = honeycomb_patch(1);
    auto s = scalarize(p.g, identity_connection(p.g), GadgetBlocks{p.block_black, p.block_white});
    auto pms = oracle::perfect_matchings(s.Ghat);
    REQUIRE_FALSE(pms.empty());
    for (std::size_t i = 0; i < pms.size(); i += 97) {
        Multiweb cover;
        cover.m.assign(s.Ghat.edges.size(), 0);
        for (int e : pms[i]) cover.m[e] = 1;
        auto m = project_dimer(s, cover);
        CHECK(is_multiweb(p.g, m));
    }
}
