#include "hdm/catalog.hpp"
#include "hdm/graph.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hdm;

namespace {

bool has(const std::vector<Violation>& v, ViolationKind k) {
    return std::any_of(v.begin(), v.end(), [k](const Violation& x) { return x.kind == k; });
}

}  // namespace

TEST_CASE("catalog graphs validate") {
    CHECK(validate(two_square_web_graph()).empty());
    CHECK(validate(square_graph()).empty());
    CHECK(validate(ladder_graph(3)).empty());
    CHECK(validate(single_edge_graph(2)).empty());
    CHECK(validate(honeycomb_torus().g).empty());
    for (int k = 1; k <= 3; ++k) CHECK(validate(honeycomb_patch(k).g).empty());
}

TEST_CASE("euler characteristic from traced faces") {
    auto g = two_square_web_graph();
    auto faces = trace_faces(g);
    CHECK(faces.size() == 3);  // two squares and the outer face
    CHECK(euler_characteristic(g) == 2);
    int outer = outer_face(g, faces);
    CHECK(faces[outer].length == 6);

    auto t = honeycomb_torus().g;
    CHECK(trace_faces(t).size() == 1);
    CHECK(euler_characteristic(t) == 0);
}

TEST_CASE("rotations follow the drawing") {
    // going around counterclockwise, the angular gaps add up to one full turn
    const double tau = 2 * std::acos(-1.0);
    for (auto g : {two_square_web_graph(), honeycomb_patch(2).g}) {
        for (auto& v : g.vertices) {
            auto ccw = ccw_rotation(g, v.id);
            if (ccw.size() < 3) continue;
            auto [x0, y0] = *v.pos;
            auto ang = [&](int e) {
                auto [x, y] = *g.vertices[g.other_end(e, v.id)].pos;
                return std::atan2(y - y0, x - x0);
            };
            double total = 0;
            for (std::size_t k = 0; k < ccw.size(); ++k) {
                double d = ang(ccw[(k + 1) % ccw.size()]) - ang(ccw[k]);
                while (d <= 0) d += tau;
                total += d;
            }
            CHECK(total == doctest::Approx(tau));
        }
    }
}

TEST_CASE("validation catches broken input") {
    SUBCASE("same colors") {
        auto g = square_graph();
        g.vertices[1].color = Color::Black;
        CHECK(has(validate(g), ViolationKind::NotBipartite));
    }
    SUBCASE("rotation that forgets an edge") {
        auto g = square_graph();
        g.vertices[0].rotation.pop_back();
        CHECK(has(validate(g), ViolationKind::RotationMismatch));
    }
    SUBCASE("even multiplicity needs a cilium") {
        auto g = single_edge_graph(2);
        g.vertices[0].cilium.reset();
        CHECK(has(validate(g), ViolationKind::MissingCilium));
    }
    SUBCASE("odd multiplicity must not carry one") {
        auto g = square_graph();
        g.vertices[0].cilium = 0;
        CHECK(has(validate(g), ViolationKind::UnexpectedCilium));
    }
    SUBCASE("cilium index out of range") {
        auto g = single_edge_graph(2);
        g.vertices[0].cilium = 3;
        CHECK(has(validate(g), ViolationKind::BadCilium));
    }
    SUBCASE("boundary value above n") {
        auto g = single_edge_graph(2);
        g.boundary = {{0, 3}};
        CHECK(has(validate(g), ViolationKind::BoundaryExceedsMultiplicity));
    }
    SUBCASE("zero multiplicity") {
        auto g = square_graph();
        g.vertices[2].n = 0;
        CHECK(has(validate(g), ViolationKind::BadMultiplicity));
    }
    SUBCASE("two pieces") {
        auto g = square_graph();
        int b = g.add_vertex(Color::Black, 1, std::pair{5.0, 5.0});
        int w = g.add_vertex(Color::White, 1, std::pair{6.0, 5.0});
        g.add_edge(b, w);
        CHECK(has(validate(g), ViolationKind::Disconnected));
    }
    SUBCASE("crossed rotation") {
        auto g = ladder_graph(2);
        auto& r = g.vertices[2].rotation;
        std::swap(r[0], r[1]);
        CHECK(has(validate(g), ViolationKind::EulerMismatch));
    }
}

TEST_CASE("random planar graphs are valid") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto g = random_planar_bipartite(rng);
        auto v = validate(g);
        CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front().message));
        CHECK(g.vertices.size() <= 10);
    }
}
