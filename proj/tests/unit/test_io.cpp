#include "hdm/catalog.hpp"
#include "hdm/h26.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/io.hpp"
#include "hdm/models.hpp"
#include "hdm/random.hpp"

#include <doctest.h>

#include <string>

using namespace hdm;

namespace {

void check_error(const std::string& text, const std::string& fragment) {
    try {
        parse_graph(text);
        FAIL("no error for " << text);
    } catch (const InputError& e) {
        CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
}

}  // namespace

TEST_CASE("graph documents round trip") {
    for (auto g : {two_square_web_graph(), honeycomb_torus().g, honeycomb_patch(2).g, single_edge_graph(2)}) {
        auto text = dump_graph(g);
        CHECK(text.find("\"schema\": 1") != std::string::npos);
        auto back = parse_graph(text);
        CHECK(dump_graph(back) == text);
        CHECK(validate(back).empty());
    }
}

TEST_CASE("connections, multiwebs, polynomials, points and networks round trip") {
    Rng rng(70);
    auto g = two_square_web_graph();
    auto c = random_connection(g, rng);
    auto c2 = parse_connection(g, dump_connection(g, c));
    for (std::size_t e = 0; e < g.edges.size(); ++e) CHECK(c2.phi[e] == c.phi[e]);

    auto webs = enumerate_multiwebs(g);
    CHECK(parse_multiwebs(g, dump_multiwebs(webs)) == webs);
    CHECK(parse_multiweb(g, dump_multiweb(webs[1])) == webs[1]);
    CHECK(parse_multiweb(g, R"([{"edge": 2, "m": 1}, {"edge": 0, "m": 1}])").m == std::vector<int>{1, 0, 1, 0, 0, 0, 0});

    auto P = twentyv_family_charpoly(make_q(3, 2));
    CHECK(parse_poly(dump_poly(P)) == P);

    auto pt = h26_point(H26Weights::ones());
    auto pt2 = parse_point(dump_point(pt));
    CHECK(pt2.X == pt.X);
    CHECK(pt2.plucker == pt.plucker);

    auto net = gr24_network(Q(1), Q(2), Q(3), Q(5));
    auto net2 = parse_network(dump_network(net));
    CHECK(net2.weight == net.weight);
    CHECK(net2.n_boundary() == 4);
    CHECK(matching_pluckers(net2) == matching_pluckers(net));
}

TEST_CASE("scalarization export is a network with groups") {
    auto p = honeycomb_patch(1);
    auto s = scalarize(p.g, identity_connection(p.g), GadgetBlocks{p.block_black, p.block_white});
    auto text = dump_scalarization(s);
    auto net = parse_network(text);
    CHECK(net.g.vertices.size() == s.Ghat.vertices.size());
    CHECK(net.weight == s.weight);
    CHECK(text.find("\"groups\"") != std::string::npos);
    CHECK(text.find("\"gadget\"") != std::string::npos);
}

TEST_CASE("rationals must be exact") {
    CHECK(parse_matrix(R"([[1, "1/2"], ["-3", 0]])") == QMatrix{{Q(1), make_q(1, 2)}, {Q(-3), Q(0)}});
    CHECK_THROWS_AS(parse_matrix("[[0.5]]"), InputError);
    CHECK_THROWS_AS(parse_matrix("[[1, 2], [3]]"), InputError);
    CHECK_THROWS_AS(parse_poly(R"({"newton": [[0, 0, "1/0"]]})"), InputError);
}

TEST_CASE("malformed graphs name the field") {
    check_error(R"({"vertices": [{"id": 0}], "edges": []})", "vertices[0]");
    check_error(R"({"vertices": [], "edges": [{"id": 0, "black": 3, "white": 0}]})", "edges[0].black");
    check_error("{\n  \"vertices\": [,\n]}", "line 2");
    check_error(R"({"schema": 2, "vertices": [], "edges": []})", "schema");
    check_error(R"({"surface": "sphere", "vertices": [], "edges": []})", "surface");
    check_error(R"({"vertices": [{"id": 1, "color": "black", "rotation": []}], "edges": []})", "vertices[0].id");
    auto g = two_square_web_graph();
    CHECK_THROWS_AS(parse_connection(g, R"({"0": [[1]]})"), InputError);
    CHECK_THROWS_AS(parse_multiweb(g, R"([{"edge": 9, "m": 1}])"), InputError);
}
