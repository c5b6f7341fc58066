#include "hdm/catalog.hpp"

#include <cmath>

namespace hdm {

PlanarGraph two_square_web_graph() {
    PlanarGraph g;
    g.surface = Surface::Plane;
    int b1 = g.add_vertex(Color::Black, 1, std::pair{1.0, 0.0});
    int b2 = g.add_vertex(Color::Black, 2, std::pair{0.0, 1.0});
    int b3 = g.add_vertex(Color::Black, 2, std::pair{2.0, 1.0});
    int w1 = g.add_vertex(Color::White, 1, std::pair{0.0, 0.0});
    int w2 = g.add_vertex(Color::White, 3, std::pair{1.0, 1.0});
    int w3 = g.add_vertex(Color::White, 1, std::pair{2.0, 0.0});
    g.add_edge(b1, w1);  // A
    g.add_edge(b1, w2);  // B
    g.add_edge(b2, w2);  // C
    g.add_edge(b2, w1);  // D
    g.add_edge(b1, w3);  // E
    g.add_edge(b3, w3);  // F
    g.add_edge(b3, w2);  // G
    rotations_from_positions(g);
    const double pi = std::acos(-1.0);
    g.vertices[b2].cilium = wedge_toward(g, b2, -pi / 4);  // into the left square
    g.vertices[b3].cilium = wedge_toward(g, b3, pi / 4);   // outer face
    return g;
}

PlanarGraph single_edge_graph(int n) {
    PlanarGraph g;
    g.surface = Surface::Disk;
    int b = g.add_vertex(Color::Black, n, std::pair{0.0, 0.0});
    int w = g.add_vertex(Color::White, n, std::pair{1.0, 0.0});
    g.add_edge(b, w);
    if (n % 2 == 0) g.vertices[b].cilium = g.vertices[w].cilium = 0;
    return g;
}

PlanarGraph square_graph() {
    PlanarGraph g;
    g.surface = Surface::Disk;
    int b0 = g.add_vertex(Color::Black, 1, std::pair{0.0, 0.0});
    int w0 = g.add_vertex(Color::White, 1, std::pair{1.0, 0.0});
    int b1 = g.add_vertex(Color::Black, 1, std::pair{1.0, 1.0});
    int w1 = g.add_vertex(Color::White, 1, std::pair{0.0, 1.0});
    g.add_edge(b0, w0);
    g.add_edge(b1, w0);
    g.add_edge(b1, w1);
    g.add_edge(b0, w1);
    rotations_from_positions(g);
    return g;
}

PlanarGraph ladder_graph(int columns) {
    PlanarGraph g;
    g.surface = Surface::Disk;
    for (int x = 0; x <= columns; ++x)
        for (int y = 0; y < 2; ++y)
            g.add_vertex((x + y) % 2 ? Color::White : Color::Black, 1, std::pair<double, double>(x, y));
    auto id = [](int x, int y) { return 2 * x + y; };
    auto link = [&](int a, int b) {
        if (g.is_black(a)) g.add_edge(a, b);
        else g.add_edge(b, a);
    };
    for (int x = 0; x <= columns; ++x) link(id(x, 0), id(x, 1));
    for (int x = 0; x < columns; ++x) {
        link(id(x, 0), id(x + 1, 0));
        link(id(x, 1), id(x + 1, 1));
    }
    rotations_from_positions(g);
    return g;
}

}  // namespace hdm
