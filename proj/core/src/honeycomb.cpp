#include "hdm/honeycomb.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace hdm {

namespace {

constexpr int kBlockBlack[3] = {0, 1, 2};  // I, A, B
constexpr int kBlockWhite[3] = {0, 2, 1};  // I, B, A

void push_edge(HoneycombPatch& p, int b, int w, EdgeClass c, std::pair<int, int> hom = {0, 0}) {
    p.g.add_edge(b, w, hom);
    p.cls.push_back(c);
    p.block_black.push_back(kBlockBlack[static_cast<int>(c)]);
    p.block_white.push_back(kBlockWhite[static_cast<int>(c)]);
}

}  // namespace

HoneycombPatch honeycomb_torus() {
    HoneycombPatch p;
    p.g.surface = Surface::Torus;
    int b = p.g.add_vertex(Color::Black, 2);
    int w = p.g.add_vertex(Color::White, 2);
    push_edge(p, b, w, EdgeClass::I);
    push_edge(p, b, w, EdgeClass::A, {1, 0});
    push_edge(p, b, w, EdgeClass::B, {0, 1});
    p.g.vertices[b].rotation = {0, 1, 2};
    p.g.vertices[w].rotation = {0, 2, 1};
    p.g.vertices[b].cilium = 0;
    p.g.vertices[w].cilium = 0;
    return p;
}

HoneycombPatch honeycomb_patch(int hexagons) {
    if (hexagons < 1) throw std::invalid_argument("patch needs at least one hexagon");
    std::set<std::pair<int, int>> bs, ws;
    for (int k = 0; k < hexagons; ++k) {
        bs.insert({k, 0});
        bs.insert({k + 1, 0});
        bs.insert({k, 1});
        ws.insert({k + 1, 0});
        ws.insert({k + 1, 1});
        ws.insert({k, 1});
    }
    HoneycombPatch p;
    p.g.surface = Surface::Disk;
    std::map<std::pair<int, int>, int> bid, wid;
    for (auto& [x, y] : bs) bid[{x, y}] = p.g.add_vertex(Color::Black, 2, std::pair{x + 0.25, y + 0.25});
    for (auto& [x, y] : ws) wid[{x, y}] = p.g.add_vertex(Color::White, 2, std::pair{x - 0.25, y - 0.25});
    for (auto& [xy, b] : bid) {
        auto [x, y] = xy;
        auto link = [&](std::pair<int, int> t, EdgeClass c) {
            auto it = wid.find(t);
            if (it != wid.end()) push_edge(p, b, it->second, c);
        };
        link({x, y}, EdgeClass::I);
        link({x + 1, y}, EdgeClass::A);
        link({x, y + 1}, EdgeClass::B);
    }
    rotations_from_positions(p.g);
    for (auto& v : p.g.vertices)
        v.cilium = wedge_toward(p.g, v.id, v.color == Color::Black ? std::numbers::pi : std::numbers::pi / 2);
    return p;
}

Connection honeycomb_connection(const HoneycombSpec& h, const HoneycombPatch& p) {
    Connection c;
    for (auto cl : p.cls) c.phi.push_back(cl == EdgeClass::I ? QMatrix::identity(2) : cl == EdgeClass::A ? h.A : h.B);
    return c;
}

LaurentPoly2 honeycomb_charpoly(const HoneycombSpec& h) {
    const QMatrix& A = h.A;
    const QMatrix& B = h.B;
    QMatrix adjB{{B(1, 1), -B(0, 1)}, {-B(1, 0), B(0, 0)}};
    QMatrix AB = A * adjB;
    LaurentPoly2 P;
    P.add_term(0, 0, Q(1));
    P.add_term(2, 0, det(A));
    P.add_term(0, 2, det(B));
    P.add_term(1, 0, A(0, 0) + A(1, 1));
    P.add_term(0, 1, B(0, 0) + B(1, 1));
    P.add_term(1, 1, AB(0, 0) + AB(1, 1));
    return P;
}

}  // namespace hdm
