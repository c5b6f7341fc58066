#include "hdm/h26.hpp"

#include <cmath>
#include <numbers>

namespace hdm {

H26Weights H26Weights::ones() { return {1, 1, 1, 1, 1, 1, 1, 1, 1}; }

std::vector<Q> H26Weights::as_vector() const { return {a, b, c, d, e, f, x, y, u}; }

H26Weights H26Weights::from_vector(const std::vector<Q>& v) {
    if (v.size() != 9) throw std::invalid_argument("gadget needs 9 weights");
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

QMatrix h26_kasteleyn(const H26Weights& w) {
    return QMatrix{{Q(1), Q(0), Q(0)},  {w.b, w.c, Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), w.d, w.e},
                   {Q(0), Q(0), Q(1)},  {-w.a, Q(0), w.f}, {w.x, -w.y, w.u}};
}

QMatrix h26_reduced(const H26Weights& w) {
    if (w.u == 0) throw NonGeneric("u = 0: interior white has no pivot");
    QMatrix X = schur_complement(h26_kasteleyn(w), {0, 1, 2, 3, 4, 5}, {0, 1}, {6}, {2});
    for (std::size_t i = 0; i < X.rows(); ++i) X(i, 0) *= w.u;
    return X;
}

GrassmannPoint h26_point(const H26Weights& w) { return make_point(h26_reduced(w).transpose()); }

H26Weights h26_weights(const GrassmannPoint& p) {
    if (p.k() != 2 || p.n() != 6) throw std::invalid_argument("h26_weights needs a 2x6 point");
    auto D = [&](int i, int j) {
        Q v = p.plucker.at({i - 1, j - 1});
        if (v == 0) throw NonGeneric("minor D" + std::to_string(i) + std::to_string(j) + " vanishes");
        return v;
    };
    H26Weights w;
    w.x = D(3, 5);
    w.y = D(1, 5);
    w.u = D(1, 3);
    w.a = D(5, 6) / w.y;
    w.c = D(1, 2) / w.u;
    w.e = D(3, 4) / w.x;
    w.b = D(2, 3) / w.u;
    w.d = D(4, 5) / w.x;
    w.f = D(1, 6) / w.y;
    return w;
}

namespace {

std::pair<double, double> polar(double r, double deg) {
    double t = deg * std::numbers::pi / 180.0;
    return {r * std::cos(t), r * std::sin(t)};
}

// Shared layout; `mirror` swaps colors and reflects, so the boundary runs clockwise.
PlabicNetwork gadget(const H26Weights& w, bool mirror) {
    PlabicNetwork net;
    PlanarGraph& g = net.g;
    g.surface = Surface::Disk;
    Color outer = mirror ? Color::Black : Color::White;
    Color inner = mirror ? Color::White : Color::Black;
    auto at = [&](double r, double deg) {
        auto p = polar(r, deg);
        if (mirror) p.first = -p.first;
        return p;
    };
    std::vector<int> ws(7), bs(3);
    for (int i = 0; i < 6; ++i) ws[i] = g.add_vertex(outer, 1, at(2.0, 60.0 * i));
    ws[6] = g.add_vertex(outer, 1, std::pair{0.0, 0.0});
    for (int j = 0; j < 3; ++j) bs[j] = g.add_vertex(inner, 1, at(1.0, 120.0 * j));
    // (white, black, weight) with unsigned weights
    std::vector<std::tuple<int, int, Q>> es = {
        {0, 0, Q(1)}, {1, 0, w.b}, {1, 1, w.c}, {2, 1, Q(1)}, {3, 1, w.d}, {3, 2, w.e},
        {4, 2, Q(1)}, {5, 0, w.a}, {5, 2, w.f}, {6, 0, w.x}, {6, 1, w.y}, {6, 2, w.u}};
    for (auto& [wi, bj, q] : es) {
        int a = ws[wi], b = bs[bj];
        if (mirror) std::swap(a, b);
        g.add_edge(b, a);
        net.weight.push_back(q);
    }
    rotations_from_positions(g);
    for (int i = 0; i < 6; ++i) g.boundary.push_back({ws[i], 1});
    return net;
}

}  // namespace

PlabicNetwork h26_network(const H26Weights& w) { return gadget(w, false); }

PlabicNetwork h26_star_network() { return gadget(H26Weights::ones(), true); }

QMatrix h26_star_matrix() {
    return QMatrix{{Q(1), Q(1), Q(0), Q(-1), Q(-1), Q(-2)}, {Q(0), Q(1), Q(1), Q(2), Q(1), Q(1)}};
}

}  // namespace hdm
