#include "hdm/random.hpp"

#include "hdm/multiweb.hpp"

#include <algorithm>
#include <set>

namespace hdm {

Q random_rational(Rng& rng, int bound, int max_den) {
    std::uniform_int_distribution<int> dq(1, max_den);
    int q = dq(rng);
    std::uniform_int_distribution<int> dp(-bound * q, bound * q);
    return make_q(dp(rng), q);
}

Q random_positive_rational(Rng& rng, int bound, int max_den) {
    std::uniform_int_distribution<int> dq(1, max_den);
    int q = dq(rng);
    std::uniform_int_distribution<int> dp(1, bound * q);
    return make_q(dp(rng), q);
}

Connection random_connection(const PlanarGraph& g, Rng& rng, int bound, int max_den) {
    Connection c;
    for (auto& e : g.edges) {
        QMatrix p(g.vertices[e.white].n, g.vertices[e.black].n);
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = random_rational(rng, bound, max_den);
        c.phi.push_back(std::move(p));
    }
    return c;
}

namespace {

using Pt = std::pair<long, long>;

long orient(Pt a, Pt b, Pt c) {
    long v = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    return (v > 0) - (v < 0);
}

bool on_segment(Pt a, Pt b, Pt p) {
    return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

// Segments ab and cd meet somewhere other than a shared endpoint.
bool crosses(Pt a, Pt b, Pt c, Pt d) {
    bool shared = a == c || a == d || b == c || b == d;
    long o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (shared) {
        // collinear overlap along a shared endpoint still counts
        if (o1 == 0 && o2 == 0) {
            Pt s = (a == c || b == c) ? d : c;
            Pt t = (a == c || a == d) ? b : a;
            return on_segment(a, b, s) || on_segment(c, d, t);
        }
        return false;
    }
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

PlanarGraph random_planar_bipartite(Rng& rng, const RandomGraphSpec& spec) {
    std::uniform_int_distribution<int> nv_dist(std::min(spec.min_vertices, spec.max_vertices), std::max(2, spec.max_vertices));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0;; ++attempt) {
        int V = nv_dist(rng);
        std::set<Pt> used;
        std::vector<Pt> pts;
        std::uniform_int_distribution<long> coord(0, 5);
        while (static_cast<int>(pts.size()) < V) {
            Pt p{coord(rng), coord(rng)};
            if (used.insert(p).second) pts.push_back(p);
        }
        std::vector<Color> col(V);
        for (int i = 0; i < V; ++i) col[i] = unit(rng) < 0.5 ? Color::Black : Color::White;
        // candidate edges in random order, kept if they cross nothing and no vertex lies on them
        std::vector<std::pair<int, int>> cand;
        for (int i = 0; i < V; ++i)
            for (int j = 0; j < V; ++j)
                if (col[i] == Color::Black && col[j] == Color::White) cand.push_back({i, j});
        std::shuffle(cand.begin(), cand.end(), rng);
        std::vector<std::pair<int, int>> kept;
        for (auto [b, w] : cand) {
            if (unit(rng) > spec.edge_density) continue;
            bool ok = true;
            for (int k = 0; k < V && ok; ++k)
                if (k != b && k != w && orient(pts[b], pts[w], pts[k]) == 0 && on_segment(pts[b], pts[w], pts[k])) ok = false;
            for (auto [c, d] : kept)
                if (ok && crosses(pts[b], pts[w], pts[c], pts[d])) ok = false;
            if (ok) kept.push_back({b, w});
        }
        // a random multiweb, capped at max_n per vertex, fixes the multiplicities
        std::vector<int> m(kept.size(), 0), deg(V, 0), order(kept.size());
        for (std::size_t e = 0; e < kept.size(); ++e) order[e] = static_cast<int>(e);
        std::shuffle(order.begin(), order.end(), rng);
        for (int e : order) {
            int room = std::min(spec.max_n - deg[kept[e].first], spec.max_n - deg[kept[e].second]);
            std::uniform_int_distribution<int> mdist(0, std::max(0, std::min(2, room)));
            m[e] = mdist(rng);
            deg[kept[e].first] += m[e];
            deg[kept[e].second] += m[e];
        }
        bool ok = true;
        for (int i = 0; i < V; ++i)
            if (deg[i] < 1 || deg[i] > spec.max_n) ok = false;
        if (!ok) continue;

        PlanarGraph g;
        g.surface = Surface::Plane;
        for (int i = 0; i < V; ++i)
            g.add_vertex(col[i], deg[i], std::pair<double, double>(pts[i].first, pts[i].second));
        for (auto [b, w] : kept) g.add_edge(b, w);
        if (!is_connected(g)) continue;
        rotations_from_positions(g);
        for (auto& v : g.vertices)
            if (v.n % 2 == 0) {
                std::uniform_int_distribution<int> c(0, std::max<int>(0, v.rotation.size() - 1));
                v.cilium = c(rng);
            }
        if (!validate(g).empty()) continue;
        return g;
    }
}

}  // namespace hdm
