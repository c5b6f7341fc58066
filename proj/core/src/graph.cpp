#include "hdm/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace hdm {

int PlanarGraph::add_vertex(Color c, int n, std::optional<std::pair<double, double>> pos) {
    Vertex v;
    v.id = static_cast<int>(vertices.size());
    v.color = c;
    v.n = n;
    v.pos = pos;
    vertices.push_back(std::move(v));
    return vertices.back().id;
}

int PlanarGraph::add_edge(int b, int w, std::pair<int, int> homology) {
    Edge e;
    e.id = static_cast<int>(edges.size());
    e.black = b;
    e.white = w;
    e.homology = homology;
    edges.push_back(e);
    vertices[b].rotation.push_back(e.id);
    vertices[w].rotation.push_back(e.id);
    return e.id;
}

int PlanarGraph::boundary_d(int v) const {
    for (auto& be : boundary)
        if (be.v == v) return be.d;
    return 0;
}

int PlanarGraph::demand(int v) const {
    int d = boundary_d(v);
    return d > 0 ? d : vertices[v].n;
}

bool PlanarGraph::has_positions() const {
    if (vertices.empty()) return false;
    return std::all_of(vertices.begin(), vertices.end(), [](const Vertex& v) { return v.pos.has_value(); });
}

int euler_characteristic(const PlanarGraph& g) { return g.surface == Surface::Torus ? 0 : 2; }

std::vector<int> ccw_rotation(const PlanarGraph& g, int v, bool mirrored) {
    auto r = g.vertices[v].rotation;
    if (g.is_black(v) == mirrored) std::reverse(r.begin(), r.end());
    return r;
}

int wedge_after(const PlanarGraph& g, int v, int e, bool mirrored) {
    const auto& rot = g.vertices[v].rotation;
    const int deg = static_cast<int>(rot.size());
    int i = static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
    if (i == deg) throw EmbeddingError("edge " + std::to_string(e) + " missing from rotation of vertex " + std::to_string(v));
    return g.is_black(v) != mirrored ? (i + 1) % deg : i;
}

std::vector<Face> trace_faces_unchecked(const PlanarGraph& g, bool mirrored) {
    const int E = static_cast<int>(g.edges.size());
    // position of each edge in the ccw list at each endpoint
    std::vector<std::map<int, int>> pos(g.vertices.size());
    std::vector<std::vector<int>> ccw(g.vertices.size());
    for (auto& v : g.vertices) {
        ccw[v.id] = ccw_rotation(g, v.id, mirrored);
        for (int k = 0; k < static_cast<int>(ccw[v.id].size()); ++k) {
            if (pos[v.id].count(ccw[v.id][k])) throw EmbeddingError("edge listed twice at vertex " + std::to_string(v.id));
            pos[v.id][ccw[v.id][k]] = k;
        }
    }
    for (auto& e : g.edges)
        if (!pos[e.black].count(e.id) || !pos[e.white].count(e.id))
            throw EmbeddingError("edge " + std::to_string(e.id) + " missing from an endpoint rotation");

    // dart 2e: black -> white, 2e+1: white -> black
    std::vector<char> used(2 * E, 0);
    std::vector<Face> faces;
    for (int d0 = 0; d0 < 2 * E; ++d0) {
        if (used[d0]) continue;
        Face f;
        int d = d0;
        while (!used[d]) {
            used[d] = 1;
            const Edge& e = g.edges[d / 2];
            int from = d % 2 ? e.white : e.black;
            int to = d % 2 ? e.black : e.white;
            f.walk.push_back({e.id, from, to});
            const auto& c = ccw[to];
            int nxt = c[(pos[to][e.id] + 1) % c.size()];
            int wedge = wedge_after(g, to, e.id, mirrored);
            f.wedges.push_back({to, wedge});
            const Vertex& tv = g.vertices[to];
            if (tv.cilium && tv.n % 2 == 0 && *tv.cilium == wedge) ++f.cilia;
            d = 2 * nxt + (g.edges[nxt].black == to ? 0 : 1);
        }
        if (d != d0) throw EmbeddingError("face walk did not close");
        f.length = static_cast<int>(f.walk.size());
        faces.push_back(std::move(f));
    }
    return faces;
}

bool is_connected(const PlanarGraph& g) {
    if (g.vertices.empty()) return true;
    std::vector<char> seen(g.vertices.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.vertices[v].rotation) {
            if (e < 0 || e >= static_cast<int>(g.edges.size())) continue;
            int u = g.other_end(e, v);
            if (u >= 0 && u < static_cast<int>(g.vertices.size()) && !seen[u]) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
        }
    }
    return count == g.vertices.size();
}

std::vector<Face> trace_faces(const PlanarGraph& g, bool mirrored) {
    auto faces = trace_faces_unchecked(g, mirrored);
    const int V = static_cast<int>(g.vertices.size()), E = static_cast<int>(g.edges.size());
    if (E == 0 && V <= 1) return faces;
    if (!is_connected(g)) throw EmbeddingError("graph is not connected");
    int chi = V - E + static_cast<int>(faces.size());
    if (chi != euler_characteristic(g))
        throw EmbeddingError("Euler characteristic " + std::to_string(chi) + " does not match surface");
    return faces;
}

int outer_face(const PlanarGraph& g, const std::vector<Face>& faces) {
    if (g.surface == Surface::Torus || faces.empty()) return -1;
    int best = 0;
    if (!g.boundary.empty()) {
        std::set<int> bset;
        for (auto& b : g.boundary) bset.insert(b.v);
        long bestc = -1;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
            std::set<int> hit;
            for (auto& d : faces[i].walk)
                if (bset.count(d.from)) hit.insert(d.from);
            long c = static_cast<long>(hit.size()) * 100000 + faces[i].length;
            if (c > bestc) {
                bestc = c;
                best = i;
            }
        }
        return best;
    }
    if (g.has_positions()) {
        double besta = -1e300;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
            double a = 0;
            for (auto& d : faces[i].walk) {
                auto [x1, y1] = *g.vertices[d.from].pos;
                auto [x2, y2] = *g.vertices[d.to].pos;
                a += x1 * y2 - x2 * y1;
            }
            if (a > besta + 1e-12) {
                besta = a;
                best = i;
            }
        }
        return best;
    }
    for (int i = 1; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].length > faces[best].length) best = i;
    return best;
}

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NotBipartite: return "NotBipartite";
        case ViolationKind::BadEndpoint: return "BadEndpoint";
        case ViolationKind::RotationMismatch: return "RotationMismatch";
        case ViolationKind::MissingCilium: return "MissingCilium";
        case ViolationKind::UnexpectedCilium: return "UnexpectedCilium";
        case ViolationKind::BadCilium: return "BadCilium";
        case ViolationKind::BadMultiplicity: return "BadMultiplicity";
        case ViolationKind::BoundaryExceedsMultiplicity: return "BoundaryExceedsMultiplicity";
        case ViolationKind::BadBoundaryVertex: return "BadBoundaryVertex";
        case ViolationKind::Disconnected: return "Disconnected";
        case ViolationKind::EulerMismatch: return "EulerMismatch";
        case ViolationKind::BadId: return "BadId";
    }
    return "?";
}

std::vector<Violation> validate(const PlanarGraph& g) {
    std::vector<Violation> out;
    auto add = [&](ViolationKind k, int id, std::string msg) { out.push_back({k, id, std::move(msg)}); };
    const int V = static_cast<int>(g.vertices.size()), E = static_cast<int>(g.edges.size());
    bool structural = true;

    for (int i = 0; i < V; ++i)
        if (g.vertices[i].id != i) add(ViolationKind::BadId, i, "vertex ids must be dense from 0");
    for (int i = 0; i < E; ++i)
        if (g.edges[i].id != i) add(ViolationKind::BadId, i, "edge ids must be dense from 0");
    if (!out.empty()) return out;

    for (auto& e : g.edges) {
        if (e.black < 0 || e.black >= V || e.white < 0 || e.white >= V) {
            add(ViolationKind::BadEndpoint, e.id, "edge " + std::to_string(e.id) + " has an endpoint out of range");
            structural = false;
            continue;
        }
        if (!g.is_black(e.black) || g.is_black(e.white))
            add(ViolationKind::NotBipartite, e.id, "edge " + std::to_string(e.id) + " does not join a black vertex to a white vertex");
    }

    std::vector<int> seen(E, 0);
    for (auto& v : g.vertices) {
        if (v.n < 1) add(ViolationKind::BadMultiplicity, v.id, "vertex " + std::to_string(v.id) + " has n < 1");
        std::set<int> here;
        for (int e : v.rotation) {
            if (e < 0 || e >= E) {
                add(ViolationKind::RotationMismatch, v.id, "vertex " + std::to_string(v.id) + " lists unknown edge " + std::to_string(e));
                structural = false;
                continue;
            }
            if (!here.insert(e).second || (g.edges[e].black != v.id && g.edges[e].white != v.id)) {
                add(ViolationKind::RotationMismatch, v.id, "vertex " + std::to_string(v.id) + " lists edge " + std::to_string(e) + " incorrectly");
                structural = false;
            }
            ++seen[e];
        }
        bool even = v.n % 2 == 0;
        if (even && !v.cilium) add(ViolationKind::MissingCilium, v.id, "vertex " + std::to_string(v.id) + " has even n and no cilium");
        if (!even && v.cilium) add(ViolationKind::UnexpectedCilium, v.id, "vertex " + std::to_string(v.id) + " has odd n and a cilium");
        if (v.cilium && (*v.cilium < 0 || *v.cilium >= std::max<int>(1, v.rotation.size())))
            add(ViolationKind::BadCilium, v.id, "vertex " + std::to_string(v.id) + " cilium index out of range");
    }
    for (int e = 0; e < E; ++e)
        if (seen[e] != 2) {
            add(ViolationKind::RotationMismatch, e, "edge " + std::to_string(e) + " appears " + std::to_string(seen[e]) + " times in rotations");
            structural = false;
        }

    std::set<int> bseen;
    for (auto& b : g.boundary) {
        if (b.v < 0 || b.v >= V || b.d < 1 || !bseen.insert(b.v).second) {
            add(ViolationKind::BadBoundaryVertex, b.v, "bad boundary entry for vertex " + std::to_string(b.v));
            continue;
        }
        if (b.d > g.vertices[b.v].n)
            add(ViolationKind::BoundaryExceedsMultiplicity, b.v, "boundary vertex " + std::to_string(b.v) + " has d > n");
    }

    if (structural && !(E == 0 && V <= 1)) {
        if (!is_connected(g)) {
            add(ViolationKind::Disconnected, -1, "graph is not connected");
        } else {
            try {
                auto f = trace_faces_unchecked(g);
                int chi = V - E + static_cast<int>(f.size());
                if (chi != euler_characteristic(g))
                    add(ViolationKind::EulerMismatch, -1, "V - E + F = " + std::to_string(chi) + " does not match the surface");
            } catch (const EmbeddingError& ex) {
                add(ViolationKind::EulerMismatch, -1, ex.what());
            }
        }
    }
    return out;
}

}  // namespace hdm

#include <cmath>

namespace hdm {

namespace {
double edge_angle(const PlanarGraph& g, int v, int e) {
    int u = g.other_end(e, v);
    auto [x0, y0] = *g.vertices[v].pos;
    auto [x1, y1] = *g.vertices[u].pos;
    return std::atan2(y1 - y0, x1 - x0);
}
}  // namespace

void rotations_from_positions(PlanarGraph& g) {
    if (!g.has_positions()) throw EmbeddingError("rotations_from_positions needs vertex positions");
    for (auto& v : g.vertices) {
        auto& r = v.rotation;
        std::stable_sort(r.begin(), r.end(), [&](int a, int b) { return edge_angle(g, v.id, a) < edge_angle(g, v.id, b); });
        if (!g.is_black(v.id)) std::reverse(r.begin(), r.end());
    }
}

int wedge_toward(const PlanarGraph& g, int v, double angle) {
    const auto& rot = g.vertices[v].rotation;
    const int deg = static_cast<int>(rot.size());
    if (deg <= 1) return 0;
    const double two_pi = 2 * std::acos(-1.0);
    auto norm = [&](double a) { return std::fmod(std::fmod(a, two_pi) + two_pi, two_pi); };
    auto ccw = ccw_rotation(g, v);
    for (int k = 0; k < deg; ++k) {
        int e = ccw[k], f = ccw[(k + 1) % deg];
        double a0 = edge_angle(g, v, e);
        double span = norm(edge_angle(g, v, f) - a0);
        if (span == 0) span = two_pi;
        if (norm(angle - a0) < span) return wedge_after(g, v, e);
    }
    return 0;
}

}  // namespace hdm
