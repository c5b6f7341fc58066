#include "hdm/grassmannian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <array>
#include <queue>
#include <set>

namespace hdm {

int PlabicNetwork::boundary_position(int v) const {
    for (int i = 0; i < n_boundary(); ++i)
        if (g.boundary[i].v == v) return i;
    return -1;
}

std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    Subset cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    if (k >= 0 && k <= n) rec(0);
    return out;
}

Pluckers pluckers_of(const QMatrix& X) {
    Pluckers p;
    std::vector<int> rows(X.rows());
    for (std::size_t i = 0; i < X.rows(); ++i) rows[i] = static_cast<int>(i);
    for (auto& I : k_subsets(static_cast<int>(X.cols()), static_cast<int>(X.rows()))) p[I] = det(X.submatrix(rows, I));
    return p;
}

GrassmannPoint make_point(const QMatrix& X) { return {X, pluckers_of(X)}; }

std::optional<Q> proportionality(const Pluckers& a, const Pluckers& b) {
    std::optional<Q> lambda;
    std::set<Subset> keys;
    for (auto& [k, v] : a) keys.insert(k);
    for (auto& [k, v] : b) keys.insert(k);
    for (auto& k : keys) {
        auto ia = a.find(k);
        auto ib = b.find(k);
        Q va = ia == a.end() ? Q(0) : ia->second;
        Q vb = ib == b.end() ? Q(0) : ib->second;
        if (vb == 0) {
            if (va != 0) return std::nullopt;
            continue;
        }
        Q l = va / vb;
        if (l == 0) return std::nullopt;
        if (lambda && *lambda != l) return std::nullopt;
        lambda = l;
    }
    return lambda;
}

bool satisfies_plucker_relations_k2(const Pluckers& p) {
    int n = 0;
    for (auto& [k, v] : p) {
        if (k.size() != 2) return false;
        n = std::max(n, k[1] + 1);
    }
    auto D = [&](int i, int j) {
        auto it = p.find({i, j});
        return it == p.end() ? Q(0) : it->second;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (D(i, k) * D(j, l) != D(i, j) * D(k, l) + D(i, l) * D(j, k)) return false;
    return true;
}

std::vector<std::vector<int>> almost_perfect_matchings(const PlabicNetwork& net) {
    const PlanarGraph& g = net.g;
    const int V = static_cast<int>(g.vertices.size());
    std::vector<char> boundary(V, 0), matched(V, 0);
    for (auto& b : g.boundary) boundary[b.v] = 1;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        // most constrained unmatched interior vertex
        int best = -1, best_opts = 1 << 30;
        for (int v = 0; v < V; ++v) {
            if (boundary[v] || matched[v]) continue;
            int opts = 0;
            for (int e : g.vertices[v].rotation)
                if (!matched[g.other_end(e, v)]) ++opts;
            if (opts < best_opts) {
                best = v;
                best_opts = opts;
            }
        }
        if (best < 0) {
            auto m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        if (best_opts == 0) return;
        auto rot = g.vertices[best].rotation;
        std::sort(rot.begin(), rot.end());
        for (int e : rot) {
            int u = g.other_end(e, best);
            if (matched[u]) continue;
            matched[u] = matched[best] = 1;
            cur.push_back(e);
            rec();
            cur.pop_back();
            matched[u] = matched[best] = 0;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

Q matching_weight(const PlabicNetwork& net, const std::vector<int>& matching) {
    Q w = 1;
    for (int e : matching) w *= net.weight[e];
    return w;
}

Subset matching_boundary(const PlabicNetwork& net, const std::vector<int>& matching) {
    Subset I;
    for (int e : matching)
        for (int v : {net.g.edges[e].black, net.g.edges[e].white}) {
            int p = net.boundary_position(v);
            if (p >= 0) I.push_back(p);
        }
    std::sort(I.begin(), I.end());
    return I;
}

Pluckers matching_pluckers(const PlabicNetwork& net) {
    Pluckers p;
    for (auto& m : almost_perfect_matchings(net)) p[matching_boundary(net, m)] += matching_weight(net, m);
    return p;
}

PerfectOrientation orientation_from_matching(const PlabicNetwork& net, const std::vector<int>& matching) {
    PerfectOrientation po;
    po.white_to_black.assign(net.g.edges.size(), 0);
    for (int e : matching) po.white_to_black[e] = 1;
    Subset I = matching_boundary(net, matching);
    po.sinks = I;
    for (int i = 0; i < net.n_boundary(); ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) po.sources.push_back(i);
    return po;
}

PerfectOrientation find_perfect_orientation(const PlabicNetwork& net) {
    auto ms = almost_perfect_matchings(net);
    if (ms.empty()) throw Infeasible("network has no almost perfect matching, so no perfect orientation");
    return orientation_from_matching(net, ms.front());
}

namespace {
int tail(const PlanarGraph& g, const PerfectOrientation& po, int e) {
    return po.white_to_black[e] ? g.edges[e].white : g.edges[e].black;
}
int head(const PlanarGraph& g, const PerfectOrientation& po, int e) {
    return po.white_to_black[e] ? g.edges[e].black : g.edges[e].white;
}
}  // namespace

bool is_perfect_orientation(const PlabicNetwork& net, const PerfectOrientation& po) {
    const PlanarGraph& g = net.g;
    if (po.white_to_black.size() != g.edges.size()) return false;
    for (auto& v : g.vertices) {
        if (net.boundary_position(v.id) >= 0) continue;
        int in = 0, out = 0;
        for (int e : v.rotation) (head(g, po, e) == v.id ? in : out)++;
        if (g.is_black(v.id) ? in != 1 : out != 1) return false;
    }
    return true;
}

namespace {

std::vector<std::pair<double, double>> drawing(const PlabicNetwork& net) {
    const PlanarGraph& g = net.g;
    const int V = static_cast<int>(g.vertices.size());
    std::vector<std::pair<double, double>> p(V, {0.0, 0.0});
    if (g.has_positions()) {
        for (int v = 0; v < V; ++v) p[v] = *g.vertices[v].pos;
        return p;
    }
    // Tutte embedding: boundary on the unit circle counterclockwise, interior averaged
    const int n = net.n_boundary();
    const double pi = std::acos(-1.0);
    std::vector<char> fixed(V, 0);
    for (int i = 0; i < n; ++i) {
        int v = g.boundary[i].v;
        p[v] = {std::cos(pi / 2 + 2 * pi * i / n), std::sin(pi / 2 + 2 * pi * i / n)};
        fixed[v] = 1;
    }
    for (int it = 0; it < 20000; ++it) {
        double delta = 0;
        for (int v = 0; v < V; ++v) {
            if (fixed[v] || g.vertices[v].rotation.empty()) continue;
            double x = 0, y = 0;
            for (int e : g.vertices[v].rotation) {
                auto q = p[g.other_end(e, v)];
                x += q.first;
                y += q.second;
            }
            double d = static_cast<double>(g.vertices[v].rotation.size());
            delta = std::max(delta, std::abs(x / d - p[v].first) + std::abs(y / d - p[v].second));
            p[v] = {x / d, y / d};
        }
        if (delta < 1e-13) break;
    }
    return p;
}

// 1 when the direction of travel crosses the ray at angle pi while turning from a to b.
int cut_crossing(const std::vector<std::pair<double, double>>& p, int u, int v, int x) {
    const double pi = std::acos(-1.0);
    double a = std::atan2(p[v].second - p[u].second, p[v].first - p[u].first);
    double b = std::atan2(p[x].second - p[v].second, p[x].first - p[v].first);
    double d = b - a;
    while (d > pi) d -= 2 * pi;
    while (d <= -pi) d += 2 * pi;
    double s = a + d;
    return (s > pi || s <= -pi) ? 1 : 0;
}

}  // namespace

GrassmannPoint boundary_measurement(const PlabicNetwork& net, const PerfectOrientation& po) {
    if (!is_perfect_orientation(net, po)) throw std::invalid_argument("not a perfect orientation");
    const PlanarGraph& g = net.g;
    const int E = static_cast<int>(g.edges.size()), n = net.n_boundary(), k = static_cast<int>(po.sinks.size());
    auto pos = drawing(net);
    std::vector<int> bpos(g.vertices.size(), -1);
    for (int i = 0; i < n; ++i) bpos[g.boundary[i].v] = i;

    auto wt = [&](int e) {
        if (net.weight[e] == 0) throw std::invalid_argument("zero edge weight");
        return po.white_to_black[e] ? Q(1 / net.weight[e]) : net.weight[e];
    };
    // darts out of each interior vertex
    std::vector<std::vector<int>> out(g.vertices.size());
    for (int e = 0; e < E; ++e) out[tail(g, po, e)].push_back(e);

    // (I - T) F = B over darts; T[e][f] = sign(f -> e) * wt(e) when head(f) = tail(e)
    QMatrix A = QMatrix::identity(E);
    for (int e = 0; e < E; ++e) {
        int t = tail(g, po, e);
        if (bpos[t] >= 0) continue;
        for (int f = 0; f < E; ++f) {
            if (head(g, po, f) != t || f == e) continue;
            int c = cut_crossing(pos, tail(g, po, f), t, head(g, po, e));
            A(e, f) -= (c ? Q(-1) : Q(1)) * wt(e);
        }
    }
    QMatrix B(E, po.sources.size(), Q(0));
    for (std::size_t s = 0; s < po.sources.size(); ++s)
        for (int e : out[g.boundary[po.sources[s]].v]) B(e, s) = wt(e);
    QMatrix F;
    try {
        F = solve(A, B);
    } catch (const SingularMatrix&) {
        throw SingularMatrix("path sums diverge: a cycle has signed weight 1");
    }

    // crossing parity of a shortest directed path j -> i, used to normalize winding to 0
    auto ref_parity = [&](int j, int i) -> std::optional<int> {
        int src = g.boundary[j].v, dst = g.boundary[i].v;
        std::vector<int> via(E, -2);
        std::queue<int> q;
        for (int e : out[src]) {
            via[e] = -1;
            q.push(e);
        }
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            int h = head(g, po, e);
            if (h == dst) {
                int par = 0;
                for (int cur = e; via[cur] >= 0; cur = via[cur])
                    par ^= cut_crossing(pos, tail(g, po, via[cur]), tail(g, po, cur), head(g, po, cur));
                return par;
            }
            if (bpos[h] >= 0) continue;
            for (int f : out[h])
                if (via[f] == -2) {
                    via[f] = e;
                    q.push(f);
                }
        }
        return std::nullopt;
    };

    QMatrix X(k, n, Q(0));
    for (int r = 0; r < k; ++r) {
        int i = po.sinks[r];
        X(r, i) = 1;
        int sink = g.boundary[i].v;
        for (std::size_t s = 0; s < po.sources.size(); ++s) {
            int j = po.sources[s];
            Q sum = 0;
            for (int e = 0; e < E; ++e)
                if (head(g, po, e) == sink) sum += F(e, s);
            if (sum == 0) continue;
            auto par = ref_parity(j, i);
            int between = 0;
            for (int t : po.sinks)
                if (t > std::min(i, j) && t < std::max(i, j)) ++between;
            int sign = ((par ? *par : 0) + between) % 2 ? -1 : 1;
            X(r, j) = sign * sum;
        }
    }
    return make_point(X);
}

QMatrix schur_complement(const QMatrix& K, const std::vector<int>& r1, const std::vector<int>& c1,
                         const std::vector<int>& r2, const std::vector<int>& c2) {
    QMatrix A = K.submatrix(r1, c1);
    if (r2.empty()) return A;
    QMatrix Bm = K.submatrix(r1, c2), C = K.submatrix(r2, c1), D = K.submatrix(r2, c2);
    return A - Bm * solve(D, C);
}

QMatrix network_kasteleyn(const PlabicNetwork& net, const KasteleynSigns& s) {
    Connection c;
    for (auto& e : net.g.edges) c.phi.push_back(QMatrix{{net.weight[e.id]}});
    return build_block_kasteleyn(net.g, c, s).Kt;
}

GrassmannPoint schur_reduce(const PlabicNetwork& net, const KasteleynSigns& s, const std::vector<int>& matching) {
    const PlanarGraph& g = net.g;
    const int n = net.n_boundary();
    if (n == 0) throw std::invalid_argument("network has no boundary");
    const bool black_boundary = g.is_black(g.boundary[0].v);
    for (auto& b : g.boundary)
        if (g.is_black(b.v) != black_boundary) throw std::invalid_argument("boundary vertices must share a color");
    for (auto& v : g.vertices)
        if (v.n != 1) throw std::invalid_argument("Schur reduction needs n = 1");

    auto K = build_block_kasteleyn(g, [&] {
        Connection c;
        for (auto& e : g.edges) c.phi.push_back(QMatrix{{net.weight[e.id]}});
        return c;
    }(), s);
    // work with rows = opposite color of the boundary
    QMatrix M = black_boundary ? K.Kt : K.Kt.transpose();
    auto row_of = [&](int v) { return black_boundary ? K.row_off[v] : K.col_off[v]; };
    auto col_of = [&](int v) { return black_boundary ? K.col_off[v] : K.row_off[v]; };

    std::vector<int> partner(g.vertices.size(), -1);
    for (int e : matching) {
        partner[g.edges[e].black] = g.edges[e].white;
        partner[g.edges[e].white] = g.edges[e].black;
    }
    std::vector<int> r1, c1, r2, c2;
    for (int i = 0; i < n; ++i) {
        int bv = g.boundary[i].v;
        c1.push_back(col_of(bv));
        if (partner[bv] >= 0) r1.push_back(row_of(partner[bv]));
    }
    for (auto& v : g.vertices) {
        bool rowside = g.is_black(v.id) != black_boundary;
        if (net.boundary_position(v.id) >= 0) continue;
        if (rowside) {
            int p = partner[v.id];
            if (p < 0) throw std::invalid_argument("matching leaves an interior vertex unmatched");
            if (net.boundary_position(p) < 0) {
                r2.push_back(row_of(v.id));
                c2.push_back(col_of(p));
            }
        }
    }
    try {
        return make_point(schur_complement(M, r1, c1, r2, c2));
    } catch (const SingularMatrix&) {
        throw SingularMatrix("interior block D is singular for this matching; choose another");
    }
}

GrassmannPoint schur_reduce(const PlabicNetwork& net) {
    auto s = assign_signs(net.g);
    auto ms = almost_perfect_matchings(net);
    if (ms.empty()) throw Infeasible("network has no almost perfect matching");
    for (auto& m : ms) {
        try {
            return schur_reduce(net, s, m);
        } catch (const SingularMatrix&) {
        }
    }
    throw SingularMatrix("every matching gives a singular interior block");
}

PlabicNetwork gr24_network(const Q& a, const Q& b, const Q& c, const Q& d) {
    PlabicNetwork net;
    PlanarGraph& g = net.g;
    g.surface = Surface::Disk;
    int v1 = g.add_vertex(Color::Black, 1, std::pair{-0.5, 1.5});
    int v2 = g.add_vertex(Color::Black, 1, std::pair{-0.5, 0.5});
    int v3 = g.add_vertex(Color::Black, 1, std::pair{2.5, 0.5});
    int v4 = g.add_vertex(Color::Black, 1, std::pair{2.5, 1.5});
    int W1 = g.add_vertex(Color::White, 1, std::pair{0.5, 0.5});
    int B1 = g.add_vertex(Color::Black, 1, std::pair{0.5, 1.5});
    int B2 = g.add_vertex(Color::Black, 1, std::pair{1.5, 0.5});
    int W2 = g.add_vertex(Color::White, 1, std::pair{1.5, 1.5});
    int Wa = g.add_vertex(Color::White, 1, std::pair{0.0, 1.5});
    int Wb = g.add_vertex(Color::White, 1, std::pair{2.0, 0.5});
    g.add_edge(B1, W1);  // a
    g.add_edge(B2, W1);  // b
    g.add_edge(B2, W2);  // c
    g.add_edge(B1, W2);  // d
    g.add_edge(v1, Wa);
    g.add_edge(B1, Wa);
    g.add_edge(v2, W1);
    g.add_edge(B2, Wb);
    g.add_edge(v3, Wb);
    g.add_edge(v4, W2);
    rotations_from_positions(g);
    g.boundary = {{v1, 1}, {v2, 1}, {v3, 1}, {v4, 1}};
    net.weight = {a, b, c, d, Q(1), Q(1), Q(1), Q(1), Q(1), Q(1)};
    return net;
}

std::vector<int> gr24_acyclic_matching(const PlabicNetwork&) { return {3, 4, 6, 7}; }
std::vector<int> gr24_cyclic_matching(const PlabicNetwork&) { return {0, 2, 4, 8}; }

PlabicNetwork top_cell_graph(int k, int n) {
    if (k <= 0 || k >= n) throw std::invalid_argument("top_cell_graph needs 0 < k < n");
    const int cols = n - k;
    PlabicNetwork net;
    PlanarGraph& g = net.g;
    g.surface = Surface::Disk;
    // ports of each grid vertex: 0 left, 1 down, 2 right, 3 up
    std::map<std::pair<int, int>, std::array<int, 4>> port;
    for (int y = 1; y <= k; ++y)
        for (int x = 1; x <= cols; ++x) {
            bool has_r = x < cols, has_u = y < k;
            std::array<int, 4> p{};
            if (has_r && has_u) {
                // white merges the incoming right/down edges, black splits to left/up
                int w = g.add_vertex(Color::White, 1, std::pair(x + 0.2, y - 0.2));
                int b = g.add_vertex(Color::Black, 1, std::pair(x - 0.2, y + 0.2));
                g.add_edge(b, w);
                p = {b, w, w, b};
            } else {
                Color c = (!has_r && has_u) ? Color::Black : Color::White;
                int v = g.add_vertex(c, 1, std::pair<double, double>(x, y));
                p = {v, v, v, v};
            }
            port[{x, y}] = p;
        }
    std::vector<int> left(k + 1), bottom(cols + 1);
    for (int y = k; y >= 1; --y) left[y] = g.add_vertex(Color::Black, 1, std::pair<double, double>(0, y));
    for (int x = 1; x <= cols; ++x) bottom[x] = g.add_vertex(Color::Black, 1, std::pair<double, double>(x, 0));

    auto link = [&](int u, int v) {
        if (g.is_black(u) != g.is_black(v)) {
            g.is_black(u) ? g.add_edge(u, v) : g.add_edge(v, u);
            return;
        }
        auto [x1, y1] = *g.vertices[u].pos;
        auto [x2, y2] = *g.vertices[v].pos;
        int m = g.add_vertex(g.is_black(u) ? Color::White : Color::Black, 1, std::pair((x1 + x2) / 2, (y1 + y2) / 2));
        for (int t : {u, v}) g.is_black(t) ? g.add_edge(t, m) : g.add_edge(m, t);
    };
    for (int y = 1; y <= k; ++y) {
        link(left[y], port[{1, y}][0]);
        for (int x = 1; x < cols; ++x) link(port[{x, y}][2], port[{x + 1, y}][0]);
    }
    for (int x = 1; x <= cols; ++x) {
        link(bottom[x], port[{x, 1}][1]);
        for (int y = 1; y < k; ++y) link(port[{x, y}][3], port[{x, y + 1}][1]);
    }
    rotations_from_positions(g);
    for (int y = k; y >= 1; --y) g.boundary.push_back({left[y], 1});
    for (int x = 1; x <= cols; ++x) g.boundary.push_back({bottom[x], 1});
    net.weight.assign(g.edges.size(), Q(1));
    return net;
}

}  // namespace hdm
