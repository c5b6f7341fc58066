#include "hdm/scalarization.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <array>
#include <optional>
#include <set>

namespace hdm {

namespace {

QMatrix white_block(int j) { return h26_star_matrix().submatrix({0, 1}, {2 * j, 2 * j + 1}); }

void check_shape(const PlanarGraph& g, const GadgetBlocks& blocks) {
    if (blocks.black.size() != g.edges.size() || blocks.white.size() != g.edges.size())
        throw std::invalid_argument("gadget blocks must cover every edge");
    for (auto& v : g.vertices) {
        if (v.n != 2) throw std::invalid_argument("scalarization needs n = 2 at every vertex");
        if (v.rotation.size() > 3) throw std::invalid_argument("scalarization needs degree <= 3");
        std::set<int> seen;
        for (int e : v.rotation) {
            int j = v.color == Color::Black ? blocks.black[e] : blocks.white[e];
            if (j < 0 || j > 2 || !seen.insert(j).second)
                throw std::invalid_argument("bad gadget block at vertex " + std::to_string(v.id));
        }
    }
    if (!g.boundary.empty()) throw std::invalid_argument("scalarization does not take boundary vertices");
}

}  // namespace

GadgetBlocks default_blocks(const PlanarGraph& g) {
    GadgetBlocks b;
    b.black.assign(g.edges.size(), -1);
    b.white.assign(g.edges.size(), -1);
    auto st = rotation_start(g);
    for (auto& v : g.vertices) {
        int d = static_cast<int>(v.rotation.size());
        for (int i = 0; i < d; ++i) {
            int e = v.rotation[(st[v.id] + i) % d];
            (v.color == Color::Black ? b.black : b.white)[e] = i;
        }
    }
    return b;
}

Scalarization scalarize(const PlanarGraph& g, const Connection& c) { return scalarize(g, c, default_blocks(g)); }

Scalarization scalarize(const PlanarGraph& g, const Connection& c, const GadgetBlocks& blocks) {
    check_shape(g, blocks);
    check_connection(g, c);
    std::vector<H26Weights> ws(g.vertices.size(), H26Weights::ones());
    for (auto& v : g.vertices) {
        if (v.color != Color::Black) continue;
        QMatrix M(6, 2);
        std::vector<bool> have(3, false);
        for (int e : v.rotation) {
            int j = blocks.black[e];
            have[j] = true;
            QMatrix blk = inverse(white_block(blocks.white[e])) * c.phi[e];
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) M(2 * j + r, s) = blk(r, s);
        }
        bool missing = have != std::vector<bool>(3, true);
        std::optional<H26Weights> found;
        std::string why;
        // Unused blocks are capped away, so any filler that keeps the minors nonzero works.
        for (int k = 0; k < 32 && !found; ++k) {
            for (int j = 0; j < 3; ++j) {
                if (have[j]) continue;
                M(2 * j, 0) = k + 1;
                M(2 * j, 1) = j + 2;
                M(2 * j + 1, 0) = (k % 5) - 2;
                M(2 * j + 1, 1) = k + j + 3;
            }
            try {
                found = h26_weights(make_point(M.transpose()));
            } catch (const NonGeneric& ex) {
                why = ex.what();
                if (!missing) break;
            }
        }
        if (!found) throw NonGeneric("vertex " + std::to_string(v.id) + ": " + why);
        ws[v.id] = *found;
    }
    Scalarization s = scalarize_weights(g, ws, blocks);
    s.source = c;
    return s;
}

Scalarization scalarize_weights(const PlanarGraph& g, const std::vector<H26Weights>& w, const GadgetBlocks& blocks) {
    check_shape(g, blocks);
    if (w.size() != g.vertices.size()) throw std::invalid_argument("need gadget weights per vertex");
    Scalarization s;
    s.G = g;
    s.blocks = blocks;
    s.Ghat.surface = g.surface;
    s.gadgets.resize(g.vertices.size());

    struct Pending {
        int vertex;       // Ĝ vertex
        int gadget;       // G vertex
        int local;        // vertex id inside the gadget network
    };
    std::vector<Pending> pend;
    std::vector<PlabicNetwork> nets(g.vertices.size());
    std::vector<std::vector<int>> emap(g.vertices.size());

    for (auto& v : g.vertices) {
        bool black = v.color == Color::Black;
        GadgetRecord& rec = s.gadgets[v.id];
        rec.black = black;
        rec.weights = black ? w[v.id] : H26Weights::ones();
        rec.M = black ? h26_reduced(rec.weights) : h26_star_matrix();
        nets[v.id] = black ? h26_network(rec.weights) : h26_star_network();
        const PlanarGraph& gg = nets[v.id].g;

        std::vector<bool> used(6, false);
        for (int e : v.rotation) {
            int j = black ? blocks.black[e] : blocks.white[e];
            used[2 * j] = used[2 * j + 1] = true;
        }
        std::vector<int> vmap(gg.vertices.size(), -1);
        std::vector<bool> capped(gg.vertices.size(), false);
        for (int i = 0; i < 6; ++i)
            if (!used[i]) capped[gg.boundary[i].v] = true;
        for (auto& gv : gg.vertices) {
            if (capped[gv.id]) continue;
            std::optional<std::pair<double, double>> pos;
            if (v.pos && gv.pos) pos = std::pair{v.pos->first + 0.15 * gv.pos->first, v.pos->second + 0.15 * gv.pos->second};
            vmap[gv.id] = s.Ghat.add_vertex(gv.color, 1, pos);
            s.owner.push_back(v.id);
            pend.push_back({vmap[gv.id], v.id, gv.id});
        }
        rec.legs.assign(6, -1);
        for (int i = 0; i < 6; ++i) rec.legs[i] = vmap[gg.boundary[i].v];
        emap[v.id].assign(gg.edges.size(), -1);
        for (auto& ge : gg.edges) {
            if (vmap[ge.black] < 0 || vmap[ge.white] < 0) continue;
            emap[v.id][ge.id] = s.Ghat.add_edge(vmap[ge.black], vmap[ge.white]);
            s.weight.push_back(nets[v.id].weight[ge.id]);
        }
    }

    s.groups.resize(g.edges.size());
    s.M_bw.resize(g.edges.size());
    s.phi_prime.resize(g.edges.size());
    for (auto& e : g.edges) {
        int jb = blocks.black[e.id], jw = blocks.white[e.id];
        for (int t = 0; t < 2; ++t) {
            int leg_b = s.gadgets[e.black].legs[2 * jb + t];  // white vertex of Ĝ
            int leg_w = s.gadgets[e.white].legs[2 * jw + t];  // black vertex of Ĝ
            s.groups[e.id][t] = s.Ghat.add_edge(leg_w, leg_b);
            s.weight.push_back(Q(1));
        }
        s.M_bw[e.id] = white_block(jw);
        s.phi_prime[e.id] = s.gadgets[e.black].M.submatrix({2 * jb, 2 * jb + 1}, {0, 1});
        s.induced.phi.push_back(s.M_bw[e.id] * s.phi_prime[e.id]);
    }

    // Rotations: gadget order inside; at a leg the parallel edge goes into the wedge
    // facing away from the gadget centre.
    for (auto& p : pend) {
        auto& rot = s.Ghat.vertices[p.vertex].rotation;
        std::vector<int> outside;
        for (int e : rot)
            if (std::find(emap[p.gadget].begin(), emap[p.gadget].end(), e) == emap[p.gadget].end()) outside.push_back(e);
        const PlanarGraph& gg = nets[p.gadget].g;
        const Vertex& lv = gg.vertices[p.local];
        rot.clear();
        int at = 0;
        if (!outside.empty()) at = wedge_toward(gg, p.local, std::atan2(lv.pos->second, lv.pos->first));
        for (int i = 0; i < static_cast<int>(lv.rotation.size()); ++i) {
            if (i == at) rot.insert(rot.end(), outside.begin(), outside.end());
            if (emap[p.gadget][lv.rotation[i]] >= 0) rot.push_back(emap[p.gadget][lv.rotation[i]]);
        }
        if (at >= static_cast<int>(lv.rotation.size())) rot.insert(rot.end(), outside.begin(), outside.end());
    }
    s.source = s.induced;
    return s;
}

Multiweb project_dimer(const Scalarization& s, const Multiweb& cover) {
    if (cover.m.size() != s.Ghat.edges.size()) throw std::invalid_argument("cover does not match the scalarized graph");
    Multiweb m;
    m.m.resize(s.G.edges.size());
    for (std::size_t e = 0; e < s.groups.size(); ++e) m.m[e] = 2 - cover.m[s.groups[e][0]] - cover.m[s.groups[e][1]];
    return m;
}

namespace {

// Matching sums of one gadget keyed by the mask of legs matched inside it.
std::map<int, Q> local_sums(const Scalarization& s, int v) {
    const PlanarGraph& H = s.Ghat;
    std::vector<int> verts, edges;
    for (std::size_t u = 0; u < H.vertices.size(); ++u)
        if (s.owner[u] == v) verts.push_back(static_cast<int>(u));
    for (auto& e : H.edges)
        if (s.owner[e.black] == v && s.owner[e.white] == v) edges.push_back(e.id);
    std::map<int, int> leg_of;
    for (int i = 0; i < 6; ++i)
        if (s.gadgets[v].legs[i] >= 0) leg_of[s.gadgets[v].legs[i]] = i;
    std::map<int, Q> out;
    std::vector<int> deg(H.vertices.size(), 0);
    std::function<void(std::size_t, Q)> rec = [&](std::size_t i, Q wt) {
        if (i == edges.size()) {
            int mask = 0;
            for (int u : verts) {
                auto it = leg_of.find(u);
                if (it == leg_of.end()) {
                    if (deg[u] != 1) return;
                } else if (deg[u] == 1) {
                    mask |= 1 << it->second;
                }
            }
            out[mask] += wt;
            return;
        }
        rec(i + 1, wt);
        const Edge& e = H.edges[edges[i]];
        if (deg[e.black] || deg[e.white]) return;
        ++deg[e.black];
        ++deg[e.white];
        rec(i + 1, wt * s.weight[e.id]);
        --deg[e.black];
        --deg[e.white];
    };
    rec(0, Q(1));
    return out;
}

}  // namespace

std::map<Multiweb, Q> fiber_sums(const Scalarization& s, const EnumOptions& eo) {
    const PlanarGraph& G = s.G;
    const std::size_t nv = G.vertices.size(), ne = G.edges.size();
    std::vector<std::map<int, Q>> local(nv);
    std::vector<int> used(nv, 0), pending(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        local[v] = local_sums(s, static_cast<int>(v));
        for (int i = 0; i < 6; ++i)
            if (s.gadgets[v].legs[i] >= 0) used[v] |= 1 << i;
        pending[v] = G.degree(static_cast<int>(v));
    }
    std::vector<int> external(nv, 0);
    std::vector<int> occ(ne, 0);  // bit t: parallel copy t occupied
    std::map<Multiweb, Q> out;
    std::uint64_t nodes = 0;
    auto leg_bits = [&](int e, bool black) {
        int j = black ? s.blocks.black[e] : s.blocks.white[e];
        return 3 << (2 * j);
    };
    std::function<void(std::size_t, Q)> rec = [&](std::size_t e, Q wt) {
        if (++nodes > eo.cap) throw EnumerationTooLarge("fiber enumeration exceeded cap of " + std::to_string(eo.cap) + " nodes");
        if (e == ne) {
            Multiweb m;
            m.m.resize(ne);
            for (std::size_t i = 0; i < ne; ++i) m.m[i] = 2 - std::popcount(static_cast<unsigned>(occ[i]));
            out[m] += wt;
            return;
        }
        const Edge& ed = G.edges[e];
        int jb = s.blocks.black[e], jw = s.blocks.white[e];
        for (int o = 0; o < 4; ++o) {
            occ[e] = o;
            int xb = ((o & 1) << (2 * jb)) | ((o >> 1 & 1) << (2 * jb + 1));
            int xw = ((o & 1) << (2 * jw)) | ((o >> 1 & 1) << (2 * jw + 1));
            external[ed.black] |= xb;
            external[ed.white] |= xw;
            --pending[ed.black];
            --pending[ed.white];
            Q f = wt;
            for (int v : {ed.black, ed.white}) {
                if (pending[v] != 0 || f == 0) continue;
                auto it = local[v].find(used[v] & ~external[v]);
                f *= it == local[v].end() ? Q(0) : it->second;
            }
            if (f != 0) rec(e + 1, f);
            ++pending[ed.black];
            ++pending[ed.white];
            external[ed.black] &= ~leg_bits(static_cast<int>(e), true);
            external[ed.white] &= ~leg_bits(static_cast<int>(e), false);
        }
        occ[e] = 0;
    };
    // Isolated G vertices never get visited by an edge.
    Q base = 1;
    for (std::size_t v = 0; v < nv; ++v)
        if (pending[v] == 0) {
            auto it = local[v].find(0);
            base *= it == local[v].end() ? Q(0) : it->second;
        }
    if (base != 0) rec(0, base);
    return out;
}

MeasureCheck verify_measure_preservation(const Scalarization& s, const Multiweb& m, const EnumOptions& eo) {
    if (!is_multiweb(s.G, m)) throw std::invalid_argument("not a multiweb of the source graph");
    auto f = fiber_sums(s, eo);
    MeasureCheck r;
    auto it = f.find(m);
    r.fiber_sum = it == f.end() ? Q(0) : it->second;
    r.trace = trace_multiweb(s.G, m, s.source);
    r.equal = r.fiber_sum == r.trace;
    return r;
}

std::vector<std::pair<Multiweb, MeasureCheck>> verify_measure_all(const Scalarization& s, const EnumOptions& eo) {
    auto f = fiber_sums(s, eo);
    std::vector<std::pair<Multiweb, MeasureCheck>> out;
    for (auto& m : enumerate_multiwebs(s.G, eo)) {
        MeasureCheck r;
        auto it = f.find(m);
        r.fiber_sum = it == f.end() ? Q(0) : it->second;
        r.trace = trace_multiweb(s.G, m, s.source);
        r.equal = r.fiber_sum == r.trace;
        out.emplace_back(m, r);
    }
    // Covers projecting outside Ω₂(G) would break surjectivity bookkeeping; flag them.
    for (auto& [m, q] : f)
        if (!is_multiweb(s.G, m)) out.push_back({m, {q, Q(0), false}});
    return out;
}

HoneycombSpec induced_honeycomb(const Scalarization& s, const HoneycombPatch& torus) {
    if (s.G.edges.size() != torus.cls.size()) throw std::invalid_argument("scalarization is not of this honeycomb");
    int e_i = -1, e_a = -1, e_b = -1;
    for (std::size_t e = 0; e < torus.cls.size(); ++e)
        (torus.cls[e] == EdgeClass::I ? e_i : torus.cls[e] == EdgeClass::A ? e_a : e_b) = static_cast<int>(e);
    if (e_i < 0 || e_a < 0 || e_b < 0) throw std::invalid_argument("torus needs one edge of each class");
    QMatrix gw = inverse(white_block(0));
    QMatrix gb = inverse(gw * s.induced.phi[e_i]);
    HoneycombSpec h;
    h.A = gw * s.induced.phi[e_a] * gb;
    h.B = gw * s.induced.phi[e_b] * gb;
    return h;
}

}  // namespace hdm
