#include "hdm/multiweb.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace hdm {

std::uint64_t default_enumeration_cap() {
    if (const char* s = std::getenv("MULTIWEB_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return 10'000'000ULL;
}

bool is_multiweb(const PlanarGraph& g, const Multiweb& m) {
    if (m.m.size() != g.edges.size()) return false;
    std::vector<int> sum(g.vertices.size(), 0);
    for (auto& e : g.edges) {
        if (m.m[e.id] < 0) return false;
        sum[e.black] += m.m[e.id];
        sum[e.white] += m.m[e.id];
    }
    for (auto& v : g.vertices)
        if (sum[v.id] != g.demand(v.id)) return false;
    return true;
}

namespace {

// Dinic max-flow on a small dense network.
struct MaxFlow {
    struct Arc {
        int to;
        long long cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;
    std::vector<int> level, it;
    explicit MaxFlow(int n) : adj(n), level(n), it(n) {}
    void add(int u, int v, long long c) {
        adj[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, c});
        adj[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }
    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : adj[u])
                if (arcs[a].cap > 0 && level[arcs[a].to] < 0) {
                    level[arcs[a].to] = level[u] + 1;
                    q.push(arcs[a].to);
                }
        }
        return level[t] >= 0;
    }
    long long dfs(int u, int t, long long f) {
        if (u == t) return f;
        for (int& i = it[u]; i < static_cast<int>(adj[u].size()); ++i) {
            Arc& a = arcs[adj[u][i]];
            if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
            long long got = dfs(a.to, t, std::min(f, a.cap));
            if (got > 0) {
                a.cap -= got;
                arcs[adj[u][i] ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }
    long long run(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
        }
        return total;
    }
};

}  // namespace

bool hall_feasible(const PlanarGraph& g) {
    const int V = static_cast<int>(g.vertices.size());
    long long sb = 0, sw = 0;
    for (auto& v : g.vertices) (g.is_black(v.id) ? sb : sw) += g.demand(v.id);
    if (sb != sw) return false;
    MaxFlow f(V + 2);
    const int s = V, t = V + 1;
    for (auto& v : g.vertices) {
        if (g.is_black(v.id)) f.add(s, v.id, g.demand(v.id));
        else f.add(v.id, t, g.demand(v.id));
    }
    for (auto& e : g.edges) f.add(e.black, e.white, std::numeric_limits<int>::max());
    return f.run(s, t) == sb;
}

namespace {

struct Enumerator {
    const PlanarGraph& g;
    std::uint64_t cap;
    std::vector<int> last_edge;  // largest edge id incident to each vertex
    std::vector<int> rem;
    std::vector<int> m;
    std::vector<Multiweb> out;
    std::uint64_t nodes = 0;

    Enumerator(const PlanarGraph& graph, std::uint64_t c) : g(graph), cap(c) {
        last_edge.assign(g.vertices.size(), -1);
        rem.assign(g.vertices.size(), 0);
        for (auto& e : g.edges) {
            last_edge[e.black] = std::max(last_edge[e.black], e.id);
            last_edge[e.white] = std::max(last_edge[e.white], e.id);
        }
        for (auto& v : g.vertices) rem[v.id] = g.demand(v.id);
        m.assign(g.edges.size(), 0);
    }

    bool trivially_empty() const {
        for (auto& v : g.vertices)
            if (last_edge[v.id] < 0 && rem[v.id] > 0) return true;
        return false;
    }

    void place(int e, int k) {
        m[e] = k;
        rem[g.edges[e].black] -= k;
        rem[g.edges[e].white] -= k;
    }
    void unplace(int e, int k) {
        m[e] = 0;
        rem[g.edges[e].black] += k;
        rem[g.edges[e].white] += k;
    }

    // Range of admissible values for edge e given the partial assignment.
    std::pair<int, int> range(int e) const {
        const Edge& ed = g.edges[e];
        int hi = std::min(rem[ed.black], rem[ed.white]);
        int lo = 0;
        if (last_edge[ed.black] == e) lo = std::max(lo, rem[ed.black]);
        if (last_edge[ed.white] == e) lo = std::max(lo, rem[ed.white]);
        if (last_edge[ed.black] == e) hi = std::min(hi, rem[ed.black]);
        if (last_edge[ed.white] == e) hi = std::min(hi, rem[ed.white]);
        return {lo, hi};
    }

    void run(int e) {
        if (++nodes > cap)
            throw EnumerationTooLarge("multiweb enumeration exceeded cap of " + std::to_string(cap) + " nodes");
        if (e == static_cast<int>(g.edges.size())) {
            out.push_back({m});
            return;
        }
        auto [lo, hi] = range(e);
        for (int k = lo; k <= hi; ++k) {
            place(e, k);
            run(e + 1);
            unplace(e, k);
        }
    }
};

}  // namespace

std::vector<Multiweb> enumerate_multiwebs(const PlanarGraph& g, const EnumOptions& opt) {
    Enumerator root(g, opt.cap);
    if (root.trivially_empty()) return {};
    if (g.edges.empty()) {
        bool ok = std::all_of(g.vertices.begin(), g.vertices.end(), [&](const Vertex& v) { return g.demand(v.id) == 0; });
        return ok ? std::vector<Multiweb>{Multiweb{}} : std::vector<Multiweb>{};
    }
    if (opt.threads <= 1) {
        root.run(0);
        return std::move(root.out);
    }
    // split by the multiplicity of edge 0; each branch gets the full cap
    auto [lo, hi] = root.range(0);
    std::vector<std::future<std::vector<Multiweb>>> parts;
    for (int k = lo; k <= hi; ++k)
        parts.push_back(std::async(std::launch::async, [&g, &opt, k] {
            Enumerator en(g, opt.cap);
            en.place(0, k);
            en.run(1);
            return std::move(en.out);
        }));
    std::vector<Multiweb> all;
    for (auto& p : parts) {
        auto v = p.get();
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return all;
}

Multiweb loop_move(const PlanarGraph& g, const Multiweb& m, const std::vector<int>& cycle) {
    const int L = static_cast<int>(cycle.size());
    if (L < 2 || L % 2) throw InvalidMove("cycle must have even positive length");
    for (int e : cycle)
        if (e < 0 || e >= static_cast<int>(g.edges.size())) throw InvalidMove("cycle lists unknown edge " + std::to_string(e));
    // follow the walk from either end of the first edge
    std::vector<int> turn;
    for (int s : {g.edges[cycle[0]].black, g.edges[cycle[0]].white}) {
        std::vector<int> t;
        int at = g.other_end(cycle[0], s);
        t.push_back(at);
        bool ok = true;
        for (int i = 1; i < L && ok; ++i) {
            const Edge& e = g.edges[cycle[i]];
            if (cycle[i] == cycle[i - 1] || (e.black != at && e.white != at)) ok = false;
            else at = g.other_end(cycle[i], at), t.push_back(at);
        }
        if (ok && at == s && cycle[L - 1] != cycle[0]) {
            turn = std::move(t);
            break;
        }
    }
    if (turn.empty()) throw InvalidMove("edges do not form a closed walk");
    for (int v : turn)
        if (g.is_boundary(v)) throw InvalidMove("loop moves through boundary vertex " + std::to_string(v) + " are not supported");
    Multiweb r = m;
    for (int i = 0; i < L; i += 2) {
        if (--r.m[cycle[i]] < 0) throw InvalidMove("edge " + std::to_string(cycle[i]) + " has multiplicity 0");
    }
    for (int i = 1; i < L; i += 2) ++r.m[cycle[i]];
    return r;
}

std::vector<std::vector<int>> decompose_difference(const PlanarGraph& g, const Multiweb& from, const Multiweb& to) {
    const int E = static_cast<int>(g.edges.size());
    std::vector<int> d(E);
    for (int e = 0; e < E; ++e) d[e] = from.m[e] - to.m[e];
    std::vector<std::vector<int>> cycles;
    while (true) {
        int e0 = -1;
        for (int e = 0; e < E; ++e)
            if (d[e] != 0) {
                e0 = e;
                break;
            }
        if (e0 < 0) break;
        const int s0 = d[e0] > 0 ? 1 : -1;
        std::vector<int> walk{e0};
        d[e0] -= s0;
        int start = g.edges[e0].black, at = g.edges[e0].white, in = e0, want = -s0;
        while (at != start) {
            auto ccw = ccw_rotation(g, at);
            int p = static_cast<int>(std::find(ccw.begin(), ccw.end(), in) - ccw.begin());
            int nxt = -1;
            for (int k = 1; k <= static_cast<int>(ccw.size()); ++k) {
                int c = ccw[(p + k) % ccw.size()];
                if (d[c] * want > 0) {
                    nxt = c;
                    break;
                }
            }
            if (nxt < 0) throw InvalidMove("difference is not divergence free");
            walk.push_back(nxt);
            d[nxt] -= want;
            at = g.other_end(nxt, at);
            in = nxt;
            want = -want;
        }
        // loop_move lowers even positions, so those must carry the surplus of `from`
        if (s0 < 0) std::rotate(walk.begin(), walk.begin() + 1, walk.end());
        cycles.push_back(std::move(walk));
    }
    return cycles;
}

}  // namespace hdm
