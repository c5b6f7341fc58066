#include "hdm/trace.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hdm {

void check_connection(const PlanarGraph& g, const Connection& c) {
    if (c.phi.size() != g.edges.size()) throw std::invalid_argument("connection has wrong number of edges");
    for (auto& e : g.edges) {
        const auto& p = c.phi[e.id];
        if (static_cast<int>(p.rows()) != g.vertices[e.white].n || static_cast<int>(p.cols()) != g.vertices[e.black].n)
            throw std::invalid_argument("connection matrix on edge " + std::to_string(e.id) + " has the wrong shape");
    }
}

Connection identity_connection(const PlanarGraph& g) {
    Connection c;
    for (auto& e : g.edges) {
        QMatrix p(g.vertices[e.white].n, g.vertices[e.black].n, Q(0));
        for (std::size_t i = 0; i < std::min(p.rows(), p.cols()); ++i) p(i, i) = 1;
        c.phi.push_back(std::move(p));
    }
    return c;
}

Connection gauge_transform(const PlanarGraph& g, const Connection& c, int v, const QMatrix& gmat) {
    const int n = g.vertices.at(v).n;
    if (static_cast<int>(gmat.rows()) != n || static_cast<int>(gmat.cols()) != n)
        throw std::invalid_argument("gauge matrix has the wrong shape");
    if (det(gmat) == 0) throw SingularMatrix("gauge matrix is singular");
    Connection r = c;
    for (int e : g.vertices[v].rotation)
        r.phi[e] = g.is_black(v) ? c.phi[e] * gmat : gmat * c.phi[e];
    return r;
}

std::vector<int> rotation_start(const PlanarGraph& g) {
    std::vector<int> start(g.vertices.size(), 0);
    std::vector<Face> faces;
    int outer = -1;
    bool need_outer = false;
    for (auto& b : g.boundary)
        if (!g.vertices[b.v].cilium) need_outer = true;
    if (need_outer) {
        faces = trace_faces(g);
        outer = outer_face(g, faces);
    }
    for (auto& v : g.vertices)
        if (v.cilium) start[v.id] = *v.cilium;
    if (outer >= 0) {
        for (auto& b : g.boundary) {
            if (g.vertices[b.v].cilium) continue;
            for (auto [u, wedge] : faces[outer].wedges)
                if (u == b.v) {
                    start[b.v] = wedge;
                    break;
                }
        }
    }
    return start;
}

namespace {

using Code = std::uint32_t;
constexpr Code kTuple = 0x80000000u;

Code tuple_code(const int* first, int len) {
    if (len > 7) throw std::invalid_argument("boundary tuple segment too long");
    Code c = kTuple | (Code(len) << 28);
    for (int k = 0; k < len; ++k) {
        if (first[k] < 0 || first[k] > 15) throw std::invalid_argument("boundary basis index out of range");
        c |= Code(first[k]) << (4 * k);
    }
    return c;
}

std::vector<int> decode(Code c) {
    std::vector<int> out;
    if (c & kTuple) {
        int len = (c >> 28) & 7;
        for (int k = 0; k < len; ++k) out.push_back((c >> (4 * k)) & 15);
    } else {
        for (int b = 0; b < 31; ++b)
            if (c >> b & 1) out.push_back(b);
    }
    return out;
}

struct Wire {
    int edge;
    int size;
};

// Ordered set partitions of {0..n-1} into blocks of the given sizes, with the sign
// of the concatenated word.
struct Assignment {
    std::vector<Code> blocks;
    int sign;
};

void partitions(const std::vector<int>& sizes, std::size_t i, Code used, std::vector<Code>& cur, int n,
                std::vector<Assignment>& out) {
    if (i == sizes.size()) {
        std::vector<int> word;
        for (Code b : cur)
            for (int x : decode(b)) word.push_back(x);
        int inv = 0;
        for (std::size_t a = 0; a < word.size(); ++a)
            for (std::size_t b = a + 1; b < word.size(); ++b) inv += word[a] > word[b];
        out.push_back({cur, inv % 2 ? -1 : 1});
        return;
    }
    // choose a subset of the unused colors of size sizes[i]
    const Code full = (Code(1) << n) - 1;
    Code avail = full & ~used;
    for (Code sub = avail;; sub = (sub - 1) & avail) {
        if (static_cast<int>(__builtin_popcount(sub)) == sizes[i]) {
            cur.push_back(sub);
            partitions(sizes, i + 1, used | sub, cur, n, out);
            cur.pop_back();
        }
        if (sub == 0) break;
    }
}

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

Q trace_multiweb(const PlanarGraph& g, const Multiweb& m, const Connection& c, const BoundaryInput* inputs,
                 const TraceOptions& opt) {
    if (!is_multiweb(g, m)) throw std::invalid_argument("not a multiweb of this graph");
    check_connection(g, c);
    if (!g.boundary.empty() && !inputs) throw std::invalid_argument("boundary graph needs boundary inputs");

    const int V = static_cast<int>(g.vertices.size());
    auto start = rotation_start(g);
    for (auto [v, s] : opt.start_override) start[v] = s;

    // wires and the ordered wire list at each vertex
    std::vector<Wire> wires;
    std::vector<std::vector<int>> edge_wires(g.edges.size());
    for (auto& e : g.edges) {
        int me = m.m[e.id];
        if (me == 0) continue;
        if (opt.path == TracePath::Split) {
            for (int k = 0; k < me; ++k) {
                edge_wires[e.id].push_back(static_cast<int>(wires.size()));
                wires.push_back({e.id, 1});
            }
        } else {
            edge_wires[e.id].push_back(static_cast<int>(wires.size()));
            wires.push_back({e.id, me});
        }
    }
    std::vector<std::vector<int>> at(V);
    for (auto& v : g.vertices) {
        const int deg = static_cast<int>(v.rotation.size());
        for (int k = 0; k < deg; ++k) {
            int e = v.rotation[(start[v.id] + k) % deg];
            for (int w : edge_wires[e]) at[v.id].push_back(w);
        }
    }

    // BFS order so open wires stay few
    std::vector<int> order;
    std::vector<char> seen(V, 0);
    for (int s = 0; s < V; ++s) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int e : g.vertices[v].rotation) {
                int u = g.other_end(e, v);
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
            }
        }
    }

    std::map<std::tuple<int, Code, Code>, Q> det_cache;
    auto wire_factor = [&](int w, Code cb, Code cw) -> Q {
        int e = wires[w].edge;
        auto key = std::make_tuple(e, cb, cw);
        if (auto it = det_cache.find(key); it != det_cache.end()) return it->second;
        auto cols = decode(cb), rows = decode(cw);
        const QMatrix& phi = c.phi[e];
        Q val;
        if ((cb & kTuple) && (cw & kTuple)) {
            val = 1;
            for (std::size_t k = 0; k < cols.size(); ++k) val *= phi(rows[k], cols[k]);
        } else {
            val = det(phi.submatrix(rows, cols));
        }
        det_cache.emplace(key, val);
        return val;
    };

    std::vector<char> done(V, 0);
    std::map<std::vector<Code>, Q> states;
    states.emplace(std::vector<Code>(wires.size(), 0), Q(1));

    for (int v : order) {
        const auto& ws = at[v];
        std::vector<int> sizes;
        for (int w : ws) sizes.push_back(wires[w].size);

        // local choices: blocks per wire, with sign/coefficient
        std::vector<std::pair<std::vector<Code>, Q>> local;
        if (g.is_boundary(v)) {
            auto it = inputs->at.find(v);
            if (it == inputs->at.end()) throw std::invalid_argument("missing boundary input at vertex " + std::to_string(v));
            for (auto& [tuple, coef] : it->second) {
                if (static_cast<int>(tuple.size()) != g.boundary_d(v))
                    throw std::invalid_argument("boundary tuple arity mismatch at vertex " + std::to_string(v));
                if (coef == 0) continue;
                std::vector<Code> blocks;
                int off = 0;
                for (int s : sizes) {
                    blocks.push_back(tuple_code(tuple.data() + off, s));
                    off += s;
                }
                for (int x : tuple)
                    if (x < 0 || x >= g.vertices[v].n) throw std::invalid_argument("boundary basis index out of range");
                local.emplace_back(std::move(blocks), coef);
            }
        } else {
            std::vector<Assignment> parts;
            std::vector<Code> cur;
            partitions(sizes, 0, 0, cur, g.vertices[v].n, parts);
            for (auto& a : parts) local.emplace_back(std::move(a.blocks), Q(a.sign));
        }

        const bool black = g.is_black(v);
        std::map<std::vector<Code>, Q> next;
        for (auto& [state, val] : states) {
            for (auto& [blocks, coef] : local) {
                Q f = val * coef;
                std::vector<Code> ns = state;
                for (std::size_t i = 0; i < ws.size() && f != 0; ++i) {
                    int w = ws[i];
                    if (ns[w]) {
                        f *= black ? wire_factor(w, blocks[i], ns[w]) : wire_factor(w, ns[w], blocks[i]);
                        ns[w] = 0;
                    } else {
                        ns[w] = blocks[i];
                    }
                }
                if (f == 0) continue;
                auto [it, fresh] = next.try_emplace(std::move(ns), f);
                if (!fresh) {
                    it->second += f;
                }
            }
        }
        for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
        states = std::move(next);
        done[v] = 1;
        if (states.empty()) return Q(0);
    }

    Q total = 0;
    for (auto& [s, val] : states) total += val;

    long denom = 1;
    for (auto& e : g.edges) {
        int me = m.m[e.id];
        if (me < 2) continue;
        if (opt.path == TracePath::Split || g.is_boundary(e.black) || g.is_boundary(e.white)) denom *= factorial(me);
    }
    return total / Q(denom);
}

std::map<std::vector<std::vector<int>>, Q> trace_tensor(const PlanarGraph& g, const Multiweb& m, const Connection& c,
                                                        const TraceOptions& opt) {
    std::map<std::vector<std::vector<int>>, Q> out;
    const std::size_t nb = g.boundary.size();
    std::vector<std::vector<int>> tuples(nb);
    for (std::size_t i = 0; i < nb; ++i) tuples[i].assign(g.boundary[i].d, 0);
    while (true) {
        BoundaryInput in;
        for (std::size_t i = 0; i < nb; ++i) in.at[g.boundary[i].v][tuples[i]] = 1;
        Q t = trace_multiweb(g, m, c, &in, opt);
        if (t != 0) out.emplace(tuples, t);
        // odometer over all basis tuples
        std::size_t i = 0;
        for (; i < nb; ++i) {
            auto& tu = tuples[i];
            int n = g.vertices[g.boundary[i].v].n;
            std::size_t k = 0;
            for (; k < tu.size(); ++k) {
                if (++tu[k] < n) break;
                tu[k] = 0;
            }
            if (k < tu.size()) break;
        }
        if (i == nb) break;
    }
    return out;
}

Q trace_sum(const PlanarGraph& g, const Connection& c, const std::vector<Multiweb>& webs, const TraceOptions& opt) {
    Q s = 0;
    for (auto& m : webs) s += trace_multiweb(g, m, c, nullptr, opt);
    return s;
}

}  // namespace hdm
