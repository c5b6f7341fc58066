#include "hdm/kasteleyn.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace hdm {

int face_rule_parity(const Face& f) { return (f.length / 2 + 1 + f.cilia) % 2; }

std::vector<BoundarySegment> boundary_segments(const PlanarGraph& g, const std::vector<Face>& faces, int outer) {
    std::vector<BoundarySegment> segs;
    const int n = static_cast<int>(g.boundary.size());
    if (n < 2 || outer < 0) return segs;
    std::vector<int> label(g.vertices.size(), -1);
    for (int i = 0; i < n; ++i) label[g.boundary[i].v] = i;
    const auto& f = faces[outer];
    const int L = f.length;
    std::vector<int> hits;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < L; ++i) {
        int lb = label[f.walk[i].to];
        if (lb >= 0 && !seen[lb]) {
            seen[lb] = 1;
            hits.push_back(i);
        }
    }
    if (static_cast<int>(hits.size()) != n) throw EmbeddingError("boundary vertices do not all lie on the outer face");
    segs.resize(n - 1);
    std::vector<char> filled(n - 1, 0);
    for (int h = 0; h < n; ++h) {
        int a = hits[h], b = hits[(h + 1) % n];
        int la = label[f.walk[a].to], lb = label[f.walk[b].to];
        // keep the arcs joining labels i and i+1, in either walking direction
        int lo;
        if (lb == la + 1) lo = la;
        else if (la == lb + 1) lo = lb;
        else continue;
        if (filled[lo]) continue;
        BoundarySegment s;
        int i = (a + 1) % L;
        while (true) {
            s.walk.push_back(f.walk[i]);
            if (i == b) break;
            auto [v, wedge] = f.wedges[i];
            const Vertex& vv = g.vertices[v];
            if (vv.cilium && vv.n % 2 == 0 && *vv.cilium == wedge) ++s.cilia;
            i = (i + 1) % L;
        }
        segs[lo] = std::move(s);
        filled[lo] = 1;
    }
    for (int i = 0; i < n - 1; ++i)
        if (!filled[i]) throw EmbeddingError("boundary order does not follow the outer face");
    return segs;
}

namespace {

struct Gf2System {
    int nvars;
    std::vector<std::vector<std::uint64_t>> rows;
    explicit Gf2System(int n) : nvars(n) {}
    std::size_t words() const { return static_cast<std::size_t>(nvars) / 64 + 1; }
    void add(const std::vector<int>& edges, int rhs) {
        std::vector<std::uint64_t> r(words(), 0);
        for (int e : edges) r[e / 64] ^= std::uint64_t(1) << (e % 64);
        if (rhs) r[nvars / 64] ^= std::uint64_t(1) << (nvars % 64);
        rows.push_back(std::move(r));
    }
    bool bit(const std::vector<std::uint64_t>& r, int i) const { return r[i / 64] >> (i % 64) & 1; }
    // Particular solution with free variables 0.
    std::vector<int> solve() {
        std::vector<int> pivcol;
        std::size_t rank = 0;
        for (int c = 0; c < nvars && rank < rows.size(); ++c) {
            std::size_t p = rank;
            while (p < rows.size() && !bit(rows[p], c)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[rank]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != rank && bit(rows[i], c))
                    for (std::size_t k = 0; k < words(); ++k) rows[i][k] ^= rows[rank][k];
            pivcol.push_back(c);
            ++rank;
        }
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (bit(rows[i], nvars)) throw SignError("Kasteleyn sign rules are inconsistent");
        std::vector<int> x(nvars, 0);
        for (std::size_t i = 0; i < rank; ++i) x[pivcol[i]] = bit(rows[i], nvars);
        return x;
    }
};

std::vector<int> walk_edges(const std::vector<Dart>& w) {
    std::vector<int> e;
    for (auto& d : w) e.push_back(d.edge);
    return e;
}

int walk_parity(const std::vector<Dart>& w, const KasteleynSigns& s) {
    int p = 0;
    for (auto& d : w) p ^= s.sign[d.edge] < 0;
    return p;
}

}  // namespace

KasteleynSigns assign_signs(const PlanarGraph& g) {
    const int E = static_cast<int>(g.edges.size());
    KasteleynSigns s;
    s.sign.assign(E, 1);
    if (E == 0) return s;
    auto faces = trace_faces(g);
    int outer = outer_face(g, faces);
    Gf2System sys(E);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != outer) sys.add(walk_edges(faces[i].walk), face_rule_parity(faces[i]));
    for (auto& seg : boundary_segments(g, faces, outer))
        sys.add(walk_edges(seg.walk), (static_cast<int>(seg.walk.size()) / 2 + 1 + seg.cilia) % 2);
    auto x = sys.solve();
    for (int e = 0; e < E; ++e) s.sign[e] = x[e] ? -1 : 1;
    return s;
}

std::vector<std::string> check_signs(const PlanarGraph& g, const KasteleynSigns& s) {
    std::vector<std::string> bad;
    if (g.edges.empty()) return bad;
    auto faces = trace_faces(g);
    int outer = outer_face(g, faces);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (i == outer) continue;
        if (walk_parity(faces[i].walk, s) != face_rule_parity(faces[i]))
            bad.push_back("face " + std::to_string(i) + " violates the sign rule");
    }
    int k = 0;
    for (auto& seg : boundary_segments(g, faces, outer)) {
        if (walk_parity(seg.walk, s) != (static_cast<int>(seg.walk.size()) / 2 + 1 + seg.cilia) % 2)
            bad.push_back("boundary segment " + std::to_string(k) + " violates the sign rule");
        ++k;
    }
    return bad;
}

namespace {

template <class T, class Entry>
BlockKasteleyn<T> build(const PlanarGraph& g, const Connection& c, const KasteleynSigns& s, Entry entry) {
    check_connection(g, c);
    BlockKasteleyn<T> k;
    const int V = static_cast<int>(g.vertices.size());
    k.row_off.assign(V, -1);
    k.col_off.assign(V, -1);
    int nr = 0, nc = 0;
    for (auto& v : g.vertices) {
        if (g.is_black(v.id)) {
            k.blacks.push_back(v.id);
            k.col_off[v.id] = nc;
            nc += v.n;
        } else {
            k.whites.push_back(v.id);
            k.row_off[v.id] = nr;
            nr += v.n;
        }
    }
    k.Kt = Matrix<T>(nr, nc, T(0));
    for (auto& e : g.edges) {
        const QMatrix& phi = c.phi[e.id];
        for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < phi.cols(); ++j) {
                if (phi(i, j) == 0) continue;
                k.Kt(k.row_off[e.white] + i, k.col_off[e.black] + j) += entry(e, Q(s.sign[e.id] * phi(i, j)));
            }
    }
    return k;
}

}  // namespace

BlockKasteleyn<Q> build_block_kasteleyn(const PlanarGraph& g, const Connection& c, const KasteleynSigns& s) {
    return build<Q>(g, c, s, [](const Edge&, const Q& x) { return x; });
}

BlockKasteleyn<LaurentPoly2> build_block_kasteleyn_torus(const PlanarGraph& g, const Connection& c,
                                                        const KasteleynSigns& s) {
    return build<LaurentPoly2>(g, c, s, [](const Edge& e, const Q& x) {
        return LaurentPoly2::monomial(e.homology.first, e.homology.second, x);
    });
}

Q det_expanded(const BlockKasteleyn<Q>& k) {
    if (k.Kt.rows() != k.Kt.cols())
        throw InfeasibleMultiplicities("K~ is " + std::to_string(k.Kt.rows()) + "x" + std::to_string(k.Kt.cols()) +
                                       ": multiplicities violate the handshake condition");
    return det(k.Kt);
}

LaurentPoly2 det_expanded(const BlockKasteleyn<LaurentPoly2>& k) {
    if (k.Kt.rows() != k.Kt.cols())
        throw InfeasibleMultiplicities("K~ is " + std::to_string(k.Kt.rows()) + "x" + std::to_string(k.Kt.cols()) +
                                       ": multiplicities violate the handshake condition");
    return det(k.Kt);
}

MainTheoremResult verify_main_theorem(const PlanarGraph& g, const Connection& c, const EnumOptions& eo,
                                      const TraceOptions& to) {
    if (!g.boundary.empty()) throw std::invalid_argument("main identity is stated for graphs without boundary");
    long sb = 0, sw = 0;
    for (auto& v : g.vertices) (g.is_black(v.id) ? sb : sw) += v.n;
    if (sb != sw) throw InfeasibleMultiplicities("sum of n over black vertices differs from white");
    MainTheoremResult r;
    auto s = assign_signs(g);
    r.lhs = det_expanded(build_block_kasteleyn(g, c, s));
    auto webs = enumerate_multiwebs(g, eo);
    r.multiwebs = webs.size();
    r.rhs = trace_sum(g, c, webs, to);
    if (r.lhs == r.rhs) r.global_sign = 1;
    else if (r.lhs == -r.rhs) r.global_sign = -1;
    return r;
}

}  // namespace hdm
