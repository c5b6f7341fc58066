#include "hdm/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hdm {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

json parse_doc(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError(e.what());
    }
}

void check_schema(const json& j) {
    if (!j.is_object()) return;
    if (!j.contains("schema")) return;  // hand-written files may omit it
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
        fail("schema", "unsupported schema version (expected 1)");
}

std::string finish(json& j) {
    json out;
    out["schema"] = 1;
    for (auto& [k, v] : j.items()) out[k] = v;
    return out.dump(2) + "\n";
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
    return j[key];
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

Q as_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (!j.is_string()) fail(where, "expected a rational as a \"p/q\" string or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

json q_json(const Q& x) { return to_string(x); }

QMatrix matrix_from(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a 2D array");
    std::size_t rows = j.size(), cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string wr = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) fail(wr, "ragged or non-array row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_rational(j[r][c], wr + "[" + std::to_string(c) + "]");
    }
    return m;
}

json matrix_json(const QMatrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(q_json(m(r, c)));
        a.push_back(row);
    }
    return a;
}

const char* surface_name(Surface s) {
    switch (s) {
        case Surface::Disk: return "disk";
        case Surface::Plane: return "plane";
        case Surface::Torus: return "torus";
    }
    return "disk";
}

json graph_json(const PlanarGraph& g) {
    json j;
    j["surface"] = surface_name(g.surface);
    json vs = json::array();
    for (auto& v : g.vertices) {
        json o;
        o["id"] = v.id;
        o["color"] = v.color == Color::Black ? "black" : "white";
        o["n"] = v.n;
        o["rotation"] = v.rotation;
        o["cilium"] = v.cilium ? json(*v.cilium) : json(nullptr);
        if (v.pos) o["pos"] = {v.pos->first, v.pos->second};
        vs.push_back(o);
    }
    j["vertices"] = vs;
    json es = json::array();
    for (auto& e : g.edges)
        es.push_back({{"id", e.id}, {"black", e.black}, {"white", e.white}, {"homology", {e.homology.first, e.homology.second}}});
    j["edges"] = es;
    if (!g.boundary.empty()) {
        json b = json::array();
        for (auto& be : g.boundary) b.push_back({{"v", be.v}, {"d", be.d}});
        j["boundary"] = b;
    }
    return j;
}

PlanarGraph graph_from(const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    PlanarGraph g;
    if (j.contains("surface")) {
        if (!j["surface"].is_string()) fail("surface", "expected a string");
        auto s = j["surface"].get<std::string>();
        if (s == "disk") g.surface = Surface::Disk;
        else if (s == "plane") g.surface = Surface::Plane;
        else if (s == "torus") g.surface = Surface::Torus;
        else fail("surface", "unknown surface \"" + s + "\" (disk, plane, torus)");
    }
    const json& vs = field(j, "vertices", "$");
    const json& es = field(j, "edges", "$");
    if (!vs.is_array()) fail("vertices", "expected an array");
    if (!es.is_array()) fail("edges", "expected an array");
    const int V = static_cast<int>(vs.size()), E = static_cast<int>(es.size());
    g.vertices.resize(V);
    g.edges.resize(E);
    std::vector<char> seen(V, 0);
    for (int i = 0; i < V; ++i) {
        std::string w = "vertices[" + std::to_string(i) + "]";
        const json& o = vs[i];
        int id = as_int(field(o, "id", w), w + ".id");
        if (id < 0 || id >= V || seen[id]) fail(w + ".id", "ids must be a permutation of 0.." + std::to_string(V - 1));
        seen[id] = 1;
        Vertex& v = g.vertices[id];
        v.id = id;
        const json& c = field(o, "color", w);
        if (c == "black") v.color = Color::Black;
        else if (c == "white") v.color = Color::White;
        else fail(w + ".color", "expected \"black\" or \"white\"");
        v.n = o.contains("n") ? as_int(o["n"], w + ".n") : 1;
        const json& rot = field(o, "rotation", w);
        if (!rot.is_array()) fail(w + ".rotation", "expected an array of edge ids");
        for (std::size_t k = 0; k < rot.size(); ++k) {
            int e = as_int(rot[k], w + ".rotation[" + std::to_string(k) + "]");
            if (e < 0 || e >= E) fail(w + ".rotation[" + std::to_string(k) + "]", "no edge " + std::to_string(e));
            v.rotation.push_back(e);
        }
        if (o.contains("cilium") && !o["cilium"].is_null()) v.cilium = as_int(o["cilium"], w + ".cilium");
        if (o.contains("pos")) {
            const json& p = o["pos"];
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                fail(w + ".pos", "expected [x, y]");
            v.pos = std::pair{p[0].get<double>(), p[1].get<double>()};
        }
    }
    std::vector<char> eseen(E, 0);
    for (int i = 0; i < E; ++i) {
        std::string w = "edges[" + std::to_string(i) + "]";
        const json& o = es[i];
        int id = as_int(field(o, "id", w), w + ".id");
        if (id < 0 || id >= E || eseen[id]) fail(w + ".id", "ids must be a permutation of 0.." + std::to_string(E - 1));
        eseen[id] = 1;
        Edge& e = g.edges[id];
        e.id = id;
        e.black = as_int(field(o, "black", w), w + ".black");
        e.white = as_int(field(o, "white", w), w + ".white");
        if (e.black < 0 || e.black >= V) fail(w + ".black", "no vertex " + std::to_string(e.black));
        if (e.white < 0 || e.white >= V) fail(w + ".white", "no vertex " + std::to_string(e.white));
        if (o.contains("homology")) {
            const json& h = o["homology"];
            if (!h.is_array() || h.size() != 2) fail(w + ".homology", "expected [p, q]");
            e.homology = {as_int(h[0], w + ".homology[0]"), as_int(h[1], w + ".homology[1]")};
        }
    }
    if (j.contains("boundary")) {
        const json& b = j["boundary"];
        if (!b.is_array()) fail("boundary", "expected an array");
        for (std::size_t k = 0; k < b.size(); ++k) {
            std::string w = "boundary[" + std::to_string(k) + "]";
            BoundaryEntry be;
            be.v = as_int(field(b[k], "v", w), w + ".v");
            be.d = b[k].contains("d") ? as_int(b[k]["d"], w + ".d") : 1;
            if (be.v < 0 || be.v >= V) fail(w + ".v", "no vertex " + std::to_string(be.v));
            g.boundary.push_back(be);
        }
    }
    return g;
}

json multiweb_json(const Multiweb& m) {
    json a = json::array();
    for (std::size_t e = 0; e < m.m.size(); ++e)
        if (m.m[e] != 0) a.push_back({{"edge", static_cast<int>(e)}, {"m", m.m[e]}});
    return a;
}

Multiweb multiweb_from(const PlanarGraph& g, const json& a, const std::string& where) {
    if (!a.is_array()) fail(where, "expected an array of {\"edge\", \"m\"}");
    Multiweb m;
    m.m.assign(g.edges.size(), 0);
    std::set<int> seen;
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::string w = where + "[" + std::to_string(k) + "]";
        int e = as_int(field(a[k], "edge", w), w + ".edge");
        int mult = as_int(field(a[k], "m", w), w + ".m");
        if (e < 0 || e >= static_cast<int>(g.edges.size())) fail(w + ".edge", "no edge " + std::to_string(e));
        if (mult < 0) fail(w + ".m", "negative multiplicity");
        if (!seen.insert(e).second) fail(w + ".edge", "edge listed twice");
        m.m[e] = mult;
    }
    return m;
}

json weights_json(const std::vector<Q>& w) {
    json o = json::object();
    for (std::size_t e = 0; e < w.size(); ++e) o[std::to_string(e)] = q_json(w[e]);
    return o;
}

int key_index(const std::string& key, int limit, const std::string& where) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || v < 0 || v >= limit) fail(where, "\"" + key + "\" is not an edge id");
    return v;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PlanarGraph parse_graph(std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    return graph_from(j);
}

std::string dump_graph(const PlanarGraph& g) {
    json j = graph_json(g);
    return finish(j);
}

Connection parse_connection(const PlanarGraph& g, std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    if (!j.is_object()) fail("$", "expected an object {edge id: matrix}");
    const int E = static_cast<int>(g.edges.size());
    Connection c;
    c.phi.resize(E);
    std::vector<char> seen(E, 0);
    for (auto& [k, v] : j.items()) {
        if (k == "schema") continue;
        int e = key_index(k, E, k);
        c.phi[e] = matrix_from(v, k);
        seen[e] = 1;
    }
    for (int e = 0; e < E; ++e)
        if (!seen[e]) fail(std::to_string(e), "no matrix for this edge");
    try {
        check_connection(g, c);
    } catch (const std::exception& ex) {
        throw InputError(std::string("connection: ") + ex.what());
    }
    return c;
}

std::string dump_connection(const PlanarGraph& g, const Connection& c) {
    json j;
    for (std::size_t e = 0; e < g.edges.size(); ++e) j[std::to_string(e)] = matrix_json(c.phi[e]);
    return finish(j);
}

Multiweb parse_multiweb(const PlanarGraph& g, std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    if (j.is_object()) return multiweb_from(g, field(j, "multiweb", "$"), "multiweb");
    return multiweb_from(g, j, "$");
}

std::string dump_multiweb(const Multiweb& m) {
    json j;
    j["multiweb"] = multiweb_json(m);
    return finish(j);
}

std::vector<Multiweb> parse_multiwebs(const PlanarGraph& g, std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    const json& a = field(j, "multiwebs", "$");
    if (!a.is_array()) fail("multiwebs", "expected an array");
    std::vector<Multiweb> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(multiweb_from(g, a[k], "multiwebs[" + std::to_string(k) + "]"));
    return out;
}

std::string dump_multiwebs(const std::vector<Multiweb>& webs) {
    json j;
    j["count"] = webs.size();
    json a = json::array();
    for (auto& m : webs) a.push_back(multiweb_json(m));
    j["multiwebs"] = a;
    return finish(j);
}

LaurentPoly2 parse_poly(std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    const json& a = field(j, "newton", "$");
    if (!a.is_array()) fail("newton", "expected an array of [i, j, \"p/q\"]");
    LaurentPoly2 p;
    for (std::size_t k = 0; k < a.size(); ++k) {
        std::string w = "newton[" + std::to_string(k) + "]";
        if (!a[k].is_array() || a[k].size() != 3) fail(w, "expected [i, j, \"p/q\"]");
        p.add_term(as_int(a[k][0], w + "[0]"), as_int(a[k][1], w + "[1]"), as_rational(a[k][2], w + "[2]"));
    }
    return p;
}

std::string dump_poly(const LaurentPoly2& p) {
    json j;
    json a = json::array();
    for (auto& [i, jj, c] : p.newton_layout()) a.push_back({i, jj, to_string(c)});
    j["newton"] = a;
    j["text"] = p.to_string();
    return finish(j);
}

PlabicNetwork parse_network(std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    PlabicNetwork net;
    net.g = graph_from(j);
    const int E = static_cast<int>(net.g.edges.size());
    net.weight.assign(E, Q(1));
    if (j.contains("weights")) {
        const json& w = j["weights"];
        if (!w.is_object()) fail("weights", "expected an object {edge id: \"p/q\"}");
        for (auto& [k, v] : w.items()) net.weight[key_index(k, E, "weights")] = as_rational(v, "weights." + k);
    }
    if (j.contains("boundary_order")) {
        const json& b = j["boundary_order"];
        if (!b.is_array()) fail("boundary_order", "expected an array of vertex ids");
        net.g.boundary.clear();
        for (std::size_t k = 0; k < b.size(); ++k) {
            std::string w = "boundary_order[" + std::to_string(k) + "]";
            int v = as_int(b[k], w);
            if (v < 0 || v >= static_cast<int>(net.g.vertices.size())) fail(w, "no vertex " + std::to_string(v));
            net.g.boundary.push_back({v, 1});
        }
    }
    return net;
}

std::string dump_network(const PlabicNetwork& net) {
    PlanarGraph g = net.g;
    std::vector<int> order;
    for (auto& be : g.boundary) order.push_back(be.v);
    g.boundary.clear();
    json j = graph_json(g);
    j["weights"] = weights_json(net.weight);
    j["boundary_order"] = order;
    return finish(j);
}

GrassmannPoint parse_point(std::string_view text) {
    json j = parse_doc(text);
    check_schema(j);
    QMatrix X = matrix_from(field(j, "X", "$"), "X");
    if (X.rows() == 0 || X.cols() < X.rows()) fail("X", "expected a k x n matrix with 0 < k <= n");
    return make_point(X);
}

std::string dump_point(const GrassmannPoint& p) {
    json j;
    j["k"] = p.k();
    j["n"] = p.n();
    j["X"] = matrix_json(p.X);
    json a = json::array();
    for (auto& [I, v] : p.plucker) {
        json idx = json::array();
        for (int i : I) idx.push_back(i + 1);
        a.push_back({{"I", idx}, {"value", to_string(v)}});
    }
    j["pluckers"] = a;
    return finish(j);
}

std::string dump_scalarization(const Scalarization& s) {
    PlabicNetwork net{s.Ghat, s.weight};
    json j = json::parse(dump_network(net));
    j.erase("schema");
    json groups = json::object();
    for (std::size_t e = 0; e < s.groups.size(); ++e) groups[std::to_string(e)] = {s.groups[e][0], s.groups[e][1]};
    j["groups"] = groups;
    json gad = json::array();
    for (std::size_t v = 0; v < s.gadgets.size(); ++v) {
        const auto& r = s.gadgets[v];
        json o;
        o["vertex"] = static_cast<int>(v);
        o["color"] = r.black ? "black" : "white";
        const auto& w = r.weights;
        o["weights"] = {{"a", to_string(w.a)}, {"b", to_string(w.b)}, {"c", to_string(w.c)}, {"d", to_string(w.d)},
                        {"e", to_string(w.e)}, {"f", to_string(w.f)}, {"x", to_string(w.x)}, {"y", to_string(w.y)},
                        {"u", to_string(w.u)}};
        o["M"] = matrix_json(r.M);
        o["legs"] = r.legs;
        gad.push_back(o);
    }
    j["gadget"] = gad;
    json owner = s.owner;
    j["owner"] = owner;
    return finish(j);
}

QMatrix parse_matrix(std::string_view text) {
    json j = parse_doc(text);
    return matrix_from(j, "$");
}

std::string dump_matrix(const QMatrix& m) { return matrix_json(m).dump(); }

}  // namespace hdm
