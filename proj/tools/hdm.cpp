// hdm: command line front end for the hdm library.
// Exit status: 0 ok, 1 an identity was checked and does not hold, 2 usage or input error.

#include "hdm/amoeba.hpp"
#include "hdm/free_energy.hpp"
#include "hdm/io.hpp"
#include "hdm/kasteleyn.hpp"
#include "hdm/models.hpp"
#include "hdm/random.hpp"
#include "hdm/scalarization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

using namespace hdm;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string graph, connection, multiweb, poly, point, X, A, B;
    std::string format = "json";
    double tol = 1e-4;
    std::uint64_t cap = 0;  // 0: library default (MULTIWEB_CAP or 10^7)
    std::uint64_t seed = 1;
    int threads = 1;
    std::optional<std::string> a;
    int patch = 0;
    AmoebaGrid grid;
    int raster = 160;
    bool detect = false;
};

EnumOptions enum_options(const Config& c) {
    EnumOptions eo;
    if (c.cap) eo.cap = c.cap;
    eo.threads = c.threads;
    return eo;
}

PlanarGraph load_graph(const Config& c) {
    if (c.graph.empty()) throw UsageError("--graph is required");
    PlanarGraph g = parse_graph(read_text_file(c.graph));
    auto bad = validate(g);
    if (!bad.empty()) {
        std::ostringstream ss;
        ss << c.graph << ": invalid graph";
        for (auto& v : bad) ss << "\n  " << to_string(v.kind) << " (" << v.id << "): " << v.message;
        throw InputError(ss.str());
    }
    return g;
}

Connection load_connection(const Config& c, const PlanarGraph& g) {
    if (c.connection.empty() || c.connection == "identity") return identity_connection(g);
    if (c.connection == "random") {
        Rng rng(c.seed);
        return random_connection(g, rng);
    }
    return parse_connection(g, read_text_file(c.connection));
}

LaurentPoly2 load_poly(const Config& c) {
    if (c.poly.empty()) throw UsageError("--poly is required");
    return parse_poly(read_text_file(c.poly));
}

QMatrix load_X(const Config& c) {
    if (!c.X.empty()) return parse_matrix(c.X);
    if (!c.point.empty()) return parse_point(read_text_file(c.point)).X;
    throw UsageError("--X or --point is required");
}

json doc(std::string_view s) { return json::parse(s.begin(), s.end()); }

json fresh() {
    json j;
    j["schema"] = 1;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json multiweb_array(const Multiweb& m) { return doc(dump_multiweb(m))["multiweb"]; }

json eigen_json(const EigenData& e) {
    json j;
    j["trace"] = to_string(e.trace);
    j["det"] = to_string(e.det);
    j["signs"] = to_string(e.signs);
    json ev = json::array();
    for (int k = 0; k < 2; ++k) {
        std::ostringstream ss;
        ss.imbue(std::locale::classic());
        ss.precision(12);
        ss << e.re[k];
        if (e.im[k] != 0) ss << (e.im[k] > 0 ? "+" : "") << e.im[k] << "i";
        ev.push_back(ss.str());
    }
    j["eigenvalues"] = ev;
    return j;
}

std::string fixed(double v, int prec) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss.precision(prec);
    ss << v;
    return ss.str();
}

// ---- subcommands ----

int cmd_enumerate(const Config& c) {
    auto g = load_graph(c);
    auto webs = enumerate_multiwebs(g, enum_options(c));
    if (c.format == "text") {
        std::cout << webs.size() << " multiwebs\n";
        for (auto& m : webs) {
            for (std::size_t e = 0; e < m.m.size(); ++e) std::cout << (e ? " " : "") << m.m[e];
            std::cout << "\n";
        }
    } else {
        std::cout << dump_multiwebs(webs);
    }
    return 0;
}

int cmd_trace(const Config& c) {
    auto g = load_graph(c);
    auto conn = load_connection(c, g);
    json j = fresh();
    if (!c.multiweb.empty()) {
        auto m = parse_multiweb(g, read_text_file(c.multiweb));
        if (!is_multiweb(g, m)) throw InputError(c.multiweb + ": not a multiweb of this graph");
        Q t = trace_multiweb(g, m, conn);
        if (c.format == "text") {
            std::cout << to_string(t) << "\n";
            return 0;
        }
        j["multiweb"] = multiweb_array(m);
        j["trace"] = to_string(t);
    } else {
        auto webs = enumerate_multiwebs(g, enum_options(c));
        json a = json::array();
        Q sum = 0;
        for (auto& m : webs) {
            Q t = trace_multiweb(g, m, conn);
            sum += t;
            a.push_back({{"multiweb", multiweb_array(m)}, {"trace", to_string(t)}});
        }
        if (c.format == "text") {
            std::cout << webs.size() << " multiwebs, trace sum " << to_string(sum) << "\n";
            return 0;
        }
        j["traces"] = a;
        j["sum"] = to_string(sum);
    }
    emit(j);
    return 0;
}

int cmd_det(const Config& c) {
    auto g = load_graph(c);
    auto conn = load_connection(c, g);
    auto s = assign_signs(g);
    json j = fresh();
    j["signs"] = s.sign;
    if (g.surface == Surface::Torus) {
        auto P = det_expanded(build_block_kasteleyn_torus(g, conn, s));
        if (c.format == "text") {
            std::cout << P.to_string() << "\n";
            return 0;
        }
        auto pd = doc(dump_poly(P));
        j["newton"] = pd["newton"];
        j["text"] = pd["text"];
    } else {
        Q d = det_expanded(build_block_kasteleyn(g, conn, s));
        if (c.format == "text") {
            std::cout << to_string(d) << "\n";
            return 0;
        }
        j["det"] = to_string(d);
    }
    emit(j);
    return 0;
}

int cmd_verify_main(const Config& c) {
    auto g = load_graph(c);
    if (g.surface == Surface::Torus) throw UsageError("verify-main needs a disk or plane graph");
    auto conn = load_connection(c, g);
    auto r = verify_main_theorem(g, conn, enum_options(c));
    if (c.format == "text") {
        std::cout << "lhs " << to_string(r.lhs) << "\nrhs " << to_string(r.rhs) << "\nsign " << r.global_sign << "\n";
    } else {
        json j = fresh();
        j["lhs"] = to_string(r.lhs);
        j["rhs"] = to_string(r.rhs);
        j["sign"] = r.global_sign;
        j["multiwebs"] = r.multiwebs;
        j["holds"] = r.holds();
        emit(j);
    }
    return r.holds() ? 0 : 1;
}

int cmd_pluckers(const Config& c) {
    if (c.graph.empty()) throw UsageError("--graph is required (a network file)");
    auto net = parse_network(read_text_file(c.graph));
    auto po = find_perfect_orientation(net);
    auto pt = boundary_measurement(net, po);
    auto direct = matching_pluckers(net);
    auto lambda = proportionality(pt.plucker, direct);
    json j = doc(dump_point(pt));
    j["sources"] = json::array();
    for (int s : po.sources) j["sources"].push_back(s + 1);
    j["matching_sums_proportional"] = lambda.has_value();
    if (lambda) j["factor"] = to_string(*lambda);
    json ms = json::array();
    for (auto& [I, v] : direct) {
        json idx = json::array();
        for (int i : I) idx.push_back(i + 1);
        ms.push_back({{"I", idx}, {"value", to_string(v)}});
    }
    j["matching_sums"] = ms;
    if (c.format == "text") {
        for (auto& [I, v] : pt.plucker) {
            std::cout << "D";
            for (int i : I) std::cout << i + 1;
            auto it = direct.find(I);
            std::cout << " " << to_string(v) << "  matching sum " << to_string(it == direct.end() ? Q(0) : it->second) << "\n";
        }
    } else {
        emit(j);
    }
    return lambda ? 0 : 1;
}

int cmd_scalarize(const Config& c) {
    auto g = load_graph(c);
    auto conn = load_connection(c, g);
    std::cout << dump_scalarization(scalarize(g, conn));
    return 0;
}

int cmd_verify_scalar(const Config& c) {
    auto g = load_graph(c);
    auto conn = load_connection(c, g);
    auto s = scalarize(g, conn);
    auto checks = verify_measure_all(s, enum_options(c));
    bool ok = true;
    json a = json::array();
    for (auto& [m, r] : checks) {
        ok = ok && r.equal;
        a.push_back({{"multiweb", multiweb_array(m)}, {"fiber_sum", to_string(r.fiber_sum)}, {"trace", to_string(r.trace)},
                     {"equal", r.equal}});
    }
    if (c.format == "text") {
        std::cout << checks.size() << " multiwebs, " << (ok ? "all fiber sums equal traces" : "MISMATCH") << "\n";
    } else {
        json j = fresh();
        j["checks"] = a;
        j["holds"] = ok;
        emit(j);
    }
    return ok ? 0 : 1;
}

void emit_poly(const Config& c, const LaurentPoly2& P, json extra = json::object()) {
    if (c.format == "text") {
        std::cout << P.to_string() << "\n";
        return;
    }
    json j = doc(dump_poly(P));
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(j);
}

int cmd_charpoly_6v(const Config& c) {
    auto s = sixv_weights(make_point(load_X(c)));
    json w;
    w["a1"] = to_string(s.a1);
    w["a2"] = to_string(s.a2);
    w["b1"] = to_string(s.b1);
    w["b2"] = to_string(s.b2);
    w["c1"] = to_string(s.c1);
    w["c2"] = to_string(s.c2);
    emit_poly(c, sixv_charpoly(s), {{"weights", w}});
    return 0;
}

int cmd_charpoly_20v(const Config& c) {
    QMatrix X = c.a ? twentyv_family(parse_rational(*c.a)) : load_X(c);
    emit_poly(c, twentyv_charpoly(twentyv_weights(make_point(X))));
    return 0;
}

HoneycombSpec load_honeycomb(const Config& c) {
    HoneycombSpec h;
    if (!c.A.empty()) h.A = parse_matrix(c.A);
    if (!c.B.empty()) h.B = parse_matrix(c.B);
    for (auto* m : {&h.A, &h.B})
        if (m->rows() != 2 || m->cols() != 2) throw InputError("--A/--B: expected a 2x2 matrix");
    return h;
}

int cmd_charpoly_honeycomb(const Config& c) {
    emit_poly(c, honeycomb_charpoly(load_honeycomb(c)));
    return 0;
}

int cmd_free_energy(const Config& c) {
    auto P = load_poly(c);
    auto f = free_energy(P, c.tol, c.threads);
    if (c.format == "text") {
        std::cout << fixed(f.value, 10) << " +- " << fixed(f.error, 3) << "\n";
        return 0;
    }
    json j = fresh();
    j["value"] = f.value;
    j["error"] = f.error;
    j["resolution"] = f.resolution;
    j["text"] = fixed(f.value, 10) + " +- " + fixed(f.error, 3);
    emit(j);
    return 0;
}

int cmd_amoeba(const Config& c) {
    auto P = load_poly(c);
    if (P.size() < 2) throw InputError("--poly: a monomial has an empty amoeba");
    auto cloud = amoeba_cloud(P, c.grid);
    if (cloud.skipped_slices) std::cerr << "skipped " << cloud.skipped_slices << " degenerate slices\n";
    if (c.detect) {
        auto gp = gas_phase_detect(cloud, c.grid, c.raster);
        json j = fresh();
        j["has_bounded_hole"] = gp.has_bounded_hole;
        j["inconclusive"] = gp.inconclusive;
        j["witness"] = gp.has_bounded_hole ? json{gp.witness.first, gp.witness.second} : json(nullptr);
        j["hole_area"] = gp.hole_area;
        j["points"] = cloud.points.size();
        j["skipped_slices"] = cloud.skipped_slices;
        emit(j);
        return 0;
    }
    if (c.format == "json") {
        json j = fresh();
        json a = json::array();
        for (auto& [x, y] : cloud.points) a.push_back({x, y});
        j["points"] = a;
        emit(j);
        return 0;
    }
    std::string buf = "x,y\n";
    char line[64];
    for (auto& [x, y] : cloud.points) {
        std::snprintf(line, sizeof line, "%.9g,%.9g\n", x, y);  // "C" locale formatting in a CLI without setlocale
        buf += line;
    }
    std::cout << buf;
    return 0;
}

int cmd_positivity(const Config& c) {
    auto h = load_honeycomb(c);
    auto r = positivity_test(h);
    json j = fresh();
    j["verdict"] = to_string(r.verdict);
    j["eigenvalues"] = {{"A", eigen_json(r.A)}, {"B", eigen_json(r.B)}, {"AB^-1", eigen_json(r.AB)}};
    j["triangular"] = r.triangular;
    j["witness"] = nullptr;
    int rc = 0;
    if (c.patch > 0) {
        json bf = json::array();
        for (int k = 1; k <= c.patch; ++k) {
            auto b = brute_force_2web_positivity(h, honeycomb_patch(k), enum_options(c));
            bf.push_back({{"hexagons", k}, {"multiwebs", b.multiwebs}, {"all_positive", b.all_positive},
                          {"min_trace", to_string(b.min_trace)}});
            if (!b.all_positive && j["witness"].is_null())
                j["witness"] = {{"hexagons", k}, {"multiweb", multiweb_array(b.witness)}, {"trace", to_string(b.min_trace)}};
            if (!b.all_positive && r.verdict != Verdict::Unknown) rc = 1;
        }
        j["brute_force"] = bf;
    }
    if (c.format == "text")
        std::cout << to_string(r.verdict) << "\n";
    else
        emit(j);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Higher-rank dimer models: multiwebs, traces, Kasteleyn determinants, scalarization, vertex models"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto graph_opts = [&](CLI::App* s) {
        s->add_option("--graph", cfg.graph, "graph JSON file")->check(CLI::ExistingFile);
        s->add_option("--cap", cfg.cap, "multiweb enumeration cap (default 10^7 or $MULTIWEB_CAP)")->check(CLI::PositiveNumber);
        s->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto conn_opts = [&](CLI::App* s) {
        s->add_option("--connection", cfg.connection, "connection JSON file, \"random\" or \"identity\" (default)");
        s->add_option("--seed", cfg.seed, "seed for --connection random");
    };
    auto format_opt = [&](CLI::App* s, std::vector<std::string> allowed) {
        s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(allowed));
    };

    std::function<int()> run;
    auto sub = [&](const char* name, const char* help, int (*f)(const Config&)) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&run, &cfg, f] { run = [&cfg, f] { return f(cfg); }; });
        return s;
    };

    auto* en = sub("enumerate", "list all multiwebs", cmd_enumerate);
    graph_opts(en);
    format_opt(en, {"json", "text"});

    auto* tr = sub("trace", "trace of one multiweb (--multiweb) or of all of them", cmd_trace);
    graph_opts(tr);
    conn_opts(tr);
    tr->add_option("--multiweb", cfg.multiweb, "multiweb JSON file")->check(CLI::ExistingFile);
    format_opt(tr, {"json", "text"});

    auto* de = sub("det", "determinant of the block Kasteleyn matrix (a polynomial on the torus)", cmd_det);
    graph_opts(de);
    conn_opts(de);
    format_opt(de, {"json", "text"});

    auto* vm = sub("verify-main", "check det K = sign * sum of traces", cmd_verify_main);
    graph_opts(vm);
    conn_opts(vm);
    format_opt(vm, {"json", "text"});

    auto* pl = sub("pluckers", "boundary measurement of a network and its Pluecker coordinates", cmd_pluckers);
    pl->add_option("--graph", cfg.graph, "network JSON file (graph with weights and boundary_order)")->check(CLI::ExistingFile);
    format_opt(pl, {"json", "text"});

    auto* sc = sub("scalarize", "replace every vertex by its gadget and write the scalar graph", cmd_scalarize);
    graph_opts(sc);
    conn_opts(sc);

    auto* vs = sub("verify-scalar", "check fiber sums of the scalar graph against traces", cmd_verify_scalar);
    graph_opts(vs);
    conn_opts(vs);
    format_opt(vs, {"json", "text"});

    auto* cp = app.add_subcommand("charpoly", "characteristic polynomials");
    cp->require_subcommand(1);
    auto cp_sub = [&](const char* name, const char* help, int (*f)(const Config&)) {
        auto* s = cp->add_subcommand(name, help);
        s->callback([&run, &cfg, f] { run = [&cfg, f] { return f(cfg); }; });
        format_opt(s, {"json", "text"});
        return s;
    };
    auto* c6 = cp_sub("6v", "six-vertex model from a 2x4 matrix", cmd_charpoly_6v);
    c6->add_option("--X", cfg.X, "matrix, e.g. \"[[1,0,-1,-2],[0,1,1,1]]\"");
    c6->add_option("--point", cfg.point, "point JSON file")->check(CLI::ExistingFile);
    auto* c20 = cp_sub("20v", "twenty-vertex model from a 3x6 matrix or the symmetric family", cmd_charpoly_20v);
    c20->add_option("--X", cfg.X, "3x6 matrix");
    c20->add_option("--point", cfg.point, "point JSON file")->check(CLI::ExistingFile);
    c20->add_option("--a", cfg.a, "parameter of the three-fold symmetric family (rational)");
    auto* ch = cp_sub("honeycomb", "honeycomb 2-web model with edge matrices A and B", cmd_charpoly_honeycomb);
    ch->add_option("--A", cfg.A, "2x2 matrix (default identity)");
    ch->add_option("--B", cfg.B, "2x2 matrix (default identity)");

    auto* fe = sub("free-energy", "average of log|P| over the unit torus", cmd_free_energy);
    fe->add_option("--poly", cfg.poly, "polynomial JSON file")->check(CLI::ExistingFile);
    fe->add_option("--tol", cfg.tol, "absolute tolerance")->check(CLI::PositiveNumber);
    fe->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    format_opt(fe, {"json", "text"});

    auto* am = sub("amoeba", "amoeba point cloud (CSV x,y) or gas phase detection", cmd_amoeba);
    am->add_option("--poly", cfg.poly, "polynomial JSON file")->check(CLI::ExistingFile);
    am->add_option("--angles", cfg.grid.angles, "angles per slice")->check(CLI::PositiveNumber);
    am->add_option("--lines", cfg.grid.lines, "grid lines per sweep")->check(CLI::PositiveNumber);
    am->add_option("--lo", cfg.grid.lo, "lower end of the log-modulus window");
    am->add_option("--hi", cfg.grid.hi, "upper end of the log-modulus window");
    am->add_option("--threads", cfg.grid.threads, "worker threads")->check(CLI::PositiveNumber);
    am->add_option("--raster", cfg.raster, "raster cells per axis for --detect")->check(CLI::Range(8, 4096));
    am->add_flag("--detect", cfg.detect, "report bounded complement components instead of the cloud");
    format_opt(am, {"csv", "json"});

    auto* po = sub("positivity", "honeycomb positivity test, optionally checked on small patches", cmd_positivity);
    po->add_option("--A", cfg.A, "2x2 matrix");
    po->add_option("--B", cfg.B, "2x2 matrix");
    po->add_option("--patch", cfg.patch, "brute force on patches of 1..N hexagons")->check(CLI::Range(0, 4));
    po->add_option("--cap", cfg.cap, "multiweb enumeration cap")->check(CLI::PositiveNumber);
    format_opt(po, {"json", "text"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (am->parsed() && cfg.format == "json" && !am->get_option("--format")->count()) cfg.format = "csv";
    if (!run) {
        std::cerr << app.help();
        return 2;
    }
    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "enumeration cap exceeded: " << e.what() << " (raise --cap or MULTIWEB_CAP)\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
