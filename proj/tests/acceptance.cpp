// Acceptance suite: one PASS/FAIL line per criterion.
// Exit status is nonzero when a criterion fails that is not listed in kKnownFailures.

#include "hdm/amoeba.hpp"
#include "hdm/catalog.hpp"
#include "hdm/free_energy.hpp"
#include "hdm/grassmannian.hpp"
#include "hdm/h26.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/kasteleyn.hpp"
#include "hdm/models.hpp"
#include "hdm/random.hpp"
#include "hdm/scalarization.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace hdm;

namespace {

// Criterion 6 includes a golden a-family polynomial whose w coefficient reads -(3+3a^2).
// The determinant of that family gives -(3+3a^3) (D135 = 3a^3, D246 = 3), so the two
// only agree at a = 1. The line is reported as FAIL; it does not fail the run.
const std::set<int> kKnownFailures{6};

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Checker {
    bool ok = true;
    std::ostringstream why;
    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) why << msg;
        ok = ok && cond;
    }
};

using Rows = std::vector<std::vector<Q>>;

Rows rows_of(const QMatrix& m) {
    Rows a(m.rows(), std::vector<Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    return a;
}

Q minor(const QMatrix& X, std::vector<int> cols1) {
    Rows a(X.rows(), std::vector<Q>(cols1.size()));
    for (std::size_t r = 0; r < X.rows(); ++r)
        for (std::size_t k = 0; k < cols1.size(); ++k) a[r][k] = X(r, cols1[k] - 1);
    return oracle::det(a);
}

LaurentPoly2 mono(int i, int j, const Q& c) { return LaurentPoly2::monomial(i, j, c); }

std::optional<Q> poly_ratio(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.size() != b.size() || a.is_zero()) return std::nullopt;
    std::optional<Q> lam;
    for (auto& [e, c] : a.terms()) {
        Q d = b.coeff(e.first, e.second);
        if (d == 0) return std::nullopt;
        Q r = c / d;
        if (lam && *lam != r) return std::nullopt;
        lam = r;
    }
    return lam;
}

// ---- 1 ----
Outcome main_identity() {
    Checker ck;
    Rng rng(1001);
    auto g3 = two_square_web_graph();
    int sign = 0;
    for (int i = 0; i < 100; ++i) {
        auto c = random_connection(g3, rng);
        auto r = verify_main_theorem(g3, c);
        auto k = build_block_kasteleyn(g3, c, assign_signs(g3));
        ck.expect(r.lhs == oracle::det(rows_of(k.Kt)), "det mismatch against elimination on the two-square graph");
        ck.expect(r.holds(), "identity fails on the two-square graph");
        if (!sign) sign = r.global_sign;
        ck.expect(r.global_sign == sign, "sign changes between connections on the two-square graph");
    }
    int graphs = 0, zero_dets = 0;
    std::size_t webs = 0;
    for (int i = 0; i < 200; ++i) {
        RandomGraphSpec spec;
        spec.max_vertices = 10;
        spec.max_n = 3;
        auto g = random_planar_bipartite(rng, spec);
        ck.expect(validate(g).empty(), "random graph " + std::to_string(i) + " invalid");
        auto want = oracle::multiwebs(g);
        int s = 0;
        for (int t = 0; t < 2; ++t) {
            auto c = random_connection(g, rng);
            auto r = verify_main_theorem(g, c);
            ck.expect(r.multiwebs == want.size(), "multiweb count differs from brute force on graph " + std::to_string(i));
            ck.expect(r.holds(), "identity fails on random graph " + std::to_string(i));
            if (r.lhs == 0) ++zero_dets;
            if (r.lhs != 0) {
                if (!s) s = r.global_sign;
                ck.expect(r.global_sign == s, "sign changes between connections on graph " + std::to_string(i));
            }
            webs += r.multiwebs;
        }
        ++graphs;
    }
    std::ostringstream d;
    d << "two-square graph 100/100 with sign " << sign << ", " << graphs << " random graphs (" << webs
      << " multiwebs over 400 connections, " << zero_dets << " zero determinants)";
    return {ck.ok, ck.ok ? d.str() : ck.why.str()};
}

// ---- 2 ----
Outcome cofactor_ledger() {
    Checker ck;
    auto g = two_square_web_graph();
    auto webs = enumerate_multiwebs(g);
    ck.expect(webs.size() == 3 && oracle::multiwebs(g).size() == 3, "expected 3 multiwebs");
    if (!ck.ok) return {false, ck.why.str()};
    // edge ids A..G = 0..6; black b1 b2 b3 = 0..2 (n 1,2,2); white w1 w2 w3 = 3..5 (n 1,3,1)
    const int A = 0, B = 1, C = 2, Dd = 3, E = 4, F = 5, G = 6;
    auto pick = [&](int edge) {
        for (auto& m : webs)
            if (m.m[edge] == 1 && (edge != B || m.m[A] == 0)) return m;
        return webs[0];
    };
    Multiweb m1 = pick(A), m2 = pick(E), m3 = pick(B);
    ck.expect(m1 != m2 && m2 != m3 && m1 != m3, "could not tell the three multiwebs apart");
    Rng rng(1002);
    int sign = 0;
    for (int t = 0; t < 50; ++t) {
        auto c = random_connection(g, rng);
        // K~ written out by hand: rows w1 | w2 (3) | w3, columns b1 | b2 (2) | b3 (2); only F negative
        Rows K(5, std::vector<Q>(5, Q(0)));
        auto put = [&](int r0, int c0, int e, int s) {
            const auto& p = c.phi[e];
            for (std::size_t r = 0; r < p.rows(); ++r)
                for (std::size_t cc = 0; cc < p.cols(); ++cc) K[r0 + r][c0 + cc] = s * p(r, cc);
        };
        put(0, 0, A, 1);
        put(0, 1, Dd, 1);
        put(1, 0, B, 1);
        put(1, 1, C, 1);
        put(1, 3, G, 1);
        put(4, 0, E, 1);
        put(4, 3, F, -1);
        Q term[5];
        for (int i = 0; i < 5; ++i) term[i] = ((i % 2) ? -1 : 1) * K[i][0] * oracle::det(oracle::drop(K, i, 0));
        Q t1 = trace_multiweb(g, m1, c), t2 = trace_multiweb(g, m2, c), t3 = trace_multiweb(g, m3, c);
        Q e1 = term[0], e2 = term[4], e3 = term[1] + term[2] + term[3];
        int s = 0;
        if (e1 != 0) s = t1 == e1 ? 1 : (t1 == -e1 ? -1 : 0);
        else if (e2 != 0) s = t2 == e2 ? 1 : (t2 == -e2 ? -1 : 0);
        ck.expect(s != 0, "Tr(m1) is not +-a det(K11)");
        ck.expect(t1 == s * e1 && t2 == s * e2 && t3 == s * e3, "a trace differs from its cofactor terms");
        if (!sign) sign = s;
        ck.expect(s == sign, "global sign changes between connections");
        ck.expect(oracle::det(K) == e1 + e2 + e3, "cofactor expansion does not add up");
        auto lib = det_expanded(build_block_kasteleyn(g, c, assign_signs(g)));
        ck.expect(abs(lib) == abs(oracle::det(K)), "library determinant differs from the hand-written K~");
    }
    KasteleynSigns hand{{1, 1, 1, 1, 1, -1, 1}};
    ck.expect(check_signs(g, hand).empty(), "hand signs violate the face rule");
    std::ostringstream d;
    d << "3 multiwebs; Tr(m1)=a det(K11), Tr(m2)=e det(K51), Tr(m3)=sum of the b terms, global sign " << sign
      << ", 50 connections";
    return {ck.ok, ck.ok ? d.str() : ck.why.str()};
}

// ---- 3 ----
Outcome grassmannian_golden() {
    Checker ck;
    Rng rng(1003);
    for (int t = 0; t < 20; ++t) {
        Q a = random_positive_rational(rng), b = random_positive_rational(rng), c = random_positive_rational(rng),
          d = random_positive_rational(rng);
        Pluckers want{{{0, 1}, d}, {{0, 2}, a * c + b * d}, {{0, 3}, a}, {{1, 2}, c}, {{1, 3}, Q(1)}, {{2, 3}, b}};
        auto net = gr24_network(a, b, c, d);
        ck.expect(matching_pluckers(net) == want, "matching sums differ from the golden minors");
        auto X1 = boundary_measurement(net, orientation_from_matching(net, gr24_acyclic_matching(net)));
        auto X2 = boundary_measurement(net, orientation_from_matching(net, gr24_cyclic_matching(net)));
        ck.expect(proportionality(X1.plucker, X2.plucker).has_value(), "the two orientations disagree");
        ck.expect(proportionality(X1.plucker, want).has_value(), "boundary measurement not proportional to golden");
        ck.expect(satisfies_plucker_relations_k2(X1.plucker), "Pluecker relation fails");
    }
    return {ck.ok, ck.ok ? "20 tuples: minors d, ac+bd, a, c, 1, b exact; both orientations proportional" : ck.why.str()};
}

// ---- 4 ----
Outcome h26_round_trip() {
    Checker ck;
    Rng rng(1004);
    for (int t = 0; t < 100; ++t) {
        std::vector<Q> v(9);
        for (auto& x : v) x = random_positive_rational(rng, 9, 7);
        auto w = H26Weights::from_vector(v);
        ck.expect(h26_weights(h26_point(w)) == w, "round trip changed the weights in trial " + std::to_string(t));
    }
    auto tor = honeycomb_torus();
    std::vector<H26Weights> ones(tor.g.vertices.size(), H26Weights::ones());
    auto h = induced_honeycomb(scalarize_weights(tor.g, ones, GadgetBlocks{tor.block_black, tor.block_white}), tor);
    QMatrix A{{Q(11), Q(-8)}, {Q(-4), Q(3)}};
    ck.expect(h.A == A, "all-ones A is not ((11,-8),(-4,3))");
    ck.expect(h.B == A.transpose(), "all-ones B is not A^T");
    return {ck.ok, ck.ok ? "100/100 weight tuples recovered; all ones gives A=((11,-8),(-4,3)), B=A^T" : ck.why.str()};
}

// ---- 5 ----
Outcome measure_preservation() {
    Checker ck;
    Rng rng(1005);
    std::size_t checks = 0, brute_sets = 0;
    for (int k = 1; k <= 2; ++k) {
        auto p = honeycomb_patch(k);
        GadgetBlocks blocks{p.block_black, p.block_white};
        std::vector<std::vector<int>> pms;
        for (int t = 0; t < 20; ++t) {
            std::vector<H26Weights> w(p.g.vertices.size());
            for (auto& x : w) {
                std::vector<Q> v(9);
                for (auto& q : v) q = random_positive_rational(rng);
                x = H26Weights::from_vector(v);
            }
            auto s = scalarize_weights(p.g, w, blocks);
            auto all = verify_measure_all(s);
            ck.expect(all.size() == oracle::multiwebs(p.g).size(), "missing multiwebs");
            for (auto& [m, r] : all) {
                ck.expect(r.equal, "fiber sum differs from trace");
                ++checks;
            }
            // independent check: every perfect matching of the scalar graph, projected by hand
            if (k == 1 || t < 2) {
                if (pms.empty()) pms = oracle::perfect_matchings(s.Ghat);
                std::map<std::vector<int>, Q> fib;
                std::vector<char> used(s.Ghat.edges.size());
                for (auto& pm : pms) {
                    std::fill(used.begin(), used.end(), 0);
                    Q wt = 1;
                    for (int e : pm) {
                        used[e] = 1;
                        wt *= s.weight[e];
                    }
                    std::vector<int> m(p.g.edges.size());
                    for (std::size_t e = 0; e < m.size(); ++e) m[e] = !used[s.groups[e][0]] + !used[s.groups[e][1]];
                    fib[m] += wt;
                }
                for (auto& [m, r] : all) ck.expect(fib[m.m] == r.trace, "brute-force fiber sum differs from trace");
                ck.expect(fib.size() == all.size(), "brute force found other images");
                ++brute_sets;
            }
        }
    }
    std::ostringstream d;
    d << "patches of 1 and 2 hexagons, 20 weight sets each: " << checks << " multiweb checks exact, " << brute_sets
      << " sets confirmed by enumerating all matchings";
    return {ck.ok, ck.ok ? d.str() : ck.why.str()};
}

// ---- 6 ----
Outcome free_fermion() {
    Checker ck;
    std::vector<std::string> notes;
    Rng rng(1006);
    int rank2 = 0;
    while (rank2 < 1000) {
        QMatrix X(2, 4);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 4; ++c) X(r, c) = random_rational(rng);
        bool full = false;
        for (auto& I : k_subsets(4, 2)) full = full || minor(X, {I[0] + 1, I[1] + 1}) != 0;
        if (!full) continue;
        ++rank2;
        auto s = sixv_weights(make_point(X));
        ck.expect(s.a1 * s.a2 + s.b1 * s.b2 == s.c1 * s.c2, "a1a2 + b1b2 != c1c2");
        ck.expect(minor(X, {1, 2}) * minor(X, {3, 4}) + minor(X, {1, 4}) * minor(X, {2, 3}) == minor(X, {1, 3}) * minor(X, {2, 4}),
                  "three-term relation fails");
        if (rank2 <= 100) {
            auto P = mono(0, 0, minor(X, {1, 2})) + mono(1, 0, minor(X, {2, 3})) + mono(0, 1, minor(X, {1, 4})) -
                     mono(1, 1, minor(X, {3, 4}));
            auto t = sixv_torus(s);
            ck.expect(det_expanded(build_block_kasteleyn_torus(t.g, t.c, t.signs)) == P, "6V determinant differs from the formula");
        }
    }
    for (int t = 0; t < 50; ++t) {
        QMatrix X(3, 6);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 6; ++c) X(r, c) = random_rational(rng);
        auto P = mono(0, 0, minor(X, {1, 2, 3})) + mono(1, 0, minor(X, {2, 3, 4})) + mono(1, 1, minor(X, {3, 4, 5})) -
                 mono(0, 1, minor(X, {1, 3, 5}) + minor(X, {2, 4, 6})) + mono(0, 2, minor(X, {4, 5, 6})) +
                 mono(-1, 2, minor(X, {1, 5, 6})) + mono(-1, 1, minor(X, {1, 2, 6}));
        auto tm = twentyv_torus(twentyv_weights(make_point(X)));
        ck.expect(det_expanded(build_block_kasteleyn_torus(tm.g, tm.c, tm.signs)) == P, "20V determinant differs from the formula");
    }
    auto tor = honeycomb_torus();
    for (int t = 0; t < 50; ++t) {
        QMatrix A(2, 2), B(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                A(r, c) = random_rational(rng);
                B(r, c) = random_rational(rng);
            }
        QMatrix adjB{{B(1, 1), -B(0, 1)}, {-B(1, 0), B(0, 0)}};
        QMatrix AB = A * adjB;
        auto P = mono(0, 0, 1) + mono(2, 0, det(A)) + mono(0, 2, det(B)) + mono(1, 0, A(0, 0) + A(1, 1)) +
                 mono(0, 1, B(0, 0) + B(1, 1)) + mono(1, 1, AB(0, 0) + AB(1, 1));
        auto c = honeycomb_connection(HoneycombSpec{A, B}, tor);
        ck.expect(det_expanded(build_block_kasteleyn_torus(tor.g, c, assign_signs(tor.g))) == P,
                  "honeycomb determinant differs from the formula");
    }
    // three-fold symmetric family: cosine row as is, sine row divided by sin(pi/3)
    std::ostringstream fam;
    bool family_ok = true;
    for (Q a : {Q(1), Q(2), Q(3), make_q(1, 2)}) {
        QMatrix M{{a, Q(1), a, Q(1), a, Q(1)},
                  {a, make_q(1, 2), -a / 2, Q(-1), -a / 2, make_q(1, 2)},
                  {Q(0), Q(1), a, Q(0), -a, Q(-1)}};
        auto tm = twentyv_torus(twentyv_weights(make_point(M)));
        auto det_P = det_expanded(build_block_kasteleyn_torus(tm.g, tm.c, tm.signs));
        auto golden = mono(0, 0, a * a) + mono(1, 0, a) + mono(1, 1, a * a) + mono(0, 2, a) + mono(-1, 2, a * a) +
                      mono(-1, 1, a) - mono(0, 1, 3 + 3 * a * a);
        bool match = poly_ratio(det_P, golden).has_value();
        if (!match) {
            family_ok = false;
            fam << " a=" << to_string(a) << ": w coefficient " << to_string(det_P.coeff(0, 1)) << " vs "
                << to_string(golden.coeff(0, 1)) << ";";
        }
    }
    if (!ck.ok) return {false, ck.why.str()};
    if (!family_ok)
        return {false, "1000 rank-2 matrices satisfy a1a2+b1b2=c1c2; 6V, 20V and honeycomb formulas exact; a-family "
                       "formula matches only at a=1 (determinant gives -(3+3a^3)w):" + fam.str()};
    return {true, "1000 rank-2 matrices; 6V, 20V, a-family and honeycomb formulas exact"};
}

// ---- 7 ----
Outcome free_energy_check() {
    Checker ck;
    auto L = LaurentPoly2(1) + LaurentPoly2::z() + LaurentPoly2::w();
    double want = 2 * oracle::mahler_1_z_w();
    auto f = free_energy(L * L, 1e-4, 4);
    ck.expect(std::abs(f.value - want) < 1e-4, "F((1+z+w)^2) off by more than 1e-4");
    Rng rng(1007);
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
        auto rnd = [&] {
            LaurentPoly2 p;
            int terms = 2 + static_cast<int>(rng() % 3);
            for (int k = 0; k < terms; ++k)
                p.add_term(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1, random_rational(rng, 4, 3));
            if (p.size() < 2) p.add_term(0, 0, Q(1));
            // keep polynomials with one dominant coefficient: no zeros on the torus,
            // so the integral converges at the requested tolerance
            Q top = 0, rest = 0;
            for (auto& [e, c] : p.terms()) {
                top = std::max(top, Q(abs(c)));
                rest += abs(c);
            }
            return 2 * top > rest ? p : LaurentPoly2();
        };
        auto P = rnd(), Qp = rnd();
        if (P.is_zero() || Qp.is_zero()) {
            --t;
            continue;
        }
        double lhs = free_energy(P * Qp, 2e-5, 4).value;
        double rhs = free_energy(P, 2e-5, 4).value + free_energy(Qp, 2e-5, 4).value;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    ck.expect(worst < 3e-4, "log-additivity off by more than 3e-4");
    char buf[200];
    std::snprintf(buf, sizeof buf, "F=%.8f (oracle %.8f, N=%d), additivity worst %.2e over 10 torus-nonvanishing pairs", f.value, want, f.resolution, worst);
    return {ck.ok, ck.ok ? buf : ck.why.str() + " | " + buf};
}

// ---- 8 ----
Outcome reduced_params() {
    Checker ck;
    QMatrix A7{{Q(11), Q(-8)}, {Q(-4), Q(3)}};
    auto P7 = honeycomb_charpoly(HoneycombSpec{A7, A7.transpose()});
    ck.expect(P7 == mono(0, 0, 1) + mono(2, 0, 1) + mono(0, 2, 1) + mono(1, 0, 14) + mono(0, 1, 14) - mono(1, 1, 14),
              "all-ones polynomial is not 1+z^2+w^2+14z+14w-14zw");
    auto r = match_reduced_params(P7);
    if (!std::holds_alternative<ReducedParams>(r)) return {false, "no reduced parameters: " + std::get<NoSolution>(r).reason};
    auto& p = std::get<ReducedParams>(r);
    const long double s3 = std::sqrt(3.0L), big = 7 + 4 * s3, small = 7 - 4 * s3, x3 = small * small * small;
    auto near = [](const RealValue& v, long double x) { return std::abs(v.value() - static_cast<double>(x)) < 1e-9 * std::max(1.0L, x); };
    ck.expect(near(p.a, big) && near(p.X1, big) && near(p.X2, big) && near(p.X4, big), "a, X1, X2, X4 != 7+4sqrt3");
    ck.expect(near(p.b, small), "b != 7-4sqrt3");
    ck.expect(near(p.X3, x3), "X3 != (7-4sqrt3)^3");
    for (auto* v : {&p.X1, &p.X2, &p.X3, &p.X4, &p.a, &p.b}) ck.expect(v->enclosure.positive(), "enclosure not certified positive");
    ck.expect(p.sign_alpha == 1 && p.sign_beta == 1, "unexpected sign pattern");
    ck.expect(verify_reduced(P7, p), "certified check of P(z,w) = P_red(alpha z, beta w) failed");

    HoneycombSpec ex10{QMatrix{{Q(1), Q(0)}, {Q(4), Q(1)}}, QMatrix{{Q(1), Q(1)}, {Q(0), Q(1)}}};
    auto rep = positivity_test(ex10);
    auto pair_is = [](const EigenData& e, int v) { return e.disc == 0 && e.trace == 2 * v && e.det == 1; };
    ck.expect(pair_is(rep.A, 1) && pair_is(rep.B, 1) && pair_is(rep.AB, -1), "eigenvalue data not (1,1),(1,1),(-1,-1)");
    ck.expect(rep.verdict == Verdict::PositiveByTheorem, "verdict is " + to_string(rep.verdict));
    auto r10 = match_reduced_params(honeycomb_charpoly(ex10));
    ck.expect(std::holds_alternative<ReducedParams>(r10) && std::get<ReducedParams>(r10).exact() &&
                  *std::get<ReducedParams>(r10).X1.exact == 1 && *std::get<ReducedParams>(r10).a.exact == 1,
              "unit example does not give X = a = b = 1");

    Rng rng(1008);
    for (int t = 0; t < 100; ++t) {
        Q X1 = random_positive_rational(rng, 6, 5), X2 = random_positive_rational(rng, 6, 5), X3 = random_positive_rational(rng, 6, 5);
        Q al = random_positive_rational(rng, 6, 5), be = random_positive_rational(rng, 6, 5);
        auto P = reduced_charpoly(X1, X2, X3, al, be);
        auto m = match_reduced_params(P);
        if (!std::holds_alternative<ReducedParams>(m)) {
            ck.expect(false, "no match for a generated tuple");
            break;
        }
        auto& q = std::get<ReducedParams>(m);
        ck.expect(q.exact(), "generated tuple gave inexact parameters");
        if (!q.exact()) break;
        ck.expect(reduced_charpoly(*q.X1.exact, *q.X2.exact, *q.X3.exact, q.sign_alpha * *q.a.exact, q.sign_beta * *q.b.exact) == P,
                  "matched parameters do not reproduce the polynomial");
        ck.expect(*q.X1.exact * *q.X2.exact * *q.X3.exact * *q.X4.exact == 1, "X1X2X3X4 != 1");
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "a=X1=X2=X4=%.12f b=%.12f X3=%.12g signs (+,+); unit example PositiveByTheorem; 100/100 exact round trips",
                  p.a.value(), p.b.value(), p.X3.value());
    return {ck.ok, ck.ok ? buf : ck.why.str()};
}

// ---- 9 ----
enum class Sg { Pos, Neg, Other };
Sg eig_sign(const QMatrix& M) {
    Q tr = M(0, 0) + M(1, 1), dt = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    if (tr * tr - 4 * dt < 0 || dt <= 0) return Sg::Other;
    return tr > 0 ? Sg::Pos : Sg::Neg;
}

Outcome positivity_concordance() {
    Checker ck;
    Rng rng(1009);
    std::vector<HoneycombPatch> patches{honeycomb_patch(1), honeycomb_patch(2), honeycomb_patch(3)};
    int found = 0, tried = 0;
    std::size_t webs = 0;
    while (found < 50 && tried < 2'000'000) {
        ++tried;
        QMatrix A(2, 2), B(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                A(r, c) = random_rational(rng, 4, 2);
                B(r, c) = random_rational(rng, 4, 2);
            }
        Q dB = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
        if (dB == 0) continue;
        QMatrix Binv{{B(1, 1) / dB, -B(0, 1) / dB}, {-B(1, 0) / dB, B(0, 0) / dB}};
        Sg a = eig_sign(A), b = eig_sign(B), ab = eig_sign(A * Binv);
        if (a == Sg::Other || b == Sg::Other || ab == Sg::Other) continue;
        int neg = (a == Sg::Neg) + (b == Sg::Neg) + (ab == Sg::Neg);
        if (neg != 1 && neg != 3) continue;
        ++found;
        HoneycombSpec h{A, B};
        ck.expect(positivity_test(h).verdict == Verdict::PositiveByTheorem, "library verdict disagrees with the hypothesis");
        for (auto& p : patches) {
            auto c = honeycomb_connection(h, p);
            for (auto& m : enumerate_multiwebs(p.g)) {
                Q t = trace_multiweb(p.g, m, c);
                ++webs;
                ck.expect(t > 0, "non-positive trace " + to_string(t));
            }
            ck.expect(brute_force_2web_positivity(h, p).all_positive, "brute force reports a non-positive trace");
        }
    }
    ck.expect(found == 50, "could not sample 50 pairs");
    std::ostringstream d;
    d << found << " pairs (from " << tried << " samples), " << webs << " traces on 1-3 hexagon patches, all > 0";
    return {ck.ok, ck.ok ? d.str() : ck.why.str()};
}

// ---- 10 ----
Outcome gas_phase() {
    Checker ck;
    AmoebaGrid grid;
    grid.threads = 4;
    auto family = [](const Q& a) {
        QMatrix M{{a, Q(1), a, Q(1), a, Q(1)},
                  {a, make_q(1, 2), -a / 2, Q(-1), -a / 2, make_q(1, 2)},
                  {Q(0), Q(1), a, Q(0), -a, Q(-1)}};
        auto tm = twentyv_torus(twentyv_weights(make_point(M)));
        return det_expanded(build_block_kasteleyn_torus(tm.g, tm.c, tm.signs));
    };
    auto g2 = gas_phase_detect(amoeba_cloud(family(Q(2)), grid), grid);
    auto g1 = gas_phase_detect(amoeba_cloud(family(Q(1)), grid), grid);
    auto line = LaurentPoly2(1) + LaurentPoly2::z() + LaurentPoly2::w();
    auto gl = gas_phase_detect(amoeba_cloud(line, grid), grid);
    ck.expect(g2.has_bounded_hole, "no bounded component at a=2");
    ck.expect(!gl.has_bounded_hole, "bounded component reported for 1+z+w");
    ck.expect(g1.hole_area < g2.hole_area, "a=1 hole is not smaller than a=2 hole");
    char buf[200];
    std::snprintf(buf, sizeof buf, "a=2 hole area %.3f at (%.2f, %.2f); a=1 area %.3f; 1+z+w none", g2.hole_area, g2.witness.first,
                  g2.witness.second, g1.hole_area);
    return {ck.ok, ck.ok ? buf : ck.why.str() + " | " + buf};
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Item> items{
        {1, "determinant equals signed trace sum", main_identity},
        {2, "two-square cofactor ledger", cofactor_ledger},
        {3, "Gr(2,4) golden minors", grassmannian_golden},
        {4, "H(2,6) round trip and all-ones gauge", h26_round_trip},
        {5, "scalarization preserves the measure", measure_preservation},
        {6, "free-fermion identity and charpoly formulas", free_fermion},
        {7, "free energy", free_energy_check},
        {8, "honeycomb parameter matching", reduced_params},
        {9, "honeycomb positivity concordance", positivity_concordance},
        {10, "gas phase", gas_phase},
    };
    int unexpected = 0;
    for (auto& it : items) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool known = kKnownFailures.count(it.id) > 0;
        char head[128];
        std::snprintf(head, sizeof head, "%s %2d %-44s %7.2fs  ", o.pass ? "PASS" : "FAIL", it.id, it.name, secs);
        std::cout << head << o.detail << (!o.pass && known ? "  [known failure]" : "") << std::endl;
        if (!o.pass && !known) ++unexpected;
    }
    return unexpected ? 1 : 0;
}
