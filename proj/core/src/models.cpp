#include "hdm/models.hpp"

#include "hdm/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hdm {

namespace {

Q minor2(const GrassmannPoint& p, int i, int j) { return p.plucker.at({i - 1, j - 1}); }
Q minor3(const GrassmannPoint& p, int i, int j, int k) { return p.plucker.at({i - 1, j - 1, k - 1}); }

QMatrix column(const QMatrix& M, int j) {
    QMatrix c(M.rows(), 1);
    for (std::size_t i = 0; i < M.rows(); ++i) c(i, 0) = M(i, j);
    return c;
}

}  // namespace

SixVertexSpec sixv_weights(const GrassmannPoint& M) {
    if (M.k() != 2 || M.n() != 4) throw std::invalid_argument("six-vertex weights need a 2x4 matrix");
    if (rank(M.X) < 2) throw std::invalid_argument("six-vertex matrix has rank < 2");
    SixVertexSpec s;
    s.M = M;
    s.a1 = minor2(M, 1, 2);
    s.a2 = minor2(M, 3, 4);
    s.b1 = minor2(M, 1, 4);
    s.b2 = minor2(M, 2, 3);
    s.c1 = minor2(M, 1, 3);
    s.c2 = minor2(M, 2, 4);
    return s;
}

LaurentPoly2 sixv_charpoly(const SixVertexSpec& s) {
    LaurentPoly2 P;
    P.add_term(0, 0, s.a1);
    P.add_term(1, 0, s.b2);
    P.add_term(0, 1, s.b1);
    P.add_term(1, 1, -s.a2);
    return P;
}

TorusModel sixv_torus(const SixVertexSpec& s) {
    TorusModel t;
    PlanarGraph& g = t.g;
    g.surface = Surface::Torus;
    int w = g.add_vertex(Color::White, 2);
    int bE = g.add_vertex(Color::Black, 1);
    int bN = g.add_vertex(Color::Black, 1);
    g.add_edge(bE, w);            // east
    g.add_edge(bN, w);            // south
    g.add_edge(bE, w, {1, 0});    // west
    g.add_edge(bN, w, {0, 1});    // north
    g.vertices[w].rotation = {0, 1, 2, 3};
    g.vertices[w].cilium = 0;
    for (int j = 0; j < 4; ++j) t.c.phi.push_back(column(s.M.X, j));
    t.signs.sign = {1, 1, -1, 1};
    return t;
}

TwentyVertexSpec twentyv_weights(const GrassmannPoint& M) {
    if (M.k() != 3 || M.n() != 6) throw std::invalid_argument("twenty-vertex weights need a 3x6 matrix");
    if (rank(M.X) < 3) throw std::invalid_argument("twenty-vertex matrix has rank < 3");
    return {M};
}

LaurentPoly2 twentyv_charpoly(const TwentyVertexSpec& s) {
    const auto& M = s.M;
    LaurentPoly2 P;
    P.add_term(0, 0, minor3(M, 1, 2, 3));
    P.add_term(1, 0, minor3(M, 2, 3, 4));
    P.add_term(1, 1, minor3(M, 3, 4, 5));
    P.add_term(0, 1, -(minor3(M, 1, 3, 5) + minor3(M, 2, 4, 6)));
    P.add_term(0, 2, minor3(M, 4, 5, 6));
    P.add_term(-1, 2, minor3(M, 1, 5, 6));
    P.add_term(-1, 1, minor3(M, 1, 2, 6));
    return P;
}

TorusModel twentyv_torus(const TwentyVertexSpec& s) {
    TorusModel t;
    PlanarGraph& g = t.g;
    g.surface = Surface::Torus;
    int w = g.add_vertex(Color::White, 3);
    int b[3];
    for (int& x : b) x = g.add_vertex(Color::Black, 1);
    g.add_edge(b[0], w);
    g.add_edge(b[1], w);
    g.add_edge(b[2], w);
    g.add_edge(b[0], w, {1, 0});
    g.add_edge(b[1], w, {0, 1});
    g.add_edge(b[2], w, {-1, 1});
    g.vertices[w].rotation = {0, 1, 2, 3, 4, 5};
    for (int j = 0; j < 6; ++j) t.c.phi.push_back(column(s.M.X, j));
    t.signs = assign_signs(g);
    return t;
}

QMatrix twentyv_family(const Q& a) {
    Q h(1, 2);
    return QMatrix{{a, Q(1), a, Q(1), a, Q(1)},
                   {a, h, -a * h, Q(-1), -a * h, h},
                   {Q(0), Q(1), a, Q(0), -a, Q(-1)}};
}

LaurentPoly2 twentyv_family_charpoly(const Q& a) {
    LaurentPoly2 P;
    Q a2 = a * a;
    P.add_term(0, 0, a2);
    P.add_term(1, 0, a);
    P.add_term(1, 1, a2);
    P.add_term(0, 2, a);
    P.add_term(-1, 2, a2);
    P.add_term(-1, 1, a);
    P.add_term(0, 1, -(3 + 3 * a2));
    return P;
}

// ---- intervals ----

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

Interval widen(long double lo, long double hi) { return {std::nextafter(lo, -kInf), std::nextafter(hi, kInf)}; }

}  // namespace

Interval Interval::of(const Q& q) {
    long double d = q.get_d();
    long double eps = std::fabs(d) * 1e-15L + std::numeric_limits<double>::denorm_min();
    return {d - eps, d + eps};
}

Interval operator+(Interval a, Interval b) { return widen(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(Interval a, Interval b) { return widen(a.lo - b.hi, a.hi - b.lo); }
Interval operator*(Interval a, Interval b) {
    long double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}
Interval operator/(Interval a, Interval b) {
    if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval containing 0");
    return a * widen(1.0L / b.hi, 1.0L / b.lo);
}
Interval sqrt(Interval a) {
    if (a.hi < 0) throw std::domain_error("square root of a negative interval");
    return widen(std::sqrt(std::max(a.lo, 0.0L)), std::sqrt(a.hi));
}

std::string RealValue::to_string() const {
    if (exact) return hdm::to_string(*exact);
    std::ostringstream os;
    os.precision(17);
    os << value();
    return os.str();
}

namespace {

RealValue rv(const Q& q) { return {q, Interval::of(q)}; }
RealValue add(const RealValue& a, const RealValue& b) {
    if (a.exact && b.exact) return rv(*a.exact + *b.exact);
    return {std::nullopt, a.enclosure + b.enclosure};
}
RealValue sub(const RealValue& a, const RealValue& b) {
    if (a.exact && b.exact) return rv(*a.exact - *b.exact);
    return {std::nullopt, a.enclosure - b.enclosure};
}
RealValue mul(const RealValue& a, const RealValue& b) {
    if (a.exact && b.exact) return rv(*a.exact * *b.exact);
    return {std::nullopt, a.enclosure * b.enclosure};
}
RealValue div(const RealValue& a, const RealValue& b) {
    if (a.exact && b.exact) return rv(*a.exact / *b.exact);
    return {std::nullopt, a.enclosure / b.enclosure};
}
std::optional<Q> exact_sqrt(const Q& q) {
    if (q < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Q(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}
RealValue root(const RealValue& a) {
    if (a.exact)
        if (auto r = exact_sqrt(*a.exact)) return rv(*r);
    return {std::nullopt, sqrt(a.enclosure)};
}
// -1, 0, +1, or 2 when an enclosure straddles 0.
int sign_of(const RealValue& a) {
    if (a.exact) return sgn(*a.exact);
    if (a.enclosure.positive()) return 1;
    if (a.enclosure.negative()) return -1;
    return 2;
}
RealValue neg(const RealValue& a) { return sub(rv(Q(0)), a); }

// Roots of t^2 - s t + p, larger modulus first. Requires real roots of equal sign.
std::optional<std::pair<RealValue, RealValue>> same_sign_roots(const Q& s, const Q& p, std::string& why,
                                                               const char* name) {
    Q disc = s * s - 4 * p;
    if (disc < 0) {
        why = std::string("eigenvalues of ") + name + " are not real";
        return std::nullopt;
    }
    if (p <= 0) {
        why = std::string("eigenvalues of ") + name + (p == 0 ? " include 0" : " have opposite signs");
        return std::nullopt;
    }
    RealValue r = root(rv(disc));
    RealValue big = div(add(rv(abs(s)), r), rv(Q(2)));
    if (s < 0) big = neg(big);
    RealValue small = div(rv(p), big);
    return std::pair{big, small};
}

}  // namespace

bool ReducedParams::exact() const {
    return X1.exact && X2.exact && X3.exact && a.exact && b.exact;
}

std::variant<ReducedParams, NoSolution> match_reduced_params(const LaurentPoly2& Pin) {
    for (auto& [e, c] : Pin.terms()) {
        auto [i, j] = e;
        if (i < 0 || j < 0 || i + j > 2) return NoSolution{"support is not inside the triangle (0,0),(2,0),(0,2)"};
    }
    Q c00 = Pin.coeff(0, 0);
    if (c00 == 0) return NoSolution{"constant term vanishes"};
    auto c = [&](int i, int j) -> Q { return Pin.coeff(i, j) / c00; };
    std::string why;
    auto ra = same_sign_roots(c(1, 0), c(2, 0), why, "A");
    if (!ra) return NoSolution{why};
    auto rb = same_sign_roots(c(0, 1), c(0, 2), why, "B");
    if (!rb) return NoSolution{why};
    // alpha: larger root for A; beta: smaller root for B.
    RealValue alpha = ra->first, beta = rb->second;
    RealValue x13 = div(ra->second, alpha);
    RealValue x12 = div(rb->first, beta);
    RealValue q = div(rv(-c(1, 1)), mul(alpha, beta));
    RealValue cc = mul(x13, x12);
    int sq = sign_of(q);
    if (sq == 2) return NoSolution{"sign of the zw comparison is not certified"};
    if (sq <= 0) return NoSolution{"zw coefficient has the wrong sign for positive parameters"};
    RealValue disc = sub(mul(q, q), mul(rv(Q(4)), cc));
    int sd = sign_of(disc);
    if (sd == 2) return NoSolution{"discriminant for X1 is not certified"};
    if (sd < 0) return NoSolution{"eigenvalues of A B^-1 are not real"};
    ReducedParams r;
    r.scale = c00;
    r.X1 = div(add(q, root(disc)), rv(Q(2)));
    r.X2 = div(x12, r.X1);
    r.X3 = div(x13, r.X1);
    r.X4 = div(rv(Q(1)), mul(mul(r.X1, r.X2), r.X3));
    r.sign_alpha = sign_of(alpha);
    r.sign_beta = sign_of(beta);
    if (std::abs(r.sign_alpha) != 1 || std::abs(r.sign_beta) != 1) return NoSolution{"sign of a scale is not certified"};
    r.a = r.sign_alpha > 0 ? alpha : neg(alpha);
    r.b = r.sign_beta > 0 ? beta : neg(beta);
    for (auto* x : {&r.X1, &r.X2, &r.X3, &r.a, &r.b})
        if (sign_of(*x) != 1) return NoSolution{"a parameter is not certified positive"};
    return r;
}

LaurentPoly2 reduced_charpoly(const Q& X1, const Q& X2, const Q& X3, const Q& alpha, const Q& beta) {
    LaurentPoly2 P;
    P.add_term(0, 0, Q(1));
    P.add_term(1, 0, (1 + X1 * X3) * alpha);
    P.add_term(2, 0, X1 * X3 * alpha * alpha);
    P.add_term(0, 1, (1 + X1 * X2) * beta);
    P.add_term(0, 2, X1 * X2 * beta * beta);
    P.add_term(1, 1, -(X1 + X1 * X2 * X3) * alpha * beta);
    return P;
}

bool verify_reduced(const LaurentPoly2& P, const ReducedParams& r) {
    RealValue alpha = r.sign_alpha > 0 ? r.a : neg(r.a);
    RealValue beta = r.sign_beta > 0 ? r.b : neg(r.b);
    RealValue one = rv(Q(1));
    RealValue x13 = mul(r.X1, r.X3), x12 = mul(r.X1, r.X2);
    std::vector<std::pair<std::pair<int, int>, RealValue>> want = {
        {{0, 0}, one},
        {{1, 0}, mul(add(one, x13), alpha)},
        {{2, 0}, mul(x13, mul(alpha, alpha))},
        {{0, 1}, mul(add(one, x12), beta)},
        {{0, 2}, mul(x12, mul(beta, beta))},
        {{1, 1}, neg(mul(add(r.X1, mul(x12, r.X3)), mul(alpha, beta)))},
    };
    Q c00 = P.coeff(0, 0);
    if (c00 == 0 || P.size() > 6) return false;
    for (auto& [e, v] : want) {
        Q target = P.coeff(e.first, e.second) / c00;
        if (v.exact) {
            if (*v.exact != target) return false;
        } else {
            Interval t = Interval::of(target);
            if (v.enclosure.hi < t.lo || t.hi < v.enclosure.lo) return false;
        }
    }
    return true;
}

std::string to_string(EigenSigns s) {
    switch (s) {
        case EigenSigns::Positive: return "positive";
        case EigenSigns::Negative: return "negative";
        case EigenSigns::Mixed: return "mixed";
        case EigenSigns::Zero: return "zero";
        case EigenSigns::Complex: return "complex";
    }
    return "?";
}

EigenData eigen_data(const QMatrix& M) {
    if (M.rows() != 2 || M.cols() != 2) throw std::invalid_argument("eigen_data needs a 2x2 matrix");
    EigenData e;
    e.trace = M(0, 0) + M(1, 1);
    e.det = det(M);
    e.disc = e.trace * e.trace - 4 * e.det;
    if (e.disc < 0) e.signs = EigenSigns::Complex;
    else if (e.det == 0) e.signs = EigenSigns::Zero;
    else if (e.det < 0) e.signs = EigenSigns::Mixed;
    else e.signs = e.trace > 0 ? EigenSigns::Positive : EigenSigns::Negative;
    double t = e.trace.get_d(), d = e.disc.get_d();
    if (d >= 0) {
        e.re = {(t + std::sqrt(d)) / 2, (t - std::sqrt(d)) / 2};
    } else {
        e.re = {t / 2, t / 2};
        e.im = {std::sqrt(-d) / 2, -std::sqrt(-d) / 2};
    }
    return e;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PositiveByTheorem: return "PositiveByTheorem";
        case Verdict::PositiveByTriangular: return "PositiveByTriangular";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

PositivityReport positivity_test(const HoneycombSpec& h) {
    if (det(h.A) == 0 || det(h.B) == 0) throw std::invalid_argument("A and B must be invertible");
    PositivityReport r;
    r.A = eigen_data(h.A);
    r.B = eigen_data(h.B);
    r.AB = eigen_data(h.A * inverse(h.B));
    int pos = 0, negc = 0;
    for (auto* e : {&r.A, &r.B, &r.AB}) {
        pos += e->signs == EigenSigns::Positive;
        negc += e->signs == EigenSigns::Negative;
    }
    // Upper triangular in a common basis: a shared real eigenvector. For 2x2 a shared
    // eigenvector exists iff det(AB - BA) = 0.
    bool shared = det(h.A * h.B - h.B * h.A) == 0;
    bool a_scalar = h.A(0, 1) == 0 && h.A(1, 0) == 0 && h.A(0, 0) == h.A(1, 1);
    bool real = a_scalar ? r.B.disc >= 0 : r.A.disc >= 0;
    r.triangular = shared && real && r.A.det > 0 && r.B.det > 0;
    if ((pos == 2 && negc == 1) || negc == 3) r.verdict = Verdict::PositiveByTheorem;
    else if (r.triangular) r.verdict = Verdict::PositiveByTriangular;
    return r;
}

BruteForceResult brute_force_2web_positivity(const HoneycombSpec& h, const HoneycombPatch& patch,
                                             const EnumOptions& eo) {
    BruteForceResult out;
    Connection c = honeycomb_connection(h, patch);
    bool first = true;
    for (auto& m : enumerate_multiwebs(patch.g, eo)) {
        Q t = trace_multiweb(patch.g, m, c);
        ++out.multiwebs;
        if (first || t < out.min_trace) {
            out.min_trace = t;
            out.witness = m;
            first = false;
        }
        if (t <= 0) out.all_positive = false;
    }
    return out;
}

}  // namespace hdm
