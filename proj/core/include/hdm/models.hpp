#pragma once

#include "hdm/grassmannian.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/kasteleyn.hpp"
#include "hdm/laurent.hpp"
#include "hdm/multiweb.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>

namespace hdm {

// ---- free-fermionic six-vertex model ----

struct SixVertexSpec {
    GrassmannPoint M;  // 2x4
    Q a1, a2, b1, b2, c1, c2;
};

// a1=D12, a2=D34, b1=D14, b2=D23, c1=D13, c2=D24. Throws on rank < 2.
SixVertexSpec sixv_weights(const GrassmannPoint& M);
// D12 + z D23 + w D14 - zw D34.
LaurentPoly2 sixv_charpoly(const SixVertexSpec& s);
// Fundamental domain: white (n=2) with its east and north black neighbours; edges
// clockwise from the cilium, phi = columns of M.
struct TorusModel {
    PlanarGraph g;
    Connection c;
    KasteleynSigns signs;  // the choice that reproduces the printed polynomial
};
TorusModel sixv_torus(const SixVertexSpec& s);

// ---- twenty-vertex model ----

struct TwentyVertexSpec {
    GrassmannPoint M;  // 3x6
};
TwentyVertexSpec twentyv_weights(const GrassmannPoint& M);
LaurentPoly2 twentyv_charpoly(const TwentyVertexSpec& s);
TorusModel twentyv_torus(const TwentyVertexSpec& s);
// Three-fold symmetric family, sine row divided by sin(pi/3) so the entries are rational.
QMatrix twentyv_family(const Q& a);
// a^2 + a z + a^2 zw + a w^2 + a^2 w^2/z + a w/z - (3+3a^2) w
LaurentPoly2 twentyv_family_charpoly(const Q& a);

// ---- honeycomb positivity ----

// Closed interval with outward rounding.
struct Interval {
    long double lo = 0, hi = 0;
    static Interval point(long double v) { return {v, v}; }
    static Interval of(const Q& q);
    long double mid() const { return (lo + hi) / 2; }
    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
    bool contains(long double v) const { return lo <= v && v <= hi; }
};
Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator*(Interval a, Interval b);
Interval operator/(Interval a, Interval b);
Interval sqrt(Interval a);

// Real number known exactly when rational, otherwise by a certified enclosure.
struct RealValue {
    std::optional<Q> exact;
    Interval enclosure;
    double value() const { return static_cast<double>(enclosure.mid()); }
    std::string to_string() const;
};

// P(z,w) = P_red(alpha z, beta w) with
// P_red = 1 + (1+X1X3) z + X1X3 z^2 + (1+X1X2) w + X1X2 w^2 - (X1 + X1X2X3) zw,
// after dividing P by its constant term.
struct ReducedParams {
    RealValue X1, X2, X3, X4;
    RealValue a, b;          // |alpha|, |beta|
    int sign_alpha = 1, sign_beta = 1;
    Q scale;                 // constant term of P
    bool exact() const;
};

struct NoSolution {
    std::string reason;
};

// Eigenvalue pairs are roots of t^2 - c10 t + c20 etc.; when several choices exist
// alpha is the root of larger modulus, beta the smaller, X1 the larger root.
std::variant<ReducedParams, NoSolution> match_reduced_params(const LaurentPoly2& P);
// P_red(alpha z, beta w) for rational parameters.
LaurentPoly2 reduced_charpoly(const Q& X1, const Q& X2, const Q& X3, const Q& alpha, const Q& beta);
// Exact when every value is rational; otherwise checks every coefficient enclosure.
bool verify_reduced(const LaurentPoly2& P, const ReducedParams& r);

enum class EigenSigns { Positive, Negative, Mixed, Zero, Complex };
std::string to_string(EigenSigns s);

struct EigenData {
    Q trace, det, disc;
    EigenSigns signs;
    std::array<double, 2> re{}, im{};
};
EigenData eigen_data(const QMatrix& M);

enum class Verdict { PositiveByTheorem, PositiveByTriangular, Unknown };
std::string to_string(Verdict v);

struct PositivityReport {
    Verdict verdict = Verdict::Unknown;
    EigenData A, B, AB;  // AB = A B^-1
    bool triangular = false;
};
// Throws std::invalid_argument when A or B is singular.
PositivityReport positivity_test(const HoneycombSpec& h);

struct BruteForceResult {
    bool all_positive = true;
    std::size_t multiwebs = 0;
    Q min_trace;
    Multiweb witness;
};
BruteForceResult brute_force_2web_positivity(const HoneycombSpec& h, const HoneycombPatch& patch,
                                             const EnumOptions& eo = {});

}  // namespace hdm
