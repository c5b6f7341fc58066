#pragma once

#include "hdm/graph.hpp"
#include "hdm/laurent.hpp"
#include "hdm/matrix.hpp"
#include "hdm/multiweb.hpp"
#include "hdm/trace.hpp"

#include <string>
#include <vector>

namespace hdm {

struct KasteleynSigns {
    std::vector<int> sign;  // +1 / -1 per edge id
};

struct SignError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Product of signs around the face required by the rule, as a parity: (l + 1 + k) mod 2.
int face_rule_parity(const Face& f);

// Outer-face arcs from boundary vertex i to i+1 (g.boundary order), for i = 0..n-2.
struct BoundarySegment {
    std::vector<Dart> walk;
    int cilia = 0;
};
std::vector<BoundarySegment> boundary_segments(const PlanarGraph& g, const std::vector<Face>& faces, int outer);

// Rule on every bounded face (every face on the torus). With boundary, each arc from
// boundary vertex i to i+1 must have sign product (-1)^(len/2 + 1 + cilia).
KasteleynSigns assign_signs(const PlanarGraph& g);
std::vector<std::string> check_signs(const PlanarGraph& g, const KasteleynSigns& s);

template <class T>
struct BlockKasteleyn {
    std::vector<int> whites, blacks;      // vertex ids in row/column block order
    std::vector<int> row_off, col_off;    // per vertex id, offset of its block (-1 if other color)
    Matrix<T> Kt;
};

BlockKasteleyn<Q> build_block_kasteleyn(const PlanarGraph& g, const Connection& c, const KasteleynSigns& s);
// Edge with homology (p, q) picks up z^p w^q.
BlockKasteleyn<LaurentPoly2> build_block_kasteleyn_torus(const PlanarGraph& g, const Connection& c,
                                                        const KasteleynSigns& s);

struct InfeasibleMultiplicities : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Q det_expanded(const BlockKasteleyn<Q>& k);
LaurentPoly2 det_expanded(const BlockKasteleyn<LaurentPoly2>& k);

struct MainTheoremResult {
    Q lhs;  // det K~
    Q rhs;  // sum of traces
    int global_sign = 0;  // lhs = global_sign * rhs; 0 when no sign works
    std::size_t multiwebs = 0;
    bool holds() const { return global_sign != 0; }
};

MainTheoremResult verify_main_theorem(const PlanarGraph& g, const Connection& c, const EnumOptions& eo = {},
                                      const TraceOptions& to = {});

}  // namespace hdm
