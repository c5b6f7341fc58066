#pragma once

#include "hdm/graph.hpp"
#include "hdm/matrix.hpp"
#include "hdm/multiweb.hpp"

#include <map>
#include <vector>

namespace hdm {

// phi[e] has shape n_white x n_black.
struct Connection {
    std::vector<QMatrix> phi;
};

void check_connection(const PlanarGraph& g, const Connection& c);
// Every phi[e] set to the n_w x n_b matrix with ones on the diagonal.
Connection identity_connection(const PlanarGraph& g);

Connection gauge_transform(const PlanarGraph& g, const Connection& c, int v, const QMatrix& gmat);

// Per boundary vertex: basis index tuples (0-based, arity d_v) with coefficients.
struct BoundaryInput {
    std::map<int, std::map<std::vector<int>, Q>> at;
};

enum class TracePath {
    Split,  // m_e parallel copies of size 1, divide by prod m_e!
    Minor,  // one wire per edge, det of the m_e x m_e minor
};

struct TraceOptions {
    TracePath path = TracePath::Minor;
    // Overrides the first rotation index read at each vertex (odd-n invariance checks).
    std::map<int, int> start_override;
};

// Position in the rotation where the color word starts at each vertex.
std::vector<int> rotation_start(const PlanarGraph& g);

Q trace_multiweb(const PlanarGraph& g, const Multiweb& m, const Connection& c,
                 const BoundaryInput* inputs = nullptr, const TraceOptions& opt = {});

// Trace evaluated at every combination of basis tuples, keyed by the tuples in
// g.boundary order; zero entries omitted.
std::map<std::vector<std::vector<int>>, Q> trace_tensor(const PlanarGraph& g, const Multiweb& m,
                                                        const Connection& c, const TraceOptions& opt = {});

Q trace_sum(const PlanarGraph& g, const Connection& c, const std::vector<Multiweb>& webs,
            const TraceOptions& opt = {});

}  // namespace hdm
